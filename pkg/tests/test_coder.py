from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hochschild.coder import (
    Cochain,
    Codifferential,
    basis_cochains,
    bracket,
    coboundary,
    compose,
    decleene_cocycle,
    decleene_theta,
    format_rational,
    lambda_op,
    parse_cochain,
    parse_rational,
    phi,
)
from hochschild.errors import (
    CochainSyntaxError,
    EmptyCompositionError,
    LabelError,
    NotACodifferentialError,
    ParityError,
)
from hochschild.graded import EVEN, ODD, STANDARD

from conftest import small_rationals


@st.composite
def homogeneous_cochains(draw, min_degree=0, max_degree=3):
    degree = draw(st.integers(min_value=min_degree, max_value=max_degree))
    parity = draw(st.sampled_from([EVEN, ODD]))
    keys = [k for k in basis_cochains(STANDARD, degree) if Cochain(degree, {k: 1}).parity == parity]
    chosen = draw(st.dictionaries(st.sampled_from(keys), small_rationals, max_size=3))
    return Cochain(degree, chosen)


def graded_sign(a, b):
    return -1 if (a.parity and b.parity) else 1


def test_rational_round_trip():
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert parse_rational(" -2/4 ") == Fraction(-1, 2)
    with pytest.raises(CochainSyntaxError):
        parse_rational("abc")


@pytest.mark.parametrize("n", range(0, 15))
def test_cochain_space_dimension(n):
    assert len(basis_cochains(STANDARD, n)) == 2 ** (n + 1)


def test_canonical_order_is_target_then_source():
    assert basis_cochains(STANDARD, 1) == [(("e",), "e"), (("f",), "e"), (("e",), "f"), (("f",), "f")]


def test_parity_of_terms():
    assert phi("ee", "f").parity == ODD
    assert phi("ef", "f").parity == EVEN
    assert Cochain.zero(2).parity == EVEN
    with pytest.raises(ParityError):
        (phi("ee", "f") + phi("ef", "f")).parity


def test_arithmetic_drops_zeros():
    c = phi("ef", "e", 2) - phi("ef", "e", 2)
    assert c.is_zero() and len(c) == 0
    assert (phi("e", "e") * 3).coefficient(("e",), "e") == 3


def test_degree_mismatch_in_sum():
    with pytest.raises(ValueError):
        phi("e", "e") + phi("ee", "e")


def test_unknown_label():
    with pytest.raises(LabelError):
        phi(("e", "g"), "e")
    with pytest.raises(CochainSyntaxError):
        phi("eg", "e")


def test_text_round_trip():
    c = phi("ef", "e", Fraction(-1, 2)) + phi("ff", "f", 3)
    assert parse_cochain(str(c)) == c
    assert parse_cochain("psi[ef->e] - 2*phi[fe->e]") == phi("ef", "e") - phi("fe", "e", 2)
    assert parse_cochain("phi[->f]") == phi((), "f")


@pytest.mark.parametrize("bad", ["phi[ef>e]", "phi[ef->g]", "2*", "phi[e->e]phi[f->e]", "phi[e->e] + phi[ef->e]"])
def test_parse_errors(bad):
    with pytest.raises(CochainSyntaxError):
        parse_cochain(bad)


def test_zero_needs_degree():
    with pytest.raises(CochainSyntaxError):
        parse_cochain("0")
    assert parse_cochain("0", degree=3) == Cochain.zero(3)


def test_compose_inserts_with_koszul_sign():
    # phi^{ff}_f o phi^{e}_f inserts at both slots; the second slot passes an odd f
    out = compose(phi("ff", "f"), phi("e", "f"))
    assert out == phi("ef", "f") - phi("fe", "f")


def test_compose_degree_zero():
    with pytest.raises(EmptyCompositionError):
        compose(phi((), "e"), phi((), "f"))
    assert compose(phi((), "e"), phi("e", "e")) == Cochain.zero(0)


def test_bracket_rejects_inhomogeneous():
    with pytest.raises(ParityError):
        bracket(phi("ee", "f") + phi("ef", "f"), phi("e", "e"))


@given(homogeneous_cochains(min_degree=1), homogeneous_cochains(min_degree=1))
def test_graded_antisymmetry(a, b):
    assert bracket(a, b) == -graded_sign(a, b) * bracket(b, a)


@given(homogeneous_cochains(min_degree=1), homogeneous_cochains(min_degree=1), homogeneous_cochains(min_degree=1))
def test_graded_jacobi(a, b, c):
    lhs = bracket(a, bracket(b, c))
    rhs = bracket(bracket(a, b), c) + graded_sign(a, b) * bracket(b, bracket(a, c))
    assert lhs == rhs


@given(homogeneous_cochains(), homogeneous_cochains(min_degree=1), small_rationals)
def test_bracket_bilinear(a, b, t):
    assert bracket(a * t, b) == bracket(a, b) * t


def test_codifferential_validation(codiffs):
    assert set(codiffs) == {"d1", "d2", "d3", "d4", "d5", "d6"}
    with pytest.raises(NotACodifferentialError):
        Codifferential(phi("ef", "e"))  # even
    with pytest.raises(NotACodifferentialError):
        Codifferential(phi("ef", "e") * 0 + phi("ff", "f") + phi("ee", "f"))  # [d,d] != 0
    with pytest.raises(NotACodifferentialError):
        Codifferential(phi("e", "f"))


def test_coboundary_example_d1(codiffs):
    assert coboundary(codiffs["d1"], phi((), "e")) == phi("e", "f", 2)
    assert coboundary(codiffs["d1"], phi((), "f")).is_zero()


def test_lambda_and_theta():
    assert lambda_op("ef", phi("e", "f")) == phi("efe", "f")
    assert decleene_theta(phi((), "e")) == phi("ef", "e") - phi("fe", "e")
    assert decleene_cocycle(3, "f") == phi("efe", "f") - phi("fee", "f")
    assert decleene_cocycle(0, "e") == phi((), "e")
    with pytest.raises(LabelError):
        decleene_cocycle(2, "g")


@pytest.mark.parametrize("n", range(0, 7))
def test_theta_commutes_with_e_component_of_d6(codiffs, n):
    d = codiffs["d6"]
    for src, tgt in basis_cochains(STANDARD, n):
        if tgt != "e":
            continue
        c = Cochain(n, {(src, tgt): 1})
        left = coboundary(d, decleene_theta(c)).target_part("e")
        right = decleene_theta(coboundary(d, c).target_part("e"))
        assert left == right


def test_compose_examples():
    assert compose(phi("ff", "f"), phi("ff", "f")).is_zero()
    assert compose(phi("e", "e"), phi("e", "e")) == phi("e", "e")
    assert compose(phi((), "e"), phi("ff", "f")).is_zero()


@given(homogeneous_cochains(min_degree=1))
def test_even_self_bracket_vanishes(a):
    if a.parity == EVEN:
        assert bracket(a, a).is_zero()


@given(homogeneous_cochains(min_degree=0), st.sampled_from(["d1", "d2", "d3", "d4", "d5", "d6"]))
def test_coboundary_raises_degree_and_flips_parity(a, label):
    from hochschild.checks import canonical_codifferentials

    out = coboundary(canonical_codifferentials()[label], a)
    assert out.degree == a.degree + 1
    assert out.is_zero() or out.parity == a.parity + ODD


def test_coboundary_examples(codiffs):
    assert coboundary(codiffs["d5"], phi("ee", "e")).is_zero()
    # phi^e_e is an inner derivation for d3, so its coboundary vanishes
    assert coboundary(codiffs["d3"], phi("e", "e")).is_zero()
    assert bracket(codiffs["d2"].cochain, codiffs["d2"].cochain).is_zero()


@given(small_rationals, small_rationals, small_rationals, small_rationals)
def test_mc_polynomial_of_general_odd_cochain(x, y, z, w):
    from hochschild.moduli import CoeffVector, mc_conditions

    expected = (y * (x + y), w * (y + z), w * (y + z), w * (x + y), z * (x - z), -w * (x - z))
    assert mc_conditions(CoeffVector(x, y, z, w)) == expected
