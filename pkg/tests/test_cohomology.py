from fractions import Fraction

import pytest

from hochschild import cohomology
from hochschild.coder import Cochain, basis_cochains, coboundary, decleene_cocycle, phi
from hochschild.cohomology import (
    CohomologyReport,
    block_rank,
    coboundary_matrix,
    cohomology_report,
    decleene_chart_row,
    e_component_coboundary,
    h_dim,
    is_coboundary,
    parity_positions,
    representatives,
)
from hochschild.graded import EVEN, ODD, STANDARD, parity_of_index
from hochschild.linalg import cokernel_complement, in_span, kernel_basis, rank, solve
from hochschild.reference import D6_CHART, TABLE1, d6_expected

LABELS = ["d1", "d2", "d3", "d4", "d5", "d6"]


def test_d1_degree_zero_matrix(codiffs):
    m = coboundary_matrix(codiffs["d1"], 0).matrix
    assert m.shape == (4, 2)
    index = {k: i for i, k in enumerate(basis_cochains(STANDARD, 1))}
    assert m.column(0) == {index[("e",), "f"]: 2}
    assert m.column(1) == {}
    assert rank(m) == 1


def test_negative_degree_rejected(codiffs):
    with pytest.raises(ValueError):
        coboundary_matrix(codiffs["d1"], -1)
    assert block_rank(codiffs["d1"], -1, EVEN) == 0


@pytest.mark.parametrize("label", LABELS)
@pytest.mark.parametrize("n", range(0, 5))
def test_table_values(codiffs, label, n):
    assert h_dim(codiffs[label], n)[0] == TABLE1[label][n]


@pytest.mark.parametrize("label", LABELS)
def test_d_squared_zero(codiffs, label):
    for n in range(0, 8):
        prod = coboundary_matrix(codiffs[label], n + 1).matrix @ coboundary_matrix(codiffs[label], n).matrix
        assert prod.is_zero()


@pytest.mark.parametrize("label", LABELS)
def test_rank_formula(codiffs, label):
    d = codiffs[label]
    for n in range(0, 7):
        dim = 2 ** (n + 1)
        rk = rank(coboundary_matrix(d, n).matrix)
        prev = rank(coboundary_matrix(d, n - 1).matrix) if n else 0
        h, h_even, h_odd = h_dim(d, n)
        assert dim == rk + prev + h
        assert h == h_even + h_odd
        assert rk == block_rank(d, n, EVEN) + block_rank(d, n, ODD)


@pytest.mark.parametrize("label", LABELS)
def test_matrix_connects_opposite_parities(codiffs, label):
    d = codiffs[label]
    for n in range(0, 5):
        src = basis_cochains(STANDARD, n)
        tgt = basis_cochains(STANDARD, n + 1)
        par = lambda key: parity_of_index(key[0]) + STANDARD.parity(key[1])
        for (r, c) in coboundary_matrix(d, n).matrix.entries:
            assert par(tgt[r]) != par(src[c])


def test_kernel_matches_table_for_d1(codiffs):
    m = coboundary_matrix(codiffs["d1"], 2).matrix
    rk1 = rank(coboundary_matrix(codiffs["d1"], 1).matrix)
    assert len(kernel_basis(m)) == rk1 + TABLE1["d1"][2]


def test_h_dim_examples(codiffs):
    assert h_dim(codiffs["d2"], 0)[0] == 2
    h, even, odd = h_dim(codiffs["d6"], 2)
    assert h == 2 and odd >= 1
    assert h_dim(codiffs["d6"], 8)[0] == 1


def test_parity_split_of_degree_two(codiffs):
    assert h_dim(codiffs["d2"], 2) == (1, 1, 0)
    assert h_dim(codiffs["d5"], 2) == (2, 1, 1)
    assert h_dim(codiffs["d6"], 2) == (2, 1, 1)


@pytest.mark.parametrize("label", LABELS)
def test_representatives_are_independent_cocycles(codiffs, label):
    d = codiffs[label]
    for n in range(0, 5):
        reps = representatives(d, n)
        assert len(reps) == h_dim(d, n)[0]
        for r in reps:
            assert coboundary(d, r).is_zero()
            assert not is_coboundary(d, r)
        # independent modulo coboundaries
        if n:
            bnd = [x for x in coboundary_matrix(d, n - 1).matrix.columns() if x]
            vecs = [r.to_vector() for r in reps]
            assert len(cokernel_complement(vecs + bnd, bnd)) == len(reps)


def test_representatives_are_deterministic(codiffs):
    cohomology.clear_caches()
    first = [str(r) for r in representatives(codiffs["d6"], 3)]
    cohomology.clear_caches()
    assert [str(r) for r in representatives(codiffs["d6"], 3)] == first


def _same_classes(d, n, reps, expected):
    bnd = [x for x in coboundary_matrix(d, n - 1).matrix.columns() if x] if n else []
    for c in expected:
        assert in_span([r.to_vector() for r in reps] + bnd, c.to_vector())
    assert len(reps) == len(expected)


def test_d2_degree_three_class(codiffs):
    d = codiffs["d2"]
    reps = representatives(d, 3)
    _same_classes(d, 3, reps, [phi("eee", "e")])
    cycles = kernel_basis(coboundary_matrix(d, 3).matrix)
    bnd = [x for x in coboundary_matrix(d, 2).matrix.columns() if x]
    picked = cokernel_complement(bnd + cycles, bnd)
    assert len(picked) == 1
    assert in_span(bnd + [phi("eee", "e").to_vector()], picked[0])


def test_d5_degree_two_classes(codiffs):
    d = codiffs["d5"]
    _same_classes(d, 2, representatives(d, 2), [phi("ee", "e"), phi("ee", "f")])


def test_d3_degree_four_empty(codiffs):
    assert representatives(codiffs["d3"], 4) == []


def test_is_coboundary(codiffs):
    d = codiffs["d3"]
    b = coboundary(d, phi("e", "f"))
    assert not b.is_zero()
    assert is_coboundary(d, b)
    assert not is_coboundary(codiffs["d2"], phi("ee", "e"))
    assert is_coboundary(d, Cochain.zero(0))


def test_solve_finds_preimage_of_coboundary(codiffs):
    d = codiffs["d3"]
    target = coboundary(d, phi("f", "e") + phi("e", "f"))
    m = coboundary_matrix(d, 1).matrix
    b = [Fraction(0)] * m.rows
    for k, v in target.to_vector().items():
        b[k] = v
    x = solve(m, b)
    assert x is not None
    pre = Cochain.from_vector(1, {k: v for k, v in enumerate(x) if v})
    assert coboundary(d, pre) == target


def test_report_rows(codiffs):
    rep = cohomology_report(codiffs["d1"], 4, label="d1")
    assert rep.h == [1, 0, 0, 0, 0]
    assert cohomology_report(codiffs["d5"], 4).h == [2, 2, 2, 2, 2]
    assert [r.dim for r in rep.rows] == [2, 4, 8, 16, 32]
    with pytest.raises(ValueError):
        cohomology_report(codiffs["d1"], -1)


def test_report_json_round_trip(codiffs):
    rep = cohomology_report(codiffs["d6"], 5, label="d6")
    again = CohomologyReport.from_json(rep.to_json())
    assert again == rep


def test_report_csv_and_text(codiffs):
    rep = cohomology_report(codiffs["d2"], 3, label="d2")
    lines = rep.to_csv().splitlines()
    assert lines[0] == "n,dim,rank,h,h_even,h_odd"
    assert lines[1] == "0,2,0,2,1,1"
    text = rep.to_text()
    assert "phi[eee->e]" in text
    assert "phi" not in rep.to_text(show_representatives=False)


def test_parity_positions_partition():
    for n in range(0, 6):
        even = parity_positions(STANDARD, n, EVEN)
        odd = parity_positions(STANDARD, n, ODD)
        assert sorted(even + odd) == list(range(2 ** (n + 1)))
        assert len(even) == len(odd)


@pytest.mark.parametrize("n", range(0, 9))
def test_decleene_e_cocycle_and_chart(codiffs, n):
    d = codiffs["d6"]
    assert e_component_coboundary(d, decleene_cocycle(n, "e")).is_zero()
    extends, f_nontrivial = decleene_chart_row(d, n)
    assert (extends, f_nontrivial) == D6_CHART[n % 4][:2]
    h, even, odd = h_dim(d, n)
    assert extends + f_nontrivial == even + odd == d6_expected(n)
