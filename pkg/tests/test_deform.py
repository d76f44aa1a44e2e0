from fractions import Fraction

import pytest

from hochschild.coder import Cochain, bracket, phi
from hochschild.cohomology import coboundary_matrix
from hochschild.deform import (
    ModuliDiagram,
    deformation_record,
    generator_is_nontrivial,
    jump_targets,
    moduli_diagram,
    obstruction_brackets,
    odd_h2_generators,
)
from hochschild.errors import SamplingInconsistencyError
from hochschild.linalg import in_span
from hochschild.moduli import CANONICAL, OrbitLabel

LABELS = ["d1", "d2", "d3", "d4", "d5", "d6"]
PUBLISHED = {
    "d5": phi("ee", "f"),
    "d6": phi("ef", "e") - phi("fe", "e") - phi("ff", "f"),
}


def spans_class(label, generators, target):
    d = CANONICAL[OrbitLabel(label)].to_cochain()
    bnd = [x for x in coboundary_matrix(d, 1).matrix.columns() if x]
    return in_span([g.to_vector() for g in generators] + bnd, target.to_vector())


@pytest.mark.parametrize("label", LABELS)
def test_generators(label):
    gens = odd_h2_generators(label)
    assert len(gens) == (1 if label in PUBLISHED else 0)
    for g in gens:
        assert generator_is_nontrivial(label, g)
    if label in PUBLISHED:
        assert spans_class(label, gens, PUBLISHED[label])


def test_obstruction_examples():
    assert obstruction_brackets([]) == []
    assert obstruction_brackets([phi("ee", "f")]) == [Cochain.zero(3)]
    assert all(o.is_zero() for o in obstruction_brackets([PUBLISHED["d6"]]))
    with pytest.raises(ValueError):
        obstruction_brackets([phi("ef", "f")])


@pytest.mark.parametrize("label", ["d5", "d6"])
def test_family_is_codifferential_for_all_t(label):
    base = CANONICAL[OrbitLabel(label)].to_cochain()
    delta = odd_h2_generators(label)[0]
    for t in (Fraction(1), Fraction(-2), Fraction(1, 3)):
        dt = base + delta * t
        assert bracket(dt, dt).is_zero()


def test_jump_targets():
    assert jump_targets("d5", [1, Fraction(1, 2), -3]) == {OrbitLabel.D1}
    assert jump_targets("d6", [1, 2, Fraction(-1, 2)]) == {OrbitLabel.D1}
    assert jump_targets("d2") == set()


def test_jump_targets_reject_zero_sample():
    with pytest.raises(ValueError):
        jump_targets("d5", [0, 1])


def test_sampling_inconsistency(monkeypatch):
    import hochschild.deform as deform

    calls = iter([OrbitLabel.D1, OrbitLabel.D2] * 5)
    monkeypatch.setattr(deform, "classify", lambda c: next(calls))
    with pytest.raises(SamplingInconsistencyError):
        jump_targets("d5", [1, 2])


def test_record():
    rec = deformation_record("d6")
    assert rec.miniversal
    assert rec.jump_targets == {OrbitLabel.D1}
    fam = rec.family_at([Fraction(2)])
    assert fam == CANONICAL[OrbitLabel.D6] + rec.family_directions[0].scaled(2)
    data = rec.to_dict()
    assert data["jump_targets"] == ["d1"] and data["miniversal"] is True
    assert "miniversal = infinitesimal" in rec.to_text()
    with pytest.raises(ValueError):
        rec.family_at([1, 2])
    empty = deformation_record("d1")
    assert empty.generators == [] and "no infinitesimal deformations" in empty.to_text()


def test_diagram():
    diagram = moduli_diagram()
    edges = {(str(a), str(b)) for a, b in diagram.edges}
    assert edges == {("d5", "d1"), ("d6", "d1")}
    assert diagram.in_degree(OrbitLabel.D1) == 2
    assert diagram.out_degree(OrbitLabel.D1) == 0
    for label in ("d2", "d3", "d4"):
        assert diagram.in_degree(OrbitLabel(label)) == diagram.out_degree(OrbitLabel(label)) == 0
    assert ModuliDiagram.from_json(diagram.to_json()) == diagram
    dot = diagram.to_dot()
    assert dot.count("[style=dashed]") == 2 and "d6 -> d1" in dot
    assert OrbitLabel.ZERO in moduli_diagram(include_zero=True).nodes
