"""Invariant suites shared by ``selfcheck`` and the test-suite."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import cohomology
from .coder import Codifferential, Cochain, basis_cochains, bracket
from .deform import moduli_diagram
from .errors import EmptyCompositionError
from .moduli import CANONICAL, automorphism_action, classify, solution_branches
from .reference import JUMP_EDGES, TABLE1, d6_expected


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def canonical_codifferentials() -> dict:
    return {str(label): Codifferential(c.to_cochain()) for label, c in CANONICAL.items()}


def table1_rows() -> list:
    """(label, computed h^0..h^4, expected) for the six canonical codifferentials."""
    rows = []
    for label, d in canonical_codifferentials().items():
        computed = tuple(cohomology.h_dim(d, n)[0] for n in range(5))
        rows.append((label, computed, TABLE1[label]))
    return rows


def check_d_squared(max_degree: int) -> SuiteResult:
    for label, d in canonical_codifferentials().items():
        for n in range(max_degree):
            prod = cohomology.coboundary_matrix(d, n + 1).matrix @ cohomology.coboundary_matrix(d, n).matrix
            if not prod.is_zero():
                return SuiteResult("D^2 = 0", False, f"{label} fails at degree {n}")
    return SuiteResult("D^2 = 0", True, f"six codifferentials, degrees 0..{max_degree}")


def random_homogeneous(rng: random.Random, max_degree: int = 3, terms: int = 3) -> Cochain:
    degree = rng.randint(0, max_degree)
    parity = rng.randint(0, 1)
    keys = [k for k in basis_cochains(Cochain.zero(0).basis, degree) if Cochain(degree, {k: 1}).parity == parity]
    chosen = {}
    for _ in range(rng.randint(1, terms)):
        chosen[rng.choice(keys)] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return Cochain(degree, chosen)


def _graded_sign(a: Cochain, b: Cochain) -> int:
    return -1 if (a.parity and b.parity) else 1


def check_jacobi(trials: int = 100, seed: int = 0) -> SuiteResult:
    rng = random.Random(seed)
    done = 0
    while done < trials:
        a, b, c = (random_homogeneous(rng) for _ in range(3))
        try:
            lhs = bracket(a, bracket(b, c))
            rhs = bracket(bracket(a, b), c) + _graded_sign(a, b) * bracket(b, bracket(a, c))
        except EmptyCompositionError:
            continue
        if lhs != rhs:
            return SuiteResult("graded Jacobi", False, f"fails on {a} | {b} | {c}")
        if a.degree + b.degree >= 1 and bracket(a, b) != -_graded_sign(a, b) * bracket(b, a):
            return SuiteResult("graded Jacobi", False, f"antisymmetry fails on {a} | {b}")
        done += 1
    return SuiteResult("graded Jacobi", True, f"{trials} random triples, antisymmetry included")


def check_table1() -> SuiteResult:
    bad = [f"{label}: {computed} != {expected}" for label, computed, expected in table1_rows() if computed != expected]
    return SuiteResult("cohomology table h^0..h^4", not bad, "; ".join(bad) or "30 values agree")


def check_orbit_invariance(trials: int = 100, seed: int = 1) -> SuiteResult:
    rng = random.Random(seed)
    branches = [b for b in solution_branches() if b.parameters > 0]

    def nonzero():
        while True:
            q = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            if q:
                return q

    for _ in range(trials):
        br = rng.choice(branches)
        c = br.family(*(nonzero() for _ in range(br.parameters)))
        moved = automorphism_action(nonzero(), nonzero(), c)
        if classify(moved) != classify(c) or classify(c) != br.label:
            return SuiteResult("orbit invariance", False, f"({c}) vs ({moved})")
    return SuiteResult("orbit invariance", True, f"{trials} random even automorphisms")


def check_diagram() -> SuiteResult:
    diagram = moduli_diagram()
    edges = {(str(a), str(b)) for a, b in diagram.edges}
    self_edges = [e for e in edges if e[0] == e[1]]
    again = {(str(a), str(b)) for a, b in moduli_diagram(samples=(2, Fraction(-1, 3), 7)).edges}
    ok = edges == JUMP_EDGES and not self_edges and again == edges
    return SuiteResult("jump diagram", ok, ", ".join(f"{a}->{b}" for a, b in sorted(edges)))


def check_d6_pattern(max_degree: int) -> SuiteResult:
    d = canonical_codifferentials()["d6"]
    got = [cohomology.h_dim(d, n)[0] for n in range(max_degree + 1)]
    want = [d6_expected(n) for n in range(max_degree + 1)]
    return SuiteResult(f"d6 period-4 pattern to degree {max_degree}", got == want, " ".join(map(str, got)))


def run_all(max_degree: int = 8) -> list:
    suites = [
        lambda: check_d_squared(max_degree),
        check_jacobi,
        check_table1,
        check_orbit_invariance,
        check_diagram,
        lambda: check_d6_pattern(max_degree),
    ]
    names = ["D^2 = 0", "graded Jacobi", "cohomology table h^0..h^4", "orbit invariance", "jump diagram", "d6 period-4 pattern"]
    results = []
    for name, suite in zip(names, suites):
        try:
            results.append(suite())
        except Exception as exc:  # a broken convention can surface as any error
            results.append(SuiteResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results
