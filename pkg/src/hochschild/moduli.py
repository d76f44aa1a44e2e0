"""The moduli space of 1|1-dimensional associative algebras.

An odd element of C^2 on W = <e, f> is

    d = x*psi^{ff}_f + y*psi^{ef}_e + z*psi^{fe}_e + w*psi^{ee}_f

Even automorphisms of W are g(e) = a e, g(f) = b f with a, b nonzero; they
act by (x, y, z, w) -> (b x, b y, b z, a^2 w / b).  Over C any nonzero
number is a square, so equivalence reduces to a consistent b plus matching
vanishing of w.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .coder import Cochain, bracket, format_rational, parse_rational
from .errors import (
    ClassificationError,
    CochainSyntaxError,
    InvalidAutomorphismError,
    NotACodifferentialError,
)
from .graded import STANDARD
from .linalg import RatMatrix, rank, solve

__all__ = [
    "CoeffVector",
    "OrbitLabel",
    "CANONICAL",
    "MC_SLOTS",
    "mc_conditions",
    "is_codifferential",
    "automorphism_action",
    "EquivalenceWitness",
    "are_equivalent",
    "classify",
    "Branch",
    "solution_branches",
    "validate_branches",
    "AlgebraStructure",
    "AlgebraProperties",
    "to_algebra",
    "algebra_properties",
    "opposite",
]

# (coordinate name, source word, target label)
_SLOTS = (
    ("x", ("f", "f"), "f"),
    ("y", ("e", "f"), "e"),
    ("z", ("f", "e"), "e"),
    ("w", ("e", "e"), "f"),
)


@dataclass(frozen=True)
class CoeffVector:
    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction

    def __post_init__(self):
        for name in "xyzw":
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def of(cls, *values) -> "CoeffVector":
        return cls(*values)

    @classmethod
    def parse(cls, text: str) -> "CoeffVector":
        parts = text.split(",")
        if len(parts) != 4:
            raise CochainSyntaxError(f"expected four comma-separated rationals, got {text!r}")
        return cls(*(parse_rational(p) for p in parts))

    def as_tuple(self) -> tuple:
        return (self.x, self.y, self.z, self.w)

    def is_zero(self) -> bool:
        return not any(self.as_tuple())

    def to_cochain(self) -> Cochain:
        terms = {(src, tgt): getattr(self, name) for name, src, tgt in _SLOTS}
        return Cochain(2, terms, STANDARD)

    @classmethod
    def from_cochain(cls, cochain: Cochain) -> "CoeffVector":
        if cochain.degree != 2:
            raise ValueError("odd elements of C^2 have degree 2")
        if cochain.even_part():
            raise ValueError(f"{cochain} has even terms")
        return cls(*(cochain.coefficient(src, tgt) for _, src, tgt in _SLOTS))

    def __add__(self, other):
        return CoeffVector(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def scaled(self, t) -> "CoeffVector":
        return CoeffVector(*(t * a for a in self.as_tuple()))

    def __str__(self):
        return ",".join(format_rational(v) for v in self.as_tuple())


class OrbitLabel(str, enum.Enum):
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"
    D4 = "d4"
    D5 = "d5"
    D6 = "d6"
    ZERO = "zero"

    def __str__(self):
        return self.value


CANONICAL = {
    OrbitLabel.D1: CoeffVector(-1, 1, -1, 1),
    OrbitLabel.D2: CoeffVector(1, 0, 0, 0),
    OrbitLabel.D3: CoeffVector(-1, 1, 0, 0),
    OrbitLabel.D4: CoeffVector(1, 0, 1, 0),
    OrbitLabel.D5: CoeffVector(-1, 1, -1, 0),
    OrbitLabel.D6: CoeffVector(0, 0, 0, 1),
}

# Basis cochains carrying the six coefficients of (1/2)[d, d].
MC_SLOTS = (
    (("e", "f", "f"), "e"),
    (("e", "e", "e"), "e"),
    (("e", "f", "e"), "f"),
    (("e", "e", "f"), "f"),
    (("f", "f", "e"), "e"),
    (("f", "e", "e"), "f"),
)


def mc_conditions(c: CoeffVector) -> tuple:
    """Coefficients of (1/2)[d, d] on the six slots of MC_SLOTS, computed by the bracket."""
    d = c.to_cochain()
    half = bracket(d, d) * Fraction(1, 2)
    stray = set(half.terms) - set(MC_SLOTS)
    if stray:
        raise ClassificationError(f"(1/2)[d,d] has terms outside the known slots: {sorted(stray)}")
    return tuple(half.coefficient(src, tgt) for src, tgt in MC_SLOTS)


def is_codifferential(c: CoeffVector) -> bool:
    return not any(mc_conditions(c))


def automorphism_action(a, b, c: CoeffVector) -> CoeffVector:
    """Coefficients of g^{-1} o d o (g (x) g) for the even automorphism g = diag(a, b)."""
    a, b = Fraction(a), Fraction(b)
    if not a or not b:
        raise InvalidAutomorphismError("automorphism scales must be nonzero")
    scale = {"e": a, "f": b}
    terms = {}
    for (src, tgt), v in c.to_cochain().items():
        factor = Fraction(1)
        for label in src:
            factor *= scale[label]
        terms[src, tgt] = v * factor / scale[tgt]
    out = CoeffVector.from_cochain(Cochain(2, terms, STANDARD))
    assert out == CoeffVector(b * c.x, b * c.y, b * c.z, a * a / b * c.w)
    return out


@dataclass(frozen=True)
class EquivalenceWitness:
    """Parameters of an even automorphism taking one structure to another.

    ``None`` means the parameter is unconstrained.  When only w is nonzero, b
    is free in principle; the witness then fixes b = 1 and reports the a^2
    that goes with it.
    """

    b: Optional[Fraction]
    a_squared: Optional[Fraction]

    def to_dict(self) -> dict:
        fmt = lambda v: "free" if v is None else format_rational(v)
        return {"b": fmt(self.b), "a_squared": fmt(self.a_squared)}

    def __str__(self):
        d = self.to_dict()
        return f"b={d['b']}, a^2={d['a_squared']}"


def _require_codifferential(c: CoeffVector):
    if not is_codifferential(c):
        raise NotACodifferentialError(f"({c}) does not satisfy [d,d]=0")


def are_equivalent(c: CoeffVector, other: CoeffVector) -> Optional[EquivalenceWitness]:
    """Witness that ``other`` = action(a, b, c) for complex a, b != 0, or None."""
    _require_codifferential(c)
    _require_codifferential(other)
    b = None
    for u, v in zip((c.x, c.y, c.z), (other.x, other.y, other.z)):
        if (u == 0) != (v == 0):
            return None
        if u:
            ratio = v / u
            if b is None:
                b = ratio
            elif b != ratio:
                return None
    if (c.w == 0) != (other.w == 0):
        return None
    if c.w == 0:
        return EquivalenceWitness(b, None)
    if b is None:
        b = Fraction(1)
    return EquivalenceWitness(b, other.w * b / c.w)


def classify(c: CoeffVector) -> OrbitLabel:
    _require_codifferential(c)
    if c.is_zero():
        return OrbitLabel.ZERO
    hits = [label for label, canon in CANONICAL.items() if are_equivalent(c, canon) is not None]
    if len(hits) != 1:
        raise ClassificationError(f"({c}) matched {len(hits)} canonical codifferentials: {hits}")
    return hits[0]


@dataclass(frozen=True)
class Branch:
    description: str
    family: Callable
    label: OrbitLabel
    parameters: int


def solution_branches() -> list:
    """Closed-form pieces of the solution set of (1/2)[d,d] = 0 with their orbits.

    ``family`` takes nonzero rational parameters (x, and w where present).
    """
    C = CoeffVector
    return [
        Branch("w != 0, x != 0: y = -x, z = x", lambda x, w: C(x, -x, x, w), OrbitLabel.D1, 2),
        Branch("w != 0, x = y = z = 0", lambda w: C(0, 0, 0, w), OrbitLabel.D6, 1),
        Branch("w = 0, y = z = 0, x != 0", lambda x: C(x, 0, 0, 0), OrbitLabel.D2, 1),
        Branch("w = 0, y = -x, z = 0, x != 0", lambda x: C(x, -x, 0, 0), OrbitLabel.D3, 1),
        Branch("w = 0, y = 0, z = x, x != 0", lambda x: C(x, 0, x, 0), OrbitLabel.D4, 1),
        Branch("w = 0, y = -x, z = x, x != 0", lambda x: C(x, -x, x, 0), OrbitLabel.D5, 1),
        Branch("origin", lambda: C(0, 0, 0, 0), OrbitLabel.ZERO, 0),
    ]


def validate_branches(samples=(1, -1, Fraction(1, 2), 3, Fraction(-2, 3))) -> list:
    """Check every branch at sampled parameters; returns a list of failure messages."""
    failures = []
    samples = [Fraction(s) for s in samples]
    for br in solution_branches():
        if br.parameters == 0:
            points = [()]
        elif br.parameters == 1:
            points = [(s,) for s in samples]
        else:
            points = [(s, t) for s in samples for t in reversed(samples)]
        for pt in points:
            c = br.family(*pt)
            if any(mc_conditions(c)):
                failures.append(f"{br.description}: ({c}) is not a codifferential")
            elif classify(c) != br.label:
                failures.append(f"{br.description}: ({c}) classified as {classify(c)}, expected {br.label}")
    return failures


# -- algebra side ---------------------------------------------------------------

# V = <x, theta>, x even, theta odd; pi(x) = f, pi(theta) = e.
V_LABELS = ("x", "theta")
_PI = {"x": "f", "theta": "e"}
_PI_INV = {"f": "x", "e": "theta"}
_V_PARITY = {"x": 0, "theta": 1}


@dataclass(frozen=True)
class AlgebraStructure:
    """Multiplication table on V: products[(u, v)] = (coefficient of x, coefficient of theta)."""

    products: tuple

    def table(self) -> dict:
        return dict(self.products)

    def mul(self, u: tuple, v: tuple) -> tuple:
        """Product of two vectors given as (x-coefficient, theta-coefficient)."""
        tab = self.table()
        out = [Fraction(0), Fraction(0)]
        for i, a in enumerate(V_LABELS):
            for j, b in enumerate(V_LABELS):
                s = u[i] * v[j]
                if s:
                    px, pt = tab[a, b]
                    out[0] += s * px
                    out[1] += s * pt
        return tuple(out)

    def is_associative(self) -> bool:
        units = {"x": (Fraction(1), Fraction(0)), "theta": (Fraction(0), Fraction(1))}
        for a in V_LABELS:
            for b in V_LABELS:
                for c in V_LABELS:
                    ua, ub, uc = units[a], units[b], units[c]
                    if self.mul(self.mul(ua, ub), uc) != self.mul(ua, self.mul(ub, uc)):
                        return False
        return True

    def format_product(self, u: str, v: str) -> str:
        name = {"x": "x", "theta": "θ"}
        px, pt = self.table()[u, v]
        lhs = f"{name[u]}²" if u == v else f"{name[u]}{name[v]}"
        parts = []
        for coef, sym in ((px, "x"), (pt, "θ")):
            if coef:
                mag = "" if abs(coef) == 1 else format_rational(abs(coef))
                parts.append(("-" if coef < 0 else "+") + mag + sym)
        rhs = "".join(parts).lstrip("+") if parts else "0"
        return f"{lhs}={rhs}"

    def __str__(self):
        return "  ".join(self.format_product(u, v) for u in V_LABELS for v in V_LABELS)


def to_algebra(c: CoeffVector) -> AlgebraStructure:
    """m = pi^{-1} o d o (pi (x) pi), with the Koszul sign of the odd map pi passing the first argument."""
    _require_codifferential(c)
    d = c.to_cochain()
    products = []
    for u in V_LABELS:
        for v in V_LABELS:
            sign = -1 if _V_PARITY[u] else 1
            vec = {"x": Fraction(0), "theta": Fraction(0)}
            for tgt in STANDARD.labels:
                coef = d.coefficient((_PI[u], _PI[v]), tgt)
                if coef:
                    vec[_PI_INV[tgt]] += sign * coef
            products.append(((u, v), (vec["x"], vec["theta"])))
    return AlgebraStructure(tuple(products))


def _from_algebra(products: dict) -> CoeffVector:
    # inverse of to_algebra: d(pi u, pi v) = (-1)^{|u|} pi m(u, v)
    terms = {}
    for (u, v), (px, pt) in products.items():
        sign = -1 if _V_PARITY[u] else 1
        src = (_PI[u], _PI[v])
        for coef, tgt in ((px, "f"), (pt, "e")):
            if coef:
                terms[src, tgt] = sign * coef
    cochain = Cochain(2, terms, STANDARD)
    if cochain.even_part():
        raise ValueError("multiplication is not an even map")
    return CoeffVector.from_cochain(cochain)


@dataclass(frozen=True)
class AlgebraProperties:
    commutative: bool
    unital: bool
    unit: Optional[tuple]
    simple: bool
    nilpotent: bool
    x_ideal: bool
    theta_ideal: bool

    def to_dict(self) -> dict:
        unit = None
        if self.unit is not None:
            unit = {"x": format_rational(self.unit[0]), "theta": format_rational(self.unit[1])}
        return {
            "commutative": self.commutative,
            "unital": self.unital,
            "unit": unit,
            "simple": self.simple,
            "nilpotent": self.nilpotent,
            "ideals": {"<x>": self.x_ideal, "<theta>": self.theta_ideal},
        }


def _find_unit(A: AlgebraStructure) -> Optional[tuple]:
    # u = p x + q theta with u*v = v*u = v for v in {x, theta}: eight linear equations in (p, q)
    tab = A.table()
    rows, rhs = [], []
    for k, v in enumerate(V_LABELS):
        target = [Fraction(int(k == 0)), Fraction(int(k == 1))]
        for comp in range(2):
            rows.append([tab[a, v][comp] for a in V_LABELS])
            rhs.append(target[comp])
            rows.append([tab[v, a][comp] for a in V_LABELS])
            rhs.append(target[comp])
    sol = solve(RatMatrix.from_dense(rows), rhs)
    return None if sol is None else (sol[0], sol[1])


def _is_ideal(A: AlgebraStructure, line: int) -> bool:
    # span of a single basis vector; products with either basis vector must stay in it
    tab = A.table()
    gen = V_LABELS[line]
    other = 1 - line
    for v in V_LABELS:
        if tab[gen, v][other] or tab[v, gen][other]:
            return False
    return True


def _power_dims(A: AlgebraStructure, max_power: int = 4) -> list:
    basis_vecs = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    current = basis_vecs
    dims = [2]
    for _ in range(max_power - 1):
        products = [A.mul(a, b) for a in current for b in basis_vecs]
        products = [p for p in products if any(p)]
        r = rank(RatMatrix.from_dense(products)) if products else 0
        dims.append(r)
        current = products
        if r == 0:
            break
    return dims


def algebra_properties(A: AlgebraStructure) -> AlgebraProperties:
    tab = A.table()
    commutative = all(tab[u, v] == tab[v, u] for u in V_LABELS for v in V_LABELS)
    unit = _find_unit(A)
    x_ideal = _is_ideal(A, 0)
    theta_ideal = _is_ideal(A, 1)
    nonzero = any(any(p) for p in tab.values())
    # In a 1|1 space the only proper nonzero graded subspaces are the two coordinate lines.
    simple = nonzero and not x_ideal and not theta_ideal
    nilpotent = _power_dims(A)[-1] == 0
    return AlgebraProperties(commutative, unit is not None, unit, simple, nilpotent, x_ideal, theta_ideal)


def opposite(c: CoeffVector, graded: bool = False) -> CoeffVector:
    """Coefficients of the opposite algebra m'(a, b) = m(b, a), times (-1)^{|a||b|} when graded."""
    tab = to_algebra(c).table()
    new = {}
    for u in V_LABELS:
        for v in V_LABELS:
            sign = -1 if (graded and _V_PARITY[u] and _V_PARITY[v]) else 1
            px, pt = tab[v, u]
            new[u, v] = (sign * px, sign * pt)
    out = _from_algebra(new)
    _require_codifferential(out)
    return out


def canonical_cochain(label: OrbitLabel) -> Cochain:
    if label == OrbitLabel.ZERO:
        return Cochain.zero(2)
    return CANONICAL[OrbitLabel(label)].to_cochain()
