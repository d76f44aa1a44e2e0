"""Coderivation calculus on the tensor coalgebra T(W).

A cochain of degree n is a linear map W^n -> W, written in the basis
phi^I_i (I a word of length n, i a basis label).  Composition inserts the
second cochain into each matching slot of the first, with the Koszul sign
of the prefix it jumps over; the bracket is the graded commutator of
composition, and the coboundary of an odd codifferential d is D = [d, -].
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

from .errors import (
    CochainSyntaxError,
    EmptyCompositionError,
    LabelError,
    NotACodifferentialError,
    ParityError,
)
from .graded import (
    EVEN,
    ODD,
    STANDARD,
    GradedBasis,
    Parity,
    index_key,
    iter_indices,
    koszul_sign,
    parity_of_index,
)

__all__ = [
    "Cochain",
    "Codifferential",
    "basis_cochains",
    "phi",
    "compose",
    "bracket",
    "coboundary",
    "lambda_op",
    "decleene_theta",
    "decleene_cocycle",
    "format_rational",
    "parse_rational",
    "parse_cochain",
]


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise CochainSyntaxError(f"not a rational number: {text!r}") from exc


class Cochain:
    """Exact linear combination of basis cochains phi^I_i of one fixed degree."""

    __slots__ = ("degree", "basis", "_terms", "_hash")

    def __init__(self, degree: int, terms: Mapping | None = None, basis: GradedBasis = STANDARD):
        if degree < 0:
            raise ValueError("cochain degree must be non-negative")
        self.degree = degree
        self.basis = basis
        clean = {}
        for (src, tgt), coef in (terms or {}).items():
            src = tuple(src)
            if len(src) != degree:
                raise ValueError(f"term phi[{src}->{tgt}] does not have degree {degree}")
            for a in src:
                basis.index(a)
            basis.index(tgt)
            coef = Fraction(coef)
            if coef:
                clean[src, tgt] = clean.get((src, tgt), 0) + coef
                if not clean[src, tgt]:
                    del clean[src, tgt]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, degree, terms, basis):
        obj = cls.__new__(cls)
        obj.degree = degree
        obj.basis = basis
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, degree: int, basis: GradedBasis = STANDARD) -> "Cochain":
        return cls(degree, None, basis)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, source, target) -> Fraction:
        return self._terms.get((tuple(source), target), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # parity ------------------------------------------------------------

    def term_parity(self, key) -> Parity:
        src, tgt = key
        return parity_of_index(src, self.basis) + self.basis.parity(tgt)

    def parity_part(self, parity: Parity) -> "Cochain":
        terms = {k: v for k, v in self._terms.items() if self.term_parity(k) == parity}
        return Cochain._raw(self.degree, terms, self.basis)

    def even_part(self) -> "Cochain":
        return self.parity_part(EVEN)

    def odd_part(self) -> "Cochain":
        return self.parity_part(ODD)

    def target_part(self, target) -> "Cochain":
        """Terms whose output is ``target`` (E- or F-component for the 1|1 basis)."""
        terms = {k: v for k, v in self._terms.items() if k[1] == target}
        return Cochain._raw(self.degree, terms, self.basis)

    def is_homogeneous(self) -> bool:
        return len({self.term_parity(k) for k in self._terms}) <= 1

    @property
    def parity(self) -> Parity:
        """Parity of a homogeneous cochain; the zero cochain counts as even."""
        found = {self.term_parity(k) for k in self._terms}
        if len(found) > 1:
            raise ParityError(f"cochain {self} is not homogeneous in parity")
        return found.pop() if found else EVEN

    # linear structure ----------------------------------------------------

    def _check_compatible(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if other.degree != self.degree or other.basis != self.basis:
            raise ValueError(f"cannot add cochains of degree {self.degree} and {other.degree}")
        return None

    def __add__(self, other):
        bad = self._check_compatible(other)
        if bad is NotImplemented:
            return bad
        terms = dict(self._terms)
        for k, v in other._terms.items():
            s = terms.get(k, 0) + v
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return Cochain._raw(self.degree, terms, self.basis)

    def __neg__(self):
        return Cochain._raw(self.degree, {k: -v for k, v in self._terms.items()}, self.basis)

    def __sub__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, Cochain):
            return NotImplemented
        s = Fraction(scalar)
        if not s:
            return Cochain.zero(self.degree, self.basis)
        return Cochain._raw(self.degree, {k: v * s for k, v in self._terms.items()}, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._terms.items())))
        return self._hash

    # coordinates ---------------------------------------------------------

    def sorted_terms(self) -> list:
        b = self.basis
        return sorted(self._terms.items(), key=lambda kv: (b.index(kv[0][1]), index_key(kv[0][0], b)))

    def to_vector(self, index: Mapping | None = None) -> dict:
        """Sparse coordinate vector ``{position: coefficient}`` in the canonical basis order."""
        if index is None:
            index = basis_index(self.basis, self.degree)
        return {index[k]: v for k, v in self._terms.items()}

    @classmethod
    def from_vector(cls, degree: int, vector, basis: GradedBasis = STANDARD) -> "Cochain":
        keys = basis_cochains(basis, degree)
        items = vector.items() if isinstance(vector, Mapping) else enumerate(vector)
        return cls(degree, {keys[k]: v for k, v in items if v}, basis)

    # text ----------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        sep = "" if self.basis.single_char else ","
        parts = []
        for (src, tgt), coef in self.sorted_terms():
            sign = "+" if coef > 0 else "-"
            parts.append(f"{sign}{format_rational(abs(coef))}*phi[{sep.join(src)}->{tgt}]")
        return " ".join(parts)

    def __repr__(self):
        return f"Cochain(degree={self.degree}, {self})"


_basis_cache: dict = {}
_index_cache: dict = {}


def basis_cochains(basis: GradedBasis, degree: int) -> list:
    """Canonical basis of C^n: ordered by target label, then lexicographically by source."""
    key = (basis, degree)
    if key not in _basis_cache:
        words = list(iter_indices(basis, degree))
        _basis_cache[key] = [(w, t) for t in basis.labels for w in words]
    return _basis_cache[key]


def basis_index(basis: GradedBasis, degree: int) -> dict:
    key = (basis, degree)
    if key not in _index_cache:
        _index_cache[key] = {bc: k for k, bc in enumerate(basis_cochains(basis, degree))}
    return _index_cache[key]


def phi(source, target, coef=1, basis: GradedBasis = STANDARD) -> Cochain:
    """Single basis cochain, e.g. ``phi("ef", "e")`` for phi^{ef}_e."""
    src = _split_source(source, basis) if isinstance(source, str) else tuple(source)
    return Cochain(len(src), {(src, target): coef}, basis)


def _split_source(text: str, basis: GradedBasis) -> tuple:
    text = text.strip()
    if not text:
        return ()
    if "," in text or not basis.single_char:
        parts = tuple(p.strip() for p in text.split(","))
    else:
        parts = tuple(text)
    for p in parts:
        if p not in basis:
            raise CochainSyntaxError(f"unknown basis label {p!r} in source {text!r}")
    return parts


_TERM = re.compile(r"([+-]?)\s*(?:([0-9]+(?:/[0-9]+)?)\s*\*?\s*)?(?:phi|psi)\[([^\]]*)\]")


def parse_cochain(text: str, basis: GradedBasis = STANDARD, degree: int | None = None) -> Cochain:
    """Parse ``+2*phi[ef->e] -1*phi[->f]``; whitespace-insensitive, ``psi`` accepted as an alias."""
    compact = re.sub(r"\s+", "", text)
    if compact in ("", "0"):
        if degree is None:
            raise CochainSyntaxError("the zero cochain needs an explicit degree")
        return Cochain.zero(degree, basis)
    terms: dict = {}
    pos = 0
    deg = degree
    for m in _TERM.finditer(compact):
        if m.start() != pos or (pos > 0 and not m.group(1)):
            raise CochainSyntaxError(f"cannot parse cochain near {compact[pos:]!r}")
        pos = m.end()
        body = m.group(3)
        if "->" not in body:
            raise CochainSyntaxError(f"term {m.group(0)!r} lacks '->'")
        src_text, tgt = body.split("->", 1)
        if tgt not in basis:
            raise CochainSyntaxError(f"unknown target label {tgt!r}")
        src = _split_source(src_text, basis)
        if deg is None:
            deg = len(src)
        elif len(src) != deg:
            raise CochainSyntaxError(f"mixed degrees in cochain {text!r}")
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        terms[src, tgt] = terms.get((src, tgt), 0) + coef
    if pos != len(compact):
        raise CochainSyntaxError(f"cannot parse cochain near {compact[pos:]!r}")
    return Cochain(deg, terms, basis)


# -- composition and bracket ---------------------------------------------------


def compose(left: Cochain, right: Cochain) -> Cochain:
    """Coderivation composition ``left o right`` (insert right into each matching slot of left)."""
    if left.basis != right.basis:
        raise ValueError("cochains live over different bases")
    p, q = left.degree, right.degree
    if p == 0 and q == 0:
        raise EmptyCompositionError("composing two degree-0 cochains would give degree -1")
    basis = left.basis
    if p == 0:
        return Cochain.zero(q - 1, basis)
    par = {a: basis.parity(a) for a in basis.labels}
    right_terms = []
    for (src, tgt), coef in right._terms.items():
        rpar = (sum(par[a] for a in src) + par[tgt]) % 2
        right_terms.append((src, tgt, coef, rpar))
    out: dict = {}
    for (isrc, itgt), icoef in left._terms.items():
        prefix = [0]
        for a in isrc:
            prefix.append((prefix[-1] + par[a]) % 2)
        for jsrc, jtgt, jcoef, jpar in right_terms:
            for k, a in enumerate(isrc):
                if a != jtgt:
                    continue
                key = (isrc[:k] + jsrc + isrc[k + 1:], itgt)
                val = koszul_sign(prefix[k], jpar) * icoef * jcoef
                s = out.get(key, 0) + val
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return Cochain._raw(p + q - 1, out, basis)


def bracket(left: Cochain, right: Cochain) -> Cochain:
    """Graded commutator [left, right] = left o right - (-1)^{|left||right|} right o left."""
    for c in (left, right):
        if not c.is_homogeneous():
            raise ParityError(f"bracket needs parity-homogeneous inputs, got {c}")
    sign = -1 if (left.parity and right.parity) else 1
    return compose(left, right) - sign * compose(right, left)


class Codifferential:
    """An odd degree-2 cochain d with [d, d] = 0."""

    __slots__ = ("cochain",)

    def __init__(self, cochain: Cochain, check: bool = True):
        if cochain.degree != 2:
            raise NotACodifferentialError(f"codifferential must have degree 2, got {cochain.degree}")
        if check:
            if cochain.even_part():
                raise NotACodifferentialError(f"{cochain} has even terms")
            if bracket(cochain, cochain):
                raise NotACodifferentialError(f"[d, d] != 0 for d = {cochain}")
        self.cochain = cochain

    @property
    def basis(self):
        return self.cochain.basis

    def __eq__(self, other):
        return isinstance(other, Codifferential) and self.cochain == other.cochain

    def __hash__(self):
        return hash(("codifferential", self.cochain))

    def __str__(self):
        return str(self.cochain)

    def __repr__(self):
        return f"Codifferential({self.cochain})"


def coboundary(d, cochain: Cochain) -> Cochain:
    """D(phi) = [d, phi]; d may be a Codifferential or a raw cochain."""
    dc = d.cochain if isinstance(d, Codifferential) else d
    return bracket(dc, cochain)


# -- auxiliary operators on the 1|1 complex ------------------------------------


def lambda_op(prefix, cochain: Cochain) -> Cochain:
    """Prepend the word ``prefix`` to every source: phi^J_j -> phi^{IJ}_j."""
    if isinstance(prefix, str):
        prefix = _split_source(prefix, cochain.basis)
    prefix = tuple(prefix)
    for a in prefix:
        if a not in cochain.basis:
            raise LabelError(f"unknown basis label {a!r}")
    terms = {(prefix + src, tgt): v for (src, tgt), v in cochain._terms.items()}
    return Cochain._raw(cochain.degree + len(prefix), terms, cochain.basis)


def decleene_theta(cochain: Cochain) -> Cochain:
    """theta = lambda^{ef} - lambda^{fe}."""
    return lambda_op(("e", "f"), cochain) - lambda_op(("f", "e"), cochain)


def decleene_cocycle(n: int, species: str) -> Cochain:
    """Ch^n_species: theta^{n/2} phi_species for even n, theta^{(n-1)/2} phi^e_species for odd n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if species not in ("e", "f"):
        raise LabelError(f"species must be 'e' or 'f', got {species!r}")
    c = phi((), species) if n % 2 == 0 else phi(("e",), species)
    for _ in range(n // 2):
        c = decleene_theta(c)
    return c
