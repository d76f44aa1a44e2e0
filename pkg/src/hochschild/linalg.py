"""Exact sparse linear algebra over the rationals.

Matrices are stored column-wise as ``{row: Fraction}`` maps.  Elimination
runs on primitive integer vectors (denominators cleared, content divided
out), which keeps the integer-entried coboundary matrices free of Fraction
overhead.  The pivot of every echelon vector is its lowest nonzero index,
so kernels and complements are deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Optional, Sequence

from .errors import ContainmentError, ShapeError

__all__ = [
    "RatMatrix",
    "rank",
    "kernel_basis",
    "solve",
    "cokernel_complement",
    "in_span",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class RatMatrix:
    """Sparse exact rational matrix. Treated as immutable after construction."""

    __slots__ = ("rows", "cols", "_columns", "_row_view")

    def __init__(self, rows: int, cols: int, entries: Mapping | None = None):
        if rows < 0 or cols < 0:
            raise ShapeError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        columns = [dict() for _ in range(cols)]
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ShapeError(f"entry ({r}, {c}) outside {rows}x{cols}")
            v = _frac(v)
            if v:
                columns[c][r] = v
        self._columns = columns
        self._row_view = None

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Mapping]) -> "RatMatrix":
        m = cls(rows, len(columns))
        for c, col in enumerate(columns):
            clean = {}
            for r, v in col.items():
                if not 0 <= r < rows:
                    raise ShapeError(f"row index {r} outside 0..{rows - 1}")
                v = _frac(v)
                if v:
                    clean[r] = v
            m._columns[c] = clean
        return m

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = {}
        for r, line in enumerate(data):
            if len(line) != cols:
                raise ShapeError("ragged dense matrix")
            for c, v in enumerate(line):
                if v:
                    entries[r, c] = v
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, {(k, k): 1 for k in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    @property
    def entries(self) -> dict:
        return {(r, c): v for c, col in enumerate(self._columns) for r, v in col.items()}

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self._columns)

    def column(self, c: int) -> dict:
        return dict(self._columns[c])

    def columns(self) -> list:
        return [dict(col) for col in self._columns]

    def row_dicts(self) -> list:
        if self._row_view is None:
            view = [dict() for _ in range(self.rows)]
            for c, col in enumerate(self._columns):
                for r, v in col.items():
                    view[r][c] = v
            self._row_view = view
        return [dict(row) for row in self._row_view]

    def __getitem__(self, key) -> Fraction:
        r, c = key
        return self._columns[c].get(r, Fraction(0))

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_columns(self.cols, self.row_dicts())

    def submatrix(self, row_idx: Sequence[int] | None = None, col_idx: Sequence[int] | None = None) -> "RatMatrix":
        if col_idx is None:
            col_idx = range(self.cols)
        if row_idx is None:
            return RatMatrix.from_columns(self.rows, [self._columns[c] for c in col_idx])
        new_row = {r: k for k, r in enumerate(row_idx)}
        cols = []
        for c in col_idx:
            cols.append({new_row[r]: v for r, v in self._columns[c].items() if r in new_row})
        return RatMatrix.from_columns(len(new_row), cols)

    def matvec(self, x: Sequence) -> list:
        if len(x) != self.cols:
            raise ShapeError(f"vector of length {len(x)} for {self.rows}x{self.cols} matrix")
        out = [Fraction(0)] * self.rows
        for c, col in enumerate(self._columns):
            xc = x[c]
            if xc:
                for r, v in col.items():
                    out[r] += v * xc
        return out

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols = []
        for col in other._columns:
            acc: dict = {}
            for k, b in col.items():
                for r, a in self._columns[k].items():
                    acc[r] = acc.get(r, 0) + a * b
            cols.append({r: v for r, v in acc.items() if v})
        return RatMatrix.from_columns(self.rows, cols)

    def is_zero(self) -> bool:
        return not any(self._columns)

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._columns == other._columns

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


# -- integer echelon engine ---------------------------------------------------


def _primitive(vec: Mapping) -> dict:
    """Scale a rational sparse vector to a primitive integer vector (same span)."""
    items = [(k, _frac(v)) for k, v in vec.items() if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = lcm(den, v.denominator)
    ints = {k: v.numerator * (den // v.denominator) for k, v in items}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {k: v // g for k, v in ints.items()}
    return ints


def _make_primitive(vec: dict) -> dict:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        for k in vec:
            vec[k] //= g
    return vec


class _Echelon:
    """Incremental row echelon form; each stored vector is keyed by its lowest index."""

    def __init__(self):
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Eliminate leading entries against stored pivots; returns a fresh dict."""
        v = dict(vec)
        pivots = self.pivots
        while v:
            lead = min(v)
            piv = pivots.get(lead)
            if piv is None:
                return v
            a = v[lead]
            p = piv[lead]
            if a % p == 0:
                q = a // p
                for k, x in piv.items():
                    y = v.get(k, 0) - q * x
                    if y:
                        v[k] = y
                    else:
                        del v[k]
            else:
                g = gcd(a, p)
                sa, sp = p // g, a // g
                for k in v:
                    v[k] *= sa
                for k, x in piv.items():
                    y = v.get(k, 0) - sp * x
                    if y:
                        v[k] = y
                    else:
                        del v[k]
                _make_primitive(v)
        return v

    def add(self, vec: dict) -> Optional[int]:
        """Insert ``vec``; returns the new pivot index or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        lead = min(v)
        if v[lead] < 0:
            v = {k: -x for k, x in v.items()}
        self.pivots[lead] = v
        return lead

    def reduced_rows(self) -> dict:
        """Reduced row echelon form as ``{pivot: {index: Fraction}}`` with unit pivots."""
        done: dict = {}
        for p in sorted(self.pivots, reverse=True):
            row = {k: Fraction(x) for k, x in self.pivots[p].items()}
            scale = row[p]
            row = {k: x / scale for k, x in row.items()}
            for q in sorted((k for k in row if k != p and k in done), reverse=True):
                coef = row.get(q)
                if not coef:
                    continue
                for k, x in done[q].items():
                    y = row.get(k, 0) - coef * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
            done[p] = row
        return done


def _column_components(m: RatMatrix) -> list:
    """Group column indices into connected blocks (columns linked by a shared row)."""
    parent = list(range(m.cols))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner: dict = {}
    for c, col in enumerate(m._columns):
        for r in col:
            o = owner.setdefault(r, c)
            if o != c:
                ra, rb = find(o), find(c)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for c in range(m.cols):
        if m._columns[c]:
            groups.setdefault(find(c), []).append(c)
    return list(groups.values())


def rank(m: RatMatrix) -> int:
    total = 0
    for block in _column_components(m):
        ech = _Echelon()
        for c in block:
            ech.add(_primitive(m._columns[c]))
        total += len(ech)
    return total


def column_space_pivots(m: RatMatrix) -> list:
    """Sorted leading row indices of an echelon basis of the column space."""
    ech = _Echelon()
    for col in m._columns:
        if col:
            ech.add(_primitive(col))
    return sorted(ech.pivots)


def kernel_basis(m: RatMatrix) -> list:
    """Basis of the right null space, one vector per free column, in column order.

    Connected column blocks are reduced independently; the result equals the
    one obtained from a global reduced echelon form.
    """
    rows = m.row_dicts()
    by_free: dict = {}
    for c in range(m.cols):
        if not m._columns[c]:
            by_free[c] = {c: Fraction(1)}
    for block in _column_components(m):
        touched = sorted({r for c in block for r in m._columns[c]})
        ech = _Echelon()
        for r in touched:
            ech.add(_primitive(rows[r]))
        rref = ech.reduced_rows()
        for f in block:
            if f in rref:
                continue
            vec = {f: Fraction(1)}
            for p, row in rref.items():
                v = row.get(f)
                if v:
                    vec[p] = -v
            by_free[f] = vec
    basis = []
    for f in sorted(by_free):
        x = [Fraction(0)] * m.cols
        for k, v in by_free[f].items():
            x[k] = v
        basis.append(x)
    return basis


def kernel_basis_sparse(m: RatMatrix) -> list:
    """Like :func:`kernel_basis` but returns ``{index: value}`` dicts."""
    return [{k: v for k, v in enumerate(x) if v} for x in kernel_basis(m)]


def solve(m: RatMatrix, b: Sequence) -> Optional[list]:
    """Some exact solution of ``m x = b``, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise ShapeError(f"right-hand side has length {len(b)}, expected {m.rows}")
    rows = m.row_dicts()
    ech = _Echelon()
    rhs_col = m.cols
    for r, row in enumerate(rows):
        if b[r]:
            row[rhs_col] = _frac(b[r])
        if row:
            ech.add(_primitive(row))
    if rhs_col in ech.pivots:
        return None
    rref = ech.reduced_rows()
    x = [Fraction(0)] * m.cols
    for p, row in rref.items():
        x[p] = row.get(rhs_col, Fraction(0))
    return x


def _as_dict(vec) -> dict:
    if isinstance(vec, Mapping):
        return {k: _frac(v) for k, v in vec.items() if v}
    return {k: _frac(v) for k, v in enumerate(vec) if v}


def in_span(vectors: Iterable, target) -> bool:
    ech = _Echelon()
    for v in vectors:
        ech.add(_primitive(_as_dict(v)))
    return not ech.reduce(_primitive(_as_dict(target)))


def cokernel_complement(cycles: Sequence, boundaries: Sequence) -> list:
    """Vectors from ``cycles`` completing a basis of span(boundaries) to one of span(cycles).

    Their classes form a basis of span(cycles)/span(boundaries).  Returned
    vectors are the original inputs, chosen greedily in the given order.
    """
    zspan = _Echelon()
    for z in cycles:
        zspan.add(_primitive(_as_dict(z)))
    ech = _Echelon()
    for k, b in enumerate(boundaries):
        pb = _primitive(_as_dict(b))
        if zspan.reduce(pb):
            raise ContainmentError(f"boundary vector #{k} is not in the span of the cycles")
        ech.add(pb)
    picked = []
    for z in cycles:
        if ech.add(_primitive(_as_dict(z))) is not None:
            picked.append(z)
    return picked
