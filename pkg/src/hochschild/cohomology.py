"""Hochschild cohomology of a codifferential by exact rank computation.

D = [d, -] raises degree by one and, because d is odd, flips parity.  Every
matrix is therefore split into two parity blocks and all ranks are taken
block by block:

    h_n(even) = dim C^n_even - rank(D_n on even) - rank(D_{n-1} on odd)
    h_n(odd)  = dim C^n_odd  - rank(D_n on odd)  - rank(D_{n-1} on even)
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .coder import (
    Codifferential,
    Cochain,
    basis_cochains,
    basis_index,
    coboundary,
    decleene_cocycle,
    parse_cochain,
)
from .graded import EVEN, ODD, Parity, parity_of_index
from .linalg import RatMatrix, column_space_pivots, kernel_basis_sparse, rank, solve

__all__ = [
    "CoboundaryMatrix",
    "CohomologyRow",
    "CohomologyReport",
    "coboundary_matrix",
    "parity_positions",
    "block_rank",
    "h_dim",
    "representatives",
    "cohomology_report",
    "is_coboundary",
]


@dataclass(frozen=True)
class CoboundaryMatrix:
    degree: int
    matrix: RatMatrix

    @property
    def shape(self):
        return self.matrix.shape


def _as_codifferential(d) -> Codifferential:
    return d if isinstance(d, Codifferential) else Codifferential(d)


@lru_cache(maxsize=64)
def _matrix(d: Codifferential, n: int) -> RatMatrix:
    basis = d.basis
    target = basis_index(basis, n + 1)
    columns = []
    for src, tgt in basis_cochains(basis, n):
        image = coboundary(d, Cochain(n, {(src, tgt): 1}, basis))
        columns.append(image.to_vector(target))
    return RatMatrix.from_columns(len(target), columns)


def coboundary_matrix(d, n: int) -> CoboundaryMatrix:
    """Matrix of D: C^n -> C^{n+1} in the canonical bases (column j = D of the j-th basis cochain)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return CoboundaryMatrix(n, _matrix(_as_codifferential(d), n))


@lru_cache(maxsize=None)
def parity_positions(basis, n: int, parity: Parity) -> tuple:
    """Canonical positions in C^n of the basis cochains of the given parity."""
    out = []
    for k, (src, tgt) in enumerate(basis_cochains(basis, n)):
        if parity_of_index(src, basis) + basis.parity(tgt) == parity:
            out.append(k)
    return tuple(out)


@lru_cache(maxsize=256)
def _block_rank(d: Codifferential, n: int, parity: Parity) -> int:
    m = _matrix(d, n)
    return rank(m.submatrix(col_idx=parity_positions(d.basis, n, parity)))


def block_rank(d, n: int, parity: Parity) -> int:
    """Rank of D_n restricted to the parity-``parity`` part of C^n; 0 for n < 0."""
    if n < 0:
        return 0
    return _block_rank(_as_codifferential(d), n, Parity(parity))


def h_dim(d, n: int) -> tuple:
    """(h_n, h_n even, h_n odd)."""
    d = _as_codifferential(d)
    out = []
    for p in (EVEN, ODD):
        dim = len(parity_positions(d.basis, n, p))
        out.append(dim - block_rank(d, n, p) - block_rank(d, n - 1, p + ODD))
    return (out[0] + out[1], out[0], out[1])


def _parity_representatives(d: Codifferential, n: int, parity: Parity) -> list:
    # Cocycles modulo coboundaries are found as the kernel of D_n restricted to
    # positions that are not pivots of an echelon basis of im D_{n-1}: D_n
    # vanishes on that image, so those unit vectors span C^n / im D_{n-1}, and
    # no nonzero vector supported off the pivots can itself be a coboundary.
    basis = d.basis
    positions = parity_positions(basis, n, parity)
    if n > 0:
        prev = _matrix(d, n - 1).submatrix(col_idx=parity_positions(basis, n - 1, parity + ODD))
        pivots = set(column_space_pivots(prev))
    else:
        pivots = set()
    free = [k for k in positions if k not in pivots]
    sub = _matrix(d, n).submatrix(col_idx=free)
    reps = []
    for vec in kernel_basis_sparse(sub):
        lifted = {free[k]: v for k, v in vec.items()}
        reps.append(Cochain.from_vector(n, lifted, basis))
    return reps


def representatives(d, n: int, parity: Parity | None = None) -> list:
    """Cocycles whose classes form a basis of H^n (even classes first, then odd)."""
    d = _as_codifferential(d)
    if parity is not None:
        return _parity_representatives(d, n, Parity(parity))
    return _parity_representatives(d, n, EVEN) + _parity_representatives(d, n, ODD)


def is_coboundary(d, cochain: Cochain) -> bool:
    """True iff ``cochain`` lies in the image of D from the previous degree."""
    d = _as_codifferential(d)
    n = cochain.degree
    if n == 0:
        return cochain.is_zero()
    m = _matrix(d, n - 1)
    b = [0] * m.rows
    for k, v in cochain.to_vector().items():
        b[k] = v
    return solve(m, b) is not None


@dataclass
class CohomologyRow:
    n: int
    dim: int
    rank: int
    h: int
    h_even: int
    h_odd: int
    representatives: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "rank": self.rank,
            "h": self.h,
            "h_even": self.h_even,
            "h_odd": self.h_odd,
            "representatives": [str(r) for r in self.representatives],
        }


@dataclass
class CohomologyReport:
    algebra: str
    n_max: int
    rows: list

    @property
    def h(self) -> list:
        return [row.h for row in self.rows]

    def to_dict(self) -> dict:
        return {"algebra": self.algebra, "n_max": self.n_max, "rows": [r.to_dict() for r in self.rows]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "CohomologyReport":
        data = json.loads(text)
        rows = []
        for r in data["rows"]:
            reps = [parse_cochain(s, degree=r["n"]) for s in r["representatives"]]
            rows.append(CohomologyRow(r["n"], r["dim"], r["rank"], r["h"], r["h_even"], r["h_odd"], reps))
        return cls(data["algebra"], data["n_max"], rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "dim", "rank", "h", "h_even", "h_odd"])
        for r in self.rows:
            writer.writerow([r.n, r.dim, r.rank, r.h, r.h_even, r.h_odd])
        return buf.getvalue()

    def to_text(self, parity_split: bool = True, show_representatives: bool = True) -> str:
        lines = [f"Hochschild cohomology of {self.algebra} (degrees 0..{self.n_max})"]
        header = f"{'n':>3} {'dim C^n':>8} {'rank D':>7} {'h':>3}"
        if parity_split:
            header += f" {'even':>5} {'odd':>4}"
        lines.append(header)
        for r in self.rows:
            line = f"{r.n:>3} {r.dim:>8} {r.rank:>7} {r.h:>3}"
            if parity_split:
                line += f" {r.h_even:>5} {r.h_odd:>4}"
            lines.append(line)
            if show_representatives:
                for rep in r.representatives:
                    lines.append(f"      [{rep}]")
        return "\n".join(lines) + "\n"


def cohomology_report(d, n_max: int, label: str | None = None, with_representatives: bool = True) -> CohomologyReport:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    d = _as_codifferential(d)
    rows = []
    for n in range(n_max + 1):
        h, h_even, h_odd = h_dim(d, n)
        dim = len(basis_cochains(d.basis, n))
        rk = block_rank(d, n, EVEN) + block_rank(d, n, ODD)
        reps = representatives(d, n) if with_representatives else []
        rows.append(CohomologyRow(n, dim, rk, h, h_even, h_odd, reps))
    return CohomologyReport(label or str(d), n_max, rows)


def clear_caches() -> None:
    """Drop memoized matrices and ranks (needed after changing sign conventions in tests)."""
    _matrix.cache_clear()
    _block_rank.cache_clear()


# -- E/F components ------------------------------------------------------------


def target_positions(basis, n: int, target) -> list:
    return [k for k, (_, tgt) in enumerate(basis_cochains(basis, n)) if tgt == target]


def e_component_coboundary(d, cochain: Cochain) -> Cochain:
    """E-target part of D(cochain): the operator D_e when ``cochain`` lies in E."""
    return coboundary(_as_codifferential(d), cochain).target_part("e")


def extends_to_cocycle(d, cochain: Cochain, target="f") -> bool:
    """Whether cochain + eta is a D-cocycle for some eta with every term targeting ``target``."""
    d = _as_codifferential(d)
    n = cochain.degree
    m = _matrix(d, n)
    cols = target_positions(d.basis, n, target)
    b = [0] * m.rows
    for k, v in coboundary(d, cochain).to_vector().items():
        b[k] = -v
    return solve(m.submatrix(col_idx=cols), b) is not None


def decleene_chart_row(d, n: int) -> tuple:
    """(Ch^n_e extends to a D-cocycle, Ch^n_f is a nontrivial D-cocycle) as 0/1 flags."""
    d = _as_codifferential(d)
    ch_e = decleene_cocycle(n, "e")
    ch_f = decleene_cocycle(n, "f")
    extends = extends_to_cocycle(d, ch_e, "f")
    f_nontrivial = coboundary(d, ch_f).is_zero() and not is_coboundary(d, ch_f)
    return (int(extends), int(f_nontrivial))
