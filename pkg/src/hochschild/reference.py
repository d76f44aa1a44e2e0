"""Published values the package is checked against."""
from __future__ import annotations

# Published cohomology table for the six codifferentials: h^0 .. h^4.
TABLE1 = {
    "d1": (1, 0, 0, 0, 0),
    "d2": (2, 1, 1, 1, 1),
    "d3": (0, 0, 0, 0, 0),
    "d4": (0, 0, 0, 0, 0),
    "d5": (2, 2, 2, 2, 2),
    "d6": (1, 1, 2, 2, 1),
}

# Rows indexed by n mod 4: (Ch^n extends to a D-cocycle, Ch^n_f nontrivial, total h^n) for d6.
D6_CHART = {
    0: (0, 1, 1),
    1: (1, 0, 1),
    2: (1, 1, 2),
    3: (1, 1, 2),
}


def d6_expected(n: int) -> int:
    """h^n(d6): 1 when n = 0, 1 mod 4, else 2."""
    return D6_CHART[n % 4][2]


# Jump deformations between the nonzero orbits.
JUMP_EDGES = frozenset({("d5", "d1"), ("d6", "d1")})
