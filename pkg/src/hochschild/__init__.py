"""Hochschild cohomology, moduli and deformations of 1|1-dimensional associative algebras.

Algebras are handled as odd codifferentials d on the tensor coalgebra of
W = <e, f> (e even, f odd); see :mod:`hochschild.coder` for the calculus.
"""
from .coder import (
    Cochain,
    Codifferential,
    bracket,
    coboundary,
    compose,
    decleene_cocycle,
    decleene_theta,
    lambda_op,
    parse_cochain,
    phi,
)
from .cohomology import cohomology_report, h_dim, representatives
from .deform import deformation_record, jump_targets, moduli_diagram, odd_h2_generators
from .graded import EVEN, ODD, STANDARD, GradedBasis, Parity
from .moduli import CANONICAL, CoeffVector, OrbitLabel, classify, is_codifferential, to_algebra

__version__ = "0.1.0"

__all__ = [
    "Cochain",
    "Codifferential",
    "bracket",
    "coboundary",
    "compose",
    "decleene_cocycle",
    "decleene_theta",
    "lambda_op",
    "parse_cochain",
    "phi",
    "cohomology_report",
    "h_dim",
    "representatives",
    "deformation_record",
    "jump_targets",
    "moduli_diagram",
    "odd_h2_generators",
    "EVEN",
    "ODD",
    "STANDARD",
    "GradedBasis",
    "Parity",
    "CANONICAL",
    "CoeffVector",
    "OrbitLabel",
    "classify",
    "is_codifferential",
    "to_algebra",
]
