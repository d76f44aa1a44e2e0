"""Infinitesimal and versal deformations of the 1|1 codifferentials.

Only odd classes in H^2 give deformations d + t*delta.  When every bracket
[delta_i, delta_j] vanishes the infinitesimal family is already miniversal,
and classifying d + t*delta at a few nonzero rational t detects jumps.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .coder import Codifferential, Cochain, bracket, coboundary, format_rational
from .cohomology import is_coboundary, representatives
from .errors import ObstructionError, SamplingInconsistencyError
from .graded import ODD
from .moduli import CANONICAL, CoeffVector, OrbitLabel, classify, is_codifferential, mc_conditions

__all__ = [
    "DEFAULT_SAMPLES",
    "DeformationRecord",
    "ModuliDiagram",
    "odd_h2_generators",
    "obstruction_brackets",
    "jump_targets",
    "deformation_record",
    "moduli_diagram",
]

DEFAULT_SAMPLES = (Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3), Fraction(-2, 3))

NONZERO_LABELS = tuple(l for l in OrbitLabel if l != OrbitLabel.ZERO)


def _base(label) -> CoeffVector:
    label = OrbitLabel(label)
    if label == OrbitLabel.ZERO:
        raise ValueError("the zero structure has no canonical deformation analysis here")
    return CANONICAL[label]


def odd_h2_generators(label) -> list:
    """Deterministic odd cocycles whose classes form a basis of H^2_odd."""
    d = Codifferential(_base(label).to_cochain())
    return representatives(d, 2, parity=ODD)


def obstruction_brackets(generators: Sequence[Cochain]) -> list:
    """All brackets [delta_i, delta_j] with i <= j."""
    for g in generators:
        if g.degree != 2 or g.parity != ODD:
            raise ValueError(f"deformation directions must be odd of degree 2, got {g}")
    return [bracket(a, b) for i, a in enumerate(generators) for b in generators[i:]]


def _family_label(base: CoeffVector, direction: CoeffVector, t: Fraction) -> OrbitLabel:
    c = base + direction.scaled(t)
    if not is_codifferential(c):
        raise ObstructionError(f"d + t*delta is not a codifferential at t={format_rational(t)}: residuals {mc_conditions(c)}")
    return classify(c)


def _targets_per_generator(label, samples: Iterable) -> list:
    base = _base(label)
    samples = [Fraction(s) for s in samples]
    if not samples or any(s == 0 for s in samples):
        raise ValueError("samples must be a nonempty list of nonzero rationals")
    out = []
    for gen in odd_h2_generators(label):
        direction = CoeffVector.from_cochain(gen)
        labels = {_family_label(base, direction, t) for t in samples}
        if len(labels) != 1:
            raise SamplingInconsistencyError(
                f"{label} + t*({gen}) lands in {sorted(map(str, labels))} across samples"
            )
        out.append(labels.pop())
    return out


def jump_targets(label, samples: Iterable = DEFAULT_SAMPLES) -> set:
    """Orbits reached by d + t*delta for t != 0, excluding the base orbit itself."""
    label = OrbitLabel(label)
    return {l for l in _targets_per_generator(label, samples) if l != label}


@dataclass
class DeformationRecord:
    base: OrbitLabel
    generators: list
    obstructions: list
    family_base: CoeffVector
    family_directions: list
    jump_targets: set = field(default_factory=set)

    @property
    def miniversal(self) -> bool:
        """True when all obstruction brackets vanish (infinitesimal family is miniversal)."""
        return all(o.is_zero() for o in self.obstructions)

    def family_at(self, params: Sequence) -> CoeffVector:
        if len(params) != len(self.family_directions):
            raise ValueError(f"need {len(self.family_directions)} parameters")
        c = self.family_base
        for t, v in zip(params, self.family_directions):
            c = c + v.scaled(Fraction(t))
        return c

    def to_dict(self) -> dict:
        return {
            "base": str(self.base),
            "generators": [str(g) for g in self.generators],
            "obstructions": [str(o) for o in self.obstructions],
            "miniversal": self.miniversal,
            "family": {
                "base": str(self.family_base),
                "directions": [str(v) for v in self.family_directions],
            },
            "jump_targets": sorted(str(l) for l in self.jump_targets),
        }

    def to_text(self) -> str:
        lines = [f"base: {self.base}  ({self.family_base})"]
        if not self.generators:
            lines.append("H^2_odd = 0: no infinitesimal deformations")
            return "\n".join(lines) + "\n"
        for k, g in enumerate(self.generators):
            lines.append(f"generator t{k + 1}: {g}")
            lines.append(f"  cocycle: {coboundary(self.family_base.to_cochain(), g).is_zero()}")
        if self.miniversal:
            lines.append("obstructions: all brackets vanish (miniversal = infinitesimal)")
        else:
            lines.append("obstructions: " + "; ".join(str(o) for o in self.obstructions if o))
        params = " + ".join(f"t{k + 1}*({v})" for k, v in enumerate(self.family_directions))
        lines.append(f"family: ({self.family_base}) + {params}")
        targets = ", ".join(sorted(str(l) for l in self.jump_targets)) or "none"
        lines.append(f"jump targets: {targets}")
        return "\n".join(lines) + "\n"


def deformation_record(label, samples: Iterable = DEFAULT_SAMPLES) -> DeformationRecord:
    label = OrbitLabel(label)
    base = _base(label)
    gens = odd_h2_generators(label)
    obstructions = obstruction_brackets(gens)
    targets = jump_targets(label, samples) if gens else set()
    return DeformationRecord(
        base=label,
        generators=gens,
        obstructions=obstructions,
        family_base=base,
        family_directions=[CoeffVector.from_cochain(g) for g in gens],
        jump_targets=targets,
    )


def generator_is_nontrivial(label, generator: Cochain) -> bool:
    d = Codifferential(_base(label).to_cochain())
    return coboundary(d, generator).is_zero() and not is_coboundary(d, generator)


@dataclass(frozen=True)
class ModuliDiagram:
    nodes: tuple
    edges: tuple

    def to_dict(self) -> dict:
        return {"nodes": [str(n) for n in self.nodes], "edges": [[str(a), str(b)] for a, b in self.edges]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "ModuliDiagram":
        data = json.loads(text)
        return cls(
            tuple(OrbitLabel(n) for n in data["nodes"]),
            tuple((OrbitLabel(a), OrbitLabel(b)) for a, b in data["edges"]),
        )

    def to_dot(self) -> str:
        lines = ["digraph moduli {"]
        for n in self.nodes:
            lines.append(f"  {n};")
        for a, b in self.edges:
            lines.append(f"  {a} -> {b} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def in_degree(self, node) -> int:
        return sum(1 for _, b in self.edges if b == node)

    def out_degree(self, node) -> int:
        return sum(1 for a, _ in self.edges if a == node)


def moduli_diagram(samples: Iterable = DEFAULT_SAMPLES, include_zero: bool = False) -> ModuliDiagram:
    samples = list(samples)
    nodes = list(NONZERO_LABELS) + ([OrbitLabel.ZERO] if include_zero else [])
    edges = []
    for label in NONZERO_LABELS:
        for target in sorted(jump_targets(label, samples), key=lambda l: l.value):
            edges.append((label, target))
    return ModuliDiagram(tuple(nodes), tuple(edges))
