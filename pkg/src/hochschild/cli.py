"""Command-line entry point: ``hochschild <command> ...``.

Exit status is 0 when every check of the invoked command passes, 1 when a
check fails or the input is not a codifferential, and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import checks
from .coder import Codifferential, format_rational, parse_rational
from .cohomology import cohomology_report
from .deform import DEFAULT_SAMPLES, deformation_record, moduli_diagram
from .errors import HochschildError
from .moduli import (
    CANONICAL,
    MC_SLOTS,
    CoeffVector,
    OrbitLabel,
    algebra_properties,
    are_equivalent,
    canonical_cochain,
    classify,
    mc_conditions,
    to_algebra,
)

MAX_DEGREE_CAP = 14

FORMATS = {
    "table1": ("text", "json"),
    "classify": ("text", "json"),
    "mc": ("text", "json"),
    "cohomology": ("text", "json", "csv"),
    "equiv": ("text", "json"),
    "deform": ("text", "json"),
    "diagram": ("dot", "json"),
    "selfcheck": ("text",),
    "algebra": ("text", "json"),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    algebra: Optional[OrbitLabel] = None
    coeffs: Optional[CoeffVector] = None
    max_degree: int = 8
    format: str = "text"
    parity_split: bool = False
    samples: list = field(default_factory=lambda: list(DEFAULT_SAMPLES))

    def validate(self):
        if not 0 <= self.max_degree <= MAX_DEGREE_CAP:
            raise UsageError(f"--max-degree must be between 0 and {MAX_DEGREE_CAP}")
        if self.format not in FORMATS[self.command]:
            raise UsageError(f"format {self.format!r} not available for {self.command}; choose from {FORMATS[self.command]}")
        if any(s == 0 for s in self.samples) or not self.samples:
            raise UsageError("--samples must be nonzero rationals")


def _coeffs(text: str) -> CoeffVector:
    try:
        return CoeffVector.parse(text)
    except HochschildError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _samples(text: str) -> list:
    try:
        return [parse_rational(p) for p in text.split(",")]
    except HochschildError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _label(text: str) -> OrbitLabel:
    try:
        return OrbitLabel(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown algebra {text!r}; use d1..d6 or zero") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hochschild", description="Cohomology and moduli of 1|1-dimensional associative algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", help="recompute h^0..h^4 of d1..d6 against the published values")
    p.add_argument("--format", default="text", choices=FORMATS["table1"])

    for name, helptext in (("classify", "classify a codifferential up to even automorphism"), ("mc", "print the (1/2)[d,d] residuals")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--coeffs", required=True, type=_coeffs, metavar="x,y,z,w")
        p.add_argument("--format", default="text", choices=FORMATS[name])

    p = sub.add_parser("algebra", help="multiplication table and structural properties")
    p.add_argument("--coeffs", type=_coeffs, metavar="x,y,z,w")
    p.add_argument("--alg", type=_label)
    p.add_argument("--format", default="text", choices=FORMATS["algebra"])

    p = sub.add_parser("cohomology", help="Hochschild cohomology report")
    p.add_argument("--alg", required=True, type=_label)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--parity-split", action="store_true")
    p.add_argument("--no-representatives", action="store_true")
    p.add_argument("--format", default="text", choices=FORMATS["cohomology"])

    p = sub.add_parser("equiv", help="decide equivalence of two codifferentials")
    p.add_argument("--left", required=True, type=_coeffs, metavar="x,y,z,w")
    p.add_argument("--right", required=True, type=_coeffs, metavar="x,y,z,w")
    p.add_argument("--format", default="text", choices=FORMATS["equiv"])

    p = sub.add_parser("deform", help="infinitesimal deformations and jumps")
    p.add_argument("--alg", required=True, type=_label)
    p.add_argument("--samples", type=_samples, default=list(DEFAULT_SAMPLES))
    p.add_argument("--format", default="text", choices=FORMATS["deform"])

    p = sub.add_parser("diagram", help="jump-deformation diagram")
    p.add_argument("--format", default="dot", choices=FORMATS["diagram"])
    p.add_argument("--samples", type=_samples, default=list(DEFAULT_SAMPLES))
    p.add_argument("--include-zero", action="store_true")

    p = sub.add_parser("selfcheck", help="run every invariant suite")
    p.add_argument("--max-degree", type=int, default=8)
    return parser


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_table1(cfg: RunConfig) -> int:
    rows = checks.table1_rows()
    ok = all(c == e for _, c, e in rows)
    if cfg.format == "json":
        _emit(json.dumps([{"algebra": l, "computed": list(c), "expected": list(e), "pass": c == e} for l, c, e in rows], indent=2))
    else:
        lines = [f"{'alg':<4} {'H0':>3} {'H1':>3} {'H2':>3} {'H3':>3} {'H4':>3}   {'expected':<14} status"]
        for label, computed, expected in rows:
            cells = " ".join(f"{h:>3}" for h in computed)
            exp = ",".join(map(str, expected))
            lines.append(f"{label:<4} {cells}   {exp:<14} {'PASS' if computed == expected else 'FAIL'}")
        _emit("\n".join(lines))
    return 0 if ok else 1


def _residual_dict(c: CoeffVector) -> dict:
    return {f"phi[{''.join(src)}->{tgt}]": format_rational(v) for (src, tgt), v in zip(MC_SLOTS, mc_conditions(c))}


def cmd_mc(cfg: RunConfig) -> int:
    res = _residual_dict(cfg.coeffs)
    ok = not any(Fraction(v) for v in res.values())
    if cfg.format == "json":
        _emit(json.dumps({"input": str(cfg.coeffs), "residuals": res, "codifferential": ok}, indent=2))
    else:
        lines = [f"(1/2)[d,d] for d = ({cfg.coeffs}):"]
        lines += [f"  {k}: {v}" for k, v in res.items()]
        lines.append("codifferential" if ok else "not a codifferential")
        _emit("\n".join(lines))
    return 0 if ok else 1


def cmd_classify(cfg: RunConfig) -> int:
    c = cfg.coeffs
    res = _residual_dict(c)
    if any(Fraction(v) for v in res.values()):
        if cfg.format == "json":
            _emit(json.dumps({"input": str(c), "label": None, "residuals": res}, indent=2))
        else:
            _emit("\n".join([f"({c}) is not a codifferential; nonzero residuals:"] + [f"  {k}: {v}" for k, v in res.items() if Fraction(v)]))
        return 1
    label = classify(c)
    witness = None if label == OrbitLabel.ZERO else are_equivalent(c, CANONICAL[label])
    if cfg.format == "json":
        _emit(json.dumps({"input": str(c), "label": str(label), "witness": witness.to_dict() if witness else None}, indent=2))
    else:
        line = f"{label}"
        if witness:
            line += f"  (maps to canonical ({CANONICAL[label]}) with {witness})"
        _emit(line)
    return 0


def cmd_equiv(cfg: RunConfig, left: CoeffVector, right: CoeffVector) -> int:
    witness = are_equivalent(left, right)
    if cfg.format == "json":
        _emit(json.dumps({"left": str(left), "right": str(right), "equivalent": witness is not None, "witness": witness.to_dict() if witness else None}, indent=2))
    else:
        _emit(f"equivalent ({witness})" if witness else "not equivalent")
    return 0


def cmd_algebra(cfg: RunConfig) -> int:
    c = cfg.coeffs if cfg.coeffs is not None else CANONICAL[cfg.algebra]
    A = to_algebra(c)
    props = algebra_properties(A)
    if cfg.format == "json":
        table = {f"{u}*{v}": {"x": format_rational(p[0]), "theta": format_rational(p[1])} for (u, v), p in A.products}
        _emit(json.dumps({"input": str(c), "products": table, "properties": props.to_dict()}, indent=2))
    else:
        flags = props.to_dict()
        _emit(f"{A}\n" + "\n".join(f"  {k}: {v}" for k, v in flags.items()))
    return 0


def cmd_cohomology(cfg: RunConfig, with_reps: bool = True) -> int:
    d = Codifferential(canonical_cochain(cfg.algebra))
    report = cohomology_report(d, cfg.max_degree, label=str(cfg.algebra), with_representatives=with_reps)
    if cfg.format == "json":
        _emit(report.to_json())
    elif cfg.format == "csv":
        _emit(report.to_csv())
    else:
        _emit(report.to_text(parity_split=cfg.parity_split, show_representatives=with_reps))
    return 0


def cmd_deform(cfg: RunConfig) -> int:
    record = deformation_record(cfg.algebra, cfg.samples)
    _emit(json.dumps(record.to_dict(), indent=2) if cfg.format == "json" else record.to_text())
    return 0


def cmd_diagram(cfg: RunConfig, include_zero: bool = False) -> int:
    diagram = moduli_diagram(cfg.samples, include_zero=include_zero)
    _emit(diagram.to_json() if cfg.format == "json" else diagram.to_dot())
    return 0


def cmd_selfcheck(cfg: RunConfig) -> int:
    results = checks.run_all(cfg.max_degree)
    for r in results:
        _emit(r.line())
    ok = all(r.passed for r in results)
    _emit(f"{sum(r.passed for r in results)}/{len(results)} suites passed")
    return 0 if ok else 1


_VALUE_OPTIONS = ("--coeffs", "--left", "--right", "--samples")


def _glue_values(argv: list) -> list:
    # "--coeffs -1,1,-1,1" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(list(sys.argv[1:] if argv is None else argv)))
    cfg = RunConfig(
        command=args.command,
        algebra=getattr(args, "alg", None),
        coeffs=getattr(args, "coeffs", None),
        max_degree=getattr(args, "max_degree", 8),
        format=getattr(args, "format", "text"),
        parity_split=getattr(args, "parity_split", False),
        samples=getattr(args, "samples", list(DEFAULT_SAMPLES)),
    )
    try:
        cfg.validate()
        if cfg.command == "algebra" and (cfg.coeffs is None) == (cfg.algebra is None):
            raise UsageError("give exactly one of --coeffs or --alg")
        if cfg.command == "deform" and cfg.algebra == OrbitLabel.ZERO:
            raise UsageError("deform needs one of d1..d6")
    except UsageError as exc:
        parser.error(str(exc))
    try:
        if cfg.command == "table1":
            return cmd_table1(cfg)
        if cfg.command == "mc":
            return cmd_mc(cfg)
        if cfg.command == "classify":
            return cmd_classify(cfg)
        if cfg.command == "equiv":
            return cmd_equiv(cfg, args.left, args.right)
        if cfg.command == "algebra":
            return cmd_algebra(cfg)
        if cfg.command == "cohomology":
            return cmd_cohomology(cfg, with_reps=not args.no_representatives)
        if cfg.command == "deform":
            return cmd_deform(cfg)
        if cfg.command == "diagram":
            return cmd_diagram(cfg, include_zero=args.include_zero)
        if cfg.command == "selfcheck":
            return cmd_selfcheck(cfg)
    except HochschildError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    parser.error(f"unknown command {cfg.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
