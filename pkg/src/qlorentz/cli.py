"""Command-line harness: runs verification suites and evaluates DSL
expressions, with text or JSON reports.

Exit codes: 0 = all checks pass (flagged entries do not fail a run),
1 = at least one failing check, 2 = usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import lorentz, qminkowski, suq2
from .fockrep import CutoffSpace, GradingError, pair_block, lorentz_block, represent
from .qexpr import ParseError, normal_order, parse
from .report import VerificationReport
from .scalars import QValue

SUITES = ("suq2", "bases", "lorentz", "hopf", "minkowski", "all")
ENV_MAX_BLOCK = "QLORENTZ_MAX_BLOCK"


@dataclass
class SuiteConfig:
    suite: str = "all"
    p_values: list = field(default_factory=lambda: [Fraction(3, 2),
                                                    Fraction(7, 5)])
    max_block: int = 6
    variant: str = lorentz.CORRECTED
    counit: str = lorentz.STANDARD
    backends: tuple = ("symbolic", "exact", "float")
    float_p: float = 1.3
    fmt: str = "text"

    def __post_init__(self):
        if self.max_block < 1:
            raise ValueError("max_block must be >= 1")
        if not self.p_values:
            raise ValueError("at least one p value required")
        if any(p == 0 for p in self.p_values):
            raise ValueError("p must be nonzero")
        if Fraction(1) not in self.p_values:
            self.p_values = list(self.p_values) + [Fraction(1)]
        cap = os.environ.get(ENV_MAX_BLOCK)
        if cap:
            try:
                self.max_block = min(self.max_block, max(1, int(cap)))
            except ValueError:
                raise ValueError(
                    f"{ENV_MAX_BLOCK} must be an integer, got {cap!r}")

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "p_values": [str(p) for p in self.p_values],
            "max_block": self.max_block,
            "variant": self.variant,
            "counit": self.counit,
            "backends": list(self.backends),
            "float_p": self.float_p,
        }


_SUITE_RUNNERS = {
    "suq2": suq2.verify_suite,
    "bases": suq2.verify_bases_suite,
    "lorentz": lorentz.verify_lorentz_suite,
    "hopf": lorentz.verify_hopf_suite,
    "minkowski": qminkowski.verify_minkowski_suite,
}


def run_suite(cfg: SuiteConfig, relations_text: str = "") -> VerificationReport:
    """Run one suite (or all of them) and return the merged report."""
    names = _SUITE_RUNNERS if cfg.suite == "all" else (cfg.suite,)
    report = VerificationReport(suite=cfg.suite, config=cfg.as_dict())
    for name in names:
        sub = _SUITE_RUNNERS[name](cfg)
        report.extend(sub.entries)
    if relations_text:
        suq2.check_dsl_relations(relations_text, report)
    return report


def _fraction(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}: {exc}")
    if p == 0:
        raise argparse.ArgumentTypeError("p must be nonzero")
    return p


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qlorentz",
        description="Exact verification engine for q-deformed oscillator, "
                    "su_q(2), Lorentz, and Minkowski algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--p", dest="p_values", action="append", type=_fraction,
                   metavar="RATIONAL",
                   help="evaluation point for p (repeatable); q = p^2")
    v.add_argument("--max-block", type=int, default=6)
    v.add_argument("--variant",
                   choices=(lorentz.CORRECTED, "paper-literal"),
                   default=lorentz.CORRECTED)
    v.add_argument("--counit", choices=("standard", "paper"),
                   default="standard")
    v.add_argument("--backend",
                   choices=("symbolic", "exact", "float", "all"),
                   default="all")
    v.add_argument("--format", dest="fmt", choices=("text", "json"),
                   default="text")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--relations", help="file of 'name : lhs == rhs' DSL "
                   "lines checked symbolically in addition to the suite")

    e = sub.add_parser("eval", help="normal-order a DSL expression")
    e.add_argument("expr")
    e.add_argument("--block", type=int, metavar="N",
                   help="also print the exact matrix on the graded block "
                   "of total number N")
    e.add_argument("--block-bar", type=int, metavar="NBAR",
                   help="barred-pair total for four-mode expressions "
                   "(defaults to --block)")
    e.add_argument("--p", type=_fraction, metavar="RATIONAL",
                   help="evaluate matrix entries at this rational p")
    e.add_argument("--format", dest="fmt", choices=("text", "json"),
                   default="text")
    return ap


def _cmd_verify(args) -> int:
    backends = (("symbolic", "exact", "float") if args.backend == "all"
                else (args.backend,))
    variant = args.variant.replace("-", "_")
    try:
        cfg = SuiteConfig(suite=args.suite,
                          p_values=args.p_values or [Fraction(3, 2),
                                                     Fraction(7, 5)],
                          max_block=args.max_block, variant=variant,
                          counit=args.counit, backends=backends,
                          fmt=args.fmt)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    relations_text = ""
    if args.relations:
        with open(args.relations, encoding="utf-8") as fh:
            relations_text = fh.read()
    report = run_suite(cfg, relations_text)
    out = report.to_json() if args.fmt == "json" else report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0 if report.ok else 1


def _space_for(nf, n: int, nbar):
    modes = nf.modes()
    if modes <= {1, 2}:
        if nf.conserves_pair((1, 2)):
            return pair_block(n), True
        return CutoffSpace((1, 2), n), False
    if modes <= {3, 4}:
        if nf.conserves_pair((3, 4)):
            return pair_block(n, (3, 4)), True
        return CutoffSpace((3, 4), n), False
    if nf.conserves_pair((1, 2)) and nf.conserves_pair((3, 4)):
        return lorentz_block(n, n if nbar is None else nbar), True
    raise GradingError("operator leaves graded block and the cutoff "
                       "embedding only supports one mode pair")


def _cmd_eval(args) -> int:
    try:
        expr = parse(args.expr)
        nf = normal_order(expr)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {"input": args.expr, "normal_form": str(nf)}
    note = ""
    if args.block is not None:
        try:
            space, graded = _space_for(nf, args.block, args.block_bar)
            qv = QValue(args.p) if args.p is not None else None
            matrix = represent(nf, space, qv, allow_nonconserving=not graded)
        except (GradingError, ValueError, ArithmeticError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        payload["block"] = space.label()
        payload["matrix"] = matrix.entries_str()
        if not graded:
            note = ("operator does not conserve the grading; matrix uses "
                    f"the cutoff embedding ({space.label()}) and boundary "
                    "columns are untrusted")
            payload["note"] = note
    if args.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(payload["normal_form"])
        if "matrix" in payload:
            print(f"block {payload['block']}:")
            print("\n".join("  " + " | ".join(row)
                            for row in payload["matrix"]))
        if note:
            print(f"note: {note}")
    return 0


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_eval(args)


if __name__ == "__main__":
    sys.exit(main())
