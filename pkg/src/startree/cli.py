"""Command-line front end: ``startree classify|verify|sweep|tree``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import btree, catalog
from .classifier import SWEEP_FAMILIES, Status, SweepBounds, in_xp, sweep, star_list_rows
from .oracle import Budget, CrossCheckReport, OracleError, crosscheck
from .permgrp import BuilderError, representation
from .permgrp.builders import DATA_DIR_ENV, PACKAGE_DATA
from .permgrp.chain import DEFAULT_SEED, ELEMENT_CAP, ORBIT_CAP

EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NO_INPUT = 66
EXIT_DISAGREE = 5
EXIT_UNDECIDED = 6

CLASSIFY_EXIT = {
    Status.IN_XP: 0,
    Status.NOT_IN_XP: 1,
    Status.SYLOW_NOT_CYCLIC: 2,
    Status.P_NOT_DIVIDING: 2,
    Status.OUT_OF_SCOPE: 3,
    Status.CONFLICT: 4,
}

TREE_FIXTURES = {"so7": btree.so7_fixture}


@dataclass
class CliConfig:
    data_dir: Path = PACKAGE_DATA
    element_cap: int = ELEMENT_CAP
    orbit_cap: int = ORBIT_CAP
    seed: int = DEFAULT_SEED
    output: str = "text"

    def __post_init__(self):
        if self.element_cap <= 0 or self.orbit_cap <= 0:
            raise ValueError("caps must be positive")
        if self.output not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output!r}")

    @property
    def budget(self) -> Budget:
        return Budget(self.element_cap, self.orbit_cap, self.seed)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def verify_exit(report: CrossCheckReport) -> int:
    if report.disagreements:
        return EXIT_DISAGREE
    if report.undecided:
        return EXIT_UNDECIDED
    return 0


def _group(text: str) -> catalog.GroupId:
    try:
        return catalog.validate(catalog.parse_group(text))
    except catalog.CatalogError as err:
        raise UsageError(str(err)) from err


def _prime(p: int) -> int:
    from .arith import is_prime
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    return p


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


# ----------------------------------------------------------- commands

def cmd_classify(args, cfg: CliConfig, out) -> int:
    g = _group(args.group)
    v = in_xp(g, _prime(args.p))
    if cfg.output == "json":
        _emit(v.to_dict(), out)
    else:
        name = catalog.format_group(v.group)
        if v.normalized_from is not None:
            name += f" (from {catalog.format_group(v.normalized_from)})"
        out.write(f"{name}  p={v.p}  {v.status.value}  shape={v.shape.value}\n")
        if v.e is not None:
            out.write(f"  e={v.e}  m={v.m}  |P|={v.sylow_order}\n")
        for rule, anchor in v.justification:
            out.write(f"  [{rule}] {anchor}\n")
        for w in v.warnings:
            out.write(f"  warning: {w}\n")
    return CLASSIFY_EXIT[v.status]


def cmd_verify(args, cfg: CliConfig, out) -> int:
    g = _group(args.group)
    p = _prime(args.p)
    try:
        G = representation(g, args.rep, cfg.data_dir)
    except BuilderError as err:
        print(f"startree: {err}", file=sys.stderr)
        return EXIT_NO_INPUT
    try:
        rep = crosscheck(g, G, p, cfg.budget)
    except OracleError as err:
        print(f"startree: {err}", file=sys.stderr)
        return EXIT_DATA
    if cfg.output == "json":
        _emit(rep.to_dict(), out)
    else:
        m = rep.measured
        out.write(f"{catalog.format_group(rep.group)}  p={p}  claimed {rep.claimed.status.value}\n")
        cyc = {True: "yes", False: "no", None: "unknown"}[m.cyclic]
        out.write(f"  measured: |P|={m.sylow_order} cyclic={cyc}")
        if m.e is not None:
            out.write(f" e={m.e} m={m.m} |C_G(P)| {m.centralizer_P_order_parity}")
        if m.involution_classes is not None:
            out.write(f" involution classes={m.involution_classes}")
        out.write("\n")
        for label, items in (("agree", rep.agreements), ("DISAGREE", rep.disagreements),
                             ("undecided", rep.undecided), ("note", rep.notes)):
            for x in items:
                out.write(f"  {label}: {x}\n")
        if rep.oracle_confirmed:
            out.write("  oracle-confirmed (necessary conditions and exact e, m)\n")
    return verify_exit(rep)


def _families(spec: str) -> list[str]:
    spec = spec.strip().lower()
    if spec in ("", "none"):
        return []
    if spec == "all":
        return list(SWEEP_FAMILIES)
    names = [s.strip() for s in spec.split(",") if s.strip()]
    bad = [n for n in names if n not in SWEEP_FAMILIES]
    if bad:
        raise UsageError(f"unknown families {bad}; choose from {', '.join(SWEEP_FAMILIES)}")
    return names


def cmd_sweep(args, cfg: CliConfig, out) -> int:
    fams = _families(args.families)
    bounds = SweepBounds(order_cap=args.order_cap, p_max=args.p_max, n_max=args.n_max,
                         q_max=args.q_max, exp_max=args.exp_max)
    rows = sweep(fams, bounds, simple_only=args.simple_only)
    if args.theorem1_only:
        rows = star_list_rows(rows)
    sink = open(args.output, "w") if args.output else out
    try:
        for r in rows:
            v = r.verdict
            if cfg.output == "json":
                d = v.to_dict()
                d["enumerated"] = catalog.format_group(r.group)
                _emit(d, sink)
            else:
                e = "-" if v.e is None else str(v.e)
                sink.write(f"{catalog.format_group(r.group):<16} {catalog.format_group(v.group):<16} "
                           f"{v.p:>4} {v.status.value:<18} {e:>4} {v.terminal_rule}\n")
    finally:
        if sink is not out:
            sink.close()
    return 0


def cmd_tree(args, cfg: CliConfig, out) -> int:
    make = TREE_FIXTURES.get(args.fixture.lower())
    if make is None:
        print(f"startree: unknown fixture {args.fixture!r}; known: {', '.join(TREE_FIXTURES)}",
              file=sys.stderr)
        return EXIT_DATA
    t = make(args.q)
    if cfg.output == "json":
        _emit(btree.to_dict(t), out)
        return 0
    out.write(btree.dumps(t))
    exc = "none" if t.exceptional is None else f"{t.exceptional[0]} (multiplicity {t.exceptional[1]})"
    out.write(f"edges={btree.edge_count(t)} diameter={btree.diameter(t)} "
              f"star={btree.is_star(t)} line={btree.is_line(t)} exceptional={exc}\n")
    return 0


# ----------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--data-dir", type=Path, default=None,
                        help=f"generator file directory (env {DATA_DIR_ENV})")
    common.add_argument("--element-cap", type=int, default=ELEMENT_CAP)
    common.add_argument("--orbit-cap", type=int, default=ORBIT_CAP)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap = _Parser(prog="startree", description="Star-shaped principal-block Brauer trees.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", parents=[common], help="classify (G, p)")
    c.add_argument("group")
    c.add_argument("--p", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="cross-check the verdict against measurements")
    v.add_argument("group")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--rep", default=None, help="generator file (JSON)")

    s = sub.add_parser("sweep", parents=[common], help="classify every member of some families")
    s.add_argument("--families", default="all",
                   help="comma-separated list, 'all' or 'none': " + ", ".join(SWEEP_FAMILIES))
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--q-max", type=int, default=None)
    s.add_argument("--exp-max", type=int, default=None)
    s.add_argument("--p-max", type=int, default=100)
    s.add_argument("--order-cap", type=int, default=10**8)
    s.add_argument("--simple-only", action="store_true")
    s.add_argument("--theorem1-only", action="store_true",
                   help="keep only simple groups with an InXp or Conflict verdict")
    s.add_argument("--output", default=None, help="write rows to this file")

    t = sub.add_parser("tree", parents=[common], help="print a Brauer-tree fixture")
    t.add_argument("fixture")
    t.add_argument("--q", type=int, default=None)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    data = args.data_dir or Path(os.environ.get(DATA_DIR_ENV) or PACKAGE_DATA)
    try:
        cfg = CliConfig(data, args.element_cap, args.orbit_cap, args.seed,
                        "json" if args.json else "text")
    except ValueError as err:
        print(f"startree: {err}", file=sys.stderr)
        return EXIT_USAGE
    handler = {"classify": cmd_classify, "verify": cmd_verify,
               "sweep": cmd_sweep, "tree": cmd_tree}[args.command]
    try:
        return handler(args, cfg, out)
    except UsageError as err:
        print(f"startree: {err}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
