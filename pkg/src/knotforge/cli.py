"""Command-line interface: ``knotforge build|bounds|verify|catalog``."""
from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from . import formats
from .bounds import BoundDomainError, bound_general, bound_nonalt_prime, bound_torus, class_bound, max_axis_edges
from .catalog import CatalogEntry, CatalogError, load_catalog
from .lattice import ConstructionError, build, construct, is_properly_leveled, stick_budget, verify_embedding
from .laurent import equal_up_to_units
from .verify import GenericityError, alexander_from_arcs, alexander_of_knot

REPORT_COLUMNS = [
    "name", "class", "arcs", "method",
    "x_sticks", "y_sticks", "z_sticks", "x_edges", "y_edges", "z_edges",
    "total_edges", "class_bound", "known_minimal_length",
    "alexander_match", "embedding_ok", "leveled_ok", "lemma_ok", "passed",
]


@dataclass
class RunRow:
    name: str
    knot_class: str
    arcs: int
    method: str
    x_sticks: int
    y_sticks: int
    z_sticks: int
    x_edges: int
    y_edges: int
    z_edges: int
    total_edges: int
    class_bound: int
    known_minimal_length: int | None
    alexander_match: bool
    embedding_ok: bool
    leveled_ok: bool
    lemma_ok: bool

    @property
    def passed(self) -> bool:
        in_range = self.total_edges <= self.class_bound and (
            self.known_minimal_length is None or self.known_minimal_length <= self.total_edges
        )
        return in_range and self.alexander_match and self.embedding_ok and self.leveled_ok and self.lemma_ok

    def csv_row(self) -> list:
        d = asdict(self)
        d["class"] = d.pop("knot_class")
        d["passed"] = self.passed
        return ["" if d[c] is None else d[c] for c in REPORT_COLUMNS]


def evaluate_entry(entry: CatalogEntry) -> RunRow:
    knot, tag = construct(entry.presentation, entry.meta)
    budget = stick_budget(knot)
    levels = is_properly_leveled(knot)
    lemma_ok = levels.ok and all(
        budget.edges[a] <= max_axis_edges(levels.levels(a)) for a in range(3)
    )
    match = equal_up_to_units(alexander_of_knot(knot), entry.reference_alexander) and equal_up_to_units(
        alexander_from_arcs(entry.presentation), entry.reference_alexander
    )
    meta = entry.meta
    cls = f"torus({meta.torus_n})" if meta.knot_class == "torus" else meta.knot_class
    return RunRow(
        meta.name, cls, entry.presentation.n, tag, *budget.sticks, *budget.edges,
        budget.total_edges, class_bound(meta).exact_value, entry.known_minimal_length,
        match, verify_embedding(knot).ok, levels.ok, lemma_ok,
    )


# ----------------------------------------------------------------- commands


def cmd_build(args) -> int:
    ap, meta = formats.read_presentation(args.input)
    try:
        knot, tag = build(ap, args.method)
    except (ValueError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if knot is None:
        print(f"{meta.name}: method {args.method} not applicable", file=sys.stderr)
        return 1
    report = verify_embedding(knot)
    levels = is_properly_leveled(knot)
    budget = stick_budget(knot)
    print(f"knot: {meta.name}")
    print(f"method: {tag}")
    print(f"sticks: x={budget.x_sticks} y={budget.y_sticks} z={budget.z_sticks}")
    print(f"edges: x={budget.x_edges} y={budget.y_edges} z={budget.z_edges} total={budget.total_edges}")
    print(f"embedding: {'pass' if report.ok else 'FAIL'}")
    print(f"properly_leveled: {'pass' if levels.ok else 'FAIL'}")
    if args.output:
        writer = {"json": formats.serialize_knot, "obj": formats.knot_to_obj, "csv": formats.knot_to_csv}
        Path(args.output).write_text(writer[args.format](knot), encoding="utf-8")
    return 0 if report.ok and levels.ok else 1


def cmd_bounds(args) -> int:
    try:
        if args.torus is not None:
            rep = bound_torus(args.torus)
        elif args.knot_class == "nonalt-prime":
            rep = bound_nonalt_prime(args.crossings)
        else:
            rep = bound_general(args.crossings)
    except BoundDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"formula: {rep.formula_tag}")
    print(f"theorem_value: {rep.theorem_value} ({float(rep.theorem_value):g})")
    print(f"exact_value: {rep.exact_value}")
    if rep.note:
        print(f"note: {rep.note}")
    return 0


def cmd_verify(args) -> int:
    knot = formats.read_knot(args.knot)
    results = {}
    report = verify_embedding(knot)
    results["embedding"] = report.ok
    results["properly_leveled"] = report.ok and is_properly_leveled(knot).ok
    if args.against:
        ap, _ = formats.read_presentation(args.against)
        try:
            got = alexander_of_knot(knot) if report.ok else None
        except GenericityError as exc:
            print(f"projection: {exc}", file=sys.stderr)
            got = None
        expected = alexander_from_arcs(ap)
        results["alexander"] = got is not None and equal_up_to_units(got, expected)
        print(f"alexander_knot: {got}")
        print(f"alexander_presentation: {expected}")
    for name, ok in results.items():
        print(f"{name}: {'pass' if ok else 'FAIL'}")
    for line in report.details:
        print(f"  {line}")
    return 0 if all(results.values()) else 1


def cmd_catalog(args) -> int:
    try:
        entries = load_catalog(args.dir)
    except CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(evaluate_entry, entries))
    else:
        rows = [evaluate_entry(e) for e in entries]
    widths = "{:<6} {:<22} {:>4} {:<8} {:>10} {:>6} {:>6} {:>6} {:>5} {}"
    print(widths.format("knot", "class", "arcs", "method", "sticks", "edges", "bound", "known", "alex", "status"))
    for r in rows:
        print(
            widths.format(
                r.name, r.knot_class, r.arcs, r.method,
                f"{r.x_sticks}/{r.y_sticks}/{r.z_sticks}", r.total_edges, r.class_bound,
                r.known_minimal_length or "-", "ok" if r.alexander_match else "BAD",
                "pass" if r.passed else "FAIL",
            )
        )
    if args.report:
        with open(args.report, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(REPORT_COLUMNS)
            writer.writerows(r.csv_row() for r in rows)
    return 0 if all(r.passed for r in rows) else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a lattice knot from an arc-presentation file")
    p.add_argument("input")
    p.add_argument("--method", choices=["auto", "basic", "reduced", "lifted"], default="auto")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=["json", "obj", "csv"], default="json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("bounds", help="evaluate minimal-length upper bounds")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--crossings", type=int)
    g.add_argument("--torus", type=int, metavar="N", help="(N+1, N)-torus knot")
    p.add_argument("--class", dest="knot_class", choices=["general", "nonalt-prime"], default="general")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check a lattice-knot file")
    p.add_argument("knot")
    p.add_argument("--against", help="arc-presentation file to compare Alexander polynomials with")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="build, verify and bound-check a catalog")
    p.add_argument("--dir", default=None, help="catalog directory (default: bundled catalog)")
    p.add_argument("--report", help="write the run report as CSV")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (formats.SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
