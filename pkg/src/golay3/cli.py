"""Command-line surface: search, table, verify, explain.

    golay3 search --shape 2x9 --out catalog.jsonl
    golay3 table 1 --max-product 15 --format tsv
    golay3 verify catalog.jsonl
    golay3 explain --budget 18 --out report.json --dot arrows.dot

Catalogues are JSON-lines files, one class per line, sorted by
canonical representative.  GOLAY3_CACHE_DIR names a directory reused
across commands for search blocks and finished catalogues; without it
nothing is cached.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from golay3.catalog import (
    CatalogRegistry,
    classification_from_records,
    read_records,
    shape_to_str,
    str_to_shape,
    verify_classification,
    write_catalog,
)
from golay3.construct import explain
from golay3.equivalence import Classification, role_order
from golay3.tables import format_rows, table1_rows, table2_rows, table3_rows


def _summary_line(c: Classification, rank: int) -> str:
    if c.n_classes == 0:
        return "0 classes"
    hist = ", ".join(f"{k}:{v}" for k, v in sorted(c.orbit_size_histogram().items()))
    kind = "sequences" if rank == 1 else "arrays"
    return (
        f"{c.n_classes} classes {{{hist}}}; {c.normalised_count()} normalised; "
        f"{c.array_count()} {kind}"
    )


def _registry(args) -> CatalogRegistry:
    return CatalogRegistry(
        threads=getattr(args, "threads", 1),
        budget=getattr(args, "budget", 24),
    )


def _cmd_search(args) -> int:
    shape = str_to_shape(args.shape)
    size = 1
    for e in shape:
        size *= e
    if size > args.budget:
        print(
            f"error: shape {args.shape} has size product {size} over the "
            f"budget {args.budget}; pass --budget {size} to proceed",
            file=sys.stderr,
        )
        return 2
    registry = _registry(args)
    registry.search_pruning = {
        "on": "deep",
        "deep": "deep",
        "paper": "paper",
        "off": "off",
    }.get(args.symmetry_pruning, "deep")
    if args.symmetry_pruning == "validate":
        if len(shape) != 1:
            print("note: pruning validation applies to the sequence search",
                  file=sys.stderr)
        else:
            registry.search_pruning = "off"
            full = registry.get(shape)
            pruned_reg = _registry(args)
            pruned_reg.search_pruning = "deep"
            pruned_reg.cache_dir = None
            pruned = pruned_reg.get(shape)
            same = [
                (c.representative, c.orbit_size) for c in full.classes
            ] == [(c.representative, c.orbit_size) for c in pruned.classes]
            if not same:
                print("error: pruned and unpruned classifications differ",
                      file=sys.stderr)
                return 1
            print("pruning validated: classifications identical")
            registry = pruned_reg
            registry._mem[shape] = pruned
    c = registry.get(shape)
    if args.out:
        write_catalog(c, args.out)
    print(_summary_line(c, len(shape)))
    return 0


def _cmd_table(args) -> int:
    registry = _registry(args)
    if args.no_compute:
        registry.compute = False
    if args.which == 1:
        rows = table1_rows(registry, args.max_product)
    elif args.which == 2:
        rows = table2_rows(registry, args.max_product)
    else:
        report = explain(registry, budget=args.max_product)
        rows = table3_rows(report, registry, args.max_product)
    text = format_rows(rows, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    try:
        records = read_records(args.catalog)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not records:
        print("empty catalogue: nothing to verify")
        return 0
    shapes = {tuple(rec.get("shape", ())) for rec in records}
    if len(shapes) != 1:
        print(f"error: mixed shapes in one catalogue: {sorted(shapes)}",
              file=sys.stderr)
        return 2
    shape = shapes.pop()
    try:
        classification = classification_from_records(records, shape)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    problems = verify_classification(classification)
    for p in problems:
        print(f"FAIL {p}")
    if problems:
        print(f"{len(problems)} failing record(s) of {len(records)}")
        return 1
    print(f"all {len(records)} records verified")
    print(_summary_line(classification, len(shape)))
    return 0


def _cmd_explain(args) -> int:
    registry = _registry(args)
    seeds = None
    if args.seeds:
        seeds = json.loads(Path(args.seeds).read_text())
    report = explain(registry, seeds=seeds, budget=args.budget)
    payload = {"budget": report.budget, "shapes": {}}
    for shape in sorted(report.shapes, key=lambda sh: (len(sh), sh)):
        sr = report.shapes[shape]
        entry = {
            "total_classes": sr.n_classes,
            "explained": sr.explained,
            "unexplained": sr.unexplained,
            "seeds": sr.seeds,
            "classes": [
                {
                    "triad": [list(m) for m in role_order(
                        tuple(mm.digits for mm in cs.representative.members))],
                    "orbit_size": cs.orbit_size,
                    "status": cs.status,
                    "derivation": list(cs.derivation) if cs.derivation else None,
                }
                for cs in sr.classes
            ],
            "unexplained_plain": [
                ", ".join(
                    "[" + " ".join(str(d) for d in m) + "]"
                    for m in role_order(
                        tuple(mm.digits for mm in cs.representative.members))
                )
                for cs in sr.classes
                if cs.status != "constructed"
            ],
        }
        payload["shapes"][shape_to_str(shape)] = entry
        print(f"{shape_to_str(shape)}: {sr.explained} explained, "
              f"{sr.unexplained} unexplained")
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
    if args.dot:
        Path(args.dot).write_text(_dot_graph(report))
    return 0


def _dot_graph(report) -> str:
    """Shape-level arrow graph of the derivations actually used."""
    edges = set()
    seeded = set()
    for shape, sr in report.shapes.items():
        name = shape_to_str(shape)
        for cs in sr.classes:
            if cs.status == "seed":
                seeded.add(name)
            if cs.derivation:
                rule = cs.derivation[0]
                src = cs.derivation[1] if rule in ("tri", "proj", "cross") else "?"
                edges.add((src, name, rule))
    lines = ["digraph constructions {"]
    for shape in sorted(report.shapes):
        name = shape_to_str(shape)
        color = ' color="red"' if name in seeded else ""
        lines.append(f'  "{name}"{color};')
    for src, dst, rule in sorted(edges):
        lines.append(f'  "{src}" -> "{dst}" [label="{rule}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="golay3",
        description="Enumerate, classify, construct and verify 3-phase "
        "Golay sequence and array triads over Z3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="search or derive one shape's catalogue")
    p.add_argument("--shape", required=True, help="like 5 or 2x9 (lowercase x)")
    p.add_argument("--threads", type=int, default=0, help="0 = one per CPU")
    p.add_argument("--budget", type=int, default=24,
                   help="largest allowed size product")
    p.add_argument("--symmetry-pruning", default="on",
                   choices=["on", "off", "validate", "paper", "deep"])
    p.add_argument("--out", help="write the catalogue here (JSON lines)")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("table", help="emit one of the survey tables")
    p.add_argument("which", type=int, choices=[1, 2, 3])
    p.add_argument("--max-product", type=int, default=24)
    p.add_argument("--format", default="tsv", choices=["tsv", "json"])
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--budget", type=int, default=24)
    p.add_argument("--no-compute", action="store_true",
                   help="fail instead of computing missing catalogues")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="re-check every record of a catalogue")
    p.add_argument("catalog", help="catalogue file (JSON lines)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("explain", help="run the construction pipeline")
    p.add_argument("--seeds", help="JSON seed file (shape -> 'all' | triads)")
    p.add_argument("--budget", type=int, default=24)
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--dot", help="write a DOT graph of the arrows here")
    p.set_defaults(func=_cmd_explain)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
