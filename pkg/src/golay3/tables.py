"""Row emitters for the three survey tables.

Table 1 counts length-s sequence triad classes by orbit size together
with normalised-triad and Golay-sequence totals; Table 2 does the same
for array shapes up to size product 24; Table 3 reports how many
classes the construction pipeline cannot reach.  Rows reproduce the
published values cell for cell under the column orders given here.
"""

from __future__ import annotations

from typing import Sequence

from golay3.catalog import CatalogRegistry, shape_to_str
from golay3.construct import ExplanationReport

TABLE1_SIZES = (1, 8, 16, 24, 48)
TABLE2_SIZES = (24, 48, 72, 96, 144, 288, 576)
TABLE3_SIZES = (1, 24, 48, 288)

# array shapes in published row order
TABLE2_SHAPES = (
    (2, 3), (2, 4), (3, 3), (2, 6), (3, 4), (2, 7), (3, 5), (3, 6),
    (2, 9), (2, 3, 3), (2, 10), (4, 5), (3, 7), (2, 12), (3, 8), (4, 6),
)

TABLE3_SEQ_LENGTHS = (2, 5, 7, 8, 11, 12, 13, 17, 19, 20, 23,
                      3, 6, 9, 14, 15, 18, 21, 24)
TABLE3_ARRAY_SHAPES = ((2, 3), (3, 3), (2, 7), (3, 5), (3, 6), (2, 9),
                       (2, 3, 3), (3, 7), (3, 8))


def table1_rows(registry: CatalogRegistry, max_product: int = 24) -> list[dict]:
    rows = []
    for s in range(2, max_product + 1):
        c = registry.sequence(s)
        hist = c.orbit_size_histogram()
        row = {"length": s}
        for size in TABLE1_SIZES:
            row[f"size_{size}"] = hist.pop(size, 0)
        if hist:
            raise AssertionError(f"unexpected orbit sizes at length {s}: {hist}")
        row["total_classes"] = c.n_classes
        row["normalised_triads"] = c.normalised_count()
        row["golay_sequences"] = c.array_count()
        rows.append(row)
    return rows


def table2_rows(registry: CatalogRegistry, max_product: int = 24) -> list[dict]:
    rows = []
    for shape in TABLE2_SHAPES:
        size = 1
        for e in shape:
            size *= e
        if size > max_product:
            continue
        c = registry.get(shape)
        hist = c.orbit_size_histogram()
        row = {"shape": shape_to_str(shape)}
        for sz in TABLE2_SIZES:
            row[f"size_{sz}"] = hist.pop(sz, 0)
        if hist:
            raise AssertionError(f"unexpected orbit sizes at {shape}: {hist}")
        row["total_classes"] = c.n_classes
        row["normalised_triads"] = c.normalised_count()
        row["golay_arrays"] = c.array_count()
        rows.append(row)
    return rows


def _table3_row(report: ExplanationReport, registry, shape) -> dict:
    key = tuple(shape)
    row = {"shape": shape_to_str(key)}
    sr = report.shapes.get(key)
    if sr is None:
        # never reached by any construction: everything is unexplained
        c = registry.get(key)
        statuses = [("unexplained", cls.orbit_size) for cls in c.classes]
    else:
        statuses = [(cs.status, cs.orbit_size) for cs in sr.classes]
    total = len(statuses)
    unexplained = [(st, sz) for st, sz in statuses if st != "constructed"]
    row["total_classes"] = total
    hist: dict[int, int] = {}
    for _, sz in unexplained:
        hist[sz] = hist.get(sz, 0) + 1
    for sz in TABLE3_SIZES:
        row[f"unexplained_size_{sz}"] = hist.pop(sz, 0)
    if hist:
        raise AssertionError(f"unexpected unexplained sizes at {key}: {hist}")
    row["unexplained_total"] = len(unexplained)
    n_seeds = sum(1 for st, _ in unexplained if st == "seed")
    if not unexplained:
        label = "all"
    elif n_seeds == total:
        label = "trivial seed" if len(key) == 1 and key[0] <= 2 else "seeds"
    elif len(unexplained) == total:
        label = "none"
    else:
        label = "some (*)" if n_seeds else "some"
    row["explained"] = label
    return row


def table3_rows(
    report: ExplanationReport,
    registry: CatalogRegistry,
    max_product: int = 24,
) -> list[dict]:
    rows = []
    for s in TABLE3_SEQ_LENGTHS:
        if s <= max_product:
            rows.append(_table3_row(report, registry, (s,)))
    for shape in TABLE3_ARRAY_SHAPES:
        size = 1
        for e in shape:
            size *= e
        if size <= max_product:
            rows.append(_table3_row(report, registry, shape))
    return rows


def format_rows(rows: Sequence[dict], fmt: str) -> str:
    if not rows:
        return ""
    if fmt == "tsv":
        header = list(rows[0])
        lines = ["\t".join(header)]
        for row in rows:
            lines.append("\t".join(str(row[k]) for k in header))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        import json

        return json.dumps(list(rows), indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
