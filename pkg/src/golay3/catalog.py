"""Catalogue persistence and the registry tying searches together.

A catalogue file holds one JSON object per line, one line per
equivalence class, sorted by (shape, representative):

    {"shape": [2, 9], "triad": [[...], [...], [...]],
     "orbit_size": 288, "provenance": "projected"}

with an optional "derivation" key recording construction chains.  The
format is greppable, diff-friendly and streamable, and the byte-level
round trip write -> read -> write is the identity.

``CatalogRegistry`` resolves any shape to its complete classification:
sequences through the exhaustive search, arrays through the projection
derivation, memoised in memory and optionally on disk.  Lookup order is
the explicit cache directory (or GOLAY3_CACHE_DIR), then reference
catalogues bundled with the package, then a fresh computation.  Only
the cache directory is ever written.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from golay3.arrays import canonical_shape, derive_array_classes
from golay3.core import Triad, Z3Array, is_golay_triad
from golay3.equivalence import (
    Classification,
    TriadClass,
    _orbit_raw,
    _raw,
    ShapeOps,
    canonical_representative,
    classify,
)
from golay3.search import _search_raw

Shape = tuple[int, ...]

ENV_CACHE = "GOLAY3_CACHE_DIR"


class CatalogUnavailable(RuntimeError):
    """A catalogue was requested with computation disabled."""


def shape_to_str(shape: Sequence[int]) -> str:
    return "x".join(str(s) for s in shape)


def str_to_shape(text: str) -> Shape:
    try:
        shape = tuple(int(part) for part in text.lower().split("x"))
    except ValueError:
        raise ValueError(f"malformed shape {text!r}; expected like 3 or 2x9")
    if not shape or any(s < 1 for s in shape):
        raise ValueError(f"shape extents must be positive: {text!r}")
    return shape


def record_for_class(cls: TriadClass) -> dict:
    rec = {
        "shape": list(cls.shape),
        "triad": [list(m.digits) for m in cls.representative.members],
        "orbit_size": cls.orbit_size,
        "provenance": cls.provenance,
    }
    return rec


def write_catalog(classification: Classification, path: Path | str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with tmp.open("w") as fh:
        for cls in classification.classes:
            fh.write(json.dumps(record_for_class(cls), separators=(", ", ": ")))
            fh.write("\n")
    tmp.replace(path)


def read_records(path: Path | str) -> list[dict]:
    records = []
    with Path(path).open() as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: bad record: {exc}") from None
    return records


def classification_from_records(
    records: Iterable[dict], shape: Shape
) -> Classification:
    """Rebuild a full classification (orbits included) from records."""
    ops = ShapeOps(shape)
    classes = []
    index: dict = {}
    for rec in records:
        rep = Triad.of(*(Z3Array(shape, tuple(m)) for m in rec["triad"]))
        orb = _orbit_raw(_raw(rep), ops)
        if len(orb) != rec["orbit_size"]:
            raise ValueError(
                f"record for {rec['triad']} claims orbit size "
                f"{rec['orbit_size']}, actual {len(orb)}"
            )
        i = len(classes)
        classes.append(
            TriadClass(rep, len(orb), rec.get("provenance", "searched"))
        )
        for el in orb:
            if el in index:
                raise ValueError(f"records overlap on triad {el}")
            index[el] = i
    order = sorted(range(len(classes)), key=lambda i: classes[i].representative)
    renumber = {old: new for new, old in enumerate(order)}
    return Classification(
        shape=shape,
        classes=[classes[i] for i in order],
        index={raw: renumber[i] for raw, i in index.items()},
    )


def verify_classification(classification: Classification) -> list[str]:
    """Re-check every class record; returns human-readable failures.

    Checks: members' digits in range with the declared shape, the
    representative is normalised, actually canonical, its triad is
    Golay, and the stored orbit size matches the recomputed orbit.
    """
    problems = []
    for n, cls in enumerate(classification.classes):
        rep = cls.representative
        label = f"class {n} ({rep})"
        if rep.shape != classification.shape:
            problems.append(f"{label}: shape mismatch")
            continue
        if any(m.digits[0] != 0 for m in rep.members):
            problems.append(f"{label}: representative not normalised")
        if not is_golay_triad(rep):
            problems.append(f"{label}: fails the Golay test")
            continue
        canon = canonical_representative(rep)
        if canon != rep:
            problems.append(f"{label}: not canonical (expected {canon})")
        orbit_n = len(_orbit_raw(_raw(rep), ShapeOps(classification.shape)))
        if orbit_n != cls.orbit_size:
            problems.append(
                f"{label}: orbit size {cls.orbit_size} recorded, "
                f"{orbit_n} recomputed"
            )
    return problems


def _trivial_length1() -> Classification:
    rep = Triad.of(*(Z3Array((1,), (0,)) for _ in range(3)))
    return classify([rep], provenance="seed", complete=True)


def _bundled_catalog_path(shape: Shape):
    name = f"{shape_to_str(shape)}.jsonl"
    try:
        ref = resources.files("golay3").joinpath("data", "catalogs", name)
        if ref.is_file():
            return ref
    except (ModuleNotFoundError, FileNotFoundError):
        pass
    return None


class CatalogRegistry:
    """Resolve shapes to complete Golay-triad classifications.

    Sequence catalogues come from the exhaustive search (with the deep
    symmetry cut; classification output is identical to an unpruned
    run), array catalogues from the projection derivation.  Results are
    memoised, loaded from disk when available, and written back to the
    cache directory when one is configured.
    """

    def __init__(
        self,
        cache_dir: str | os.PathLike | None = None,
        threads: int = 1,
        search_pruning: str = "deep",
        use_bundled: bool = True,
        budget: int = 24,
    ) -> None:
        if cache_dir is None:
            cache_dir = os.environ.get(ENV_CACHE) or None
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self.threads = threads
        self.search_pruning = search_pruning
        self.use_bundled = use_bundled
        self.budget = budget
        self.compute = True
        self._mem: dict[Shape, Classification] = {}

    def _catalog_file(self, shape: Shape) -> Path | None:
        if self.cache_dir is None:
            return None
        return self.cache_dir / "catalogs" / f"{shape_to_str(shape)}.jsonl"

    def get(self, shape: Sequence[int]) -> Classification:
        shape = canonical_shape(shape)
        if shape in self._mem:
            return self._mem[shape]
        size = 1
        for s in shape:
            size *= s
        if size > self.budget:
            raise ValueError(
                f"shape {shape_to_str(shape)} exceeds the product budget "
                f"{self.budget}; raise it explicitly to proceed"
            )

        classification = self._load(shape)
        if classification is None:
            classification = self._compute(shape)
            path = self._catalog_file(shape)
            if path is not None:
                write_catalog(classification, path)
        self._mem[shape] = classification
        return classification

    def _load(self, shape: Shape) -> Classification | None:
        path = self._catalog_file(shape)
        if path is not None and path.exists():
            return classification_from_records(read_records(path), shape)
        if self.use_bundled:
            ref = _bundled_catalog_path(shape)
            if ref is not None:
                records = [
                    json.loads(line)
                    for line in ref.read_text().splitlines()
                    if line.strip()
                ]
                return classification_from_records(records, shape)
        return None

    def _compute(self, shape: Shape) -> Classification:
        if not self.compute:
            raise CatalogUnavailable(
                f"no stored catalogue for {shape_to_str(shape)} and "
                "computation is disabled"
            )
        if len(shape) == 1:
            s = shape[0]
            if s == 1:
                return _trivial_length1()
            raws = _search_raw(
                s,
                self.search_pruning,
                threads=self.threads,
                cache_dir=self.cache_dir,
            )
            triads = [
                Triad.of(*(Z3Array(shape, m) for m in raw)) for raw in raws
            ]
            return classify(
                triads,
                provenance="searched",
                complete=self.search_pruning == "off",
                shape=shape,
            )
        return derive_array_classes(shape, self.get)

    def sequence(self, s: int) -> Classification:
        return self.get((s,))

    def array(self, shape: Sequence[int]) -> Classification:
        return self.get(shape)
