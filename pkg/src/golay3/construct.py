"""Constructions of Golay array triads and the explanation pipeline.

Stacking three equal-shape arrays along a new leading axis of extent 3
produces an array whose autocorrelation slices are the members'
autocorrelation sum and their pairwise cross-correlations.  From an
ordered Golay triad (A, B, C) the three stacks

    U = [A; B; C],  V = [A; wB; w^2 C],  W = [A; w^2 B; wC]

(multiplying by w adds 1 to every digit) therefore form a Golay triad
one dimension up.  A second construction stacks corresponding members
of two (or three) length-s Golay triads whose memberwise
cross-correlations cancel, giving 2 x s (or 3 x s) Golay triads.

``explain`` runs these constructions together with projections to a
fixed point, starting from a small seed set, and reports which
catalogue classes they reach.  Classes they cannot reach are exactly
the interesting residue; the designated seed classes themselves count
as unreached since their existence is an input, not a consequence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from golay3.arrays import canonical_shape
from golay3.core import (
    Eisenstein,
    Triad,
    Z3Array,
    cross_correlation,
    is_golay_triad,
    shift_range,
)
from golay3.equivalence import ShapeOps, _norm_member, _pi_min, role_order

Shape = tuple[int, ...]
OrderedTriad = tuple[Z3Array, Z3Array, Z3Array]


def stack_arrays(members: Sequence[Z3Array]) -> Z3Array:
    """Stack equal-shape arrays along a new leading axis."""
    shape = members[0].shape
    if any(m.shape != shape for m in members):
        raise ValueError("stacked arrays must share a shape")
    digits = tuple(d for m in members for d in m.digits)
    return Z3Array((len(members),) + shape, digits)


def scale(a: Z3Array, e: int) -> Z3Array:
    """Multiply every entry by w^e, i.e. add e to every digit."""
    return Z3Array(a.shape, tuple((d + e) % 3 for d in a.digits))


def increase_dimension(ordered: Sequence[Z3Array], verify: bool = True) -> Triad:
    """The dimension-increasing construction on an ordered Golay triad.

    Order matters: the three outputs stack (A, B, C), (A, wB, w^2 C)
    and (A, w^2 B, wC).  For Golay input the output is a Golay triad of
    shape 3 x (input shape), asserted unless ``verify`` is off.
    """
    a, b, c = ordered
    u = stack_arrays([a, b, c])
    v = stack_arrays([a, scale(b, 1), scale(c, 2)])
    w = stack_arrays([a, scale(b, 2), scale(c, 1)])
    out = Triad.of(u, v, w)
    if verify and not is_golay_triad(out):
        raise AssertionError("dimension increase broke the Golay property")
    return out


def cross_sum_is_zero(t1: Sequence[Z3Array], t3: Sequence[Z3Array]) -> bool:
    """Whether the memberwise cross-correlations of two ordered triads
    cancel at every shift."""
    if len(t1) != 3 or len(t3) != 3:
        raise ValueError("ordered triads have three members")
    if any(m.shape != t1[0].shape for m in (*t1, *t3)):
        raise ValueError("shape mismatch")
    tables = [cross_correlation(x, y) for x, y in zip(t1, t3)]
    return all(
        (tables[0][u] + tables[1][u] + tables[2][u]).is_zero()
        for u in shift_range(t1[0].shape)
    )


def _pairwise_chain_sum_zero(t1, t2, t3) -> bool:
    """Whether sum_X (C_{X1,X2} + C_{X2,X3})(u) vanishes for all u."""
    tables = [cross_correlation(x, y) for x, y in zip(t1, t2)]
    tables += [cross_correlation(y, z) for y, z in zip(t2, t3)]
    return all(
        sum((tab[u] for tab in tables), Eisenstein(0, 0)).is_zero()
        for u in shift_range(t1[0].shape)
    )


def cross_stack_pair(t1: Sequence[Z3Array], t3: Sequence[Z3Array]) -> Triad:
    """Stack two cross-complementary ordered Golay triads into a 2 x s triad.

    Preconditions (both reported, never silently skipped): each input
    is a Golay triad and their memberwise cross-correlations cancel.
    """
    for name, t in (("first", t1), ("second", t3)):
        if not is_golay_triad(Triad.of(*t)):
            raise ValueError(f"{name} input is not a Golay triad")
    if not cross_sum_is_zero(t1, t3):
        raise ValueError("memberwise cross-correlation sum does not vanish")
    out = Triad.of(*(stack_arrays([x, y]) for x, y in zip(t1, t3)))
    if not is_golay_triad(out):
        raise AssertionError("cross-correlation stack broke the Golay property")
    return out


def cross_stack_triple(
    t1: Sequence[Z3Array], t2: Sequence[Z3Array], t3: Sequence[Z3Array]
) -> Triad:
    """Stack three ordered Golay triads into a 3 x s triad.

    Requires the chained cross-sum (first-with-second plus
    second-with-third) and the outer cross-sum (first-with-third) to
    vanish at every shift.
    """
    for name, t in (("first", t1), ("second", t2), ("third", t3)):
        if not is_golay_triad(Triad.of(*t)):
            raise ValueError(f"{name} input is not a Golay triad")
    if not _pairwise_chain_sum_zero(t1, t2, t3):
        raise ValueError("chained cross-correlation sum does not vanish")
    if not cross_sum_is_zero(t1, t3):
        raise ValueError("outer cross-correlation sum does not vanish")
    out = Triad.of(*(stack_arrays([x, y, z]) for x, y, z in zip(t1, t2, t3)))
    if not is_golay_triad(out):
        raise AssertionError("cross-correlation stack broke the Golay property")
    return out


# ---------------------------------------------------------------------------
# the explanation pipeline


@dataclass(frozen=True)
class ClassStatus:
    """Per-class outcome: how (or whether) the pipeline reached it."""

    representative: Triad
    orbit_size: int
    status: str  # "seed" | "constructed" | "unexplained"
    derivation: tuple | None = None


@dataclass
class ShapeReport:
    shape: Shape
    classes: list[ClassStatus]

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    @property
    def explained(self) -> int:
        return sum(1 for c in self.classes if c.status == "constructed")

    @property
    def unexplained(self) -> int:
        return self.n_classes - self.explained

    @property
    def seeds(self) -> int:
        return sum(1 for c in self.classes if c.status == "seed")


@dataclass
class ExplanationReport:
    """Outcome of the construction closure over every shape touched."""

    budget: int
    shapes: dict[Shape, ShapeReport] = field(default_factory=dict)

    def shape_report(self, shape: Sequence[int]) -> ShapeReport:
        return self.shapes[canonical_shape(shape)]


@lru_cache(maxsize=None)
def _proj_position_perm(shape: Shape, k: int, l: int) -> tuple[tuple[int, ...], Shape]:
    """Row-major digit permutation implementing the (k into l) join."""
    r = len(shape)
    axes = [ax for ax in range(r) if ax != k]
    out_shape = tuple(
        shape[ax] * shape[k] if ax == l else shape[ax] for ax in axes
    )
    strides = [0] * r
    acc = 1
    for ax in range(r - 1, -1, -1):
        strides[ax] = acc
        acc *= shape[ax]
    perm = []
    for out_iv in itertools.product(*(range(e) for e in out_shape)):
        pos = 0
        for ax, i in zip(axes, out_iv):
            if ax == l:
                pos += (i % shape[k]) * strides[k] + (i // shape[k]) * strides[l]
            else:
                pos += i * strides[ax]
        perm.append(pos)
    return tuple(perm), out_shape


@lru_cache(maxsize=None)
def _sort_shape_perm(shape: Shape) -> tuple[tuple[int, ...], Shape]:
    """Digit permutation presenting an array in canonical shape order."""
    order = sorted(range(len(shape)), key=lambda ax: (shape[ax] == 1, shape[ax], ax))
    target = canonical_shape(shape)
    strides = [0] * len(shape)
    acc = 1
    for ax in range(len(shape) - 1, -1, -1):
        strides[ax] = acc
        acc *= shape[ax]
    kept = [ax for ax in order if shape[ax] > 1] or [order[0]]
    perm = []
    for iv in itertools.product(*(range(shape[ax]) for ax in kept)):
        perm.append(sum(i * strides[ax] for ax, i in zip(kept, iv)))
    return tuple(perm), target


def _lookup(catalog, members: Iterable[tuple[int, ...]], ops) -> int | None:
    raw = _pi_min(tuple(sorted(_norm_member(m) for m in members)), ops)
    return catalog.index.get(raw)


def explain(
    registry,
    seeds: dict[str, object] | None = None,
    budget: int = 24,
    max_rank: int = 3,
) -> ExplanationReport:
    """Close the seed set under the constructions and report coverage.

    Every known class (seed or already constructed) is expanded and fed
    through: the dimension-increasing construction (full orbit, all 27
    constant offsets, all 6 member orders), every ordered projection of
    its full orbit, and, for the 2 x 7 and 3 x 7 shapes, the
    cross-correlation construction over length-7 triads, detected as a
    catalogue class whose row triads are all Golay.  Only shapes whose
    size product stays within ``budget`` (and rank within ``max_rank``)
    are generated.  Every constructed triad must land in its shape's
    complete catalogue; anything else raises.
    """
    from golay3.catalog import str_to_shape
    from golay3.seeds import DEFAULT_SEEDS

    if seeds is None:
        seeds = DEFAULT_SEEDS

    catalogs: dict[Shape, object] = {}

    def catalog(shape: Shape):
        shape = canonical_shape(shape)
        if shape not in catalogs:
            catalogs[shape] = registry.get(shape)
        return catalogs[shape]

    # status per (shape, class index)
    status: dict[Shape, dict[int, tuple[str, tuple | None]]] = {}

    def mark(shape: Shape, idx: int, how: str, derivation: tuple | None):
        marks = status.setdefault(shape, {})
        if idx in marks:
            return False
        marks[idx] = (how, derivation)
        return True

    worklist: list[tuple[Shape, int]] = []

    # seeds
    for shape_str, selector in sorted(seeds.items()):
        shape = canonical_shape(str_to_shape(shape_str))
        size = 1
        for e in shape:
            size *= e
        if size > budget:
            continue
        cat = catalog(shape)
        if selector == "all":
            chosen = list(range(cat.n_classes))
        else:
            chosen = []
            for digit_lists in selector:
                t = Triad.of(*(Z3Array(shape, tuple(m)) for m in digit_lists))
                cls = cat.class_of(t)
                if cls is None:
                    raise ValueError(
                        f"seed for {shape_str} is not in the catalogue: "
                        f"{digit_lists}"
                    )
                chosen.append(cat.index[
                    _pi_min(tuple(sorted(m.digits for m in cls.representative.members)),
                            ShapeOps(shape))
                ])
        for idx in sorted(set(chosen)):
            if mark(shape, idx, "seed", None):
                worklist.append((shape, idx))

    # cross-correlation construction: a 2x7 or 3x7 class is reachable
    # exactly when some orbit element splits into rows forming known
    # Golay length-7 triads (with the default seeds, all of them)
    known7 = set(status.get((7,), ()))
    for rows, rshape in ((2, (2, 7)), (3, (3, 7))):
        if 7 * rows > budget or not known7:
            continue
        c7 = catalog((7,))
        cat = catalog(rshape)
        ops7 = ShapeOps((7,))
        for idx in range(cat.n_classes):
            found = None
            for raw in cat.expand_class_raw(idx):
                row_triads = [
                    tuple(m[7 * r : 7 * (r + 1)] for m in raw)
                    for r in range(rows)
                ]
                parents = [_lookup(c7, rt, ops7) for rt in row_triads]
                if all(p is not None and p in known7 for p in parents):
                    found = tuple(parents)
                    break
            if found is not None:
                how = ("cross", "7", found)
                if mark(rshape, idx, "constructed", how):
                    worklist.append((rshape, idx))

    # closure under dimension increase and projections
    def process(shape: Shape, idx: int):
        cat = catalog(shape)
        ops = ShapeOps(shape)
        size = 1
        for e in shape:
            size *= e
        elements = cat.expand_class_raw(idx)

        if 3 * size <= budget:
            tri_shape = (3,) + shape
            sort_perm, target = _sort_shape_perm(tri_shape)
            if len(target) <= max_rank:
                tcat = catalog(target)
                tops = ShapeOps(target)
                produced = set()
                for raw in elements:
                    for ordered in itertools.permutations(raw):
                        for offs in itertools.product(range(3), repeat=3):
                            a, b, c = (
                                tuple((d + o) % 3 for d in m)
                                for m, o in zip(ordered, offs)
                            )
                            b1 = tuple((d + 1) % 3 for d in b)
                            b2 = tuple((d + 2) % 3 for d in b)
                            c1 = tuple((d + 1) % 3 for d in c)
                            c2 = tuple((d + 2) % 3 for d in c)
                            members = (a + b + c, a + b1 + c2, a + b2 + c1)
                            produced.add(
                                _pi_min(
                                    tuple(
                                        sorted(
                                            _norm_member(
                                                tuple(m[p] for p in sort_perm)
                                            )
                                            for m in members
                                        )
                                    ),
                                    tops,
                                )
                            )
                derivation = ("tri", _shape_str(shape), idx)
                for raw in sorted(produced):
                    j = tcat.index.get(raw)
                    if j is None:
                        raise RuntimeError(
                            f"dimension increase left the {target} catalogue"
                        )
                    if mark(target, j, "constructed", derivation):
                        worklist.append((target, j))

        if len(shape) >= 2:
            for k, l in itertools.permutations(range(len(shape)), 2):
                perm, out_exact = _proj_position_perm(shape, k, l)
                sort_perm, target = _sort_shape_perm(out_exact)
                pcat = catalog(target)
                pops = ShapeOps(target)
                derivation = ("proj", _shape_str(shape), idx, k, l)
                produced = set()
                for raw in elements:
                    members = tuple(
                        tuple(m[perm[p]] for p in sort_perm) for m in raw
                    )
                    produced.add(
                        _pi_min(
                            tuple(sorted(_norm_member(m) for m in members)),
                            pops,
                        )
                    )
                for raw in sorted(produced):
                    j = pcat.index.get(raw)
                    if j is None:
                        raise RuntimeError(
                            f"projection left the {target} catalogue"
                        )
                    if mark(target, j, "constructed", derivation):
                        worklist.append((target, j))

    cursor = 0
    while cursor < len(worklist):
        shape, idx = worklist[cursor]
        cursor += 1
        process(shape, idx)

    report = ExplanationReport(budget=budget)
    for shape in sorted(catalogs, key=lambda sh: (len(sh), sh)):
        cat = catalogs[shape]
        marks = status.get(shape, {})
        entries = []
        for idx, cls in enumerate(cat.classes):
            how, derivation = marks.get(idx, ("unexplained", None))
            entries.append(
                ClassStatus(cls.representative, cls.orbit_size, how, derivation)
            )
        report.shapes[shape] = ShapeReport(shape=shape, classes=entries)
    return report


def _shape_str(shape: Shape) -> str:
    return "x".join(str(s) for s in shape)
