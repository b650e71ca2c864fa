"""Equivalence of Golay triads: normalised form, orbits, canonical forms.

Two triads are equivalent when one results from the other by some
composition of
  * linear offsets  x ↦ x + e₁i₁ + ... + e_r i_r  (e ∈ Z3^r),
  * reversal of any one dimension in all three members at once,
  * reverse conjugation  x ↦ 2·x_reversed  of any single member,
followed by per-member constant offsets that restore normalised form
(leading digit zero in every member).  All of these preserve the Golay
property.  Orbits under the induced action on normalised triads have
size dividing 2^(r+3)·3^r.

The canonical representative of an orbit is its minimum under the
total order that sorts each triad's members lexicographically and then
compares the sorted digit-list 3-tuples lexicographically.

Internally triads are handled as plain tuples ``(member, member,
member)`` of digit tuples, sorted, with per-shape operation tables
precomputed once; the public functions accept and return Triad objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from golay3.core import Triad, Z3Array

# a normalised triad in raw form: 3 digit tuples, sorted
RawTriad = tuple[tuple[int, ...], ...]


def _raw(t: Triad) -> RawTriad:
    return tuple(sorted(m.digits for m in t.members))


def _wrap(shape: tuple[int, ...], raw: RawTriad) -> Triad:
    return Triad.of(*(Z3Array(shape, m) for m in raw))


class _ShapeOps:
    """Precomputed index permutations and offset tables for one shape."""

    def __init__(self, shape: tuple[int, ...]):
        self.shape = shape
        self.rank = len(shape)
        size = 1
        for s in shape:
            size *= s
        self.size = size
        index_vectors = list(itertools.product(*(range(s) for s in shape)))
        self.index_vectors = index_vectors
        pos_of = {iv: p for p, iv in enumerate(index_vectors)}

        # digit addend per position for every linear-offset vector e
        self.offset_addends: list[tuple[int, ...]] = []
        for e in itertools.product(range(3), repeat=self.rank):
            if all(c == 0 for c in e):
                continue
            addend = tuple(
                sum(ek * ik for ek, ik in zip(e, iv)) % 3 for iv in index_vectors
            )
            self.offset_addends.append(addend)

        # position permutation reversing dimension k: out[p] = digits[perm[p]]
        self.reversal_perms: list[tuple[int, ...]] = []
        for k in range(self.rank):
            perm = tuple(
                pos_of[iv[:k] + (shape[k] - 1 - iv[k],) + iv[k + 1 :]]
                for iv in index_vectors
            )
            self.reversal_perms.append(perm)

        # full reversal (all dimensions), used by reverse conjugation
        self.full_reversal: tuple[int, ...] = tuple(
            pos_of[tuple(s - 1 - i for s, i in zip(shape, iv))]
            for iv in index_vectors
        )

        # digit permutations for nontrivial axis permutations preserving
        # the shape; arrays differing by one represent the same object
        self.axis_perms: list[tuple[int, ...]] = []
        for axes in itertools.permutations(range(self.rank)):
            if axes == tuple(range(self.rank)):
                continue
            if tuple(shape[a] for a in axes) != shape:
                continue
            perm = tuple(
                pos_of[tuple(iv[a] for a in axes)] for iv in index_vectors
            )
            self.axis_perms.append(perm)


@lru_cache(maxsize=None)
def ShapeOps(shape: tuple[int, ...]) -> _ShapeOps:
    return _ShapeOps(shape)


def _norm_member(m: tuple[int, ...]) -> tuple[int, ...]:
    lead = m[0]
    if lead == 0:
        return m
    return tuple((d - lead) % 3 for d in m)


def _pi_min(tri: RawTriad, ops: "_ShapeOps") -> RawTriad:
    """Canonical representation of a triad as an object: the minimum
    over all dimension reorderings that preserve the shape."""
    best = tri
    for perm in ops.axis_perms:
        img = tuple(sorted(tuple(m[p] for p in perm) for m in tri))
        if img < best:
            best = img
    return best


def pi_images(tri: RawTriad, ops: "_ShapeOps") -> list[RawTriad]:
    """Every dimension-reordered representation of a triad object."""
    out = {tri}
    for perm in ops.axis_perms:
        out.add(tuple(sorted(tuple(m[p] for p in perm) for m in tri)))
    return sorted(out)


def role_order(tri: RawTriad) -> RawTriad:
    """Members ordered by their far-corner digit.

    In any Golay triad the correlation condition at the maximal shift
    forces the digits at the all-max index to be 0, 1 and 2, one per
    member; catalogues list members in that order, matching the
    published presentation.  Falls back to sorted order on ties.
    """
    if {m[-1] for m in tri} == {0, 1, 2}:
        return tuple(sorted(tri, key=lambda m: m[-1]))
    return tri


def _canonical_key(tri: RawTriad):
    return role_order(tri)


def _rc_member(m: tuple[int, ...], full_rev: tuple[int, ...]) -> tuple[int, ...]:
    return _norm_member(tuple((2 * m[p]) % 3 for p in full_rev))


def _orbit_raw(start: RawTriad, ops) -> set[RawTriad]:
    """Closure of {object-canonicalise o normalise o g} over the
    generator set, from start.

    Elements are object representations: normalised triads reduced by
    shape-preserving dimension reorderings (``_pi_min``).  Reorderings
    conjugate offsets and reversals to offsets and reversals, so the
    group action on objects is well defined.
    """
    start = _pi_min(tuple(sorted(_norm_member(m) for m in start)), ops)
    seen = {start}
    frontier = [start]
    addends = ops.offset_addends
    rev_perms = ops.reversal_perms
    full_rev = ops.full_reversal
    reduce = bool(ops.axis_perms)
    rng = range(ops.size)
    while frontier:
        nxt = []
        for tri in frontier:
            images = []
            for add in addends:
                images.append(
                    tuple(
                        sorted(
                            tuple((m[p] + add[p]) % 3 for p in rng) for m in tri
                        )
                    )
                )
            for perm in rev_perms:
                images.append(
                    tuple(
                        sorted(
                            _norm_member(tuple(m[p] for p in perm)) for m in tri
                        )
                    )
                )
            for which in range(3):
                members = list(tri)
                members[which] = _rc_member(members[which], full_rev)
                images.append(tuple(sorted(members)))
            for img in images:
                if reduce:
                    img = _pi_min(img, ops)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def normalize(t: Triad) -> Triad:
    """Subtract each member's leading digit from that member (mod 3).

    Preserves every member's autocorrelation, hence the Golay property.
    """
    return _wrap(t.shape, tuple(sorted(_norm_member(m.digits) for m in t.members)))


def linear_offset(t: Triad, e: Sequence[int]) -> Triad:
    """Add e₁i₁ + ... + e_r i_r (mod 3) to every member at index i."""
    ops = ShapeOps(t.shape)
    if len(e) != ops.rank:
        raise ValueError(f"offset vector must have {ops.rank} entries, got {len(e)}")
    addend = tuple(
        sum(ek * ik for ek, ik in zip(e, iv)) % 3 for iv in ops.index_vectors
    )
    members = tuple(
        sorted(
            tuple((m.digits[p] + addend[p]) % 3 for p in range(ops.size))
            for m in t.members
        )
    )
    return _wrap(t.shape, members)


def reverse_dimension(t: Triad, k: int) -> Triad:
    """Reverse dimension k (0-based) in all three members simultaneously."""
    ops = ShapeOps(t.shape)
    if not 0 <= k < ops.rank:
        raise ValueError(f"dimension index {k} out of range for rank {ops.rank}")
    perm = ops.reversal_perms[k]
    members = tuple(sorted(tuple(m.digits[p] for p in perm) for m in t.members))
    return _wrap(t.shape, members)


def reverse_conjugate_member(t: Triad, which: int) -> Triad:
    """Replace member ``which`` (0, 1 or 2 in sorted order) by 2·x_reversed.

    The replacement has the same autocorrelation as the original member,
    so a Golay triad stays Golay.
    """
    ops = ShapeOps(t.shape)
    if which not in (0, 1, 2):
        raise ValueError("member selector must be 0, 1 or 2")
    members = [m.digits for m in t.members]
    members[which] = tuple((2 * members[which][p]) % 3 for p in ops.full_reversal)
    return _wrap(t.shape, tuple(sorted(members)))


def orbit(t: Triad) -> set[Triad]:
    """All normalised triads equivalent to t (including t itself)."""
    ops = ShapeOps(t.shape)
    return {_wrap(t.shape, raw) for raw in _orbit_raw(_raw(t), ops)}


def canonical_representative(t: Triad) -> Triad:
    """The first normalised triad in t's orbit, comparing triads as
    member triples in far-corner-digit order (the published listing
    convention)."""
    ops = ShapeOps(t.shape)
    return _wrap(t.shape, min(_orbit_raw(_raw(t), ops), key=_canonical_key))


@dataclass(frozen=True)
class TriadClass:
    """One equivalence class: canonical representative, orbit size, origin."""

    representative: Triad
    orbit_size: int
    provenance: str = "searched"

    def __lt__(self, other: "TriadClass") -> bool:
        return self.representative < other.representative

    @property
    def shape(self) -> tuple[int, ...]:
        return self.representative.shape


@dataclass
class Classification:
    """A complete partition of a set of normalised Golay triads.

    ``index`` maps every normalised triad (raw digit-tuple form) in any
    orbit to its class position in ``classes``; it is what lets other
    modules resolve an arbitrary normalised triad to its class quickly.
    """

    shape: tuple[int, ...]
    classes: list[TriadClass]
    index: dict[RawTriad, int] = field(repr=False)
    _elements: list[list[RawTriad]] | None = field(default=None, repr=False)

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def normalised_count(self) -> int:
        """Number of normalised triads = Σ orbit sizes."""
        return sum(c.orbit_size for c in self.classes)

    def orbit_size_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for c in self.classes:
            hist[c.orbit_size] = hist.get(c.orbit_size, 0) + 1
        return dict(sorted(hist.items()))

    def class_of(self, t: Triad) -> TriadClass | None:
        """Resolve a triad to its class via orbit membership."""
        ops = ShapeOps(self.shape)
        raw = _pi_min(
            tuple(sorted(_norm_member(m.digits) for m in t.members)), ops
        )
        i = self.index.get(raw)
        return self.classes[i] if i is not None else None

    def members_union(self) -> set[tuple[int, ...]]:
        """All distinct member arrays across every orbit element, with
        dimension-reordered representations of one array identified."""
        ops = ShapeOps(self.shape)
        out: set[tuple[int, ...]] = set()
        if not ops.axis_perms:
            for raw in self.index:
                out.update(raw)
            return out
        for raw in self.index:
            for m in raw:
                out.add(min(
                    m, *(tuple(m[p] for p in perm) for perm in ops.axis_perms)
                ))
        return out

    def array_count(self) -> int:
        """Number of Golay arrays (sequences when rank 1) of this shape.

        A Golay array is a member of some triad, normalised or not.  A
        member of a de-normalised triad is x + α for a member x of a
        normalised one, and the leading digit recovers (x, α) uniquely,
        so the count is 3 × (distinct members over all orbits).
        """
        return 3 * len(self.members_union())

    def _class_elements(self) -> list[list[RawTriad]]:
        if self._elements is None:
            buckets: list[list[RawTriad]] = [[] for _ in self.classes]
            for raw, i in self.index.items():
                buckets[i].append(raw)
            for b in buckets:
                b.sort()
            object.__setattr__(self, "_elements", buckets)
        return self._elements  # type: ignore[return-value]

    def expand_class(self, cls: TriadClass) -> list[Triad]:
        """All normalised triads (as objects) in one class, sorted."""
        key = _pi_min(_raw(cls.representative), ShapeOps(self.shape))
        return [
            _wrap(self.shape, raw)
            for raw in self._class_elements()[self.index[key]]
        ]

    def expand_class_raw(self, class_index: int) -> list[RawTriad]:
        return self._class_elements()[class_index]


def classify(
    triads: Iterable[Triad],
    provenance: str = "searched",
    complete: bool = True,
    shape: tuple[int, ...] | None = None,
) -> Classification:
    """Partition normalised Golay triads into equivalence classes.

    With ``complete=True`` (the default) the input is asserted to be a
    union of whole orbits, which holds for any exhaustively generated
    set; a violation means the caller's enumeration missed triads.
    """
    triads = list(triads)
    if not triads:
        return Classification(shape=shape or (), classes=[], index={})
    shape = triads[0].shape
    ops = ShapeOps(shape)
    raw_input = {_pi_min(_raw(t), ops) for t in triads}
    if any(t.shape != shape for t in triads):
        raise ValueError("all triads must share a shape")

    index: dict[RawTriad, int] = {}
    reps: list[tuple[RawTriad, int]] = []
    for raw in sorted(raw_input):
        if raw in index:
            continue
        orb = _orbit_raw(raw, ops)
        if complete and not orb <= raw_input:
            missing = sorted(orb - raw_input)[0]
            raise ValueError(
                f"input is not orbit-closed: missing equivalent triad {missing}"
            )
        i = len(reps)
        reps.append((min(orb, key=_canonical_key), len(orb)))
        for el in orb:
            index[el] = i

    order = sorted(range(len(reps)), key=lambda i: _canonical_key(reps[i][0]))
    renumber = {old: new for new, old in enumerate(order)}
    classes = [
        TriadClass(_wrap(shape, reps[old][0]), reps[old][1], provenance)
        for old in order
    ]
    index = {raw: renumber[i] for raw, i in index.items()}
    return Classification(shape=shape, classes=classes, index=index)


def count_golay_arrays(classification: Classification) -> int:
    """Golay array/sequence count for a complete classification."""
    return classification.array_count()
