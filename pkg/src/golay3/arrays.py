"""Dimension-changing maps and the derivation of array-triad catalogues.

The projection that joins dimension k into dimension l lists the
(s_k x s_l) slice of an array column by column, replacing index i_l by
i_k + s_k * i_l and removing index k.  It maps Golay triads to Golay
triads one rank lower, so every array catalogue can be derived from
sequence catalogues: expand each class of the projected shape to its
full set of normalised triads, apply the inverse reshape, and keep the
results that still have the Golay property.  Completeness follows
because every normalised Golay triad of the target shape projects to a
normalised Golay triad of the source shape, which the source catalogue
contains by induction.

Shapes are canonicalised to nondecreasing extents (dropping
unit extents) before classification, since arrays differing only by a
reordering of dimensions represent the same object.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np

from golay3.core import Triad, Z3Array, half_space_shifts, is_golay_triad
from golay3.equivalence import Classification, ShapeOps, classify, pi_images
from golay3.search import PAIR_P, PAIR_Q

Shape = tuple[int, ...]


def _as_nd(a: Z3Array) -> np.ndarray:
    return np.array(a.digits, dtype=np.int8).reshape(a.shape)


def _from_nd(arr: np.ndarray) -> Z3Array:
    return Z3Array(tuple(arr.shape), tuple(int(d) for d in arr.reshape(-1)))


def project(a: Z3Array, k: int, l: int) -> Z3Array:
    """Join dimension k into dimension l (0-based), dropping rank by one.

    The joined dimension has extent s_k * s_l and index i_k + s_k * i_l,
    i.e. the (k, l) slice read column by column.
    """
    r = a.rank
    if r < 2:
        raise ValueError("projection needs rank at least 2")
    if k == l or not (0 <= k < r and 0 <= l < r):
        raise ValueError(f"invalid dimension pair ({k}, {l}) for rank {r}")
    arr = _as_nd(a)
    # place axis k directly after axis l; row-major merge of the
    # adjacent pair (l, k) yields index i_l * s_k + i_k = i_k + s_k*i_l
    perm = [ax for ax in range(r) if ax != k]
    perm.insert(perm.index(l) + 1, k)
    merged = arr.transpose(perm)
    new_shape = list(merged.shape)
    pos = perm.index(l)
    new_shape[pos : pos + 2] = [a.shape[l] * a.shape[k]]
    return _from_nd(merged.reshape(new_shape))


def unproject(a: Z3Array, dim: int, factor: int) -> Z3Array:
    """Split dimension ``dim`` into (factor, extent/factor), rank +1.

    The new dimension of extent ``factor`` is the fast-varying index:
    position i of the old dimension becomes (i % factor, i // factor).
    Inverse of ``project(b, dim, dim + 1)``.
    """
    if not 0 <= dim < a.rank:
        raise ValueError(f"dimension {dim} out of range")
    extent = a.shape[dim]
    if extent % factor != 0:
        raise ValueError(f"extent {extent} not divisible by factor {factor}")
    arr = _as_nd(a)
    shape = list(a.shape)
    shape[dim : dim + 1] = [extent // factor, factor]
    return _from_nd(arr.reshape(shape).swapaxes(dim, dim + 1))


def project_triad(t: Triad, k: int, l: int, verify: bool = True) -> Triad:
    """Memberwise projection; the result of projecting a Golay triad is
    again Golay, asserted unless ``verify`` is disabled."""
    out = Triad.of(*(project(m, k, l) for m in t.members))
    if verify and not is_golay_triad(out):
        raise AssertionError("projection broke the Golay property")
    return out


def unproject_triad(t: Triad, dim: int, factor: int) -> Triad:
    """Memberwise inverse reshape (rank +1).

    The result is NOT guaranteed Golay; callers filter with
    ``is_golay_triad`` or the batched equivalent.
    """
    return Triad.of(*(unproject(m, dim, factor) for m in t.members))


def canonical_shape(shape: Sequence[int]) -> Shape:
    """Nondecreasing extents with unit dimensions dropped."""
    kept = tuple(s for s in shape if s > 1)
    if not kept:
        return (1,)
    return tuple(sorted(kept))


def canonicalize_triad_shape(t: Triad) -> Triad:
    """Reorder dimensions (and drop unit ones) to the canonical shape.

    Dimension reorderings are different presentations of the same
    object; catalogues store the canonical presentation.
    """
    target = canonical_shape(t.shape)
    if t.shape == target:
        return t
    order = sorted(range(len(t.shape)), key=lambda ax: (t.shape[ax] == 1, t.shape[ax], ax))
    members = []
    for m in t.members:
        arr = _as_nd(m).transpose(order)
        members.append(Z3Array(target, tuple(int(d) for d in arr.reshape(-1))))
    return Triad.of(*members)


def golay_mask(digit_rows: np.ndarray, shape: Shape) -> np.ndarray:
    """Boolean mask of rows whose triads are Golay, computed exactly.

    ``digit_rows`` has layout (n, 3, prod(shape)) with row-major member
    digits.  Only shifts with positive leading coordinate are tested;
    the rest follow from conjugate symmetry.
    """
    n = len(digit_rows)
    arr = digit_rows.reshape(n, 3, *shape).astype(np.int16)
    keep = np.ones(n, dtype=bool)
    for u in half_space_shifts(shape):
        if all(c == 0 for c in u):
            continue
        sl_a = [slice(None), slice(None)]
        sl_b = [slice(None), slice(None)]
        for uk, sk in zip(u, shape):
            sl_a.append(slice(max(0, -uk), min(sk, sk - uk)))
            sl_b.append(slice(max(0, uk), min(sk, sk + uk)))
        a = arr[tuple(sl_a)].reshape(n, -1)
        b = arr[tuple(sl_b)].reshape(n, -1)
        idx = a * 3 + b
        keep &= (PAIR_P[idx].sum(axis=1, dtype=np.int32) == 0) & (
            PAIR_Q[idx].sum(axis=1, dtype=np.int32) == 0
        )
    return keep


CatalogProvider = Callable[[Shape], Classification]


def derive_array_classes(
    shape: Sequence[int],
    provider: CatalogProvider,
    route: tuple[int, int] | None = None,
) -> Classification:
    """Complete classification of Golay triads of an array shape.

    The catalogue one rank down (requested through ``provider``, which
    also resolves sequences) is expanded to every normalised triad in
    every orbit, reshaped through the inverse projection, filtered by
    the exact Golay test, and classified.  ``route`` selects which two
    target dimensions were joined (0-based, defaults to the last two).
    """
    shape = canonical_shape(shape)
    r = len(shape)
    if r == 1:
        raise ValueError("rank-1 catalogues come from the sequence search")
    if route is None:
        k, l = r - 2, r - 1
    else:
        k, l = route
        if k == l or not (0 <= k < r and 0 <= l < r):
            raise ValueError(f"invalid route {route} for rank {r}")

    # source shape: target with dimension k joined into dimension l
    source_exact = list(shape)
    source_exact[l] = shape[k] * shape[l]
    del source_exact[k]
    source_exact = tuple(source_exact)
    source = provider(canonical_shape(source_exact))
    if source.n_classes == 0:
        return Classification(shape=shape, classes=[], index={})

    # expand the source catalogue to all normalised triads, presented
    # in the exact (possibly non-canonical) source orientation; when
    # the source shape has repeated extents, include every
    # dimension-reordered representation of each object
    back = _orientation_perm(source.shape, source_exact)
    src_ops = ShapeOps(source.shape)
    rows = []
    for i in range(source.n_classes):
        for raw in source.expand_class_raw(i):
            if src_ops.axis_perms:
                rows.extend(pi_images(raw, src_ops))
            else:
                rows.append(raw)
    n = len(rows)
    digit_rows = np.array(rows, dtype=np.int8).reshape(n, 3, *source.shape)
    if back is not None:
        digit_rows = digit_rows.transpose((0, 1) + tuple(ax + 2 for ax in back))
        digit_rows = np.ascontiguousarray(digit_rows)
    digit_rows = digit_rows.reshape(n, 3, -1)

    # inverse reshape: split the joined dimension, fast index first,
    # then move the recovered dimension k back into place
    j = l - 1 if k < l else l
    split = list(source_exact)
    split[j : j + 1] = [source_exact[j] // shape[k], shape[k]]
    arr = digit_rows.reshape((n, 3) + tuple(split))
    arr = arr.swapaxes(2 + j, 2 + j + 1)
    if j != k:
        arr = np.moveaxis(arr, 2 + j, 2 + k)
    arr = np.ascontiguousarray(arr).reshape(n, 3, -1)

    keep = golay_mask(arr, shape)
    kept = arr[keep]
    triads = [
        Triad.of(*(Z3Array(shape, tuple(int(d) for d in m)) for m in row))
        for row in kept
    ]
    return classify(triads, provenance="projected", complete=True, shape=shape)


def _orientation_perm(canonical: Shape, exact: Shape):
    """Axis order mapping canonical-shape arrays to an exact orientation.

    Returns None when the orientations already agree.  Ambiguity among
    equal extents is harmless: any choice transports complete orbit
    unions onto complete orbit unions.
    """
    if canonical == exact:
        return None
    pool = list(canonical)
    perm = []
    for extent in exact:
        ax = pool.index(extent)
        pool[ax] = None
        perm.append(ax)
    if sorted(perm) != list(range(len(canonical))):
        raise ValueError(f"shapes {canonical} and {exact} are incompatible")
    return perm
