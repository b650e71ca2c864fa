"""Exhaustive enumeration of normalised Golay sequence triads.

The search fixes the outermost columns first: normalisation pins
(a0, b0, c0) = (0,0,0), and the correlation condition at the largest
shift forces the last digits to be {0,1,2}, so the ordered convention
(a_{s-1}, b_{s-1}, c_{s-1}) = (0,1,2) enumerates each unordered triad
exactly once.  Working inward, depth i chooses the six digits at
positions i and s-1-i of the three sequences subject to two exact
conditions:

  * the digit sums at positions i and s-1-i agree mod 3 (necessary for
    any Golay triad), and
  * the triad correlation sum at shift u = s-1-i vanishes; at depth i
    every term of that sum is determined.

At the leaves all shifts 0 < u < s are re-verified from scratch, so a
bookkeeping bug in the incremental state cannot corrupt results.

Symmetry reduction.  Three cut levels are supported:

  * ``off``    - plain enumeration; output is every normalised triad.
  * ``paper``  - the two published example cuts on the first member
    (leftmost nonzero entry of its growing prefix is 1, and the prefix
    is lexicographically no later than the reverse-conjugated suffix).
  * ``deep``   - keep a partial assignment only if no image under the
    offset-free symmetry group (dimension reversal combined with any
    subset of per-member reverse conjugations, 16 elements) is
    lexicographically earlier on the determined columns.

Every cut discards only triads whose equivalence class keeps another
representative in the output, so classifying a cut run yields the same
classes as classifying a full run; the test suite validates this
directly.  Cut verdicts per group element depend only on the six new
digits of a step, so they are precomputed per digit combination and
applied as table lookups.

The engine is a level-synchronous frontier expansion over numpy int8
digit blocks with depth-first chunking to bound memory.  Correlation
values are integer pairs (p, q) meaning p + q*omega, accumulated through
small lookup tables, so every test is exact.  Subtrees are split by the
depth-1 assignment into independent blocks, giving determinism,
process-level parallelism, and per-block resume through the cache
directory.

``brute_force_sequence_triads`` is an independent oracle for small
lengths: it enumerates every digit assignment under the same two fixed
outer columns and keeps exactly the assignments whose member
autocorrelation vectors cancel, with no search-style pruning.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from golay3.core import Triad, Z3Array

# (p, q) components of omega^d
OM_P = np.array([1, 0, -1], dtype=np.int16)
OM_Q = np.array([0, 1, -1], dtype=np.int16)
# fused tables over digit pairs: value components of omega^(d1 - d2)
PAIR_P = np.array([[OM_P[(d1 - d2) % 3] for d2 in range(3)] for d1 in range(3)],
                  dtype=np.int16).reshape(9)
PAIR_Q = np.array([[OM_Q[(d1 - d2) % 3] for d2 in range(3)] for d1 in range(3)],
                  dtype=np.int16).reshape(9)

# member last digits under the ordered search convention
_LAST = (0, 1, 2)

PRUNE_LEVELS = ("off", "paper", "deep")

_CHUNK_ROWS = 1 << 17

# targets live in [-6, 6]^2; encode on a 16x16 grid with offset 8
_GRID = 16
_DEAD = -1


def _lex3(a, b) -> int:
    """-1/0/+1 comparison of two digit triples, first coordinate major."""
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def _group_elements():
    """The 47 nontrivial symmetry-group elements (e, rev, conj subset).

    e is the linear-offset coefficient (digit e*j added at position j),
    rev reverses the dimension, conj marks members replaced by their
    reverse conjugate.  Offsets are applied after the rev/conj part.
    """
    out = []
    for e in range(3):
        for rev in (0, 1):
            for conj in itertools.product((0, 1), repeat=3):
                if (e, rev) == (0, 0) and conj == (0, 0, 0):
                    continue
                out.append((e, rev, conj))
    return out


def _image_column(element, s_mod3: int, pos_mod3: int, prefix_col, suffix_col):
    """Column digits of one group image at a determined position.

    ``prefix_col``/``suffix_col`` are the (a, b, c) digits at positions
    j and s-1-j; ``pos_mod3`` is j mod 3.  The image triad, renormalised
    and with members relabelled by their new last digits, has a fully
    determined column j given by affine maps of these six digits:

      plain     x_j                  role t
      conj      2*x_{s-1-j} - 2t     role t
      rev       x_{s-1-j} - t        role -t
      rev+conj  2*x_j                role -t

    and the linear offset adds e*j to the column and e*(s-1) to roles.
    """
    e, rev, conj = element
    add = (e * pos_mod3) % 3
    delta = (e * (s_mod3 - 1)) % 3
    cols = {}
    for t in range(3):
        pj, sj = prefix_col[t], suffix_col[t]
        if not rev and not conj[t]:
            role, val = t, pj
        elif not rev and conj[t]:
            role, val = t, 2 * sj - 2 * t
        elif rev and not conj[t]:
            role, val = -t, sj - t
        else:
            role, val = -t, 2 * pj
        cols[(role + delta) % 3] = (val + add) % 3
    return cols[0], cols[1], cols[2]


_ELEMENTS = _group_elements()
_RC_A_BIT = _ELEMENTS.index((0, 0, (1, 0, 0)))


@lru_cache(maxsize=16)
def _combo_tables(middle: bool, s_mod3: int):
    """Per-step digit choices with constraint keys and cut masks.

    Returns (combos, contrib_pq, pos_masks, neg_masks) where ``combos``
    is (k, 6) or (k, 3) int8, ``contrib_pq`` the (k, 2) exact
    contribution of the new digits to the active correlation constraint,
    and the masks are (3, k) uint64 bitfields over the 47 group
    elements, indexed by position mod 3: bit g of ``pos_masks[v][r]``
    is set when combo r makes the node column strictly later than image
    g's column (prune if still tied), of ``neg_masks`` when strictly
    earlier (tie resolved, disarm the cut).
    """
    if middle:
        combos = np.array(list(itertools.product(range(3), repeat=3)),
                          dtype=np.int8)
        prefix = combos
        suffix = combos
    else:
        full = np.array(list(itertools.product(range(3), repeat=6)),
                        dtype=np.int8)
        keep = (full[:, :3].sum(axis=1) - full[:, 3:].sum(axis=1)) % 3 == 0
        combos = full[keep]
        prefix = combos[:, :3]
        suffix = combos[:, 3:]

    c16 = combos.astype(np.int16)
    pq = np.zeros((len(combos), 2), dtype=np.int16)
    for col, t in enumerate(_LAST):
        d_pre = (c16[:, col] - t) % 3          # x_i * conj(x_{s-1})
        d_suf = (-c16[:, 3 * (not middle) + col]) % 3   # x_0 * conj(x_{s-1-i})
        pq[:, 0] += OM_P[d_pre] + OM_P[d_suf]
        pq[:, 1] += OM_Q[d_pre] + OM_Q[d_suf]

    k = len(combos)
    pos_masks = np.zeros((3, k), dtype=np.uint64)
    neg_masks = np.zeros((3, k), dtype=np.uint64)
    for v in range(3):
        for r in range(k):
            p_col = tuple(int(x) for x in prefix[r])
            s_col = tuple(int(x) for x in suffix[r])
            for g, element in enumerate(_ELEMENTS):
                img = _image_column(element, s_mod3, v, p_col, s_col)
                cmp = _lex3(p_col, img)
                if cmp > 0:
                    pos_masks[v, r] |= np.uint64(1 << g)
                elif cmp < 0:
                    neg_masks[v, r] |= np.uint64(1 << g)
    return combos, pq, pos_masks, neg_masks


@lru_cache(maxsize=16)
def _bucket_tables(middle: bool, s_mod3: int):
    """Combos grouped by constraint contribution for fast expansion.

    Returns (grid, order, starts, counts, combos, pos_masks, neg_masks):
    ``grid`` maps an encoded target to a bucket id or -1, bucket b
    covers ``order[starts[b]:starts[b]+counts[b]]`` rows of ``combos``.
    """
    combos, pq, pos_masks, neg_masks = _combo_tables(middle, s_mod3)
    enc = (pq[:, 0] + _GRID // 2) * _GRID + (pq[:, 1] + _GRID // 2)
    order = np.argsort(enc, kind="stable").astype(np.int32)
    enc_sorted = enc[order]
    keys, starts, counts = np.unique(enc_sorted, return_index=True,
                                     return_counts=True)
    grid = np.full(_GRID * _GRID, _DEAD, dtype=np.int32)
    grid[keys] = np.arange(len(keys), dtype=np.int32)
    return (grid, order, starts.astype(np.int32), counts.astype(np.int32),
            combos, pos_masks, neg_masks)


def _constraint_targets(digits: np.ndarray, i: int, s: int) -> np.ndarray:
    """Encoded -(determined part) of the triad correlation sum at shift
    s-1-i for every frontier row; out-of-range targets encode as -1."""
    n = len(digits)
    if i < 2:
        tp = np.zeros(n, dtype=np.int16)
        tq = np.zeros(n, dtype=np.int16)
    else:
        pre = digits[:, :, 1:i].astype(np.int16)
        suf = digits[:, :, s - i : s - 1]
        idx = pre * 3 + suf
        tp = -PAIR_P[idx].sum(axis=(1, 2), dtype=np.int16)
        tq = -PAIR_Q[idx].sum(axis=(1, 2), dtype=np.int16)
    ok = (np.abs(tp) <= 6) & (np.abs(tq) <= 6)
    enc = (tp + _GRID // 2) * _GRID + (tq + _GRID // 2)
    return np.where(ok, enc, -1).astype(np.int32)


_ALL_BITS = np.uint64((1 << len(_ELEMENTS)) - 1)
_PAPER_BITS = np.uint64(1 << _RC_A_BIT)


class _RowState:
    """Per-row search state carried alongside the digit block.

    ``armed`` is a bitfield over group elements: bit g is set while the
    node and image g agree on every determined column; a row dies when
    an armed image goes strictly earlier at the new column, and a bit
    disarms once the node goes strictly earlier.  ``nz`` tracks the
    paper rule that the first nonzero digit of member a's prefix must
    be 1 (paper mode only; it is sound jointly with the
    reverse-conjugate cut but not with the full column order used by
    deep mode).

    ``u1p``/``u1q`` accumulate the exact triad correlation sum at shift
    1 over the consecutive index pairs that lie inside the determined
    windows, letting the leaf stage discard most rows before the full
    from-scratch verification.
    """

    __slots__ = ("level", "armed", "nz", "u1p", "u1q")

    def __init__(self, level: str, n: int):
        if level not in PRUNE_LEVELS:
            raise ValueError(f"unknown pruning level {level!r}")
        self.level = level
        if level == "off":
            self.armed = None
            self.nz = None
        else:
            bits = _ALL_BITS if level == "deep" else _PAPER_BITS
            self.armed = np.full(n, bits, dtype=np.uint64)
            self.nz = np.zeros(n, dtype=bool) if level == "paper" else None
        self.u1p = np.zeros(n, dtype=np.int16)
        self.u1q = np.zeros(n, dtype=np.int16)

    def take(self, rows) -> "_RowState":
        st = _RowState.__new__(_RowState)
        st.level = self.level
        st.armed = None if self.armed is None else self.armed[rows]
        st.nz = None if self.nz is None else self.nz[rows]
        st.u1p = self.u1p[rows]
        st.u1q = self.u1q[rows]
        return st

    def expand(self, rows: np.ndarray, rep: np.ndarray, combo_rows: np.ndarray,
               pos_mask: np.ndarray, neg_mask: np.ndarray,
               combos: np.ndarray):
        """Child states plus keep mask for one expansion batch."""
        st = _RowState.__new__(_RowState)
        st.level = self.level
        st.u1p = self.u1p[rows].repeat(rep)
        st.u1q = self.u1q[rows].repeat(rep)
        if self.level == "off":
            st.armed = None
            st.nz = None
            return st, None
        armed = self.armed[rows].repeat(rep)
        dead = (armed & pos_mask[combo_rows]) != 0
        st.armed = armed & ~neg_mask[combo_rows]
        if self.nz is not None:
            nz_par = self.nz[rows].repeat(rep)
            a_new = combos[combo_rows, 0]
            dead |= ~nz_par & (a_new == 2)
            st.nz = nz_par | (a_new != 0)
        else:
            st.nz = None
        return st, ~dead

    def add_shift1_pairs(self, left: np.ndarray, right: np.ndarray) -> None:
        """Accumulate omega^(left - right) over trailing axes."""
        idx = left.reshape(len(left), -1).astype(np.int16) * 3 + right.reshape(
            len(right), -1
        )
        self.u1p += PAIR_P[idx].sum(axis=1, dtype=np.int16)
        self.u1q += PAIR_Q[idx].sum(axis=1, dtype=np.int16)

    def compress(self, keep: np.ndarray) -> None:
        if self.armed is not None:
            self.armed = self.armed[keep]
        if self.nz is not None:
            self.nz = self.nz[keep]
        self.u1p = self.u1p[keep]
        self.u1q = self.u1q[keep]


def _expand_level(
    digits: np.ndarray,
    state: _RowState,
    i: int,
    s: int,
    chunk_rows: int,
) -> Iterator[tuple[np.ndarray, _RowState]]:
    """Yield the depth-i children of a frontier block in bounded pieces."""
    middle = s % 2 == 1 and i == (s - 1) // 2
    grid, order, starts, counts, combos, pos_masks, neg_masks = _bucket_tables(
        middle, s % 3
    )
    pos_mask = pos_masks[i % 3]
    neg_mask = neg_masks[i % 3]
    enc = _constraint_targets(digits, i, s)
    bucket = np.where(enc >= 0, grid[np.maximum(enc, 0)], _DEAD)
    live = np.flatnonzero(bucket != _DEAD)
    if len(live) == 0:
        return
    # process live rows in slices whose total child count stays bounded
    rep_all = counts[bucket[live]].astype(np.int64)
    cum = np.cumsum(rep_all)
    lo = 0
    while lo < len(live):
        hi = int(np.searchsorted(cum, (cum[lo - 1] if lo else 0) + chunk_rows,
                                 side="left")) + 1
        rows = live[lo:hi]
        rep = rep_all[lo:hi].astype(np.int32)
        lo = hi
        n_children = int(rep.sum())
        if n_children == 0:
            continue
        # per-child combo row: bucket start of its parent plus offset
        parent_of = np.repeat(np.arange(len(rows), dtype=np.int32), rep)
        base = starts[bucket[rows]].astype(np.int64)
        first = np.zeros(len(rows), dtype=np.int64)
        first[1:] = np.cumsum(rep[:-1])
        offset = np.arange(n_children, dtype=np.int64) - first[parent_of]
        combo_rows = order[base[parent_of] + offset]

        child = digits[rows].repeat(rep, axis=0)
        picked = combos[combo_rows]
        if middle:
            child[:, :, i] = picked
        else:
            child[:, :, i] = picked[:, :3]
            child[:, :, s - 1 - i] = picked[:, 3:]
        new_state, keep = state.expand(rows, rep, combo_rows, pos_mask,
                                       neg_mask, combos)
        if keep is not None and not keep.all():
            child = child[keep]
            new_state.compress(keep)
        if len(child) == 0:
            continue
        # newly determined consecutive pairs feed the shift-1 partial
        if middle:
            left = child[:, :, (i - 1, i)]
            right = child[:, :, (i, i + 1)]
        else:
            left = child[:, :, (i - 1, s - 1 - i)]
            right = child[:, :, (i, s - i)]
        new_state.add_shift1_pairs(left, right)
        yield child, new_state


def _leaf_filter(digits: np.ndarray, s: int) -> np.ndarray:
    """Re-verify every shift 0 < u < s exactly and keep the survivors."""
    d16 = digits.astype(np.int16)
    for u in range(1, s):
        idx = d16[:, :, : s - u] * 3 + d16[:, :, u:]
        keep = (PAIR_P[idx].sum(axis=(1, 2), dtype=np.int32) == 0) & (
            PAIR_Q[idx].sum(axis=(1, 2), dtype=np.int32) == 0
        )
        if not keep.all():
            digits = digits[keep]
            d16 = d16[keep]
        if len(digits) == 0:
            break
    return digits


def _descend(
    digits: np.ndarray,
    state: _RowState,
    i: int,
    s: int,
    chunk_rows: int,
    out: list[np.ndarray],
) -> None:
    if i > (s - 1) // 2:
        if s % 2 == 0:
            # the centre pair is the one consecutive pair no level saw
            h = s // 2 - 1
            state.add_shift1_pairs(digits[:, :, h], digits[:, :, h + 1])
        ok = (state.u1p == 0) & (state.u1q == 0)
        if not ok.all():
            digits = digits[ok]
        found = _leaf_filter(digits, s)
        if len(found):
            out.append(found)
        return
    for child, child_state in _expand_level(digits, state, i, s, chunk_rows):
        _descend(child, child_state, i + 1, s, chunk_rows, out)


def _root_frontier(s: int, prune: str):
    digits = np.zeros((1, 3, s), dtype=np.int8)
    digits[0, :, s - 1] = _LAST
    return digits, _RowState(prune, 1)


def _depth1_blocks(s: int, prune: str):
    """The depth-1 children of the root, one block per child."""
    digits, state = _root_frontier(s, prune)
    if (s - 1) // 2 < 1:
        return []
    blocks = []
    for child, child_state in _expand_level(digits, state, 1, s, _CHUNK_ROWS):
        for j in range(len(child)):
            blocks.append((child[j : j + 1].copy(), child_state.take([j])))
    return blocks


def _run_block(block, s: int, chunk_rows: int = _CHUNK_ROWS) -> np.ndarray:
    digits, state = block
    out: list[np.ndarray] = []
    _descend(digits, state, 2, s, chunk_rows, out)
    if not out:
        return np.empty((0, 3, s), dtype=np.int8)
    return np.concatenate(out, axis=0)


def _run_block_by_index(args) -> bytes:
    s, prune, idx = args
    blocks = _depth1_blocks(s, prune)
    return _run_block(blocks[idx], s).tobytes()


def _rows_to_raw(found: np.ndarray) -> list[tuple[tuple[int, ...], ...]]:
    """ndarray of (n, 3, s) digit rows -> sorted raw triads."""
    triads = {tuple(sorted(map(tuple, rows.tolist()))) for rows in found}
    return sorted(triads)


def _normalize_prune(symmetry_pruning) -> str:
    if symmetry_pruning in PRUNE_LEVELS:
        return symmetry_pruning
    if symmetry_pruning is True:
        return "paper"
    if symmetry_pruning is False or symmetry_pruning is None:
        return "off"
    raise ValueError(f"unknown pruning level {symmetry_pruning!r}")


def _cache_dir_for(cache_dir, s: int, mode: str) -> Path:
    return Path(cache_dir) / "search" / f"s{s:02d}_{mode}"


def _search_raw(
    s: int,
    symmetry_pruning="off",
    threads: int = 1,
    cache_dir: str | os.PathLike | None = None,
    chunk_rows: int = _CHUNK_ROWS,
) -> list[tuple[tuple[int, ...], ...]]:
    if s < 2:
        raise ValueError("search requires length at least 2")
    if threads == 0:
        threads = os.cpu_count() or 1
    mode = _normalize_prune(symmetry_pruning)

    if (s - 1) // 2 < 1:
        digits, _ = _root_frontier(s, "off")
        return _rows_to_raw(_leaf_filter(digits, s))

    blocks = _depth1_blocks(s, mode)
    pending: list[int] = []
    results: dict[int, np.ndarray] = {}
    for idx in range(len(blocks)):
        if cache_dir is not None:
            f = _cache_dir_for(cache_dir, s, mode) / f"block_{idx:03d}.json"
            if f.exists():
                data = json.loads(f.read_text())
                arr = np.array(data["triads"], dtype=np.int8)
                results[idx] = arr.reshape(-1, 3, s)
                continue
        pending.append(idx)

    if threads > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for idx, raw in zip(
                pending,
                pool.map(_run_block_by_index,
                         [(s, mode, i) for i in pending]),
            ):
                results[idx] = np.frombuffer(raw, dtype=np.int8).reshape(-1, 3, s)
                _store_block(cache_dir, s, mode, idx, results[idx])
    else:
        for idx in pending:
            results[idx] = _run_block(blocks[idx], s, chunk_rows)
            _store_block(cache_dir, s, mode, idx, results[idx])

    if results:
        found = np.concatenate([results[i] for i in sorted(results)], axis=0)
    else:
        found = np.empty((0, 3, s), dtype=np.int8)
    return _rows_to_raw(found)


def _store_block(cache_dir, s, mode, idx, arr: np.ndarray) -> None:
    if cache_dir is None:
        return
    f = _cache_dir_for(cache_dir, s, mode) / f"block_{idx:03d}.json"
    f.parent.mkdir(parents=True, exist_ok=True)
    tmp = f.with_suffix(".tmp")
    rows = arr.reshape(len(arr), 3 * s).tolist() if len(arr) else []
    tmp.write_text(json.dumps({"triads": rows}))
    tmp.replace(f)


def search_sequence_triads(
    s: int,
    symmetry_pruning="off",
    threads: int = 1,
    cache_dir: str | os.PathLike | None = None,
) -> list[Triad]:
    """All normalised length-s Golay sequence triads, sorted.

    With pruning ``off`` the result is the complete set of normalised
    Golay triads of that length, each unordered triad exactly once.
    ``symmetry_pruning`` may be ``"paper"``/True or ``"deep"``; both
    return a subset that still meets every equivalence class, so
    classifying it recovers the full catalogue.  The cuts are validated
    against unpruned runs in the test suite rather than trusted.

    ``threads`` > 1 splits the depth-1 subtrees over worker processes
    (0 = one per CPU); results are identical for any worker count.
    ``cache_dir`` makes interrupted runs resumable block by block.
    """
    raws = _search_raw(s, symmetry_pruning, threads, cache_dir)
    return [Triad.of(*(Z3Array.sequence(m) for m in raw)) for raw in raws]


def brute_force_sequence_triads(s: int) -> list[Triad]:
    """Oracle enumeration for 2 <= s <= 7: every digit assignment under
    the fixed outer columns, filtered by the Golay condition alone.

    Each member's exact autocorrelation vector is tabulated
    independently and triads are exactly the member combinations whose
    vectors cancel; no partial-assignment constraint is ever applied.
    """
    if not 2 <= s <= 7:
        raise ValueError("brute force supports lengths 2..7 only")
    if s == 2:
        mids = np.zeros((1, 0), dtype=np.int8)
    else:
        mids = np.array(list(itertools.product(range(3), repeat=s - 2)),
                        dtype=np.int8)
    m = len(mids)

    def family(t: int) -> np.ndarray:
        seqs = np.zeros((m, s), dtype=np.int8)
        if s > 2:
            seqs[:, 1 : s - 1] = mids
        seqs[:, s - 1] = t
        return seqs

    def corr_vectors(seqs: np.ndarray) -> np.ndarray:
        out = np.zeros((m, 2 * (s - 1)), dtype=np.int32)
        d16 = seqs.astype(np.int16)
        for u in range(1, s):
            d = (d16[:, : s - u] - d16[:, u:]) % 3
            out[:, 2 * (u - 1)] = OM_P[d].sum(axis=1)
            out[:, 2 * (u - 1) + 1] = OM_Q[d].sum(axis=1)
        return out

    fam = [family(t) for t in _LAST]
    vec = [corr_vectors(f) for f in fam]

    pair_sums: dict[bytes, list[tuple[int, int]]] = {}
    for j in range(m):
        sums = vec[1][j][None, :] + vec[2]
        for k in range(m):
            pair_sums.setdefault(sums[k].tobytes(), []).append((j, k))

    triads = set()
    for i in range(m):
        key = (-vec[0][i]).tobytes()
        for j, k in pair_sums.get(key, ()):
            members = (fam[0][i], fam[1][j], fam[2][k])
            triads.add(tuple(sorted(tuple(x.tolist()) for x in members)))
    return [
        Triad.of(*(Z3Array.sequence(mm) for mm in raw)) for raw in sorted(triads)
    ]
