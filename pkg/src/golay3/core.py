"""Exact arithmetic core for 3-phase sequences and arrays over Z3.

A 3-phase array stores digits a ∈ {0,1,2} representing the unit complex
entries ω^a with ω = exp(2πi/3).  Every correlation value is a sum of
such entries times conjugates of others, hence an element of the ring
Z[ω] (Eisenstein integers).  All correlations here are computed exactly
in that ring: Golay-type conditions are equalities with zero, so no
floating point is used anywhere on the decision path.

Values are reduced with ω² = -1 - ω, so an Eisenstein integer is a pair
(p, q) meaning p + qω.  Conjugation sends p + qω to (p - q) - qω, and
the squared modulus is the integer p² + q² - pq.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

# (p, q) components of ω^d for d = 0, 1, 2
OMEGA_PQ = ((1, 0), (0, 1), (-1, -1))


@dataclass(frozen=True)
class Eisenstein:
    """The Eisenstein integer p + qω, ω = exp(2πi/3)."""

    p: int = 0
    q: int = 0

    @classmethod
    def unit(cls, digit: int) -> "Eisenstein":
        """ω^digit for digit ∈ {0, 1, 2}."""
        return cls(*OMEGA_PQ[digit % 3])

    def __add__(self, other: "Eisenstein") -> "Eisenstein":
        return Eisenstein(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "Eisenstein") -> "Eisenstein":
        return Eisenstein(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "Eisenstein":
        return Eisenstein(-self.p, -self.q)

    def __mul__(self, other: "Eisenstein | int") -> "Eisenstein":
        if isinstance(other, int):
            return Eisenstein(self.p * other, self.q * other)
        # (p + qω)(r + tω) with ω² = -1 - ω
        p, q, r, t = self.p, self.q, other.p, other.q
        return Eisenstein(p * r - q * t, p * t + q * r - q * t)

    __rmul__ = __mul__

    def conjugate(self) -> "Eisenstein":
        return Eisenstein(self.p - self.q, -self.q)

    def norm_squared(self) -> int:
        """|p + qω|² = p² + q² - pq, a nonnegative rational integer."""
        return self.p * self.p + self.q * self.q - self.p * self.q

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __complex__(self) -> complex:
        w = complex(-0.5, 0.75**0.5)
        return self.p + self.q * w

    def __repr__(self) -> str:
        return f"Eisenstein({self.p}, {self.q})"

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        if self.p == 0:
            return f"{self.q}ω"
        return f"{self.p}{self.q:+}ω"


ZERO = Eisenstein(0, 0)


def _as_digit(value: int) -> int:
    if value not in (0, 1, 2):
        raise ValueError(f"Z3 digit must be 0, 1 or 2, got {value!r}")
    return value


@dataclass(frozen=True)
class Z3Array:
    """An r-dimensional array of Z3 digits with explicit shape.

    Digits are stored row-major.  Sequences are the r = 1 case.  Reading
    outside the index box yields the zero *complex* value (not the phase
    ω^0); correlation code handles that by restricting index ranges.
    """

    shape: tuple[int, ...]
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.shape or any(s < 1 for s in self.shape):
            raise ValueError(f"shape entries must be positive, got {self.shape}")
        n = 1
        for s in self.shape:
            n *= s
        if len(self.digits) != n:
            raise ValueError(
                f"digit count {len(self.digits)} does not match shape {self.shape}"
            )
        for d in self.digits:
            _as_digit(d)

    @classmethod
    def sequence(cls, digits: Iterable[int]) -> "Z3Array":
        digits = tuple(digits)
        return cls((len(digits),), digits)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Z3Array":
        """Build a 2-dimensional array from its list of rows."""
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(d for row in rows for d in row)
        return cls((len(rows), width), flat)

    @property
    def rank(self) -> int:
        return len(self.shape)

    @property
    def size(self) -> int:
        n = 1
        for s in self.shape:
            n *= s
        return n

    def strides(self) -> tuple[int, ...]:
        out = [1] * len(self.shape)
        for k in range(len(self.shape) - 2, -1, -1):
            out[k] = out[k + 1] * self.shape[k + 1]
        return tuple(out)

    def __getitem__(self, index: tuple[int, ...] | int) -> int:
        if isinstance(index, int):
            index = (index,)
        if len(index) != self.rank:
            raise IndexError(f"need {self.rank} indices, got {len(index)}")
        pos = 0
        for i, s, st in zip(index, self.shape, self.strides()):
            if not 0 <= i < s:
                raise IndexError(f"index {index} outside shape {self.shape}")
            pos += i * st
        return self.digits[pos]

    def phase(self, index: tuple[int, ...] | int) -> Eisenstein:
        """The complex entry ω^digit at an in-range index."""
        return Eisenstein.unit(self[index])

    def __lt__(self, other: "Z3Array") -> bool:
        return (self.shape, self.digits) < (other.shape, other.digits)

    def __str__(self) -> str:
        if self.rank == 1:
            return "[" + " ".join(map(str, self.digits)) + "]"
        return f"Z3Array{self.shape}{list(self.digits)}"


@dataclass(frozen=True)
class Triad:
    """An unordered multiset of three equal-shape Z3 arrays.

    Members are stored sorted by digit list, so two triads are equal as
    multisets exactly when they compare equal.
    """

    members: tuple[Z3Array, Z3Array, Z3Array]

    def __post_init__(self) -> None:
        if len(self.members) != 3:
            raise ValueError("a triad has exactly three members")
        a, b, c = self.members
        if not (a.shape == b.shape == c.shape):
            raise ValueError("triad members must share a shape")
        ordered = tuple(sorted(self.members, key=lambda m: m.digits))
        if ordered != self.members:
            object.__setattr__(self, "members", ordered)

    @classmethod
    def of(cls, *members: Z3Array) -> "Triad":
        return cls(tuple(members))  # type: ignore[arg-type]

    @classmethod
    def from_digit_lists(
        cls, rows: Sequence[Sequence[int]], shape: Sequence[int] | None = None
    ) -> "Triad":
        if shape is None:
            arrays = [Z3Array.sequence(r) for r in rows]
        else:
            arrays = [Z3Array(tuple(shape), tuple(r)) for r in rows]
        return cls.of(*arrays)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.members[0].shape

    def digit_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(m.digits for m in self.members)

    def __lt__(self, other: "Triad") -> bool:
        return self.digit_lists() < other.digit_lists()

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self.members) + "}"


def shift_range(shape: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All shift vectors u with |u_k| < s_k, in row-major order."""
    return itertools.product(*(range(-(s - 1), s) for s in shape))


def half_space_shifts(shape: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Shift vectors whose first nonzero coordinate is positive, plus zero.

    Together with conjugate symmetry these determine the whole table.
    """
    for u in shift_range(shape):
        for coord in u:
            if coord > 0:
                yield u
                break
            if coord < 0:
                break
        else:
            yield u  # the all-zero shift


class CorrelationTable:
    """Map from shift vectors to exact Eisenstein correlation values.

    Autocorrelation tables store only shifts whose first nonzero
    coordinate is positive; the remaining values follow from conjugate
    symmetry.  Cross-correlation tables are not conjugate-symmetric and
    store the full range.  Out-of-range shifts read as zero.
    """

    def __init__(
        self,
        shape: tuple[int, ...],
        entries: Mapping[tuple[int, ...], Eisenstein],
        symmetric: bool,
    ) -> None:
        self.shape = shape
        self._entries = dict(entries)
        self.symmetric = symmetric

    def __getitem__(self, u: tuple[int, ...] | int) -> Eisenstein:
        if isinstance(u, int):
            u = (u,)
        if len(u) != len(self.shape):
            raise KeyError(f"shift {u} has wrong rank for shape {self.shape}")
        if any(abs(c) >= s for c, s in zip(u, self.shape)):
            return ZERO
        if u in self._entries:
            return self._entries[u]
        if self.symmetric:
            neg = tuple(-c for c in u)
            if neg in self._entries:
                return self._entries[neg].conjugate()
        return ZERO

    def stored_shifts(self) -> list[tuple[int, ...]]:
        return sorted(self._entries)

    def sequence_values(self) -> list[Eisenstein]:
        """For rank 1: the values [C(0), C(1), ..., C(s-1)]."""
        if len(self.shape) != 1:
            raise ValueError("sequence_values applies to rank-1 tables only")
        return [self[(u,)] for u in range(self.shape[0])]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CorrelationTable):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(self[u] == other[u] for u in shift_range(self.shape))


def _correlation_value(
    a: Z3Array, b: Z3Array, u: tuple[int, ...]
) -> Eisenstein:
    """Σ_i A_i · conj(B_{i+u}) over in-range index tuples, exactly."""
    ranges = []
    for s, uk in zip(a.shape, u):
        lo = max(0, -uk)
        hi = min(s, s - uk)
        if lo >= hi:
            return ZERO
        ranges.append(range(lo, hi))
    sa = a.strides()
    p = q = 0
    for idx in itertools.product(*ranges):
        pos = sum(i * st for i, st in zip(idx, sa))
        off = sum(uk * st for uk, st in zip(u, sa))
        d = (a.digits[pos] - b.digits[pos + off]) % 3
        dp, dq = OMEGA_PQ[d]
        p += dp
        q += dq
    return Eisenstein(p, q)


def aperiodic_autocorrelation(a: Z3Array) -> CorrelationTable:
    """Exact aperiodic autocorrelation over all in-range shifts.

    Only the half-space of shifts with positive leading coordinate is
    materialised; the rest follows from C(-u) = conj(C(u)).
    """
    entries = {u: _correlation_value(a, a, u) for u in half_space_shifts(a.shape)}
    return CorrelationTable(a.shape, entries, symmetric=True)


def cross_correlation(a: Z3Array, b: Z3Array) -> CorrelationTable:
    """Exact aperiodic cross-correlation Σ_i A_i · conj(B_{i+u})."""
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    entries = {u: _correlation_value(a, b, u) for u in shift_range(a.shape)}
    return CorrelationTable(a.shape, entries, symmetric=False)


def periodic_autocorrelation(a: Z3Array) -> list[Eisenstein]:
    """Cyclic autocorrelation R(u) for 0 ≤ u < s of a rank-1 array."""
    if a.rank != 1:
        raise ValueError("periodic autocorrelation is defined for sequences only")
    s = a.shape[0]
    out = []
    for u in range(s):
        p = q = 0
        for i in range(s):
            d = (a.digits[i] - a.digits[(i + u) % s]) % 3
            dp, dq = OMEGA_PQ[d]
            p += dp
            q += dq
        out.append(Eisenstein(p, q))
    return out


def triad_correlation_sum(t: Triad, u: tuple[int, ...]) -> Eisenstein:
    """(C_A + C_B + C_C)(u) for the triad's members, exactly."""
    total = ZERO
    for m in t.members:
        total = total + _correlation_value(m, m, u)
    return total


def is_golay_triad(t: Triad) -> bool:
    """True iff the members' autocorrelations sum to zero at every
    nonzero shift.  Only the positive half-space is evaluated; the rest
    is covered by conjugate symmetry."""
    for u in half_space_shifts(t.shape):
        if all(c == 0 for c in u):
            continue
        if not triad_correlation_sum(t, u).is_zero():
            return False
    return True


def is_periodic_golay_triad(t: Triad) -> bool:
    """True iff the cyclic autocorrelations sum to zero for 0 < u < s."""
    if len(t.shape) != 1:
        raise ValueError("periodic triads are sequences")
    s = t.shape[0]
    tables = [periodic_autocorrelation(m) for m in t.members]
    for u in range(1, s):
        total = tables[0][u] + tables[1][u] + tables[2][u]
        if not total.is_zero():
            return False
    return True
