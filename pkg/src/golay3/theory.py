"""Structural consequences of the Golay condition as executable checks.

For a Golay sequence triad the elementwise digit sums read the same
forwards and backwards mod 3; cyclic (periodic) triads of length 2m
with m = 2 mod 3 satisfy exactly two of three even/odd product
balances; and the squared modulus of a difference of two phase sums is
0 or 3 mod 9 according to whether the products agree.  Chaining these
gives the nonexistence of Golay sequence triads of length 4 mod 6 and
of array triads whose size product is 4 mod 6.  The checks here verify
those consequences computationally: a nonexistence assertion certifies
the emptiness of a finite search, which is evidence agreeing with the
theorem, not a proof object.
"""

from __future__ import annotations

from dataclasses import dataclass

from golay3.core import (
    Eisenstein,
    Triad,
    Z3Array,
    is_periodic_golay_triad,
    periodic_autocorrelation,
)


def check_product_property(t: Triad) -> bool:
    """Whether digit sums satisfy a_i+b_i+c_i = a_{s-1-i}+b_{s-1-i}+c_{s-1-i}
    (mod 3) for every i; holds for every Golay sequence triad."""
    if len(t.shape) != 1:
        raise ValueError("the product property check applies to sequences")
    a, b, c = (m.digits for m in t.members)
    s = t.shape[0]
    return all(
        (a[i] + b[i] + c[i]) % 3 == (a[s - 1 - i] + b[s - 1 - i] + c[s - 1 - i]) % 3
        for i in range(s)
    )


@dataclass(frozen=True)
class DiffRootsWitness:
    """Exact data behind the difference-of-phase-sums residue fact.

    alpha and beta count each digit in the two sequences; a and b are
    the integer coordinates of the phase-sum difference a + b*omega,
    whose squared modulus is a^2 + b^2 - ab.  That integer is 0 mod 9
    exactly when the digit products agree (b = 0 mod 3) and 3 mod 9
    otherwise.
    """

    alpha: tuple[int, int, int]
    beta: tuple[int, int, int]
    a: int
    b: int
    norm_squared: int
    residue_mod_9: int
    products_equal: bool


def diff_roots_residue(y: Z3Array, z: Z3Array) -> DiffRootsWitness:
    """Witness for |sum(Y_i - Z_i)|^2 being 0 or 3 mod 9."""
    if y.rank != 1 or z.rank != 1:
        raise ValueError("sequences only")
    if y.shape != z.shape:
        raise ValueError(f"length mismatch: {y.shape} vs {z.shape}")
    alpha = tuple(sum(1 for d in y.digits if d == j) for j in range(3))
    beta = tuple(sum(1 for d in z.digits if d == j) for j in range(3))
    a = (alpha[0] - alpha[2]) - (beta[0] - beta[2])
    b = (alpha[1] - alpha[2]) - (beta[1] - beta[2])
    norm = a * a + b * b - a * b
    return DiffRootsWitness(
        alpha=alpha,
        beta=beta,
        a=a,
        b=b,
        norm_squared=norm,
        residue_mod_9=norm % 9,
        products_equal=b % 3 == 0,
    )


def _member_even_odd_balance(m: Z3Array) -> bool:
    """Whether the products over even and odd positions agree."""
    even = sum(m.digits[0::2]) % 3
    odd = sum(m.digits[1::2]) % 3
    return even == odd


@dataclass(frozen=True)
class ResidueWitness:
    """The alternating-sum invariant of a periodic Golay triad.

    ``alternating_norm_sum`` is the sum over members of
    |sum_i (-1)^i X_i|^2, an exact nonnegative integer equal to 6m for
    periodic Golay triads of length 2m, hence 3 mod 9 when m = 2 mod 3.
    ``balances`` reports each member's even/odd product comparison.
    """

    alternating_norm_sum: int
    residue_mod_9: int
    balances: tuple[bool, bool, bool]


def residue_witness(t: Triad) -> ResidueWitness:
    if len(t.shape) != 1 or t.shape[0] % 2 != 0:
        raise ValueError("even-length sequence triads only")
    total = 0
    for m in t.members:
        acc = Eisenstein(0, 0)
        for i, d in enumerate(m.digits):
            unit = Eisenstein.unit(d)
            acc = acc + (unit if i % 2 == 0 else -unit)
        total += acc.norm_squared()
    balances = tuple(_member_even_odd_balance(m) for m in t.members)
    return ResidueWitness(total, total % 9, balances)  # type: ignore[arg-type]


def alternating_periodic_sum(t: Triad) -> Eisenstein:
    """sum_u (-1)^u (R_A + R_B + R_C)(u) computed exactly; equals the
    alternating norm sum of the witness for any even-length triple."""
    if len(t.shape) != 1 or t.shape[0] % 2 != 0:
        raise ValueError("even-length sequence triads only")
    s = t.shape[0]
    total = Eisenstein(0, 0)
    for m in t.members:
        table = periodic_autocorrelation(m)
        for u in range(s):
            total = total + (table[u] if u % 2 == 0 else -table[u])
    return total


def check_periodic_two_of_three(t: Triad) -> bool:
    """For a periodic Golay triad of length 2m, m = 2 mod 3: exactly two
    members balance their even- and odd-position products.

    Raises on inputs outside that family (odd length, wrong residue, or
    not periodic-Golay).
    """
    if len(t.shape) != 1:
        raise ValueError("sequences only")
    s = t.shape[0]
    if s % 2 != 0:
        raise ValueError(f"length {s} is odd")
    if (s // 2) % 3 != 2:
        raise ValueError(f"length {s}: half-length must be 2 mod 3")
    if not is_periodic_golay_triad(t):
        raise ValueError("not a periodic Golay triad")
    return sum(_member_even_odd_balance(m) for m in t.members) == 2


def assert_nonexistence(shape, registry=None) -> bool:
    """Run the search or derivation for a shape whose size is 4 mod 6
    and certify that it found nothing.

    This is computational evidence exactly matching the nonexistence
    theorem, not a proof object.  A nonempty result would contradict
    the theorem and raises immediately.
    """
    shape = tuple(shape)
    size = 1
    for k in shape:
        size *= k
    if size % 6 != 4:
        raise ValueError(f"size {size} is not 4 mod 6; nothing to assert")
    if registry is None:
        from golay3.catalog import CatalogRegistry

        registry = CatalogRegistry()
    classification = registry.get(shape)
    if classification.n_classes:
        raise RuntimeError(
            f"nonexistence violated for {shape}: found "
            f"{classification.n_classes} classes"
        )
    return True
