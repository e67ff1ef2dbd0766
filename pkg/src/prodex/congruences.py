"""Number-theoretic consequences of the product expansion.

The rational family (1-(d+1)x)/(1-dx) has the Fermat quotient
((d+1)^p - d^p - 1)/p as its product exponent at every odd prime index p,
and the index-2p instance of the divisor-sum identity between a series and
its reciprocal forces p | (d+1)^p - d^p - 1 directly.  This module computes
those objects exactly, sums them into a full check of p | a^p - a, scans
prime ranges for the Wieferich condition 2^(p-1) = 1 mod p^2, and provides
an independent partition-number oracle for the all-ones product example.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import IdentityViolationError, NotPrimeError
from .products import expand_to_product
from .series import TruncatedSeries, make_series, mul, reciprocal

__all__ = [
    "RationalFamily",
    "FermatWitness",
    "WieferichScanReport",
    "PartitionTable",
    "rational_family_series",
    "fermat_quotient_via_product",
    "fermat_witness",
    "fermat_check",
    "is_prime",
    "is_wieferich",
    "wieferich_scan",
    "partition_numbers",
    "primes_in_range",
]

# Witnesses proving Miller-Rabin deterministic for n < 3.317e24 (> 2^64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Above this bound primes_in_range switches from segmented sieving to
# per-candidate Miller-Rabin; isqrt(2^40) = 2^20 keeps base sieves tiny.
_SIEVE_LIMIT = 2**40

_SCAN_BLOCK = 1 << 20


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; proven correct for all n < 2^64
    (in fact below 3.3e24) by the fixed witness set."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _small_primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def _sieve_segment(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi] via a segmented sieve; needs isqrt(hi) small."""
    lo = max(lo, 2)
    if lo > hi:
        return []
    base = _small_primes_upto(isqrt(hi))
    width = hi - lo + 1
    flags = bytearray([1]) * width
    for p in base:
        start = max(p * p, ((lo + p - 1) // p) * p)
        if start > hi:
            continue
        flags[start - lo :: p] = bytearray(len(range(start, hi + 1, p)))
    return [lo + i for i in range(width) if flags[i] and lo + i >= 2]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending.

    Segmented sieve up to hi = 2^40; above that each candidate gets the
    deterministic Miller-Rabin test (valid below 2^64), which suits narrow
    windows of large isolated candidates.
    """
    if hi < 2 or lo > hi:
        return []
    if hi <= _SIEVE_LIMIT:
        out = []
        for block_lo in range(max(lo, 2), hi + 1, _SCAN_BLOCK):
            block_hi = min(block_lo + _SCAN_BLOCK - 1, hi)
            out.extend(_sieve_segment(block_lo, block_hi))
        return out
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


# ---------------------------------------------------------------------------
# The rational family and its Fermat quotients


@dataclass(frozen=True)
class RationalFamily:
    """The one-parameter family f = (1-(d+1)x)/(1-dx) at truncation order N.

    Written out, f = 1 - x - d x^2 - d^2 x^3 - ...: the tail at x^(n+1) is
    -d^n.  Its ghost sequence is (d+1)^N - d^N.
    """

    d: int
    order: int

    def series(self) -> TruncatedSeries:
        return rational_family_series(self.d, self.order)

    def exponents(self):
        return expand_to_product(self.series())


def rational_family_series(d: int, order: int) -> TruncatedSeries:
    """Truncated series of (1-(d+1)x)/(1-dx), checked against that closed
    form by multiplying back with (1-dx)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [1] + [-(d ** (n - 1)) for n in range(1, order + 1)]
    f = make_series(coeffs)
    check = mul(make_series([1, -d] + [0] * (order - 1)), f)
    expected = tuple([1, -(d + 1)] + [0] * (order - 1))
    if check.coeffs != expected:
        raise IdentityViolationError(
            f"(1-dx) * family(d={d}) failed to telescope to 1-(d+1)x"
        )
    return f


def _require_odd_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        raise ValueError("p = 2 is excluded; the index-2p derivation needs odd p")


def fermat_quotient_via_product(d: int, p: int) -> int:
    """The Fermat quotient ((d+1)^p - d^p - 1)/p, read off the product
    expansion of the rational family rather than computed by division.

    The expansion exponent at index p is checked against the closed form
    by independent big-integer evaluation before being returned.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    _require_odd_prime(p)
    expansion = expand_to_product(rational_family_series(d, p))
    quotient = expansion.exponents[p - 1]
    if quotient * p != (d + 1) ** p - d ** p - 1:
        raise IdentityViolationError(
            f"family exponent at p={p}, d={d} disagrees with the closed form"
        )
    return quotient


@dataclass(frozen=True)
class FermatWitness:
    """The exact ingredients of the index-2p divisor-sum identity

        2p*m_2p + p*m_p^2 + 2 d^p + 1 = -2p*n_2p - p*n_p^2 + 2 (d+1)^p - 1

    for f = 1 - x - d x^2 (zero tail) and its reciprocal.  Since m_p = -n_p,
    the identity rearranges to p * quotient = (d+1)^p - d^p - 1 with
    quotient = m_2p + n_2p + m_p^2: divisibility falls out with no appeal
    to binomial coefficients.
    """

    d: int
    p: int
    m_p: int
    m_2p: int
    n_p: int
    n_2p: int
    quotient: int

    def to_json_dict(self) -> dict:
        return {
            "d": str(self.d),
            "p": str(self.p),
            "m_p": str(self.m_p),
            "m_2p": str(self.m_2p),
            "n_p": str(self.n_p),
            "n_2p": str(self.n_2p),
            "quotient": str(self.quotient),
        }


@lru_cache(maxsize=None)
def _witness(d: int, p: int) -> FermatWitness:
    f = make_series([1, -1, -d] + [0] * (2 * p - 2))
    m = expand_to_product(f).exponents
    n = expand_to_product(reciprocal(f)).exponents
    m_p, m_2p = m[p - 1], m[2 * p - 1]
    n_p, n_2p = n[p - 1], n[2 * p - 1]
    lhs = 2 * p * m_2p + p * m_p * m_p + 2 * d ** p + 1
    rhs = -2 * p * n_2p - p * n_p * n_p + 2 * (d + 1) ** p - 1
    if lhs != rhs:
        raise IdentityViolationError(
            f"index-2p identity failed to balance at d={d}, p={p}: {lhs} != {rhs}"
        )
    if m_p != -n_p:
        raise IdentityViolationError(
            f"odd-index negation failed at d={d}, p={p}: m_p={m_p}, n_p={n_p}"
        )
    quotient = m_2p + n_2p + m_p * m_p
    if quotient * p != (d + 1) ** p - d ** p - 1:
        raise IdentityViolationError(
            f"witness quotient at d={d}, p={p} disagrees with the closed form"
        )
    return FermatWitness(d=d, p=p, m_p=m_p, m_2p=m_2p, n_p=n_p, n_2p=n_2p,
                         quotient=quotient)


def fermat_witness(d: int, p: int) -> FermatWitness:
    """Expand f = 1 - x - d x^2 and 1/f to order 2p and balance the
    index-2p identity exactly.  Results are cached per (d, p): the values
    are immutable and fermat_check sums many of them."""
    if d < 1:
        raise ValueError("d must be >= 1")
    _require_odd_prime(p)
    return _witness(d, p)


def fermat_check(a: int, p: int) -> bool:
    """Verify p | a^p - a two independent ways.

    Route one sums the witness quotients over d = 1..a-1; the sum
    telescopes, so p * (sum of quotients) must equal a^p - a exactly.
    Route two is plain modular exponentiation.  True only if both agree.
    p = 2 skips the witnesses: a^2 - a = a(a-1) is a product of
    consecutive integers, hence even.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        telescoped = (a * a - a) % 2 == 0
    else:
        total = sum(_witness(d, p).quotient for d in range(1, a))
        telescoped = p * total == a ** p - a
    modular = pow(a, p, p) == a % p
    return telescoped and modular


# ---------------------------------------------------------------------------
# Wieferich scanning


@dataclass(frozen=True)
class WieferichScanReport:
    """Outcome of scanning [lo, hi]: every prime in range was tested for
    2^(p-1) = 1 (mod p^2); hits are listed ascending."""

    lo: int
    hi: int
    primes_tested: int
    hits: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "primes_tested": self.primes_tested,
            "hits": list(self.hits),
        }


def is_wieferich(p: int) -> bool:
    """2^(p-1) = 1 (mod p^2)?  For odd p this is equivalent to p dividing
    the Fermat quotient (2^p - 2)/p, i.e. the family exponent at index p."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return pow(2, p - 1, p * p) == 1


def _scan_block(bounds: tuple[int, int]) -> tuple[int, list[int]]:
    lo, hi = bounds
    tested = 0
    hits = []
    for p in _sieve_segment(lo, hi):
        tested += 1
        if pow(2, p - 1, p * p) == 1:
            hits.append(p)
    return tested, hits


def wieferich_scan(lo: int, hi: int, threads: int = 1) -> WieferichScanReport:
    """Test every prime in [lo, hi] for the Wieferich condition.

    The range is cut into fixed blocks processed independently (in a
    process pool when threads > 1) and merged in block order, so the
    report is identical for every thread count.
    """
    if not (2 <= lo <= hi):
        raise ValueError(f"invalid range [{lo}, {hi}]: need 2 <= lo <= hi")
    blocks = [
        (block_lo, min(block_lo + _SCAN_BLOCK - 1, hi))
        for block_lo in range(lo, hi + 1, _SCAN_BLOCK)
    ]
    if threads > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(blocks))) as pool:
            results = list(pool.map(_scan_block, blocks))
    else:
        results = [_scan_block(b) for b in blocks]
    tested = sum(t for t, _ in results)
    hits = [p for _, block_hits in results for p in block_hits]
    return WieferichScanReport(lo=lo, hi=hi, primes_tested=tested, hits=tuple(hits))


# ---------------------------------------------------------------------------
# Partition numbers (independent oracle for the all-ones product example)


@dataclass(frozen=True)
class PartitionTable:
    """p(0)..p(N): the number of ways to write n as a sum of positive
    integers."""

    values: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def to_json_dict(self) -> dict:
        return {"order": self.order, "values": [str(v) for v in self.values]}


def partition_numbers(order: int) -> PartitionTable:
    """Exact p(0)..p(order) by the pentagonal-number recurrence

        p(n) = sum_j (-1)^(j-1) [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ].

    This route never touches the product machinery, so it can referee the
    all-ones expansion identities.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    table = [0] * (order + 1)
    table[0] = 1
    for n in range(1, order + 1):
        total = 0
        j = 1
        while True:
            g = j * (3 * j - 1) // 2
            if g > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * table[n - g]
            g += j  # j(3j+1)/2
            if g <= n:
                total += sign * table[n - g]
            j += 1
        table[n] = total
    return PartitionTable(tuple(table))
