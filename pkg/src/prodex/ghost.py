"""Divisor-sum transform between exponent sequences and ghost sequences.

"Ghost sequence" is this package's name for the coefficients L_N of
-x (ln f)'.  Expanding the logarithmic derivative of prod (1 - m_k x^k)
factor by factor gives

    L_N = sum over divisors s of N of  m_{N/s}^s * (N/s),

so the transform can be computed by direct divisor enumeration, with no
series division at all.  That independence from the series route is what
makes it useful as a cross-check.
"""

from __future__ import annotations

from math import isqrt

from .errors import NotRealizableError, OrderMismatchError
from .products import ProductExpansion
from .series import GhostSequence

__all__ = [
    "GhostSequence",
    "ghost_from_exponents",
    "exponents_from_ghost",
    "verify_reciprocal_identity",
]


def _divisors(n: int) -> list[int]:
    """Divisors of n by trial division up to sqrt(n), ascending."""
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    large.reverse()
    return small + large


def ghost_from_exponents(m: ProductExpansion) -> GhostSequence:
    """L_N = sum_{s|N} m_{N/s}^s * (N/s) for N = 1..order."""
    exps = m.exponents
    values = []
    for n in range(1, m.order + 1):
        acc = 0
        for s in _divisors(n):
            q = n // s
            acc += exps[q - 1] ** s * q
        values.append(acc)
    return GhostSequence(tuple(values))


def exponents_from_ghost(ghost: GhostSequence) -> ProductExpansion:
    """Solve the divisor-sum relation for m_1..m_N, increasing N.

    At index N only the s = 1 term contains m_N, contributing N * m_N, so

        m_N = (L_N - sum_{s|N, s>1} m_{N/s}^s * (N/s)) / N.

    The division must be exact; a nonzero remainder means no integer
    exponent sequence has this ghost, and NotRealizableError reports the
    failing index and remainder.  The loop is inherently sequential: m_N
    depends on the exponents at every proper divisor of N.
    """
    values = ghost.values
    exps: list[int] = []
    for n in range(1, ghost.order + 1):
        acc = 0
        for s in _divisors(n):
            if s == 1:
                continue
            q = n // s
            acc += exps[q - 1] ** s * q
        quotient, remainder = divmod(values[n - 1] - acc, n)
        if remainder:
            raise NotRealizableError(n, remainder)
        exps.append(quotient)
    return ProductExpansion(tuple(exps))


def verify_reciprocal_identity(m: ProductExpansion, n: ProductExpansion) -> list[bool]:
    """Check, index by index, that m's ghost is the negation of n's.

    All entries are true exactly when the two products multiply to 1
    through the truncation order.
    """
    if m.order != n.order:
        raise OrderMismatchError(f"orders differ: {m.order} vs {n.order}")
    gm = ghost_from_exponents(m).values
    gn = ghost_from_exponents(n).values
    return [a == -b for a, b in zip(gm, gn)]
