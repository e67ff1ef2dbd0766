"""Exact truncated power series over Python's arbitrary-precision integers.

A series is a fixed-order object: every operation works mod x^(N+1) where N
is the truncation order.  Coefficients are plain ints, never floats, so all
arithmetic is exact no matter how large the values grow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonUnitConstantError, OrderMismatchError

__all__ = [
    "TruncatedSeries",
    "GhostSequence",
    "make_series",
    "truncate",
    "mul",
    "reciprocal",
    "derivative",
    "neg_x_log_derivative",
]


def _check_ints(values: Sequence[int], what: str) -> None:
    for v in values:
        if not isinstance(v, int):
            raise TypeError(f"{what} must be ints, got {type(v).__name__}: {v!r}")


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 x + ... + c_N x^N, exact mod x^(N+1).

    Immutable; all operations return new values, so instances are safe to
    share between threads.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a series needs at least one coefficient")
        _check_ints(self.coeffs, "series coefficients")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def to_json_dict(self) -> dict:
        """JSON form {"order": N, "coeffs": [...]} with coefficients as
        decimal strings, so no consumer can lose precision on big values."""
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "TruncatedSeries":
        coeffs = tuple(_parse_int(c) for c in data["coeffs"])
        series = cls(coeffs)
        if "order" in data and int(data["order"]) != series.order:
            raise ValueError(
                f"order field {data['order']} does not match "
                f"{len(coeffs)} coefficients"
            )
        return series


@dataclass(frozen=True)
class GhostSequence:
    """Divisor-sum values L_1..L_N: the coefficients of -x (ln f)'.

    For f = prod (1 - m_k x^k), L_N = sum over divisors s of N of
    m_{N/s}^s * (N/s).  Index 1-based: values[0] is L_1.
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) == 0:
            raise ValueError("a ghost sequence needs at least one value")
        _check_ints(self.values, "ghost values")

    @property
    def order(self) -> int:
        return len(self.values)

    def negated(self) -> "GhostSequence":
        return GhostSequence(tuple(-v for v in self.values))

    def to_json_dict(self) -> dict:
        return {"order": self.order, "values": [str(v) for v in self.values]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GhostSequence":
        values = tuple(_parse_int(v) for v in data["values"])
        seq = cls(values)
        if "order" in data and int(data["order"]) != seq.order:
            raise ValueError(
                f"order field {data['order']} does not match {len(values)} values"
            )
        return seq


def _parse_int(value) -> int:
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value, 10)
    raise TypeError(f"expected a decimal string or int, got {type(value).__name__}")


def make_series(coeffs: Iterable[int]) -> TruncatedSeries:
    """Build a series from c_0..c_N; the order is len(coeffs) - 1."""
    return TruncatedSeries(tuple(coeffs))


def truncate(f: TruncatedSeries, order: int) -> TruncatedSeries:
    """Re-truncate to a smaller (or equal) order."""
    if order < 0 or order > f.order:
        raise OrderMismatchError(
            f"cannot truncate order-{f.order} series to order {order}"
        )
    return TruncatedSeries(f.coeffs[: order + 1])


def _require_same_order(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated product: coefficient k is sum_{i+j=k} a_i b_j, k <= N.

    Schoolbook convolution; exact at any coefficient size.
    """
    _require_same_order(a, b)
    n = a.order
    out = [0] * (n + 1)
    bc = b.coeffs
    for i, ai in enumerate(a.coeffs):
        if ai:
            for j in range(n + 1 - i):
                out[i + j] += ai * bc[j]
    return TruncatedSeries(tuple(out))


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """1/f mod x^(N+1).  Needs c_0 = +1 or -1, which guarantees every
    coefficient of the reciprocal is an integer."""
    c = f.coeffs
    c0 = c[0]
    if c0 not in (1, -1):
        raise NonUnitConstantError(f"constant term must be +1 or -1, got {c0}")
    n = f.order
    inv = [0] * (n + 1)
    inv[0] = c0
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            ci = c[i]
            if ci:
                acc += ci * inv[k - i]
        inv[k] = -c0 * acc
    return TruncatedSeries(tuple(inv))


def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative at the same order.  The top coefficient of the
    result is unknowable from a truncation, so it is set to 0."""
    n = f.order
    c = f.coeffs
    out = [(k + 1) * c[k + 1] for k in range(n)]
    out.append(0)
    return TruncatedSeries(tuple(out))


def neg_x_log_derivative(f: TruncatedSeries) -> GhostSequence:
    """L_1..L_N with sum L_N x^N = -x f'(x)/f(x) mod x^(N+1).

    Computed as (-x f') * reciprocal(f).  The x-shift puts the derivative's
    zeroed top coefficient above the truncation order, so every L_N is
    exact, including the top one.
    """
    if f.coeffs[0] != 1:
        raise NonUnitConstantError(
            f"constant term must be 1, got {f.coeffs[0]}"
        )
    if f.order < 1:
        raise ValueError("need order >= 1 to produce a ghost sequence")
    d = derivative(f)
    neg_x_d = TruncatedSeries((0,) + tuple(-c for c in d.coeffs[:-1]))
    prod = mul(neg_x_d, reciprocal(f))
    return GhostSequence(prod.coeffs[1:])
