"""Polynomials in one variable ``h`` truncated at a fixed degree.

Coefficients are Python integers, so every computation is exact.  A value
carries its truncation order and binary operations refuse to mix orders.

    >>> x = series_from_coeffs([1, 2], 3)
    >>> series_invert(x).coeffs
    (1, -2, 4, -8)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "TruncSeries",
    "OrderMismatchError",
    "NotInvertibleError",
    "series_from_coeffs",
    "series_add",
    "series_mul",
    "series_binom_power",
    "series_invert",
    "coefficient",
]


class OrderMismatchError(ValueError):
    pass


class NotInvertibleError(ValueError):
    pass


@dataclass(frozen=True)
class TruncSeries:
    """Element of Z[h]/(h^(order+1))."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    def __add__(self, other: TruncSeries) -> TruncSeries:
        return series_add(self, other)

    def __mul__(self, other: TruncSeries) -> TruncSeries:
        return series_mul(self, other)

    def __getitem__(self, k: int) -> int:
        return coefficient(self, k)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*h")
            else:
                terms.append(f"{c}*h^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"TruncSeries({body}, order={self.order})"


def series_from_coeffs(coeffs: Iterable[int], order: int) -> TruncSeries:
    """Build a series, padding ``coeffs`` with zeros up to ``order``."""
    cs = [int(c) for c in coeffs]
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if len(cs) > order + 1:
        raise ValueError(f"{len(cs)} coefficients do not fit in order {order}")
    cs.extend([0] * (order + 1 - len(cs)))
    return TruncSeries(tuple(cs), order)


def _check_orders(x: TruncSeries, y: TruncSeries) -> None:
    if x.order != y.order:
        raise OrderMismatchError(f"order {x.order} != order {y.order}")


def series_add(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    _check_orders(x, y)
    return TruncSeries(tuple(a + b for a, b in zip(x.coeffs, y.coeffs)), x.order)


def series_mul(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    """Truncated Cauchy product."""
    _check_orders(x, y)
    n = x.order
    xs, ys = x.coeffs, y.coeffs
    out = [0] * (n + 1)
    for i, a in enumerate(xs):
        if a == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += a * ys[j]
    return TruncSeries(tuple(out), n)


def series_binom_power(c: int, m: int, order: int) -> TruncSeries:
    """``(1 + c*h)**m`` truncated at ``order``."""
    if m < 0:
        raise ValueError(f"exponent must be nonnegative, got {m}")
    out = [0] * (order + 1)
    term = 1
    for k in range(min(m, order) + 1):
        out[k] = term
        # binom(m, k+1) c^(k+1) from binom(m, k) c^k; the division is exact
        term = term * (m - k) * c // (k + 1)
    return TruncSeries(tuple(out), order)


def series_invert(x: TruncSeries) -> TruncSeries:
    """Multiplicative inverse of a series with constant term 1."""
    if x.coeffs[0] != 1:
        raise NotInvertibleError(
            f"constant term must be 1 to invert, got {x.coeffs[0]}"
        )
    xs = x.coeffs
    ys = [1] + [0] * x.order
    for k in range(1, x.order + 1):
        ys[k] = -sum(xs[i] * ys[k - i] for i in range(1, k + 1))
    return TruncSeries(tuple(ys), x.order)


def coefficient(x: TruncSeries, k: int) -> int:
    if not 0 <= k <= x.order:
        raise IndexError(f"degree {k} outside 0..{x.order}")
    return x.coeffs[k]
