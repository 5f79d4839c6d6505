"""Chern classes on smooth quadrics and the middle-dimensional Chow group.

Let ``Q`` be a smooth quadric of dimension ``n`` in projective ``(n+1)``-space
and ``h`` the restricted hyperplane class.  From the Euler sequence of the
ambient space and the normal bundle ``O_Q(2h)`` of the hypersurface,

    c(T_Q) = (1 + h)^(n+2) * (1 + 2h)^(-1).

For an abelian variety ``A`` of dimension ``d`` inside ``Q`` of dimension
``2d`` the tangent bundle of ``A`` is trivial, so the normal bundle has the
same total Chern class as the restriction of ``T_Q``.  Its top coefficient
``F_d`` controls the self-intersection of ``A``.

Middle classes on ``Q^(2d)`` are written ``a*alpha + b*beta`` with the
pairing ``alpha^2 = beta^2 = 1``, ``alpha.beta = 0`` taken for every ``d``.
Textbook conventions for this pairing depend on the parity of ``d``; the
parity-free form is kept on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import TruncSeries, coefficient, series_binom_power, series_invert

__all__ = [
    "MiddleClass",
    "DimensionMismatchError",
    "chern_total_tangent_quadric",
    "chern_total_normal",
    "f_closed",
    "f_series",
    "intersect_middle",
    "degree_middle",
    "self_intersection_check",
]


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class MiddleClass:
    """The class ``a*alpha + b*beta`` in codimension ``d`` of ``Q^(2d)``."""

    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"half-dimension must be >= 1, got {self.d}")

    def is_effective(self) -> bool:
        return self.a >= 0 and self.b >= 0


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def chern_total_tangent_quadric(n: int) -> TruncSeries:
    """Total Chern class of an ``n``-dimensional smooth quadric, in powers of h.

    Classes above degree ``n`` vanish on ``Q`` so the series is truncated
    there.
    """
    _require_positive("n", n)
    ambient = series_binom_power(1, n + 2, n)
    normal = series_binom_power(2, 1, n)
    return ambient * series_invert(normal)


def chern_total_normal(d: int) -> TruncSeries:
    """Total Chern class of the normal bundle of a ``d``-dimensional abelian
    variety in ``Q^(2d)``, pulled back to the abelian variety.

    Same expression as the tangent class of ``Q^(2d)``, truncated at ``d``
    because ``A`` has dimension ``d``.
    """
    _require_positive("d", d)
    return series_binom_power(1, 2 * d + 2, d) * series_invert(
        series_binom_power(2, 1, d)
    )


def f_closed(d: int) -> int:
    """``F_d = sum_{k=0}^{d} binom(2d+2, k) (-2)^(d-k)``.

    Evaluated Horner-style with the binomials updated in place, so the cost
    is linear in ``d``.
    """
    _require_positive("d", d)
    m = 2 * d + 2
    acc = 0
    binom = 1
    for k in range(d + 1):
        acc = -2 * acc + binom
        binom = binom * (m - k) // (k + 1)
    return acc


def f_series(d: int) -> int:
    """``F_d`` read off as the top coefficient of :func:`chern_total_normal`."""
    return coefficient(chern_total_normal(d), d)


def intersect_middle(x: MiddleClass, y: MiddleClass) -> int:
    if x.d != y.d:
        raise DimensionMismatchError(f"classes live on Q^{2 * x.d} and Q^{2 * y.d}")
    return x.a * y.a + x.b * y.b


def degree_middle(x: MiddleClass) -> int:
    """Intersection number with ``h^d``; both generators have degree one."""
    return x.a + x.b


def self_intersection_check(x: MiddleClass) -> bool:
    """Whether ``x`` can be the class of an abelian ``d``-fold.

    Compares ``x.x`` with ``F_d * deg(x)``, the self-intersection forced by
    the normal bundle.
    """
    return intersect_middle(x, x) == f_closed(x.d) * degree_middle(x)
