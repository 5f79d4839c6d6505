"""Integer sequences used by the counting argument.

Compares ``F_d`` with factorials and with the exponential estimate
``F_d <= 2^(3d+1)``.  Also provides Fine numbers, defined as Dyck paths of
semilength ``n`` with no hill, for side-by-side comparison with ``F_d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .chow import f_closed

__all__ = [
    "BoundReport",
    "BudgetError",
    "CrossoverError",
    "factorial",
    "crude_bound",
    "bound_report",
    "counting_crossover",
    "fine_oracle",
    "fine",
    "fine_comparison_report",
    "FINE_ORACLE_MAX",
]

FINE_ORACLE_MAX = 14


class BudgetError(ValueError):
    pass


class CrossoverError(RuntimeError):
    pass


@dataclass(frozen=True)
class BoundReport:
    d: int
    f_d: int
    crude: int
    factorial_next: int
    crude_dominates: bool
    factorial_wins_exact: bool
    factorial_wins_crude: bool


def factorial(n: int) -> int:
    return math.factorial(n)


def crude_bound(d: int) -> int:
    """``2^(3d+1)``: each ``binom(2d+2, k)`` for ``k <= d`` is replaced by at
    most ``2^(2d+1)`` and each power of 2 by ``2^d``."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return 1 << (3 * d + 1)


def bound_report(d: int) -> BoundReport:
    f_d = f_closed(d)
    crude = crude_bound(d)
    fact = factorial(d + 1)
    return BoundReport(
        d=d,
        f_d=f_d,
        crude=crude,
        factorial_next=fact,
        crude_dominates=f_d <= crude,
        factorial_wins_exact=fact > f_d,
        factorial_wins_crude=fact > crude,
    )


def counting_crossover(limit: int = 200) -> int:
    """Smallest ``d`` with ``(d+1)! > 2^(3d+1)``.

    The inequality is then checked at every ``d`` up to ``limit`` instead of
    relying on an induction step.
    """
    if limit < 17:
        raise ValueError(f"limit must be >= 17, got {limit}")
    start = None
    for d in range(1, limit + 1):
        wins = factorial(d + 1) > crude_bound(d)
        if start is None:
            if wins:
                start = d
        elif not wins:
            raise CrossoverError(
                f"(d+1)! > 2^(3d+1) holds at d={start} but fails at d={d}"
            )
    if start is None:
        raise CrossoverError(f"no crossover found up to d={limit}")
    return start


def _dyck_paths(n: int):
    """Yield every Dyck path of semilength ``n`` as a string over ``UD``."""

    def walk(prefix, ups, downs):
        if ups == n and downs == n:
            yield "".join(prefix)
            return
        if ups < n:
            prefix.append("U")
            yield from walk(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append("D")
            yield from walk(prefix, ups, downs + 1)
            prefix.pop()

    yield from walk([], 0, 0)


def _has_hill(path: str) -> bool:
    height = 0
    for i, step in enumerate(path):
        if step == "U" and height == 0 and path[i + 1] == "D":
            return True
        height += 1 if step == "U" else -1
    return False


def fine_oracle(n: int) -> int:
    """Fine number by brute-force enumeration of Dyck paths (``n <= 14``)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > FINE_ORACLE_MAX:
        raise BudgetError(f"enumeration capped at n={FINE_ORACLE_MAX}, got {n}")
    return sum(1 for p in _dyck_paths(n) if not _has_hill(p))


@lru_cache(maxsize=None)
def fine(n: int) -> int:
    """Fine number via a dynamic program over path heights."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    # state (height, just stepped up from ground); stepping down from
    # (1, True) would close a hill
    states = {(0, False): 1}
    for _ in range(2 * n):
        nxt: dict[tuple[int, bool], int] = {}
        for (h, fresh), count in states.items():
            if h < n:
                key = (h + 1, h == 0)
                nxt[key] = nxt.get(key, 0) + count
            if h > 0 and not (h == 1 and fresh):
                key = (h - 1, False)
                nxt[key] = nxt.get(key, 0) + count
        states = nxt
    return states.get((0, False), 0)


def fine_comparison_report(d_max: int) -> list[dict[str, int]]:
    """Rows ``{"n", "F_n", "fine_n"}`` for ``n = 1..d_max``."""
    if d_max < 1:
        raise ValueError(f"d_max must be >= 1, got {d_max}")
    return [{"n": n, "F_n": f_closed(n), "fine_n": fine(n)} for n in range(1, d_max + 1)]
