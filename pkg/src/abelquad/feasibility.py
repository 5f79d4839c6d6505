"""Elimination engine for abelian ``d``-folds inside ``Q^(2d)``.

For each ``d`` the engine runs the following steps:

1. compute ``F_d`` and every integer point of ``a^2 + b^2 = F_d (a + b)``;
2. bound the degree ``a + b`` above by ``2 F_d`` and, for ``d > 2``, below by
   ``2 (d+1)!`` (the variety spans ``P^(2d+1)`` and Riemann-Roch gives
   ``h^0 = deg / d!``);
3. turn each surviving class into its possible polarization types;
4. strike types with external results, encoded as :class:`Rule` records
   carrying the quoted statement they rely on.

The verdict and every intermediate object are kept in an
:class:`EliminationRecord` so that each step can be audited.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .chow import MiddleClass, f_closed, self_intersection_check
from .sequences import factorial

__all__ = [
    "PolarizationType",
    "Rule",
    "RuleApplication",
    "Candidate",
    "EliminationRecord",
    "Verdict",
    "InvariantViolation",
    "ArithmeticConsistencyError",
    "RULES",
    "EXTRA_RULES",
    "CASE_LISTED_TYPES",
    "SCAN_LIMIT",
    "circle_solutions",
    "max_degree",
    "min_degree",
    "h0_from_degree",
    "enumerate_polarization_types",
    "double_type",
    "quadric_space_dimension",
    "apply_rules",
    "eliminate",
    "explain",
]

# Largest F_d whose circle is scanned point by point; the scan is linear in F.
SCAN_LIMIT = 10**5


class InvariantViolation(RuntimeError):
    pass


class ArithmeticConsistencyError(ArithmeticError):
    pass


class Verdict(str, enum.Enum):
    ALLOWED_CLASSICAL = "ALLOWED_CLASSICAL"
    ELIMINATED_BY_COUNTING = "ELIMINATED_BY_COUNTING"
    ELIMINATED_BY_RULES = "ELIMINATED_BY_RULES"
    UNRESOLVED = "UNRESOLVED"


@dataclass(frozen=True, order=True)
class PolarizationType:
    """Elementary divisors ``d_1 | d_2 | ... | d_g`` of an ample bundle."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a polarization type needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        for lo, hi in zip(parts, parts[1:]):
            if hi % lo:
                raise ValueError(f"{lo} does not divide {hi} in {parts}")

    @property
    def g(self) -> int:
        return len(self.parts)

    @property
    def h0(self) -> int:
        return math.prod(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Rule:
    """An external result used as an axiom.

    ``matches(d, t)`` decides structurally whether the result excludes type
    ``t`` as a very ample polarization on an abelian ``d``-fold.
    """

    rule_id: str
    citation: str
    source: str
    conclusion: str
    matches: Callable[[int, PolarizationType], bool]
    doc: str = ""
    extra: bool = False


@dataclass(frozen=True)
class RuleApplication:
    rule_id: str
    citation: str
    subject: PolarizationType
    conclusion: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "rule_id": self.rule_id,
            "citation": self.citation,
            "subject": list(self.subject.parts),
            "conclusion": self.conclusion,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RuleApplication:
        return cls(
            rule_id=data["rule_id"],
            citation=data["citation"],
            subject=PolarizationType(tuple(data["subject"])),
            conclusion=data["conclusion"],
        )


@dataclass(frozen=True)
class Candidate:
    """A class ``(a, b)`` that passed the degree and Riemann-Roch filters.

    ``paper_omitted`` lists types that no rule strikes and that the case
    analysis being reproduced never mentions.
    """

    pair: tuple[int, int]
    degree: int
    h0: int
    types: tuple[PolarizationType, ...]
    paper_omitted: tuple[PolarizationType, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "pair": list(self.pair),
            "degree": self.degree,
            "h0": self.h0,
            "types": [list(t.parts) for t in self.types],
            "paper_omitted": [list(t.parts) for t in self.paper_omitted],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Candidate:
        return cls(
            pair=tuple(data["pair"]),
            degree=data["degree"],
            h0=data["h0"],
            types=tuple(PolarizationType(tuple(p)) for p in data["types"]),
            paper_omitted=tuple(
                PolarizationType(tuple(p)) for p in data["paper_omitted"]
            ),
        )


@dataclass(frozen=True)
class EliminationRecord:
    d: int
    f_d: int
    all_solutions: tuple[tuple[int, int], ...]
    effective_solutions: tuple[tuple[int, int], ...]
    max_degree: int
    min_degree: int
    surviving_candidates: tuple[Candidate, ...]
    rules_applied: tuple[RuleApplication, ...]
    verdict: Verdict
    solutions_exhaustive: bool = True
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "f_d": self.f_d,
            "all_solutions": [list(p) for p in self.all_solutions],
            "effective_solutions": [list(p) for p in self.effective_solutions],
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "surviving_candidates": [c.to_dict() for c in self.surviving_candidates],
            "rules_applied": [r.to_dict() for r in self.rules_applied],
            "verdict": self.verdict.value,
            "solutions_exhaustive": self.solutions_exhaustive,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> EliminationRecord:
        return cls(
            d=data["d"],
            f_d=data["f_d"],
            all_solutions=tuple(tuple(p) for p in data["all_solutions"]),
            effective_solutions=tuple(tuple(p) for p in data["effective_solutions"]),
            max_degree=data["max_degree"],
            min_degree=data["min_degree"],
            surviving_candidates=tuple(
                Candidate.from_dict(c) for c in data["surviving_candidates"]
            ),
            rules_applied=tuple(
                RuleApplication.from_dict(r) for r in data["rules_applied"]
            ),
            verdict=Verdict(data["verdict"]),
            solutions_exhaustive=data["solutions_exhaustive"],
            notes=tuple(data["notes"]),
        )


# -- circle and degree bounds -------------------------------------------------


def circle_solutions(F: int) -> list[tuple[int, int]]:
    """All integer ``(a, b)`` with ``a^2 + b^2 = F (a + b)``, sorted.

    Uses the equivalent form ``(2a - F)^2 + (2b - F)^2 = 2 F^2`` and scans
    ``x = 2a - F`` over ``|x| <= isqrt(2 F^2)``.
    """
    if F < 1:
        raise ValueError(f"F must be >= 1, got {F}")
    rhs = 2 * F * F
    r = math.isqrt(rhs)
    start = -r if (r + F) % 2 == 0 else -r + 1
    out = set()
    for x in range(start, r + 1, 2):
        rest = rhs - x * x
        y = math.isqrt(rest)
        if y * y != rest:
            continue
        a = (x + F) // 2
        # x and F have the same parity, and then so do y and F
        out.add((a, (F + y) // 2))
        out.add((a, (F - y) // 2))
    return sorted(out)


def _solves(F: int, a: int, b: int) -> bool:
    return a * a + b * b == F * (a + b)


def max_degree(F: int) -> tuple[int, tuple[int, int]]:
    """Largest ``a + b`` on the circle, reached at ``(F, F)``."""
    if F < 1:
        raise ValueError(f"F must be >= 1, got {F}")
    if not _solves(F, F, F):
        raise InvariantViolation(f"({F},{F}) does not solve the circle equation")
    return 2 * F, (F, F)


def min_degree(d: int) -> int:
    """``2 (d+1)!``.

    Only a valid lower bound for ``d > 2``, where the embedded variety spans
    ``P^(2d+1)`` and so ``h^0 >= 2d + 2``.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return 2 * factorial(d + 1)


def h0_from_degree(deg: int, d: int) -> int:
    if deg < 1 or d < 1:
        raise ValueError(f"degree and dimension must be positive, got {deg}, {d}")
    q, r = divmod(deg, factorial(d))
    if r:
        raise ArithmeticConsistencyError(f"degree {deg} is not divisible by {d}!")
    return q


# -- polarization types -------------------------------------------------------


def enumerate_polarization_types(g: int, h0: int) -> list[PolarizationType]:
    """Every divisor chain of length ``g`` with product ``h0``, sorted."""
    if g < 1 or h0 < 1:
        raise ValueError(f"g and h0 must be positive, got {g}, {h0}")

    def chains(prev: int, remaining: int, slots: int):
        if slots == 1:
            if remaining % prev == 0:
                yield (remaining,)
            return
        p = prev
        # later parts are multiples of p, so p^slots divides remaining
        while p**slots <= remaining:
            if remaining % p == 0:
                for rest in chains(p, remaining // p, slots - 1):
                    yield (p,) + rest
            p += prev

    return sorted(PolarizationType(c) for c in chains(1, h0, g))


def double_type(t: PolarizationType) -> tuple[PolarizationType, int]:
    """Type of ``L^2`` and its ``h^0 = 2^g * prod(parts)``."""
    doubled = PolarizationType(tuple(2 * p for p in t.parts))
    return doubled, doubled.h0


def quadric_space_dimension(N: int) -> int:
    """``h^0(O_{P^N}(2)) = binom(N+2, 2)``."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return math.comb(N + 2, 2)


# -- rule base ----------------------------------------------------------------


def _lazarsfeld_range(n: int) -> bool:
    return n >= 13 or n in (7, 8, 9)


def _quadric_excess(t: PolarizationType) -> int:
    """Quadrics on ``P^(h0-1)`` minus sections of ``L^2`` on the surface."""
    return quadric_space_dimension(t.h0 - 1) - double_type(t)[1]


def _match_lazarsfeld(d: int, t: PolarizationType) -> bool:
    if d != 2 or t.g != 2 or t.parts[0] != 1:
        return False
    n = t.parts[1]
    return _lazarsfeld_range(n) and _quadric_excess(t) <= 0


def _match_iyer_ones(d: int, t: PolarizationType) -> bool:
    return d >= 3 and t.g >= 2 and all(p == 1 for p in t.parts[:-1]) and t.parts[-1] > 1


def _match_iyer_124(d: int, t: PolarizationType) -> bool:
    return d == 3 and t.parts == (1, 2, 4)


def _match_kummer(d: int, t: PolarizationType) -> bool:
    return all(p == 2 for p in t.parts)


R3_LAZARSFELD_17 = Rule(
    rule_id="R3_LAZARSFELD_17",
    citation="is projectively normal",
    source="Lazarsfeld: a very ample (1,n) divisor with n >= 13 or n = 7, 8, 9",
    conclusion="no quadrics contain the lifted surface; contradiction",
    matches=_match_lazarsfeld,
    doc=(
        "Surface in P^5 with h0 = 7 is a projection of its linearly normal "
        "model in P^6; the quadric containing it lifts. Projective normality "
        "makes restriction of quadrics surjective, and binom(8,2) = 28 = h0(L^2) "
        "leaves no quadric through the lifted surface."
    ),
)

R1_IYER_ONES_N = Rule(
    rule_id="R1_IYER_ONES_N",
    citation="(1,…,1,2d+1) is never very ample",
    source="Iyer: line bundles of type (1,...,1,2d+1)",
    conclusion="type is not very ample; cannot embed",
    matches=_match_iyer_ones,
    doc=(
        "The quoted statement has last part 2d+1 (7 when d = 3), but it is "
        "applied to (1,1,8). The matcher follows that usage and accepts any "
        "(1,...,1,N) with N > 1, but only for d >= 3: on surfaces (1,8) is "
        "very ample in general."
    ),
)

R2_IYER_124 = Rule(
    rule_id="R2_IYER_124",
    citation="cannot be very ample on any abelian threefold",
    source=(
        "Iyer: (1,2,4) on a generic abelian threefold is birational but not an "
        "isomorphism; very ampleness is an open condition"
    ),
    conclusion="type (1,2,4) is never very ample on a threefold; cannot embed",
    matches=_match_iyer_124,
)

X1_KUMMER_2THETA = Rule(
    rule_id="X1_KUMMER_2THETA",
    citation="|2Θ| factors through the Kummer involution",
    source="classical; not part of the reproduced argument",
    conclusion="type (2,...,2) identifies x and -x up to translation; cannot embed",
    matches=_match_kummer,
    doc="Extra rule, off by default. Disposes of (2,2,2) for d = 3.",
    extra=True,
)

# application order is part of the contract
RULES: tuple[Rule, ...] = (R3_LAZARSFELD_17, R1_IYER_ONES_N, R2_IYER_124)
EXTRA_RULES: tuple[Rule, ...] = (X1_KUMMER_2THETA,)

# types that the reproduced case analysis names explicitly
CASE_LISTED_TYPES: dict[int, tuple[PolarizationType, ...]] = {
    2: (PolarizationType((1, 7)),),
    3: (PolarizationType((1, 1, 8)), PolarizationType((1, 2, 4))),
}


def apply_rules(
    d: int,
    candidates: Iterable[PolarizationType],
    *,
    include_extra: bool = False,
) -> list[RuleApplication]:
    """Strike candidate types, rule by rule in the fixed order.

    A type struck by one rule is not offered to later rules.
    """
    pending = list(dict.fromkeys(candidates))
    rules = RULES + (EXTRA_RULES if include_extra else ())
    applied = []
    for rule in rules:
        for t in list(pending):
            if rule.matches(d, t):
                applied.append(
                    RuleApplication(rule.rule_id, rule.citation, t, rule.conclusion)
                )
                pending.remove(t)
    return applied


# -- pipeline -----------------------------------------------------------------


def _guaranteed_points(F: int) -> list[tuple[int, int]]:
    return sorted({(0, 0), (0, F), (F, 0), (F, F)})


def eliminate(
    d: int,
    *,
    include_extra_rules: bool = False,
    scan_limit: int = SCAN_LIMIT,
) -> EliminationRecord:
    """Decide whether an abelian ``d``-fold can sit inside ``Q^(2d)``.

    ``scan_limit`` caps the ``F_d`` for which the circle is enumerated in
    full. Beyond it only the four points ``(0,0), (0,F), (F,0), (F,F)`` are
    recorded and ``solutions_exhaustive`` is false; that only happens in
    dimensions settled by counting, where the solutions play no role.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    notes: list[str] = []
    f_d = f_closed(d)

    exhaustive = f_d <= scan_limit
    if exhaustive:
        sols = circle_solutions(f_d)
    else:
        sols = _guaranteed_points(f_d)
        notes.append(
            f"F_d = {f_d} exceeds the scan limit {scan_limit}; "
            "only the guaranteed solutions are listed"
        )
    for a, b in sols:
        if not self_intersection_check(MiddleClass(a, b, d)):
            raise InvariantViolation(f"({a},{b}) does not solve the circle for d={d}")
    top, top_pair = max_degree(f_d)
    if top_pair not in sols:
        raise InvariantViolation(f"{top_pair} missing from circle solutions for d={d}")
    effective = [p for p in sols if p[0] >= 0 and p[1] >= 0]
    low = min_degree(d)
    if d <= 2:
        notes.append(
            f"min_degree {low} not applied: the spanning argument needs d > 2"
        )

    def record(verdict, candidates=(), applied=()):
        return EliminationRecord(
            d=d,
            f_d=f_d,
            all_solutions=tuple(sols),
            effective_solutions=tuple(effective),
            max_degree=top,
            min_degree=low,
            surviving_candidates=tuple(candidates),
            rules_applied=tuple(applied),
            verdict=verdict,
            solutions_exhaustive=exhaustive,
            notes=tuple(notes),
        )

    if d == 1:
        deg = top
        h0 = h0_from_degree(deg, 1)
        notes.append(
            f"elliptic curve of bidegree {top_pair} and degree {deg} on a quadric "
            "surface; the classical case"
        )
        cand = Candidate(top_pair, deg, h0, tuple(enumerate_polarization_types(1, h0)))
        return record(Verdict.ALLOWED_CLASSICAL, [cand])

    if d > 3 and factorial(d + 1) > f_d:
        notes.append(
            f"(d+1)! = {factorial(d + 1)} > F_d = {f_d}, so "
            f"2(d+1)! = {low} > 2F_d = {top}: no admissible degree"
        )
        return record(Verdict.ELIMINATED_BY_COUNTING)

    pairs = []
    for a, b in effective:
        deg = a + b
        if deg < 1:
            continue
        if d > 2 and deg < low:
            notes.append(f"({a},{b}) dropped: degree {deg} < 2(d+1)! = {low}")
            continue
        pairs.append((a, b))

    staged = []
    for a, b in pairs:
        deg = a + b
        try:
            h0 = h0_from_degree(deg, d)
        except ArithmeticConsistencyError:
            notes.append(
                f"({a},{b}) dropped: degree {deg} is not divisible by {d}! "
                "so h0 would not be an integer"
            )
            continue
        staged.append(((a, b), deg, h0, tuple(enumerate_polarization_types(d, h0))))

    if not staged:
        notes.append("no class survives the degree and Riemann-Roch filters")
        return record(Verdict.ELIMINATED_BY_COUNTING)

    all_types = [t for *_, types in staged for t in types]
    applied = apply_rules(d, all_types, include_extra=include_extra_rules)
    struck = {app.subject for app in applied}
    listed = CASE_LISTED_TYPES.get(d)

    candidates = []
    resolved = True
    for pair, deg, h0, types in staged:
        omitted = []
        for t in types:
            if t in struck:
                continue
            if listed is not None and t not in listed:
                omitted.append(t)
                notes.append(f"type {t} is paper-omitted; no shipped rule applies")
            else:
                resolved = False
                notes.append(f"type {t} of {pair} is not excluded by any rule")
        candidates.append(Candidate(pair, deg, h0, types, tuple(omitted)))

    verdict = Verdict.ELIMINATED_BY_RULES if resolved else Verdict.UNRESOLVED
    return record(verdict, candidates, applied)


def _rule_by_id(rule_id: str) -> Rule:
    for rule in RULES + EXTRA_RULES:
        if rule.rule_id == rule_id:
            return rule
    raise KeyError(rule_id)


def explain(record: EliminationRecord) -> list[str]:
    """Ordered prose steps reconstructing how ``record`` was reached."""
    d, f = record.d, record.f_d
    steps = [
        f"d = {d}: the normal bundle has top Chern class F_d h^d with F_d = {f}.",
        f"Self-intersection: a^2 + b^2 = {f}(a + b), a circle centred at "
        f"({f}/2, {f}/2) with radius^2 = {f}^2/2.",
    ]
    shown = ", ".join(f"({a},{b})" for a, b in record.all_solutions)
    qualifier = "all integer solutions" if record.solutions_exhaustive else (
        "guaranteed solutions (circle not fully scanned)"
    )
    steps.append(f"{qualifier}: {shown}.")
    steps.append(f"Degree a + b is at most 2F_d = {record.max_degree}.")

    if record.verdict is Verdict.ALLOWED_CLASSICAL:
        (cand,) = record.surviving_candidates
        steps.append(
            f"d = 1 is the classical case: an elliptic curve of bidegree "
            f"{cand.pair} and degree {cand.degree} on a smooth quadric surface."
        )
        return steps

    if d > 2:
        steps.append(
            f"The variety spans P^{2 * d + 1}, so h0 >= {2 * d + 2} and by "
            f"Riemann-Roch deg = h0 * {d}! >= 2(d+1)! = {record.min_degree}."
        )
    if record.verdict is Verdict.ELIMINATED_BY_COUNTING and not record.surviving_candidates:
        steps.extend(record.notes[-1:])
        steps.append(
            "Counting alone rules out this dimension since (d+1)! > F_d."
        )
        return steps

    steps.extend(note + "." for note in record.notes if "dropped" in note)
    for cand in record.surviving_candidates:
        exact = " exactly" if d > 2 and cand.degree == record.min_degree == record.max_degree else ""
        types = " or ".join(str(t) for t in cand.types)
        steps.append(
            f"Candidate {cand.pair}: degree{exact} {cand.degree}, "
            f"h0 = {cand.degree}/{d}! = {cand.h0}, polarization type {types}."
        )
        if d == 2:
            t = cand.types[0]
            doubled, h0_twice = double_type(t)
            n_quad = quadric_space_dimension(cand.h0 - 1)
            steps.append(
                f"With h0 = {cand.h0} the surface in P^{2 * d + 1} is not linearly "
                f"normal: it is a projection of a linearly normal surface in "
                f"P^{cand.h0 - 1}, and the quadric lifts to one containing it."
            )
            steps.append(
                f"h0(O_P^{cand.h0 - 1}(2)) = {n_quad} and h0(L^2) for type "
                f"{doubled} = {h0_twice}; {n_quad} - {h0_twice} = "
                f"{n_quad - h0_twice} quadrics can contain the lifted surface."
            )
    for app in record.rules_applied:
        rule = _rule_by_id(app.rule_id)
        steps.append(
            f"{app.rule_id} on {app.subject}: \"{app.citation}\" "
            f"[{rule.source}] -> {app.conclusion}."
        )
    for cand in record.surviving_candidates:
        for t in cand.paper_omitted:
            steps.append(
                f"Type {t} is paper-omitted; no shipped rule applies "
                "(enable the extra rules to dispose of it)."
            )
    steps.append(f"Verdict: {record.verdict.value}.")
    return steps
