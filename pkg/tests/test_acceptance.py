"""Exit criteria, one test per criterion; a PASS/FAIL line per criterion is
printed in the terminal summary."""

import contextlib
import json
import math
import random
import subprocess
import sys

import pytest

from abelquad.chow import chern_total_tangent_quadric, f_closed, f_series
from abelquad.cli import main
from abelquad.feasibility import (
    EliminationRecord,
    PolarizationType,
    Verdict,
    circle_solutions,
    double_type,
    eliminate,
    enumerate_polarization_types,
    h0_from_degree,
    max_degree,
    min_degree,
    quadric_space_dimension,
)
from abelquad.sequences import counting_crossover, crude_bound, fine, fine_oracle
from abelquad.series import series_from_coeffs, series_invert

from conftest import ACCEPTANCE_LINES
from oracles import circle_brute_force, circle_by_square_lookup

T = lambda *parts: PolarizationType(parts)


@contextlib.contextmanager
def criterion(label):
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {label}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {label}")


def test_ac1_f2_f3_both_routes():
    with criterion("AC1 F_2 = 7 and F_3 = 24 by closed sum and series coefficient"):
        assert f_closed(2) == f_series(2) == 7
        assert f_closed(3) == f_series(3) == 24


def test_ac2_unique_positive_solution_d2():
    with criterion("AC2 unique positive solution (7,7), degree 14, h0 7, type (1,7)"):
        sols = circle_solutions(7)
        positive = [(a, b) for a, b in sols if a > 0 and b > 0]
        assert positive == [(7, 7)]
        deg = sum(positive[0])
        assert deg == 14
        h0 = h0_from_degree(deg, 2)
        assert h0 == 7
        assert enumerate_polarization_types(2, h0) == [T(1, 7)]


def test_ac3_quadric_count_d2():
    with criterion("AC3 28 quadrics = h0 of doubled (1,7); R3 fires; d=2 eliminated by rules"):
        assert quadric_space_dimension(6) == 28
        doubled, h0 = double_type(T(1, 7))
        assert h0 == 28
        assert quadric_space_dimension(6) - h0 == 0
        rec = eliminate(2)
        assert [a.rule_id for a in rec.rules_applied] == ["R3_LAZARSFELD_17"]
        assert rec.verdict is Verdict.ELIMINATED_BY_RULES


def test_ac4_threefold_case():
    with criterion("AC4 d=3: degree 48, candidate (24,24), R1/R2 strike, (2,2,2) paper-omitted"):
        assert min_degree(3) == max_degree(24)[0] == 48
        rec = eliminate(3)
        assert [c.pair for c in rec.surviving_candidates] == [(24, 24)]
        (cand,) = rec.surviving_candidates
        assert cand.types == (T(1, 1, 8), T(1, 2, 4), T(2, 2, 2))
        assert len(enumerate_polarization_types(3, 8)) == 3
        struck = {(a.rule_id, a.subject) for a in rec.rules_applied}
        assert struck == {("R1_IYER_ONES_N", T(1, 1, 8)), ("R2_IYER_124", T(1, 2, 4))}
        assert cand.paper_omitted == (T(2, 2, 2),)
        assert any("(2,2,2) is paper-omitted" in n for n in rec.notes)


def test_ac5_crossover():
    with criterion("AC5 counting_crossover(200) = 17 and d=16 fails (17! < 2^49)"):
        assert counting_crossover(200) == 17
        assert math.factorial(17) < crude_bound(16) == 2**49


def test_ac6_factorial_beats_fd():
    with criterion("AC6 (d+1)! > F_d exactly for 4 <= d <= 200, never for d <= 3; F_d <= 2^(3d+1)"):
        for d in range(1, 201):
            f = f_closed(d)
            assert (math.factorial(d + 1) > f) == (d >= 4)
            assert f <= 2 ** (3 * d + 1)


def test_ac7_full_table():
    with criterion("AC7 verdicts d=1..100: classical (2,2) at 1, rules at 2,3, counting 4..100"):
        records = [eliminate(d) for d in range(1, 101)]
        assert records[0].verdict is Verdict.ALLOWED_CLASSICAL
        assert records[0].surviving_candidates[0].pair == (2, 2)
        assert records[1].verdict is Verdict.ELIMINATED_BY_RULES
        assert records[2].verdict is Verdict.ELIMINATED_BY_RULES
        assert all(r.verdict is Verdict.ELIMINATED_BY_COUNTING for r in records[3:])
        assert not any(r.verdict is Verdict.UNRESOLVED for r in records)


def test_ac8_property_suites():
    with criterion("AC8 ring laws, inverses, circle oracles F <= 2000, symmetries, Fine, c_1 = n"):
        rng = random.Random(20261016)
        for _ in range(200):
            order = rng.randint(0, 32)
            x, y, z = (
                series_from_coeffs([rng.randint(-9, 9) for _ in range(order + 1)], order)
                for _ in range(3)
            )
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            u = series_from_coeffs([1] + [rng.randint(-9, 9) for _ in range(order)], order)
            assert u * series_invert(u) == series_from_coeffs([1], order)

        for F in range(1, 2001):
            sols = circle_solutions(F)
            assert sols == circle_by_square_lookup(F)
            s = set(sols)
            assert {(b, a) for a, b in sols} == s
            assert {(F - a, F - b) for a, b in sols} == s
        for F in list(range(1, 101)) + [1999, 2000]:
            assert circle_solutions(F) == circle_brute_force(F)

        assert [fine(n) for n in range(13)] == [fine_oracle(n) for n in range(13)]
        for n in range(1, 65):
            assert chern_total_tangent_quadric(n).coeffs[1] == n


def test_ac9_cli_golden(capsys):
    with criterion("AC9 table JSON byte-identical across runs, round-trips; exit codes 0/2/3"):
        cmd = [sys.executable, "-m", "abelquad", "table", "--max-d", "20", "--format", "json"]
        runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
        assert all(r.returncode == 0 for r in runs)
        assert runs[0].stdout == runs[1].stdout
        docs = json.loads(runs[0].stdout)
        assert [EliminationRecord.from_dict(doc) for doc in docs] == [
            eliminate(d) for d in range(1, 21)
        ]
        assert main(["table", "--max-d", "2"]) == 2
        assert main(["chern", "--dim", "0"]) == 2
        capsys.readouterr()

        from abelquad import cli
        from abelquad.feasibility import InvariantViolation

        original = cli.eliminate

        def broken(d, **kwargs):
            raise InvariantViolation("forced")

        cli.eliminate = broken
        try:
            assert main(["table", "--max-d", "3"]) == 3
        finally:
            cli.eliminate = original
        capsys.readouterr()
