"""Tests for the exact rational simplex solver."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from permutope.errors import DegreeMismatchError
from permutope.exactlp import LinearProgram, LpStatus, Relation, maximize

F = Fraction


def _solve_square(rows, rhs):
    """Exact solution of a square system, or None if singular."""
    n = len(rows)
    aug = [[F(x) for x in row] + [F(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def brute_force_optimum(lp):
    """Best objective over all vertices (intersections of num_vars tight constraints)."""
    best = None
    for chosen in combinations(lp.constraints, lp.num_vars):
        x = _solve_square([c.coeffs for c in chosen], [c.rhs for c in chosen])
        if x is None or not lp.is_feasible(x):
            continue
        value = lp.value(x)
        if best is None or value > best:
            best = value
    return best


def random_bounded_lp(rng):
    """A random LP inside the box [-5, 5]^k, so every feasible region is bounded."""
    k = rng.choice([2, 3])
    lp = LinearProgram(num_vars=k, objective=[rng.randint(-4, 4) for _ in range(k)])
    for i in range(k):
        unit = [0] * k
        unit[i] = 1
        lp.add_le(unit, 5)
        lp.add_ge(unit, -5)
    for _ in range(rng.randint(1, 3)):
        lp.add_le([rng.randint(-3, 3) for _ in range(k)], rng.randint(-6, 6))
    return lp


class TestExamples:

    def test_single_bound(self):
        lp = LinearProgram(num_vars=1, objective=[1])
        lp.add_le([1], 3)
        result = maximize(lp)
        assert result.status is LpStatus.OPTIMAL
        assert result.optimum == 3
        assert result.solution == (F(3),)

    def test_contradictory_bounds(self):
        lp = LinearProgram(num_vars=1, objective=[1])
        lp.add_le([1], 1)
        lp.add_le([-1], -2)
        assert maximize(lp).status is LpStatus.INFEASIBLE

    def test_two_variable_vertex(self):
        # Vertices (0,0), (2,0), (0,2), (8/5, 6/5): the last one wins with 14/5.
        lp = LinearProgram(num_vars=2, objective=[1, 1])
        lp.add_le([1, 2], 4)
        lp.add_le([3, 1], 6)
        lp.add_ge([1, 0], 0)
        lp.add_ge([0, 1], 0)
        result = maximize(lp)
        assert result.status is LpStatus.OPTIMAL
        assert result.optimum == F(14, 5)
        assert result.solution == (F(8, 5), F(6, 5))

    def test_unbounded(self):
        lp = LinearProgram(num_vars=2, objective=[1, 0])
        lp.add_le([0, 1], 1)
        assert maximize(lp).status is LpStatus.UNBOUNDED

    def test_free_variables_go_negative(self):
        lp = LinearProgram(num_vars=1, objective=[-1])
        lp.add_ge([1], -7)
        result = maximize(lp)
        assert result.optimum == 7
        assert result.solution == (F(-7),)

    def test_equality_constraints(self):
        lp = LinearProgram(num_vars=3, objective=[1, 2, 3])
        lp.add_eq([1, 1, 1], 1)
        for i in range(3):
            unit = [0, 0, 0]
            unit[i] = 1
            lp.add_ge(unit, 0)
        result = maximize(lp)
        assert result.optimum == 3
        assert result.solution == (F(0), F(0), F(1))

    def test_redundant_equalities(self):
        lp = LinearProgram(num_vars=2, objective=[1, 1])
        lp.add_eq([1, -1], 0)
        lp.add_eq([2, -2], 0)
        lp.add_le([1, 0], F(1, 3))
        result = maximize(lp)
        assert result.optimum == F(2, 3)

    def test_zero_objective(self):
        lp = LinearProgram(num_vars=2, objective=[0, 0])
        lp.add_le([1, 1], 2)
        result = maximize(lp)
        assert result.status is LpStatus.OPTIMAL
        assert result.optimum == 0
        assert result.check(lp)

    def test_vector_length_checked(self):
        lp = LinearProgram(num_vars=2, objective=[1, 1])
        with pytest.raises(DegreeMismatchError):
            lp.add_le([1], 1)

    def test_relations_from_strings(self):
        lp = LinearProgram(num_vars=1, objective=[1])
        lp.add([1], "<=", 2)
        assert lp.constraints[0].relation is Relation.LE


class TestRandomized:

    @pytest.mark.parametrize("seed", range(200))
    def test_matches_vertex_enumeration(self, seed):
        lp = random_bounded_lp(random.Random(seed))
        result = maximize(lp, verify=True)
        expected = brute_force_optimum(lp)
        if expected is None:
            assert result.status is LpStatus.INFEASIBLE
        else:
            assert result.status is LpStatus.OPTIMAL
            assert result.optimum == expected
            assert lp.is_feasible(result.solution)
            assert lp.value(result.solution) == result.optimum

    def test_deterministic(self):
        lp = random_bounded_lp(random.Random(11))
        assert maximize(lp) == maximize(lp)
