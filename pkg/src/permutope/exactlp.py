"""
Exact rational linear programming.

A dense two-phase tableau simplex over fractions.Fraction with Bland's
smallest-index rule, so it always terminates and is deterministic. Variables
are free (unrestricted in sign); sign bounds are ordinary constraints. Each
free variable x is split as x⁺ - x⁻ with both parts nonnegative.

Column layout of the internal tableau:
  [x⁺ (N) | x⁻ (N) | one slack per ≤ row | one artificial per row | rhs]
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from permutope import config
from permutope.errors import DegreeMismatchError, InvariantError

ZERO = Fraction(0)


class Relation(str, enum.Enum):
    LE = "<="
    EQ = "=="


class LpStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * v for a, v in zip(self.coeffs, x)), ZERO)
        if self.relation is Relation.EQ:
            return lhs == self.rhs
        return lhs <= self.rhs


@dataclass
class LinearProgram:
    """maximize objective·x subject to constraints, x free."""

    num_vars: int
    objective: tuple[Fraction, ...]
    constraints: list[Constraint] = field(default_factory=list)

    def __post_init__(self):
        self.objective = self._vector(self.objective)

    def _vector(self, coeffs: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        if len(coeffs) != self.num_vars:
            raise DegreeMismatchError(self.num_vars, len(coeffs), what="coefficient vector length")
        return tuple(Fraction(a) for a in coeffs)

    def add(self, coeffs: Sequence[Fraction | int], relation: Relation, rhs: Fraction | int) -> None:
        self.constraints.append(Constraint(self._vector(coeffs), Relation(relation), Fraction(rhs)))

    def add_le(self, coeffs: Sequence[Fraction | int], rhs: Fraction | int) -> None:
        self.add(coeffs, Relation.LE, rhs)

    def add_ge(self, coeffs: Sequence[Fraction | int], rhs: Fraction | int) -> None:
        self.add([-Fraction(a) for a in coeffs], Relation.LE, -Fraction(rhs))

    def add_eq(self, coeffs: Sequence[Fraction | int], rhs: Fraction | int) -> None:
        self.add(coeffs, Relation.EQ, rhs)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, x)), ZERO)

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        return len(x) == self.num_vars and all(c.holds(x) for c in self.constraints)


@dataclass(frozen=True)
class LpResult:
    status: LpStatus
    optimum: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL

    def check(self, lp: LinearProgram) -> bool:
        """Substitute the solution back: every constraint holds, objective matches."""
        if not self.is_optimal:
            return True
        return lp.is_feasible(self.solution) and lp.value(self.solution) == self.optimum


class _Tableau:
    """Canonical-form tableau: rows[i] expresses basis[i] in the nonbasic columns."""

    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        lead = row[col]
        if lead != 1:
            row = [x / lead for x in row]
            self.rows[r] = row
        for k, other in enumerate(self.rows):
            if k == r:
                continue
            f = other[col]
            if f != 0:
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = col

    def reduced_cost(self, cost: Sequence[Fraction], col: int) -> Fraction:
        r = cost[col]
        for i, b in enumerate(self.basis):
            a = self.rows[i][col]
            if a != 0 and cost[b] != 0:
                r -= cost[b] * a
        return r

    def objective(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * self.rows[i][-1] for i, b in enumerate(self.basis)), ZERO)

    def run(self, cost: Sequence[Fraction], allowed: Sequence[int]) -> LpStatus:
        """Maximize cost·z over columns in ``allowed`` with Bland's rule."""
        while True:
            in_basis = set(self.basis)
            entering = next(
                (j for j in allowed if j not in in_basis and self.reduced_cost(cost, j) > 0),
                None,
            )
            if entering is None:
                return LpStatus.OPTIMAL
            leaving = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a <= 0:
                    continue
                ratio = row[-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and self.basis[i] < self.basis[leaving])
                ):
                    best, leaving = ratio, i
            if leaving is None:
                return LpStatus.UNBOUNDED
            self.pivot(leaving, entering)


def maximize(lp: LinearProgram, verify: bool | None = None) -> LpResult:
    """Solve ``lp`` exactly. Outcomes are reported in ``LpResult.status``."""
    verify = config.DEBUG if verify is None else verify
    result = _solve(lp)
    if verify and not result.check(lp):
        raise InvariantError("simplex returned a point that fails substitution")
    return result


def _solve(lp: LinearProgram) -> LpResult:
    n = lp.num_vars
    m = len(lp.constraints)
    le_rows = [i for i, c in enumerate(lp.constraints) if c.relation is Relation.LE]
    slack_col = {row: 2 * n + k for k, row in enumerate(le_rows)}
    art0 = 2 * n + len(le_rows)
    width = art0 + m

    rows: list[list[Fraction]] = []
    for i, c in enumerate(lp.constraints):
        row = [ZERO] * (width + 1)
        for j, a in enumerate(c.coeffs):
            row[j] = a
            row[n + j] = -a
        if i in slack_col:
            row[slack_col[i]] = Fraction(1)
        row[-1] = c.rhs
        if c.rhs < 0:
            row = [-x for x in row]
        row[art0 + i] = Fraction(1)
        rows.append(row)
    tableau = _Tableau(rows, [art0 + i for i in range(m)])

    # Phase 1: drive the artificials to zero.
    phase1 = [ZERO] * art0 + [Fraction(-1)] * m
    tableau.run(phase1, range(width))
    if tableau.objective(phase1) < 0:
        return LpResult(LpStatus.INFEASIBLE)

    # Pivot zero-level artificials out of the basis; drop redundant rows.
    r = 0
    while r < len(tableau.rows):
        if tableau.basis[r] >= art0:
            col = next((j for j in range(art0) if tableau.rows[r][j] != 0), None)
            if col is None:
                del tableau.rows[r]
                del tableau.basis[r]
                continue
            tableau.pivot(r, col)
        r += 1

    # Phase 2 on the structural and slack columns only.
    phase2 = [*lp.objective, *(-c for c in lp.objective)] + [ZERO] * (width - 2 * n)
    status = tableau.run(phase2, range(art0))
    if status is LpStatus.UNBOUNDED:
        return LpResult(LpStatus.UNBOUNDED)

    z = [ZERO] * width
    for i, b in enumerate(tableau.basis):
        z[b] = tableau.rows[i][-1]
    x = tuple(z[j] - z[n + j] for j in range(n))
    return LpResult(LpStatus.OPTIMAL, optimum=lp.value(x), solution=x)
