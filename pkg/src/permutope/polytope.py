"""
Exact linear algebra on R^{n×n} for permutation polytopes.

Conventions:
  - A permutation g is the 0/1 matrix M with M[i][j] = 1 iff g(j) = i, so the
    (i, j) entry of sum_g M(g) counts the g with g(j) = i, and
    M(p∘q) = M(p) @ M(q).
  - Matrices flatten row-major into length-n² vectors.
  - All arithmetic is over fractions.Fraction; nothing here touches floats.

Because every permutation matrix is a vertex of the Birkhoff polytope, each
element of a group is a vertex of that group's own hull. The vertex set of
P(G) is therefore exactly G, and two permutation polytopes are equal iff
their groups have the same elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from permutope.errors import DegreeMismatchError, ParseError
from permutope.perm import Permutation, PermGroup, orbit_partition

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class RationalMatrix:
    """An n×n matrix of exact rationals, row i / column j at ``entries[i][j]``."""

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise DegreeMismatchError(self.n, len(rows), what="matrix shape")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zeros(cls, n: int) -> RationalMatrix:
        return cls(n, tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int | str]]) -> RationalMatrix:
        return cls(len(rows), tuple(tuple(Fraction(x) for x in row) for row in rows))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def flatten(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self.entries for x in row)

    def _check(self, other: RationalMatrix) -> None:
        if other.n != self.n:
            raise DegreeMismatchError(self.n, other.n)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._check(other)
        return RationalMatrix(self.n, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._check(other)
        return RationalMatrix(self.n, tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        ))

    def scale(self, factor: Fraction | int) -> RationalMatrix:
        f = Fraction(factor)
        return RationalMatrix(self.n, tuple(tuple(f * x for x in row) for row in self.entries))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        self._check(other)
        cols = list(zip(*other.entries))
        return RationalMatrix(self.n, tuple(
            tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in cols)
            for row in self.entries
        ))

    def inner(self, other: RationalMatrix) -> Fraction:
        """Frobenius inner product sum_ij self[i][j] * other[i][j]."""
        self._check(other)
        return sum((a * b for a, b in zip(self.flatten(), other.flatten())), ZERO)

    def pairing(self, p: Permutation) -> Fraction:
        """<self, M(p)> = sum_j self[p(j)][j], without building M(p)."""
        if p.n != self.n:
            raise DegreeMismatchError(self.n, p.n)
        return sum((self.entries[i][j] for j, i in enumerate(p.image)), ZERO)

    def row_sums(self) -> list[Fraction]:
        return [sum(row, ZERO) for row in self.entries]

    def column_sums(self) -> list[Fraction]:
        return [sum(col, ZERO) for col in zip(*self.entries)]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.n, tuple(zip(*self.entries)))

    def is_doubly_stochastic(self) -> bool:
        return (
            all(x >= 0 for x in self.flatten())
            and all(s == 1 for s in self.row_sums())
            and all(s == 1 for s in self.column_sums())
        )

    def to_json(self) -> list[list[str]]:
        """n×n array of "p/q" strings in lowest terms ("0", "1", "1/3")."""
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> RationalMatrix:
        try:
            rows = [[Fraction(str(x)) for x in row] for row in data]
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad rational matrix entry: {e}") from e
        return cls.from_rows(rows)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def permutation_matrix(p: Permutation) -> RationalMatrix:
    """M with M[i][j] = 1 iff p(j) = i."""
    n = p.n
    rows = [[ZERO] * n for _ in range(n)]
    for j, i in enumerate(p.image):
        rows[i][j] = ONE
    return RationalMatrix(n, tuple(tuple(r) for r in rows))


def vertex_incidence_counts(group: PermGroup) -> list[list[int]]:
    """(i, j) entry counts g in G with g(j) = i. Each entry is 0 or |G_i|."""
    n = group.n
    counts = [[0] * n for _ in range(n)]
    for g in group.elements:
        for j, i in enumerate(g.image):
            counts[i][j] += 1
    return counts


def barycenter_oracle(group: PermGroup) -> RationalMatrix:
    """(1/|G|) sum_g M(g), summed element by element."""
    order = group.order
    counts = vertex_incidence_counts(group)
    return RationalMatrix(group.n, tuple(tuple(Fraction(c, order) for c in row) for row in counts))


def barycenter_formula(group: PermGroup) -> RationalMatrix:
    """a_ij = 1/|G.i| if i and j share a G-orbit, else 0. Uses only the orbit partition."""
    parts = orbit_partition(group)
    n = group.n
    rows = [[ZERO] * n for _ in range(n)]
    for part in parts.parts:
        weight = Fraction(1, len(part))
        for i in part:
            for j in part:
                rows[i - 1][j - 1] = weight
    return RationalMatrix(n, tuple(tuple(r) for r in rows))


def rank(vectors: Iterable[Sequence[Fraction]]) -> int:
    """Exact rank by Gaussian elimination over the rationals.

    Each pivot row is normalized to a leading 1 before elimination.
    """
    rows = [[Fraction(x) for x in v] for v in vectors]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    width = len(rows[0])
    r = 0
    for col in range(width):
        pivot = next((k for k in range(r, len(rows)) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def affine_dimension(group: PermGroup) -> int:
    """dim aff{M(g) : g in G} = rank{M(g) - M(id)}."""
    base = permutation_matrix(group.identity)
    diffs = (
        (permutation_matrix(g) - base).flatten()
        for g in group.elements
        if not g.is_identity()
    )
    return rank(diffs)


def polytope_equal(h1: PermGroup, h2: PermGroup) -> bool:
    """P(H1) == P(H2), decided on vertex sets (see module docstring)."""
    if h1.n != h2.n:
        raise DegreeMismatchError(h1.n, h2.n)
    return h1.element_set == h2.element_set
