"""
Permutations, permutation groups, and set partitions.

Points are 1-indexed at every public boundary (cycle notation, orbits,
partitions) and 0-indexed inside ``Permutation.image``. Composition is fixed
project-wide as right-to-left: ``(p * q)(i) == p(q(i))``, i.e. q acts first.

Groups are small enough to enumerate in full, so every group carries its
sorted element tuple and all subgroup filters are exhaustive.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from permutope import config
from permutope.errors import (
    CapExceededError,
    DegreeMismatchError,
    InvariantError,
    ParseError,
    PointOutOfRangeError,
)


# ── Permutations ──────────────────────────────────────────────


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}, stored as a 0-indexed image tuple.

    Ordering is lexicographic on ``image``; groups sort their elements by it.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        if not self.image:
            raise ParseError("permutation degree must be positive")
        if sorted(self.image) != list(range(len(self.image))):
            raise ParseError(f"image {list(self.image)} is not a bijection")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from 1-indexed images, e.g. ``[2, 3, 1]`` for (1 2 3)."""
        return cls(tuple(i - 1 for i in images))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.n:
            raise PointOutOfRangeError(point, self.n)
        return self.image[point - 1] + 1

    def images(self) -> list[int]:
        """1-indexed image list: ``images()[j - 1] == self(j)``."""
        return [i + 1 for i in self.image]

    def compose(self, other: Permutation) -> Permutation:
        """Return self∘other (apply ``other`` first)."""
        if other.n != self.n:
            raise DegreeMismatchError(self.n, other.n)
        mine = self.image
        return Permutation(tuple(mine[j] for j in other.image))

    __mul__ = compose

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, i in enumerate(self.image):
            inv[i] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial disjoint cycles, 1-indexed, each starting at its smallest point."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start] or self.image[start] == start:
                continue
            cycle = []
            j = start
            while not seen[j]:
                seen[j] = True
                cycle.append(j + 1)
                j = self.image[j]
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, n={self.n})"


_CYCLE = re.compile(r"\(([^()]*)\)")
_POINT_SEP = re.compile(r"\s*,\s*|\s+")


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4, 5)"`` on {1..n}.

    Fixed points may be omitted; an empty string or ``"()"`` is the identity.
    """
    if n < 1:
        raise ParseError(f"degree must be positive, got {n}")
    image = list(range(n))
    used: set[int] = set()
    pos = 0
    for match in _CYCLE.finditer(text):
        stray = text[pos : match.start()].strip()
        if stray:
            raise ParseError(f"unexpected {stray!r} in cycle notation {text!r}")
        pos = match.end()
        body = match.group(1).strip()
        if not body:
            continue
        points = []
        for token in _POINT_SEP.split(body):
            if not (token.isascii() and token.isdigit()):
                raise ParseError(f"bad point {token!r} in cycle notation {text!r}")
            point = int(token)
            if not 1 <= point <= n:
                raise PointOutOfRangeError(point, n)
            if point in used:
                raise ParseError(f"point {point} repeated in {text!r}")
            used.add(point)
            points.append(point - 1)
        for a, b in zip(points, points[1:] + points[:1]):
            image[a] = b
    stray = text[pos:].strip()
    if stray:
        raise ParseError(f"unexpected {stray!r} in cycle notation {text!r}")
    return Permutation(tuple(image))


def render_permutation(p: Permutation) -> str:
    return str(p)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p∘q)(i) = p(q(i))."""
    return p.compose(q)


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


# ── Set partitions ────────────────────────────────────────────


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..n} into disjoint nonempty parts.

    Parts are stored sorted, and ordered by smallest element, so two equal
    partitions compare equal structurally.
    """

    n: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(sorted(tuple(sorted(p)) for p in self.parts))
        seen: set[int] = set()
        for part in parts:
            if not part:
                raise ParseError("partition has an empty part")
            for point in part:
                if not 1 <= point <= self.n:
                    raise PointOutOfRangeError(point, self.n)
                if point in seen:
                    raise ParseError(f"point {point} appears in two parts")
                seen.add(point)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise ParseError(f"partition does not cover points {missing}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def singletons(cls, n: int) -> SetPartition:
        return cls(n, tuple((i,) for i in range(1, n + 1)))

    @classmethod
    def whole(cls, n: int) -> SetPartition:
        return cls(n, (tuple(range(1, n + 1)),))

    @cached_property
    def block_index(self) -> tuple[int, ...]:
        """0-indexed point -> index of its part."""
        index = [0] * self.n
        for k, part in enumerate(self.parts):
            for point in part:
                index[point - 1] = k
        return tuple(index)

    def same_part(self, i: int, j: int) -> bool:
        return self.block_index[i - 1] == self.block_index[j - 1]

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "|".join(",".join(str(p) for p in part) for part in self.parts)

    def as_lists(self) -> list[list[int]]:
        return [list(part) for part in self.parts]


def parse_partition(text: str, n: int) -> SetPartition:
    """Parse ``"1,2|3,4"`` syntax (1-indexed points) into a SetPartition."""
    parts = []
    for chunk in text.split("|"):
        points = []
        for token in chunk.split(","):
            token = token.strip()
            if not (token.isascii() and token.isdigit()):
                raise ParseError(f"bad point {token!r} in partition {text!r}")
            points.append(int(token))
        parts.append(tuple(points))
    return SetPartition(n, tuple(parts))


def set_partitions(n: int) -> Iterator[SetPartition]:
    """Yield every set partition of {1..n} (Bell(n) of them).

    Walks restricted growth strings, so the order is deterministic.
    """
    if n < 1:
        return
    labels = [0] * n

    def grow(i: int, blocks: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for label in range(blocks + 1):
            labels[i] = label
            yield from grow(i + 1, max(blocks, label + 1))

    for word in grow(1, 1):
        parts: dict[int, list[int]] = {}
        for point, label in enumerate(word, start=1):
            parts.setdefault(label, []).append(point)
        yield SetPartition(n, tuple(tuple(p) for p in parts.values()))


# ── Groups ────────────────────────────────────────────────────


@dataclass(frozen=True, eq=False)
class PermGroup:
    """A finite subgroup of S_n with its elements fully enumerated.

    ``elements`` is sorted lexicographically and duplicate-free. Equality and
    hashing go through the element set, so the same group built from
    different generators compares equal.
    """

    n: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[Permutation]) -> PermGroup:
        """Wrap an element set already known to be a group (e.g. a filter result)."""
        elems = tuple(sorted(set(elements)))
        return cls(n=n, generators=_reduce_generators(n, elems), elements=elems)

    @cached_property
    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.n)

    def key(self) -> tuple:
        """Canonical sort key: order first, then element list."""
        return (self.order, self.elements)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.n == other.n and self.element_set <= other.element_set

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, p: object) -> bool:
        return p in self.element_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.n == other.n and self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash((self.n, self.element_set))

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.generators) + ">"

    def __repr__(self) -> str:
        return f"PermGroup({self}, n={self.n}, order={self.order})"


def _close(n: int, gens: Sequence[Permutation], cap: int) -> set[Permutation]:
    identity = Permutation.identity(n)
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g.compose(x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceededError("group order", cap)
                queue.append(y)
    return seen


def _reduce_generators(n: int, elements: Sequence[Permutation]) -> tuple[Permutation, ...]:
    # Greedy: keep an element only if it is not already generated.
    gens: list[Permutation] = []
    span = {Permutation.identity(n)}
    for g in elements:
        if g not in span:
            gens.append(g)
            span = _close(n, gens, cap=max(len(elements), 1))
    return tuple(gens)


def closure(gens: Iterable[Permutation], n: int, cap: int | None = None) -> PermGroup:
    """The group generated by ``gens``, by breadth-first multiplication."""
    cap = config.CLOSURE_CAP if cap is None else cap
    gens = tuple(gens)
    for g in gens:
        if g.n != n:
            raise DegreeMismatchError(g.n, n)
    unique = tuple(dict.fromkeys(g for g in gens if not g.is_identity()))
    elements = _close(n, unique, cap)
    return PermGroup(n=n, generators=gens, elements=tuple(sorted(elements)))


def trivial_group(n: int) -> PermGroup:
    return closure((), n)


def is_subgroup(h: PermGroup, g: PermGroup) -> bool:
    return h.is_subgroup_of(g)


def check_closed(group: PermGroup) -> bool:
    """Exhaustive group-axiom check: identity, products and inverses stay inside."""
    elems = group.element_set
    if group.identity not in elems:
        return False
    for a in group.elements:
        if a.inverse() not in elems:
            return False
        for b in group.elements:
            if a.compose(b) not in elems:
                return False
    return True


def _check_point(group: PermGroup, i: int) -> None:
    if not 1 <= i <= group.n:
        raise PointOutOfRangeError(i, group.n)


def orbit(group: PermGroup, i: int) -> tuple[int, ...]:
    """G.i as a sorted tuple of points, by breadth-first search under the generators."""
    _check_point(group, i)
    start = i - 1
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in group.generators:
            y = g.image[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return tuple(sorted(p + 1 for p in seen))


def point_stabilizer(group: PermGroup, i: int) -> PermGroup:
    """G_i = {g in G : g(i) = i}."""
    _check_point(group, i)
    j = i - 1
    return PermGroup.from_elements(group.n, (g for g in group.elements if g.image[j] == j))


def orbit_partition(group: PermGroup) -> SetPartition:
    parts = []
    placed: set[int] = set()
    for i in range(1, group.n + 1):
        if i in placed:
            continue
        orb = orbit(group, i)
        placed.update(orb)
        parts.append(orb)
    return SetPartition(group.n, tuple(parts))


def partition_stabilizer(group: PermGroup, parts: SetPartition) -> PermGroup:
    """stab(G; parts): elements mapping every part onto itself (setwise)."""
    if parts.n != group.n:
        raise DegreeMismatchError(group.n, parts.n)
    block = parts.block_index
    kept = [
        g for g in group.elements
        if all(block[g.image[j]] == block[j] for j in range(group.n))
    ]
    result = PermGroup.from_elements(group.n, kept)
    if config.DEBUG and not check_closed(result):
        raise InvariantError(f"stabilizer of {parts} in {group} is not closed")
    return result


def enumerate_subgroups(group: PermGroup, cap: int | None = None) -> list[PermGroup]:
    """Every subgroup of G exactly once, in canonical order.

    Iterated cyclic extension: starting from the trivial group, adjoin each
    element of G to each known subgroup and close, until nothing new appears.
    ⟨H, g⟩ only depends on the coset Hg, so one representative per coset is
    tried.
    """
    cap = config.SUBGROUP_CAP if cap is None else cap
    if group.order > cap:
        raise CapExceededError(f"subgroup enumeration of a group of order {group.order}", cap)
    trivial = trivial_group(group.n)
    found = {trivial.element_set: trivial}
    frontier = [trivial]
    while frontier:
        fresh = []
        for h in frontier:
            covered = set(h.elements)
            for g in group.elements:
                if g in covered:
                    continue
                covered.update(x.compose(g) for x in h.elements)
                k = closure(h.generators + (g,), group.n, cap=group.order)
                if k.element_set not in found:
                    found[k.element_set] = k
                    fresh.append(k)
        frontier = fresh
    return sorted(found.values(), key=PermGroup.key)
