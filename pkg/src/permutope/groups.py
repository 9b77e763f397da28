"""
Group specifications: named families (S, A, C, D) and explicit generator lists.

Text syntax (1-indexed points, cycle notation):
  S4, A5, C6, D8          named families on n points
  4:(1 2 3 4);(1 3)       explicit: degree, colon, ';'-separated generators
  (1 2);(3 4)             bare generator list, degree supplied by context

Canonical generators of the named families:
  S_n  (1 2), (1 2 ... n)
  A_n  (1 2 3), and (1 2 ... n) for odd n or (2 3 ... n) for even n
  C_n  (1 2 ... n)
  D_n  (1 2 ... n) and the reflection k -> n + 2 - k fixing vertex 1
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from permutope.errors import ParseError
from permutope.perm import Permutation, PermGroup, closure, parse_permutation

FAMILIES = ("S", "A", "C", "D")

_NAMED = re.compile(r"^\s*([SACD])\s*_?\s*(\d+)\s*$", re.IGNORECASE)
_EXPLICIT = re.compile(r"^\s*(\d+)\s*:(.*)$", re.DOTALL)


def _long_cycle(points: range) -> Permutation | None:
    pts = list(points)
    if len(pts) < 2:
        return None
    n = max(pts)
    image = list(range(n))
    for a, b in zip(pts, pts[1:] + pts[:1]):
        image[a - 1] = b - 1
    return Permutation(tuple(image))


def _pad(p: Permutation | None, n: int) -> Permutation | None:
    if p is None:
        return None
    return Permutation(p.image + tuple(range(p.n, n)))


def family_generators(family: str, n: int) -> list[Permutation]:
    """Canonical generators of a named family on n points."""
    family = family.upper()
    if n < 1:
        raise ParseError(f"degree must be positive, got {n}")
    if family == "S":
        gens = [_pad(_long_cycle(range(1, 3)), n) if n >= 2 else None,
                _pad(_long_cycle(range(1, n + 1)), n)]
    elif family == "A":
        if n < 3:
            gens = []
        else:
            tail = range(1, n + 1) if n % 2 == 1 else range(2, n + 1)
            gens = [_pad(_long_cycle(range(1, 4)), n), _pad(_long_cycle(tail), n)]
    elif family == "C":
        gens = [_pad(_long_cycle(range(1, n + 1)), n)]
    elif family == "D":
        if n < 3:
            raise ParseError(f"dihedral groups need n >= 3, got {n}")
        reflection = Permutation(tuple((n + 1 - k) % n for k in range(1, n + 1)))
        gens = [_pad(_long_cycle(range(1, n + 1)), n), reflection]
    else:
        raise ParseError(f"unknown group family {family!r}; expected one of {FAMILIES}")
    return list(dict.fromkeys(g for g in gens if g is not None))


def symmetric_group(n: int) -> PermGroup:
    return closure(family_generators("S", n), n)


def alternating_group(n: int) -> PermGroup:
    return closure(family_generators("A", n), n)


def cyclic_group(n: int) -> PermGroup:
    return closure(family_generators("C", n), n)


def dihedral_group(n: int) -> PermGroup:
    return closure(family_generators("D", n), n)


@dataclass(frozen=True)
class GroupSpec:
    """Either a named family (``family`` set) or an explicit generator list."""

    n: int
    family: str | None = None
    generators: tuple[str, ...] = ()

    def generator_perms(self) -> list[Permutation]:
        if self.family is not None:
            return family_generators(self.family, self.n)
        return [parse_permutation(g, self.n) for g in self.generators]

    def build(self, cap: int | None = None) -> PermGroup:
        return closure(self.generator_perms(), self.n, cap=cap)

    def __str__(self) -> str:
        if self.family is not None:
            return f"{self.family}{self.n}"
        return f"{self.n}:" + ";".join(self.generators)


def _split_generators(text: str) -> tuple[str, ...]:
    return tuple(chunk.strip() for chunk in text.split(";") if chunk.strip())


def parse_group_spec(text: str, n: int | None = None) -> GroupSpec:
    """Parse a group spec. ``n`` supplies the degree of a bare generator list."""
    named = _NAMED.match(text)
    if named:
        family, degree = named.group(1).upper(), int(named.group(2))
        family_generators(family, degree)
        return GroupSpec(n=degree, family=family)
    explicit = _EXPLICIT.match(text)
    if explicit:
        spec = GroupSpec(n=int(explicit.group(1)), generators=_split_generators(explicit.group(2)))
    elif n is not None:
        spec = GroupSpec(n=n, generators=_split_generators(text))
    else:
        raise ParseError(
            f"cannot parse group {text!r}: expected S<n>, A<n>, C<n>, D<n> "
            "or '<n>:(cycles);(cycles)'"
        )
    spec.generator_perms()
    return spec


def build_group(text: str, n: int | None = None, cap: int | None = None) -> PermGroup:
    return parse_group_spec(text, n).build(cap=cap)


# Groups whose whole subgroup lattice the acceptance sweep checks.
ACCEPTANCE_CORPUS = (
    ("S3", "S4", "A4")
    + tuple(f"C{n}" for n in range(2, 9))
    + tuple(f"D{n}" for n in range(3, 9))
)
