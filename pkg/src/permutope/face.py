"""
Face-subgroups of permutation polytopes.

H ≤ G is a face-subgroup when P(H) is a face of P(G). Two independent
deciders live here:

  combinatorial  H equals the stabilizer in G of its own orbit partition.
  geometric      an exact LP finds a linear functional c and level b with
                 <c, M(h)> = b on H and <c, M(g)> < b on G \\ H.

The combinatorial side rests on two facts. Stabilizers of partitions are
faces (``stabilizer_certificate`` builds the supporting functional). And H
and Ĥ = stab(G; orbits of H) have the same orbit partition, hence the same
barycenter, which is a relative interior point of both polytopes. Two faces
sharing a relative interior point coincide, so a face H must equal Ĥ.

Faces include the improper face P(G) itself and single vertices.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from permutope import config
from permutope.errors import (
    CapExceededError,
    DegreeMismatchError,
    InvariantError,
    NotASubgroupError,
    ParseError,
)
from permutope.exactlp import LinearProgram, maximize
from permutope.perm import (
    PermGroup,
    SetPartition,
    enumerate_subgroups,
    orbit_partition,
    partition_stabilizer,
    set_partitions,
)
from permutope.polytope import RationalMatrix, barycenter_formula, polytope_equal


# ── Certificates ──────────────────────────────────────────────


@dataclass(frozen=True)
class FaceCertificate:
    """Supporting functional: <c, M> = b on the face's vertices, < b elsewhere."""

    c: RationalMatrix
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", Fraction(self.b))

    def value(self, p) -> Fraction:
        """<c, M(p)>."""
        return self.c.pairing(p)

    def cleared(self) -> FaceCertificate:
        """Scale by a positive factor so every entry is a coprime integer."""
        values = list(self.c.flatten()) + [self.b]
        denom = lcm(*(v.denominator for v in values))
        ints = [int(v * denom) for v in values]
        common = gcd(*ints) or 1
        return FaceCertificate(self.c.scale(Fraction(denom, common)), self.b * Fraction(denom, common))

    def to_json(self) -> dict:
        return {"c": self.c.to_json(), "b": str(self.b)}

    @classmethod
    def from_json(cls, data: dict) -> FaceCertificate:
        try:
            b = Fraction(str(data["b"]))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad certificate level {data['b']!r}: {e}") from e
        return cls(RationalMatrix.from_json(data["c"]), b)


def _require_same_degree(h: PermGroup, g: PermGroup) -> None:
    if h.n != g.n:
        raise DegreeMismatchError(h.n, g.n)


def _require_subgroup(h: PermGroup, g: PermGroup) -> None:
    _require_same_degree(h, g)
    if not h.is_subgroup_of(g):
        raise NotASubgroupError(f"{h} (order {h.order}) is not a subgroup of {g} (order {g.order})")


def stabilizer_certificate(group: PermGroup, parts: SetPartition) -> FaceCertificate:
    """c[i][j] = 1 when i and j share a part, b = n.

    <c, M(σ)> counts the j with σ(j) in the part of j, so it reaches n exactly
    when σ preserves every part.
    """
    if parts.n != group.n:
        raise DegreeMismatchError(group.n, parts.n)
    n = group.n
    c = RationalMatrix(n, tuple(
        tuple(Fraction(1) if parts.same_part(i, j) else Fraction(0) for j in range(1, n + 1))
        for i in range(1, n + 1)
    ))
    return FaceCertificate(c, Fraction(n))


def verify_certificate(cert: FaceCertificate, h: PermGroup, g: PermGroup) -> bool:
    _require_same_degree(h, g)
    if cert.c.n != g.n:
        raise DegreeMismatchError(g.n, cert.c.n, what="certificate degree")
    if any(cert.value(x) != cert.b for x in h.elements):
        return False
    return all(cert.value(x) < cert.b for x in g.elements if x not in h)


# ── Deciders ──────────────────────────────────────────────────


def is_face_combinatorial(h: PermGroup, g: PermGroup) -> bool:
    """H == stab(G; orbit partition of H)."""
    _require_subgroup(h, g)
    return polytope_equal(h, partition_stabilizer(g, orbit_partition(h)))


def face_partition(h: PermGroup, g: PermGroup) -> SetPartition | None:
    """A partition with H = stab(G; parts) when H is a face-subgroup, else None."""
    if is_face_combinatorial(h, g):
        return orbit_partition(h)
    return None


class GeometricVerdict(NamedTuple):
    is_face: bool
    certificate: FaceCertificate | None
    slack: Fraction


def separation_lp(h: PermGroup, g: PermGroup) -> LinearProgram:
    """Variables: c (n² entries, row-major), b, ε. Maximize ε.

    <c, M(x)> - b = 0      for x in H
    <c, M(x)> - b + ε ≤ 0  for x in G \\ H
    ε ≤ 1
    """
    n = g.n
    b_var, eps_var = n * n, n * n + 1
    lp = LinearProgram(num_vars=n * n + 2, objective=[0] * (n * n + 1) + [1])
    for x in g.elements:
        coeffs = [0] * (n * n + 2)
        for j, i in enumerate(x.image):
            coeffs[i * n + j] = 1
        coeffs[b_var] = -1
        if x in h:
            lp.add_eq(coeffs, 0)
        else:
            coeffs[eps_var] = 1
            lp.add_le(coeffs, 0)
    eps_only = [0] * (n * n + 2)
    eps_only[eps_var] = 1
    lp.add_le(eps_only, 1)
    return lp


def is_face_geometric(h: PermGroup, g: PermGroup, lp_cap: int | None = None) -> GeometricVerdict:
    """Search for a supporting functional whose argmax over G is exactly H."""
    _require_subgroup(h, g)
    n = g.n
    if h == g:
        return GeometricVerdict(True, FaceCertificate(RationalMatrix.zeros(n), Fraction(0)), Fraction(0))
    cap = config.LP_VERTEX_CAP if lp_cap is None else lp_cap
    if g.order > cap:
        raise CapExceededError(f"separation LP over {g.order} vertices", cap)
    lp = separation_lp(h, g)
    result = maximize(lp)
    if not result.is_optimal:
        # c = 0, b = 0, ε = 0 is feasible and ε ≤ 1 bounds the objective.
        raise InvariantError(f"separation LP for {h} in {g} ended {result.status.value}")
    if result.optimum <= 0:
        return GeometricVerdict(False, None, result.optimum)
    x = result.solution
    c = RationalMatrix(n, tuple(tuple(x[i * n + j] for j in range(n)) for i in range(n)))
    return GeometricVerdict(True, FaceCertificate(c, x[n * n]).cleared(), result.optimum)


# ── Face-subgroup enumeration ─────────────────────────────────


def faces_by_partitions(g: PermGroup) -> list[PermGroup]:
    """Deduplicated {stab(G; parts) : parts a partition of [n]}."""
    found = {partition_stabilizer(g, parts) for parts in set_partitions(g.n)}
    return sorted(found, key=PermGroup.key)


def face_subgroups(g: PermGroup, cap: int | None = None) -> list[PermGroup]:
    """All face-subgroups of G, in canonical order."""
    faces = [h for h in enumerate_subgroups(g, cap) if is_face_combinatorial(h, g)]
    if config.DEBUG and set(faces) != set(faces_by_partitions(g)):
        raise InvariantError(f"face-subgroups of {g} differ from its partition stabilizers")
    return faces


@dataclass(frozen=True)
class BarycenterCollision:
    """A non-face H and its stabilizer Ĥ ⊋ H sharing one barycenter."""

    subgroup: PermGroup
    stabilizer: PermGroup
    barycenter: RationalMatrix


def barycenter_collision(h: PermGroup, g: PermGroup) -> BarycenterCollision | None:
    """For a non-face H, exhibit Ĥ with the same barycenter; None when H is a face."""
    _require_subgroup(h, g)
    hhat = partition_stabilizer(g, orbit_partition(h))
    if hhat == h:
        return None
    shared = barycenter_formula(h)
    if barycenter_formula(hhat) != shared:
        raise InvariantError(f"barycenters of {h} and {hhat} differ")
    return BarycenterCollision(h, hhat, shared)


# ── Theorem harness ───────────────────────────────────────────


@dataclass(frozen=True)
class SubgroupRecord:
    order: int
    generators: tuple[str, ...]
    orbit_partition: SetPartition
    stabilizer_order: int
    combinatorial: bool
    geometric: bool
    certificate: FaceCertificate | None = None


@dataclass(frozen=True)
class TheoremReport:
    group: str
    degree: int
    order: int
    records: tuple[SubgroupRecord, ...] = field(default_factory=tuple)

    @property
    def subgroup_count(self) -> int:
        return len(self.records)

    @property
    def face_subgroup_count(self) -> int:
        return sum(1 for r in self.records if r.combinatorial)

    @property
    def agreement(self) -> bool:
        return all(r.combinatorial == r.geometric for r in self.records)

    def disagreements(self) -> list[SubgroupRecord]:
        return [r for r in self.records if r.combinatorial != r.geometric]


def examine_subgroup(h: PermGroup, g: PermGroup, lp_cap: int | None = None) -> SubgroupRecord:
    """Run both deciders on H ≤ G and check the proof's intermediate claims."""
    parts = orbit_partition(h)
    hhat = partition_stabilizer(g, parts)
    if not h.is_subgroup_of(hhat):
        raise InvariantError(f"{h} is not inside the stabilizer of its own orbits")
    if orbit_partition(hhat) != parts:
        raise InvariantError(f"{h} and its stabilizer {hhat} have different orbits")
    if barycenter_formula(h) != barycenter_formula(hhat):
        raise InvariantError(f"{h} and its stabilizer {hhat} have different barycenters")
    verdict = is_face_geometric(h, g, lp_cap=lp_cap)
    if verdict.certificate is not None and not verify_certificate(verdict.certificate, h, g):
        raise InvariantError(f"LP certificate for {h} in {g} does not verify")
    return SubgroupRecord(
        order=h.order,
        generators=tuple(str(x) for x in h.generators),
        orbit_partition=parts,
        stabilizer_order=hhat.order,
        combinatorial=polytope_equal(h, hhat),
        geometric=verdict.is_face,
        certificate=verdict.certificate,
    )


def verify_theorem(
    g: PermGroup,
    description: str | None = None,
    subgroup_cap: int | None = None,
    lp_cap: int | None = None,
    workers: int | None = None,
) -> TheoremReport:
    """Compare both deciders on every subgroup of G.

    Subgroups are examined on a thread pool; records come back in canonical
    subgroup order regardless of completion order.
    """
    workers = config.WORKERS if workers is None else workers
    subgroups = enumerate_subgroups(g, subgroup_cap)
    keyed: list[tuple[tuple, SubgroupRecord]] = []
    if workers <= 1:
        keyed = [(h.key(), examine_subgroup(h, g, lp_cap)) for h in subgroups]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(examine_subgroup, h, g, lp_cap): h for h in subgroups}
            for future in as_completed(futures):
                keyed.append((futures[future].key(), future.result()))
    keyed.sort(key=lambda kr: kr[0])
    return TheoremReport(
        group=description or str(g),
        degree=g.n,
        order=g.order,
        records=tuple(r for _, r in keyed),
    )
