"""JSON payloads, report (de)serialization, and tabulate tables.

The CLI (text and JSON modes) and the MCP server both render from the
payload dicts built here, so every surface reports the same numbers.
"""

from __future__ import annotations

import json
from pathlib import Path

from tabulate import tabulate

from permutope.errors import ParseError
from permutope.face import (
    FaceCertificate,
    SubgroupRecord,
    TheoremReport,
    face_subgroups,
    is_face_combinatorial,
    is_face_geometric,
    stabilizer_certificate,
)
from permutope.perm import (
    PermGroup,
    SetPartition,
    enumerate_subgroups,
    orbit_partition,
    partition_stabilizer,
    set_partitions,
)
from permutope.polytope import affine_dimension, barycenter_formula, barycenter_oracle

METHODS = ("comb", "lp", "both")


def _json(obj) -> str:
    return json.dumps(obj, indent=2, default=str)


def group_summary(g: PermGroup, description: str | None = None) -> dict:
    return {
        "group": description or str(g),
        "degree": g.n,
        "order": g.order,
        "generators": [str(x) for x in g.generators],
    }


def _subgroup_entry(h: PermGroup) -> dict:
    return {
        "order": h.order,
        "generators": [str(x) for x in h.generators],
        "orbit_partition": orbit_partition(h).as_lists(),
    }


# ── Payloads ──────────────────────────────────────────────────


def orbits_payload(g: PermGroup, description: str | None = None) -> dict:
    parts = orbit_partition(g)
    return {**group_summary(g, description), "orbit_partition": parts.as_lists(), "orbits": str(parts)}


def stabilizer_payload(g: PermGroup, parts: SetPartition, description: str | None = None) -> dict:
    stab = partition_stabilizer(g, parts)
    return {
        **group_summary(g, description),
        "partition": str(parts),
        "stabilizer_order": stab.order,
        "elements": [str(x) for x in stab.elements],
    }


def barycenter_payload(g: PermGroup, description: str | None = None, oracle: bool = False) -> dict:
    matrix = barycenter_oracle(g) if oracle else barycenter_formula(g)
    return {
        **group_summary(g, description),
        "method": "oracle" if oracle else "formula",
        "barycenter": matrix.to_json(),
        "doubly_stochastic": matrix.is_doubly_stochastic(),
    }


def dimension_payload(g: PermGroup, description: str | None = None) -> dict:
    return {**group_summary(g, description), "affine_dimension": affine_dimension(g)}


def face_test_payload(
    h: PermGroup,
    g: PermGroup,
    method: str = "both",
    description: str | None = None,
    lp_cap: int | None = None,
) -> dict:
    if method not in METHODS:
        raise ParseError(f"unknown method {method!r}; expected one of {METHODS}")
    payload = {
        **group_summary(g, description),
        "subgroup": _subgroup_entry(h),
        "method": method,
    }
    if method in ("comb", "both"):
        comb = is_face_combinatorial(h, g)
        payload["combinatorial"] = comb
        if comb:
            payload["partition"] = str(orbit_partition(h))
            payload["stabilizer_certificate"] = stabilizer_certificate(g, orbit_partition(h)).to_json()
    if method in ("lp", "both"):
        verdict = is_face_geometric(h, g, lp_cap=lp_cap)
        payload["geometric"] = verdict.is_face
        payload["slack"] = str(verdict.slack)
        if verdict.certificate is not None:
            payload["certificate"] = verdict.certificate.to_json()
    if method == "both":
        payload["agreement"] = payload["combinatorial"] == payload["geometric"]
    return payload


def subgroups_payload(g: PermGroup, description: str | None = None, cap: int | None = None) -> dict:
    subs = enumerate_subgroups(g, cap)
    return {
        **group_summary(g, description),
        "subgroup_count": len(subs),
        "subgroups": [_subgroup_entry(h) for h in subs],
    }


def face_subgroups_payload(g: PermGroup, description: str | None = None, cap: int | None = None) -> dict:
    faces = face_subgroups(g, cap)
    return {
        **group_summary(g, description),
        "face_subgroup_count": len(faces),
        "face_subgroups": [_subgroup_entry(h) for h in faces],
    }


def partitions_payload(n: int) -> dict:
    parts = [str(p) for p in set_partitions(n)]
    return {"degree": n, "partition_count": len(parts), "partitions": parts}


# ── Theorem reports ───────────────────────────────────────────


def report_to_dict(report: TheoremReport) -> dict:
    records = []
    for r in report.records:
        entry = {
            "order": r.order,
            "generators": list(r.generators),
            "orbit_partition": r.orbit_partition.as_lists(),
            "stabilizer_order": r.stabilizer_order,
            "combinatorial": r.combinatorial,
            "geometric": r.geometric,
        }
        if r.certificate is not None:
            entry["certificate"] = r.certificate.to_json()
        records.append(entry)
    return {
        "group": report.group,
        "degree": report.degree,
        "order": report.order,
        "subgroup_count": report.subgroup_count,
        "face_subgroup_count": report.face_subgroup_count,
        "agreement": report.agreement,
        "records": records,
    }


def report_from_dict(data: dict) -> TheoremReport:
    try:
        degree = int(data["degree"])
        records = tuple(
            SubgroupRecord(
                order=int(r["order"]),
                generators=tuple(r["generators"]),
                orbit_partition=SetPartition(degree, tuple(tuple(p) for p in r["orbit_partition"])),
                stabilizer_order=int(r["stabilizer_order"]),
                combinatorial=bool(r["combinatorial"]),
                geometric=bool(r["geometric"]),
                certificate=FaceCertificate.from_json(r["certificate"]) if "certificate" in r else None,
            )
            for r in data["records"]
        )
        report = TheoremReport(
            group=data["group"], degree=degree, order=int(data["order"]), records=records
        )
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed theorem report: {e}") from e
    for name in ("subgroup_count", "face_subgroup_count", "agreement"):
        if name in data and data[name] != getattr(report, name):
            raise ParseError(f"theorem report field {name}={data[name]!r} contradicts its records")
    return report


def save_report(report: TheoremReport, path: str) -> None:
    Path(path).write_text(_json(report_to_dict(report)) + "\n", encoding="utf-8")


def load_report(path: str) -> TheoremReport:
    return report_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


# ── Tables ────────────────────────────────────────────────────


def matrix_table(rows: list[list[str]]) -> str:
    return tabulate(rows, tablefmt="plain", stralign="right")


def subgroup_table(entries: list[dict], extra: dict[str, list] | None = None) -> str:
    headers = ["#", "Order", "Generators", "Orbits"]
    rows = []
    for k, e in enumerate(entries):
        rows.append([
            k,
            e["order"],
            " ".join(e["generators"]) or "()",
            "|".join(",".join(str(p) for p in part) for part in e["orbit_partition"]),
        ])
    for name, values in (extra or {}).items():
        headers.append(name)
        for row, v in zip(rows, values):
            row.append(v)
    return tabulate(rows, headers=headers, tablefmt="simple")


def theorem_table(data: dict) -> str:
    headers = ["#", "Order", "Generators", "Orbits", "|Ĥ|", "Comb", "LP"]
    rows = [
        [
            k,
            r["order"],
            " ".join(r["generators"]) or "()",
            "|".join(",".join(str(p) for p in part) for part in r["orbit_partition"]),
            r["stabilizer_order"],
            "face" if r["combinatorial"] else "-",
            "face" if r["geometric"] else "-",
        ]
        for k, r in enumerate(data["records"])
    ]
    return tabulate(rows, headers=headers, tablefmt="simple")
