"""
Permutope MCP Server.

Exposes the permutation-polytope toolkit as MCP tools so a coding agent can
ask for orbits, barycenters, dimensions and face-subgroup verdicts without
writing throwaway scripts. Every tool returns a JSON string; failures come
back as structured error JSON instead of crashing the session.

Groups are written S<n>, A<n>, C<n>, D<n> or "<n>:(cycles);(cycles)".

Limits come from PERMUTOPE_* environment variables (see permutope.config).

Usage:
  permutope-mcp-server
  python -m permutope.server
"""

import traceback
from functools import wraps

from mcp.server import FastMCP

from permutope.config import Limits
from permutope.errors import DegreeMismatchError
from permutope.face import verify_theorem as _verify_theorem
from permutope.groups import parse_group_spec
from permutope.perm import parse_partition
from permutope.report import (
    _json,
    barycenter_payload,
    dimension_payload,
    face_subgroups_payload,
    face_test_payload,
    orbits_payload,
    report_to_dict,
    stabilizer_payload,
    subgroups_payload,
)

mcp = FastMCP("permutope")


# ── Helpers ───────────────────────────────────────────────────


def _handle_errors(fn):
    """Catch exceptions and return structured error JSON instead of crashing."""

    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except Exception as e:
            return _json(
                {
                    "error": type(e).__name__,
                    "message": str(e),
                    "traceback": traceback.format_exc()[-1000:],
                }
            )

    return wrapper


def _group(text: str):
    """Parse and build a group; returns (group, canonical description)."""
    spec = parse_group_spec(text)
    return spec.build(cap=Limits().closure_cap), str(spec)


# ── Configuration ─────────────────────────────────────────────


@mcp.tool()
@_handle_errors
def get_limits() -> str:
    """Show the size caps and debug switch this server runs with.

    Caps bound group generation, subgroup enumeration and the separation LP.
    Requests beyond a cap return a CapExceededError instead of hanging.
    """
    return _json(Limits().as_dict())


# ── Group structure ───────────────────────────────────────────


@mcp.tool()
@_handle_errors
def orbits(group: str) -> str:
    """Orbit partition of a permutation group.

    Args:
        group: Group spec, e.g. "S4", "C6", "D5", or "4:(1 2);(3 4)".
    """
    g, description = _group(group)
    return _json(orbits_payload(g, description))


@mcp.tool()
@_handle_errors
def partition_stabilizer(group: str, partition: str) -> str:
    """Elements of G mapping every part of a set partition onto itself.

    Args:
        group: Group spec, e.g. "S4".
        partition: Parts separated by "|", points by ",", e.g. "1,2|3,4".
    """
    g, description = _group(group)
    return _json(stabilizer_payload(g, parse_partition(partition, g.n), description))


@mcp.tool()
@_handle_errors
def subgroups(group: str) -> str:
    """Enumerate every subgroup of G with its order and orbit partition.

    Args:
        group: Group spec, e.g. "S4". |G| must be within the subgroup cap.
    """
    g, description = _group(group)
    return _json(subgroups_payload(g, description, cap=Limits().subgroup_cap))


# ── Polytope invariants ───────────────────────────────────────


@mcp.tool()
@_handle_errors
def barycenter(group: str, oracle: bool = False) -> str:
    """Vertex barycenter of P(G) as an n×n matrix of exact "p/q" strings.

    Args:
        group: Group spec, e.g. "C3".
        oracle: Average every permutation matrix instead of using the
                orbit formula (slower, same answer).
    """
    g, description = _group(group)
    return _json(barycenter_payload(g, description, oracle=oracle))


@mcp.tool()
@_handle_errors
def affine_dimension(group: str) -> str:
    """Dimension of the permutation polytope P(G), by exact rank.

    Args:
        group: Group spec, e.g. "S4" (dimension 9).
    """
    g, description = _group(group)
    return _json(dimension_payload(g, description))


# ── Faces ─────────────────────────────────────────────────────


@mcp.tool()
@_handle_errors
def face_test(group: str, subgroup: str, method: str = "both") -> str:
    """Decide whether P(H) is a face of P(G), with a checkable certificate.

    Args:
        group: Group spec for G, e.g. "S3".
        subgroup: H as a group spec or a ";"-separated generator list on
                  G's degree, e.g. "(1 2)" or "C3".
        method: "comb" (orbit-partition stabilizer test), "lp" (exact
                supporting-functional search) or "both" (default).
    """
    g, description = _group(group)
    hspec = parse_group_spec(subgroup, n=g.n)
    if hspec.n != g.n:
        raise DegreeMismatchError(g.n, hspec.n)
    h = hspec.build(cap=Limits().closure_cap)
    return _json(face_test_payload(h, g, method, description, lp_cap=Limits().lp_vertex_cap))


@mcp.tool()
@_handle_errors
def face_subgroups(group: str) -> str:
    """List all subgroups H of G whose polytope P(H) is a face of P(G).

    Args:
        group: Group spec, e.g. "D4".
    """
    g, description = _group(group)
    return _json(face_subgroups_payload(g, description, cap=Limits().subgroup_cap))


@mcp.tool()
@_handle_errors
def verify_theorem(group: str) -> str:
    """Run both face tests on every subgroup of G and report whether they agree.

    Returns per-subgroup verdicts, LP certificates for faces, and an
    agreement flag (true means the orbit-partition characterization of
    face-subgroups held on every subgroup).

    Args:
        group: Group spec, e.g. "S3" (6 subgroups, 5 face-subgroups).
    """
    g, description = _group(group)
    limits = Limits()
    report = _verify_theorem(
        g,
        description=description,
        subgroup_cap=limits.subgroup_cap,
        lp_cap=limits.lp_vertex_cap,
        workers=limits.workers,
    )
    return _json(report_to_dict(report))


def get_tool_schemas() -> list[dict]:
    """Return name, signature, and docstring for all registered MCP tools."""
    import inspect

    tool_fns = [
        get_limits,
        orbits,
        partition_stabilizer,
        subgroups,
        barycenter,
        affine_dimension,
        face_test,
        face_subgroups,
        verify_theorem,
    ]
    schemas = []
    for fn in tool_fns:
        schemas.append({
            "name": fn.__name__,
            "signature": str(inspect.signature(fn)),
            "docstring": (fn.__doc__ or "").strip(),
        })
    return schemas


def search_tool_schemas(keyword: str) -> list[dict]:
    """Search registered MCP tools by keyword (case-insensitive substring match).

    Args:
        keyword: Search term, e.g. "face", "orbit", "barycenter".
    """
    kw = keyword.lower()
    return [
        s for s in get_tool_schemas()
        if kw in s["name"].lower() or kw in s["docstring"].lower()
    ]


def main():
    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()
