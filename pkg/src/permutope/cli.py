"""
Command-line front end.

Usage:
  permutope orbits S4
  permutope stab S3 --partition "1,2|3"
  permutope barycenter C3 [--oracle]
  permutope dim S4
  permutope face-test S3 --subgroup "(1 2)" [--method comb|lp|both]
  permutope face-subgroups D4
  permutope subgroups C4
  permutope verify-theorem S3 [--json out.json]
  permutope partitions 4

Groups are S<n>, A<n>, C<n>, D<n> or "<n>:(cycles);(cycles)". Subgroups may
also be a bare ';'-separated generator list on the group's degree.

Exit codes: 0 success, 1 the two face tests disagree, 2 bad input or an
unwritable report path, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import sys
import threading
import time
from typing import Sequence, TextIO

from permutope import config
from permutope.errors import (
    CapExceededError,
    DegreeMismatchError,
    InvariantError,
    PermutopeError,
)
from permutope.face import verify_theorem
from permutope.groups import parse_group_spec
from permutope.perm import parse_partition
from permutope.report import (
    METHODS,
    _json,
    barycenter_payload,
    dimension_payload,
    face_subgroups_payload,
    face_test_payload,
    matrix_table,
    orbits_payload,
    partitions_payload,
    report_to_dict,
    save_report,
    stabilizer_payload,
    subgroup_table,
    subgroups_payload,
    theorem_table,
)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3

_print_lock = threading.Lock()


def _tprint(*args, **kwargs):
    with _print_lock:
        print(*args, **kwargs, file=sys.stderr, flush=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="Output format on stdout (default: text)",
    )
    common.add_argument(
        "--closure-cap",
        type=int,
        default=config.CLOSURE_CAP,
        help=f"Largest group to generate (default: {config.CLOSURE_CAP})",
    )
    common.add_argument(
        "--subgroup-cap",
        type=int,
        default=config.SUBGROUP_CAP,
        help=f"Largest |G| for subgroup enumeration (default: {config.SUBGROUP_CAP})",
    )
    common.add_argument(
        "--lp-cap",
        type=int,
        default=config.LP_VERTEX_CAP,
        help=f"Largest |G| for the separation LP (default: {config.LP_VERTEX_CAP})",
    )
    common.add_argument(
        "--verbose",
        action="store_true",
        help="Print progress to stderr",
    )

    parser = argparse.ArgumentParser(
        prog="permutope",
        description="Exact permutation-polytope toolkit: orbits, barycenters, dimensions, face-subgroups",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", parents=[common], help="Orbit partition of G")
    p.add_argument("group")

    p = sub.add_parser("stab", parents=[common], help="Stabilizer of a set partition")
    p.add_argument("group")
    p.add_argument("--partition", required=True, help='Parts like "1,2|3,4"')

    p = sub.add_parser("barycenter", parents=[common], help="Vertex barycenter of P(G)")
    p.add_argument("group")
    p.add_argument("--oracle", action="store_true", help="Average all vertices instead of using orbits")

    p = sub.add_parser("dim", parents=[common], help="Affine dimension of P(G)")
    p.add_argument("group")

    p = sub.add_parser("face-test", parents=[common], help="Is P(H) a face of P(G)?")
    p.add_argument("group")
    p.add_argument("--subgroup", required=True, help='H as a group spec or "(1 2);(3 4)"')
    p.add_argument("--method", choices=list(METHODS), default="both")

    p = sub.add_parser("face-subgroups", parents=[common], help="All face-subgroups of G")
    p.add_argument("group")

    p = sub.add_parser("verify-theorem", parents=[common], help="Compare both face tests on every subgroup")
    p.add_argument("group")
    p.add_argument("--json", dest="json_path", default=None, metavar="PATH", help="Write the report here")
    p.add_argument(
        "--workers",
        type=int,
        default=config.WORKERS,
        help=f"Threads examining subgroups (default: {config.WORKERS})",
    )

    p = sub.add_parser("subgroups", parents=[common], help="Enumerate all subgroups of G")
    p.add_argument("group")

    p = sub.add_parser("partitions", parents=[common], help="List all set partitions of {1..n}")
    p.add_argument("degree", type=int)

    return parser


def _header(payload: dict) -> str:
    line = f"{payload['group']}: degree {payload['degree']}, order {payload['order']}"
    # theorem reports carry no generators
    if "generators" in payload:
        line += f", generators {' '.join(payload['generators']) or '()'}"
    return line


def _render_text(command: str, payload: dict) -> str:
    if command == "partitions":
        return "\n".join([f"{payload['partition_count']} partitions of {{1..{payload['degree']}}}"]
                         + payload["partitions"])
    lines = [_header(payload)]
    if command == "orbits":
        lines.append(f"orbits: {payload['orbits']}")
    elif command == "stab":
        lines.append(f"stabilizer of {payload['partition']}: order {payload['stabilizer_order']}")
        lines.extend(payload["elements"])
    elif command == "barycenter":
        lines.append(f"barycenter ({payload['method']}):")
        lines.append(matrix_table(payload["barycenter"]))
        lines.append(f"doubly stochastic: {'yes' if payload['doubly_stochastic'] else 'no'}")
    elif command == "dim":
        lines.append(f"affine dimension: {payload['affine_dimension']}")
    elif command == "face-test":
        h = payload["subgroup"]
        lines.append(f"subgroup: order {h['order']}, generators {' '.join(h['generators']) or '()'}")
        if "combinatorial" in payload:
            verdict = "face" if payload["combinatorial"] else "not a face"
            if payload["combinatorial"]:
                verdict += f" (stabilizer of {payload['partition']})"
            lines.append(f"combinatorial: {verdict}")
        if "geometric" in payload:
            verdict = "face" if payload["geometric"] else "not a face"
            lines.append(f"geometric: {verdict} (slack {payload['slack']})")
            if "certificate" in payload:
                lines.append(f"certificate level b = {payload['certificate']['b']}, functional c:")
                lines.append(matrix_table(payload["certificate"]["c"]))
        if "agreement" in payload:
            lines.append(f"agreement: {'yes' if payload['agreement'] else 'NO'}")
    elif command == "subgroups":
        lines.append(f"{payload['subgroup_count']} subgroups")
        lines.append(subgroup_table(payload["subgroups"]))
    elif command == "face-subgroups":
        lines.append(f"{payload['face_subgroup_count']} face-subgroups")
        lines.append(subgroup_table(payload["face_subgroups"]))
    elif command == "verify-theorem":
        lines.append(theorem_table(payload))
        lines.append(
            f"{payload['subgroup_count']} subgroups, {payload['face_subgroup_count']} face-subgroups, "
            f"agreement: {'yes' if payload['agreement'] else 'NO'}"
        )
    return "\n".join(lines)


def _dispatch(args: argparse.Namespace) -> tuple[dict, int]:
    if args.command == "partitions":
        return partitions_payload(args.degree), EXIT_OK

    spec = parse_group_spec(args.group)
    description = str(spec)
    if args.verbose:
        _tprint(f"Building {description}...")
    g = spec.build(cap=args.closure_cap)
    if args.verbose:
        _tprint(f"  order {g.order}")

    if args.command == "orbits":
        return orbits_payload(g, description), EXIT_OK
    if args.command == "stab":
        return stabilizer_payload(g, parse_partition(args.partition, g.n), description), EXIT_OK
    if args.command == "barycenter":
        return barycenter_payload(g, description, oracle=args.oracle), EXIT_OK
    if args.command == "dim":
        return dimension_payload(g, description), EXIT_OK
    if args.command == "face-test":
        hspec = parse_group_spec(args.subgroup, n=g.n)
        if hspec.n != g.n:
            raise DegreeMismatchError(g.n, hspec.n)
        h = hspec.build(cap=args.closure_cap)
        payload = face_test_payload(h, g, args.method, description, lp_cap=args.lp_cap)
        return payload, EXIT_OK if payload.get("agreement", True) else EXIT_DISAGREEMENT
    if args.command == "subgroups":
        return subgroups_payload(g, description, cap=args.subgroup_cap), EXIT_OK
    if args.command == "face-subgroups":
        return face_subgroups_payload(g, description, cap=args.subgroup_cap), EXIT_OK
    if args.command == "verify-theorem":
        start = time.monotonic()
        if args.verbose:
            _tprint(f"Verifying on every subgroup ({args.workers} workers)...")
        report = verify_theorem(
            g,
            description=description,
            subgroup_cap=args.subgroup_cap,
            lp_cap=args.lp_cap,
            workers=args.workers,
        )
        if args.verbose:
            _tprint(f"  {report.subgroup_count} subgroups in {time.monotonic() - start:.2f}s")
        if args.json_path:
            save_report(report, args.json_path)
            if args.verbose:
                _tprint(f"  report saved to {args.json_path}")
        return report_to_dict(report), EXIT_OK if report.agreement else EXIT_DISAGREEMENT
    raise AssertionError(f"unhandled command {args.command}")


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """Parse ``argv``, run the command, write the result to ``out``; return the exit code."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        payload, status = _dispatch(args)
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except InvariantError as e:
        print(f"invariant violated: {e}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except (PermutopeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.format == "json":
        print(_json(payload), file=out)
    else:
        print(_render_text(args.command, payload), file=out)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
