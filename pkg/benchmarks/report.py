"""JSON output and tabulate summary table for the corpus harness."""

import json
from dataclasses import asdict
from pathlib import Path

from tabulate import tabulate

from benchmarks.config import CorpusResult


def save_results(results: list[CorpusResult], output_path: str) -> None:
    """Write all results to a JSON file."""
    data = [asdict(r) for r in results]
    Path(output_path).write_text(json.dumps(data, indent=2, default=str))
    print(f"\nResults saved to {output_path}")


def print_summary_table(results: list[CorpusResult]) -> None:
    headers = [
        "Group", "n", "|G|", "Subgroups", "Faces", "dim P(G)",
        "Barycenter", "Agree", "Time(s)", "Error",
    ]
    rows = []
    for r in results:
        rows.append([
            r.group,
            r.degree,
            r.order,
            r.subgroup_count,
            r.face_subgroup_count,
            r.affine_dimension,
            "ok" if r.barycenter_exact else "FAIL",
            "yes" if r.agreement else "NO",
            r.wall_clock_seconds,
            r.error[:30] if r.error else "",
        ])

    print("\n" + "=" * 90)
    print("CORPUS RESULTS")
    print("=" * 90)
    print(tabulate(rows, headers=headers, tablefmt="simple"))
    total = sum(r.wall_clock_seconds for r in results)
    failed = [r.group for r in results if not corpus_passed([r])]
    print(f"\n{len(results)} groups, {total:.1f}s total, failures: {failed or 'none'}")


def corpus_passed(results: list[CorpusResult]) -> bool:
    return all(r.error is None and r.agreement and r.barycenter_exact for r in results)
