"""CLI entry point for the acceptance-corpus sweep."""

import argparse
import sys
import threading
from concurrent.futures import ThreadPoolExecutor, as_completed

from benchmarks.config import CORPUS, GROUP_WORKERS, SUBGROUP_WORKERS, CorpusResult
from benchmarks.harness import run_group
from benchmarks.report import corpus_passed, print_summary_table, save_results

# Thread-safe print
_print_lock = threading.Lock()


def _tprint(*args, **kwargs):
    with _print_lock:
        print(*args, **kwargs, flush=True)


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Check both face-subgroup tests, barycenters and dimensions over a group corpus",
    )
    parser.add_argument(
        "--groups",
        nargs="+",
        default=list(CORPUS),
        help="Group specs to check (default: the acceptance corpus)",
    )
    parser.add_argument(
        "--output",
        default="benchmarks/results.json",
        help="Output JSON path (default: benchmarks/results.json)",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=GROUP_WORKERS,
        help=f"Groups checked in parallel (default: {GROUP_WORKERS})",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Print detailed progress",
    )
    return parser.parse_args()


def main():
    args = parse_args()
    print(f"Checking {len(args.groups)} groups with {args.workers} workers...")

    results: list[CorpusResult] = []
    with ThreadPoolExecutor(max_workers=max(args.workers, 1)) as executor:
        futures = {
            executor.submit(run_group, name, SUBGROUP_WORKERS, args.verbose): name
            for name in args.groups
        }
        for future in as_completed(futures):
            name = futures[future]
            result = future.result()
            results.append(result)
            _tprint(
                f"  [{name}] {result.subgroup_count} subgroups, "
                f"{result.face_subgroup_count} faces, {result.wall_clock_seconds}s"
                + (f" ERROR: {result.error}" if result.error else "")
            )

    # Report in the order the groups were requested.
    position = {name: i for i, name in enumerate(args.groups)}
    results.sort(key=lambda r: position.get(r.group, len(position)))

    save_results(results, args.output)
    print_summary_table(results)
    sys.exit(0 if corpus_passed(results) else 1)


if __name__ == "__main__":
    main()
