"""Run the full set of checks on one corpus group and time it."""

import time

from benchmarks.config import CorpusResult
from permutope.face import TheoremReport, verify_theorem
from permutope.groups import parse_group_spec
from permutope.polytope import affine_dimension, barycenter_formula, barycenter_oracle


def verify_group(name: str, workers: int = 1, verbose: bool = False) -> tuple[CorpusResult, TheoremReport | None]:
    """verify_theorem plus the barycenter and dimension checks for one group.

    Errors are recorded on the result instead of raised, so one bad group
    does not stop the sweep.
    """
    result = CorpusResult(group=name)
    report = None
    start_time = time.monotonic()
    try:
        spec = parse_group_spec(name)
        g = spec.build()
        result.degree = g.n
        result.order = g.order
        report = verify_theorem(g, description=str(spec), workers=workers)
        result.subgroup_count = report.subgroup_count
        result.face_subgroup_count = report.face_subgroup_count
        result.agreement = report.agreement
        bary = barycenter_formula(g)
        result.barycenter_exact = bary == barycenter_oracle(g) and bary.is_doubly_stochastic()
        result.affine_dimension = affine_dimension(g)
    except Exception as e:
        result.error = f"{type(e).__name__}: {e}"
        if verbose:
            print(f"    {name} ERROR: {result.error}", flush=True)
    result.wall_clock_seconds = round(time.monotonic() - start_time, 2)
    return result, report


def run_group(name: str, workers: int = 1, verbose: bool = False) -> CorpusResult:
    return verify_group(name, workers, verbose)[0]
