"""Acceptance corpus and result records for the corpus harness."""

import os
from dataclasses import dataclass
from typing import Optional

from permutope.groups import ACCEPTANCE_CORPUS

CORPUS = ACCEPTANCE_CORPUS

# Thread pool sizes: one per corpus group, and one inside each verify_theorem.
GROUP_WORKERS = int(os.environ.get("PERMUTOPE_GROUP_WORKERS", "4"))
SUBGROUP_WORKERS = int(os.environ.get("PERMUTOPE_CORPUS_SUBGROUP_WORKERS", "1"))


@dataclass
class CorpusResult:
    """Outcome of verify_theorem on one corpus group."""

    group: str
    degree: int = 0
    order: int = 0
    subgroup_count: int = 0
    face_subgroup_count: int = 0
    agreement: bool = False
    affine_dimension: int = 0
    barycenter_exact: bool = False
    wall_clock_seconds: float = 0.0
    error: Optional[str] = None
