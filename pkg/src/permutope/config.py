"""Limits and switches, read from PERMUTOPE_* environment variables."""

import os
from dataclasses import dataclass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


# Largest group closure() will build before giving up (|S_8| / 2).
CLOSURE_CAP = _env_int("PERMUTOPE_CLOSURE_CAP", 20160)

# Largest |G| whose subgroup lattice is enumerated.
SUBGROUP_CAP = _env_int("PERMUTOPE_SUBGROUP_CAP", 240)

# Largest |G| for which the separation LP is built.
LP_VERTEX_CAP = _env_int("PERMUTOPE_LP_VERTEX_CAP", 720)

# Thread pool size for verify_theorem.
WORKERS = _env_int("PERMUTOPE_WORKERS", 4)

# Debug/test mode: extra self-checks after filters and LP solves.
DEBUG = os.environ.get("PERMUTOPE_DEBUG") == "1"


@dataclass(frozen=True)
class Limits:
    """Caps applied to one invocation. Defaults come from the environment."""

    closure_cap: int = CLOSURE_CAP
    subgroup_cap: int = SUBGROUP_CAP
    lp_vertex_cap: int = LP_VERTEX_CAP
    workers: int = WORKERS

    def as_dict(self) -> dict:
        return {
            "closure_cap": self.closure_cap,
            "subgroup_cap": self.subgroup_cap,
            "lp_vertex_cap": self.lp_vertex_cap,
            "workers": self.workers,
            "debug": DEBUG,
        }
