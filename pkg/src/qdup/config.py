"""Budget configuration for enumeration and counting kernels.

All exhaustive scans are guarded by a budget so that an oversized request
fails fast with ``BudgetExceededError`` instead of hanging.  The single
environment variable ``QDUP_BUDGET`` overrides the default element-counting
budget (the cap on ``|field| ** dim`` scans).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_BUDGET = "QDUP_BUDGET"


@dataclass(frozen=True)
class Budgets:
    #: cap on element scans (idempotent counts, simplicity, norm scans): |k|^dim
    counting: int = 1_000_000
    #: cap on full matrix enumeration for the exhaustive isomorphism strategy
    matrix_enum: int = 250_000
    #: cap on naive delta-matrix scans in the brute-force pair oracle
    pair_scan: int = 2_000_000
    #: cap on generator-image candidate tuples in the isomorphism search
    iso_candidates: int = 2_000_000
    #: numerator/denominator bound for rational norm-equation witness search
    norm_bound: int = 24


def default_budgets() -> Budgets:
    """Budgets with the ``QDUP_BUDGET`` override applied, if set."""
    budgets = Budgets()
    env = os.environ.get(ENV_BUDGET)
    if env:
        budgets = replace(budgets, counting=int(env))
    return budgets
