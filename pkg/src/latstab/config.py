"""Capacity budgets for the exact searches, with environment overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    """Hard limits for exact computations.

    weight_cap: largest operator weight the brute-force distance search tries.
    node_cap:   largest coset-graph size barrier_exact will materialize.
    mem_mb:     rough memory budget; bounds the DP state table.
    """

    weight_cap: int = 6
    node_cap: int = 2**24
    mem_mb: int = 4096

    @property
    def dp_state_cap(self) -> int:
        return max(1024, self.mem_mb * 1024 * 1024 // 256)

    @staticmethod
    def from_env() -> "Budgets":
        def geti(name, default):
            raw = os.environ.get(name)
            return int(raw) if raw else default

        return Budgets(
            weight_cap=geti("LATSTAB_WEIGHT_CAP", 6),
            node_cap=geti("LATSTAB_NODE_CAP", 2**24),
            mem_mb=geti("LATSTAB_MEM_MB", 4096),
        )


DEFAULT_BUDGETS = Budgets.from_env()
