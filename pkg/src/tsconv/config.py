"""Tolerances, budgets and sampling grids used by the numeric procedures.

Everything tolerance-like lives here so the CLI, the test suite and the
decision procedures agree on one set of defaults.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction


def default_eps_grid() -> tuple[Fraction, ...]:
    """Decreasing grid 1, 1/2, ..., 2^-12 used for the for-all-eps quantifier."""
    return tuple(Fraction(1, 2**k) for k in range(13))


@dataclass(frozen=True)
class ToolkitConfig:
    # density estimation
    tol_density: float = 1e-3
    epoch_ratio: int = 2              # geometric evaluation grid t0 * ratio^k
    epochs: int = 40
    samples_per_epoch: int = 8
    stability_epochs: int = 5         # epochs of stable min/max before DoesNotExist
    stability_rel_change: float = 0.10

    # root isolation on dense regions
    tol_root: float = 1e-10
    isolation_samples: int = 1024     # sub-samples per interval component
    # sign-change budget per component; more changes means undersampling
    isolation_max_changes: int = 341

    # discrete enumeration
    enumeration_budget: int = 8_000_000   # grid points resolvable per set
    component_budget: int = 250_000       # components materializable per window

    # convergence procedures
    eps_grid: tuple[Fraction, ...] = field(default_factory=default_eps_grid)
    cauchy_anchor_budget: int = 64
    cluster_grid_steps: int = 256
    stable_sup_epochs: int = 3        # epochs of unchanged sup before "bounded"

    # root snapping on discrete scales
    snap_tolerance: float = 1e-12

    def with_overrides(self, **kwargs) -> "ToolkitConfig":
        data = {k: getattr(self, k) for k in self.__dataclass_fields__}
        data.update({k: v for k, v in kwargs.items() if v is not None})
        return ToolkitConfig(**data)


DEFAULT_CONFIG = ToolkitConfig()


def thread_cap() -> int:
    """Worker cap from TSCONV_THREADS; the engine itself runs sequentially."""
    raw = os.environ.get("TSCONV_THREADS", "")
    try:
        cap = int(raw)
    except ValueError:
        return 1
    return max(1, cap)
