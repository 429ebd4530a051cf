"""Resource limits for exhaustive and generative operations.

Several constructions in this package are exponential by design
(exhaustive equivalence checks, truth-table lowering, graph-family
enumeration). Budgets put a hard ceiling on each of them so a typo in a
capacity does not hang the process. The ``PATHCIRC_BUDGET`` environment
variable overrides the defaults: either a single integer (the gate
budget) or comma-separated ``key=value`` pairs with keys ``gates``,
``eval-width``, ``synth-width`` and ``graphs``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import BudgetError


@dataclass(frozen=True)
class Budget:
    eval_width: int = 20        # max input width for exhaustive evaluation
    synth_width: int = 16       # max input width for truth-table lowering
    graph_count: int = 1 << 16  # max size of an enumerated graph family
    gate_count: int = 1 << 20   # max gate count for an emitted circuit

    def __post_init__(self):
        for name, value in vars(self).items():
            if value < 0:
                raise BudgetError(f"budget {name} must be non-negative, got {value}")


_ENV_KEYS = {
    "gates": "gate_count",
    "eval-width": "eval_width",
    "synth-width": "synth_width",
    "graphs": "graph_count",
}


def current(env=os.environ) -> Budget:
    """Return the active budget, honouring PATHCIRC_BUDGET if set."""
    raw = env.get("PATHCIRC_BUDGET")
    if raw is None or not raw.strip():
        return Budget()
    budget = Budget()
    try:
        if "=" not in raw:
            return replace(budget, gate_count=int(raw))
        for item in raw.split(","):
            key, _, value = item.partition("=")
            field = _ENV_KEYS[key.strip()]
            budget = replace(budget, **{field: int(value)})
    except (KeyError, ValueError) as exc:
        raise BudgetError(f"malformed PATHCIRC_BUDGET {raw!r}: {exc}") from exc
    return budget
