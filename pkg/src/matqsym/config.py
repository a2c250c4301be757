"""Size limits shared across modules."""
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, fields


class BudgetExceeded(RuntimeError):
    """A brute-force or search limit was hit before the computation finished."""


@dataclass
class Budgets:
    max_poset_size: int = 12  # explicit linear-extension listing
    max_invariant_n: int = 10  # F(M) through base posets
    brute_force: int = 10**7  # k^n assignments in definition-level oracles
    iso_max_n: int = 9
    tutte_max_n: int = 16
    weak_image_max_bases: int = 22
    split_max_n: int = 10
    search_nodes: int = 2_000_000  # DFS nodes in semigroup searches


# Shared instance read at call time; adjust through ``budgets``.
DEFAULT_BUDGETS = Budgets()


@contextmanager
def budgets(**overrides):
    """Temporarily change limits, e.g. ``with budgets(brute_force=10**8): ...``."""
    names = {f.name for f in fields(Budgets)}
    unknown = set(overrides) - names
    if unknown:
        raise TypeError(f"unknown budget(s): {sorted(unknown)}")
    saved = {k: getattr(DEFAULT_BUDGETS, k) for k in overrides}
    for k, v in overrides.items():
        setattr(DEFAULT_BUDGETS, k, v)
    try:
        yield DEFAULT_BUDGETS
    finally:
        for k, v in saved.items():
            setattr(DEFAULT_BUDGETS, k, v)
