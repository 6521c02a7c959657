"""Empirical search for list assignments that undercut the chromatic polynomial.

Two regimes: exhaustive enumeration at tiny sizes (exact minima), and a
seeded hill-descent over large-side lists of K_{2,l} at sizes where
enumeration is hopeless.  The heuristic pins the two small-side lists to the
standard convention (1..m and 1..m-2 plus m+1, m+2) and explores m-subsets
of a bounded color universe for the large side.  Results are best-effort
upper bounds on the list color function -- a found witness is always
re-checkable, absence of one proves nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .counting import (
    Budget,
    DEFAULT_BUDGET,
    ListAssignment,
    count_bipartite_fast,
    minimize_over_assignments,
)
from .graphs import Graph, chrompoly_k2l, make_complete_bipartite
from .thresholds import certify_threshold_above, y_list_types

CSV_HEADER = "l,m,witness_found,best_count,method"


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the seeded local search.

    color_universe_size bounds the colors available to large-side lists
    (None means m + 2, matching the constructions; colors beyond that are
    not explored unless configured upward).  Restarts are independent given
    the seed; results do not depend on evaluation order.
    """

    max_iterations: int = 200
    restarts: int = 4
    rng_seed: int = 0
    neighborhood: str = "swap-one-color"
    color_universe_size: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_iterations < 0 or self.restarts < 0:
            raise ValueError("iteration and restart counts must be nonnegative")
        if self.neighborhood not in ("swap-one-color", "retype-y-list"):
            raise ValueError(f"unknown neighborhood {self.neighborhood!r}")


@dataclass(frozen=True)
class SearchRow:
    """One evidence row: the best assignment found for (l, m) and how."""

    l: int
    m: int
    witness_found: bool
    best_count: int
    best_assignment: Optional[ListAssignment]
    method: str  # exhaustive | local-search | construction

    def to_json_dict(self) -> dict:
        return {
            "l": self.l,
            "m": self.m,
            "witness_found": self.witness_found,
            "best_count": str(self.best_count),
            "best_assignment": (
                self.best_assignment.to_json_dict() if self.best_assignment else None
            ),
            "method": self.method,
        }

    def csv_line(self) -> str:
        found = "true" if self.witness_found else "false"
        return f"{self.l},{self.m},{found},{self.best_count},{self.method}"


def exhaustive_min_assignment(
    g: Graph, m: int, *, budget: Budget = DEFAULT_BUDGET
) -> tuple[ListAssignment, int]:
    """Exact minimum over all m-assignments (up to color renaming), tiny scale."""
    return minimize_over_assignments(g, m, budget=budget)


def _serialized(ylists: tuple[frozenset[int], ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(yl)) for yl in ylists)


def local_search_bad_assignment(l: int, m: int, cfg: SearchConfig) -> SearchRow:
    """Seeded hill-descent over large-side lists of K_{2,l}.

    Strict-improvement moves only, with independent restarts merged by
    (count, serialized assignment) so the outcome is deterministic for a
    given config.  Restart 0 starts from the balanced four-type assignment
    whenever the universe admits it (it is always a feasible point, so the
    reported count never exceeds its count); later restarts start from
    uniformly random lists.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    if m < 2:
        raise ValueError("m must be >= 2")
    universe = cfg.color_universe_size if cfg.color_universe_size is not None else m + 2
    if universe < m:
        raise ValueError("color universe must hold at least m colors")
    if cfg.neighborhood == "retype-y-list" and universe < m + 2:
        raise ValueError("retype moves need a universe of at least m + 2 colors")
    x1 = frozenset(range(1, m + 1))
    x2 = frozenset(range(1, m - 1)) | {m + 1, m + 2}
    types = y_list_types(m) if universe >= m + 2 else None
    colors = list(range(1, universe + 1))
    target = chrompoly_k2l(l, m)

    def objective(ylists: tuple[frozenset[int], ...]) -> int:
        return count_bipartite_fast(2, l, ListAssignment((x1, x2) + ylists))

    def propose(rng: random.Random, ylists: tuple[frozenset[int], ...]):
        j = rng.randrange(l)
        if cfg.neighborhood == "retype-y-list":
            assert types is not None
            return ylists[:j] + (types[rng.randrange(4)],) + ylists[j + 1 :]
        yl = ylists[j]
        out = rng.choice(sorted(yl))
        pool = sorted(set(colors) - yl)
        if not pool:
            return None
        into = rng.choice(pool)
        return ylists[:j] + ((yl - {out}) | {into},) + ylists[j + 1 :]

    best_key = None
    best: Optional[tuple[int, tuple[frozenset[int], ...]]] = None
    for restart in range(cfg.restarts + 1):
        rng = random.Random(f"{cfg.rng_seed}:{restart}")
        if restart == 0 and types is not None:
            ylists = tuple(types[j % 4] for j in range(l))
        else:
            ylists = tuple(
                frozenset(rng.sample(colors, m)) for _ in range(l)
            )
        current = objective(ylists)
        for _ in range(cfg.max_iterations):
            candidate = propose(rng, ylists)
            if candidate is None:
                continue
            value = objective(candidate)
            if value < current:
                ylists, current = candidate, value
        key = (current, _serialized(ylists))
        if best_key is None or key < best_key:
            best_key, best = key, (current, ylists)
    assert best is not None
    best_count, best_ylists = best
    return SearchRow(
        l=l,
        m=m,
        witness_found=best_count < target,
        best_count=best_count,
        best_assignment=ListAssignment((x1, x2) + best_ylists),
        method="local-search",
    )


def empirical_threshold_profile(
    l: int,
    m_lo: int,
    m_hi: int,
    cfg: SearchConfig,
    *,
    budget: Budget = DEFAULT_BUDGET,
) -> list[SearchRow]:
    """Evidence rows for each m in [m_lo, m_hi] on K_{2,l}.

    Prefers the certified construction when it applies; falls back to local
    search.  For m = 2 only exhaustive enumeration makes sense (the
    constructions need m >= 3), so small l is required there.
    """
    if m_lo < 2:
        raise ValueError("m_lo must be >= 2")
    if m_hi < m_lo:
        raise ValueError("empty m range")
    rows = []
    for m in range(m_lo, m_hi + 1):
        if m < 3:
            g = make_complete_bipartite(2, l)
            assignment, count = minimize_over_assignments(g, m, budget=budget)
            rows.append(
                SearchRow(
                    l=l,
                    m=m,
                    witness_found=count < chrompoly_k2l(l, m),
                    best_count=count,
                    best_assignment=assignment,
                    method="exhaustive",
                )
            )
            continue
        try:
            witness = certify_threshold_above(l, m)
        except ValueError:
            rows.append(local_search_bad_assignment(l, m, cfg))
        else:
            rows.append(
                SearchRow(
                    l=l,
                    m=m,
                    witness_found=True,
                    best_count=witness.count_L,
                    best_assignment=witness.assignment,
                    method="construction",
                )
            )
    return rows
