"""Exact counting of list colorings and list color function evaluation.

A list assignment gives each vertex a finite set of allowed colors (positive
integers).  The central quantity is the number of proper colorings that pick
each vertex's color from its own list; minimizing it over all assignments
with lists of size m yields the list color function value at m.

Assignments are enumerated up to renaming of colors: scanning vertices in
index order, every new color must be the smallest positive integer not used
so far (a restricted-growth rule over the concatenated list slots).  Every
assignment can be renamed into this form, so enumerating canonical forms
covers all assignments up to color permutation.

Enumeration work is metered by an explicit Budget; exceeding it raises
BudgetExceededError deterministically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceededError, ShapeMismatchError
from .graphs import Graph

# Cap on prefix colorings examined per pruning attempt inside choosability
# search.  Only affects pruning strength, never correctness.
_PEEL_SCAN_CAP = 64

_CHOOSABILITY_VERTEX_LIMIT = 10


@dataclass(frozen=True)
class Budget:
    """Resource knobs for exhaustive enumeration.

    max_assignments counts nodes of the canonical-assignment enumeration
    tree; max_nodes counts backtracking nodes spent counting or testing
    colorings.  Both are totals per top-level operation call.
    """

    max_assignments: int = 5_000_000
    max_nodes: int = 50_000_000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists; lists[v] is the set of colors allowed at v."""

    lists: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for v, lst in enumerate(self.lists):
            if not lst:
                raise ValueError(f"vertex {v} has an empty list")
            for c in lst:
                if not isinstance(c, int) or c < 1:
                    raise ValueError(f"vertex {v} has a non-positive color {c!r}")

    @classmethod
    def from_lists(cls, lists: Sequence) -> "ListAssignment":
        return cls(tuple(frozenset(lst) for lst in lists))

    def __len__(self) -> int:
        return len(self.lists)

    def sorted_lists(self) -> list[list[int]]:
        return [sorted(lst) for lst in self.lists]

    def to_json_dict(self) -> dict:
        return {"lists": self.sorted_lists()}

    @classmethod
    def from_json_dict(cls, d: dict) -> "ListAssignment":
        return cls.from_lists(d["lists"])

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ListAssignment":
        return cls.from_json_dict(json.loads(text))


def _check_shape(g: Graph, assignment: ListAssignment) -> None:
    if len(assignment) != g.num_vertices:
        raise ShapeMismatchError(
            f"assignment has {len(assignment)} lists but graph has "
            f"{g.num_vertices} vertices"
        )


class _NodeMeter:
    """Shared backtracking-node counter with a hard cap."""

    __slots__ = ("nodes", "cap")

    def __init__(self, cap: int):
        self.nodes = 0
        self.cap = cap

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.cap:
            raise BudgetExceededError(f"backtracking exceeded {self.cap} nodes")


def _backtrack_order(g: Graph) -> tuple[list[int], list[list[int]]]:
    # Descending degree (ties by index) keeps the most-constrained vertices
    # early; earlier_nbrs[i] holds positions < i adjacent to position i.
    deg = g.degrees()
    order = sorted(range(g.num_vertices), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    earlier: list[list[int]] = [[] for _ in range(g.num_vertices)]
    for u, v in g.edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        earlier[j].append(i)
    return order, earlier


def _count_colorings_ordered(
    lists_in_order: list, earlier: list[list[int]], meter: _NodeMeter, *, stop_at_first: bool
) -> int:
    n = len(lists_in_order)
    coloring = [0] * n

    def rec(i: int) -> int:
        meter.tick()
        if i == n:
            return 1
        total = 0
        for c in lists_in_order[i]:
            if any(coloring[j] == c for j in earlier[i]):
                continue
            coloring[i] = c
            total += rec(i + 1)
            if stop_at_first and total:
                break
        coloring[i] = 0
        return total

    return rec(0)


def count_list_colorings(
    g: Graph, assignment: ListAssignment, *, budget: Budget = DEFAULT_BUDGET
) -> int:
    """Exact number of proper colorings of g picking colors from the lists."""
    _check_shape(g, assignment)
    order, earlier = _backtrack_order(g)
    lists_in_order = [sorted(assignment.lists[v]) for v in order]
    meter = _NodeMeter(budget.max_nodes)
    return _count_colorings_ordered(lists_in_order, earlier, meter, stop_at_first=False)


def is_list_colorable(
    g: Graph, assignment: ListAssignment, *, budget: Budget = DEFAULT_BUDGET
) -> bool:
    """Whether at least one proper coloring from the lists exists."""
    _check_shape(g, assignment)
    order, earlier = _backtrack_order(g)
    lists_in_order = [sorted(assignment.lists[v]) for v in order]
    meter = _NodeMeter(budget.max_nodes)
    return _count_colorings_ordered(lists_in_order, earlier, meter, stop_at_first=True) > 0


def count_bipartite_fast(n: int, l: int, assignment: ListAssignment) -> int:
    """Count proper list colorings of K_{n,l} without touching the graph.

    Vertices 0..n-1 are the small side, n..n+l-1 the large side (the layout
    produced by make_complete_bipartite).  Sums over all color tuples of the
    small side -- an independent set, so every tuple is proper there -- and
    multiplies, for each large-side vertex, the number of list colors that
    avoid the tuple.  Factors are grouped so each term costs a handful of
    big-integer powers; l can be large.
    """
    if n < 1 or l < 1:
        raise ShapeMismatchError("both sides must be nonempty")
    if n > 4:
        raise ShapeMismatchError("fast path supports small side size <= 4")
    if len(assignment) != n + l:
        raise ShapeMismatchError(
            f"assignment has {len(assignment)} lists, expected {n + l}"
        )
    xlists = [sorted(assignment.lists[i]) for i in range(n)]
    ylists = assignment.lists[n:]
    total = 0
    for combo in product(*xlists):
        used = frozenset(combo)
        factor_counts: dict[int, int] = {}
        zero = False
        for yl in ylists:
            f = len(yl) - len(yl & used)
            if f == 0:
                zero = True
                break
            factor_counts[f] = factor_counts.get(f, 0) + 1
        if zero:
            continue
        term = 1
        for f, cnt in factor_counts.items():
            term *= f**cnt
        total += term
    return total


def canonical_assignments(
    num_vertices: int, k: int, *, budget: Budget = DEFAULT_BUDGET
) -> Iterator[tuple[frozenset[int], ...]]:
    """Yield every canonical k-assignment on num_vertices vertices.

    Canonical means: reading vertices in index order, the colors ever used
    form an initial segment 1..u, and a vertex introducing j new colors gets
    exactly u+1..u+j plus k-j already-used colors.  Deterministic order.
    """
    if num_vertices < 1 or k < 1:
        raise ValueError("need at least one vertex and k >= 1")
    produced = 0

    def rec(i: int, used: int, acc: list) -> Iterator[tuple[frozenset[int], ...]]:
        nonlocal produced
        if i == num_vertices:
            produced += 1
            if produced > budget.max_assignments:
                raise BudgetExceededError(
                    f"canonical enumeration exceeded {budget.max_assignments} assignments"
                )
            yield tuple(acc)
            return
        for new in range(k + 1):
            fresh = frozenset(range(used + 1, used + new + 1))
            for olds in combinations(range(1, used + 1), k - new):
                acc.append(frozenset(olds) | fresh)
                yield from rec(i + 1, used + new, acc)
                acc.pop()

    return rec(0, 0, [])


def _proper_prefix_colorings(
    lists_by_pos: list, adj_pos: list[set[int]], meter: _NodeMeter
) -> Iterator[tuple[int, ...]]:
    # All proper colorings of the induced prefix graph, positions 0..p-1.
    p = len(lists_by_pos)
    coloring = [0] * p

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        meter.tick()
        if i == p:
            yield tuple(coloring)
            return
        for c in sorted(lists_by_pos[i]):
            if any(coloring[j] == c for j in adj_pos[i] if j < i):
                continue
            coloring[i] = c
            yield from rec(i + 1)
        coloring[i] = 0

    return rec(0)


def _greedy_peelable(h: tuple[int, ...], p: int, n: int, adj_pos: list[set[int]], k: int) -> bool:
    # True if, given the prefix coloring h, every completion of the remaining
    # lists is colorable: repeatedly peel a remaining vertex whose fixed
    # prefix colors plus remaining neighbors stay below k, so a greedy
    # extension succeeds no matter what the unseen lists are.
    remaining = set(range(p, n))
    fixed = {
        r: len({h[q] for q in adj_pos[r] if q < p}) for r in remaining
    }
    while remaining:
        peeled = None
        for r in remaining:
            rem_deg = sum(1 for q in adj_pos[r] if q in remaining and q != r)
            if fixed[r] + rem_deg < k:
                peeled = r
                break
        if peeled is None:
            return False
        remaining.remove(peeled)
    return True


def find_bad_assignment(
    g: Graph, k: int, *, budget: Budget = DEFAULT_BUDGET
) -> Optional[ListAssignment]:
    """Search every canonical k-assignment for one admitting no proper coloring.

    Returns a witness assignment (None if the graph is k-choosable).  The
    enumeration is exhaustive up to color renaming; two sound prunes keep it
    tractable: a prefix whose induced subgraph is already uncolorable yields
    an immediate witness, and a prefix all of whose completions are provably
    colorable (greedy peeling) is skipped wholesale.
    """
    if g.num_vertices > _CHOOSABILITY_VERTEX_LIMIT:
        raise ValueError(
            f"choosability search limited to {_CHOOSABILITY_VERTEX_LIMIT} vertices"
        )
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.num_vertices
    adj = g.neighbors()  # positions == vertex indices (natural order)
    adj_pos = [set(adj[v]) for v in range(n)]
    meter = _NodeMeter(budget.max_nodes)
    enum_nodes = 0

    def complete_with_fresh(lists: list, used: int) -> ListAssignment:
        filled = list(lists)
        while len(filled) < n:
            filled.append(frozenset(range(used + 1, used + k + 1)))
            used += k
        return ListAssignment(tuple(filled))

    def scan(lists: list) -> tuple[bool, bool]:
        # (some proper coloring of the prefix exists, all completions colorable)
        exists = False
        for idx, h in enumerate(_proper_prefix_colorings(lists, adj_pos, meter)):
            exists = True
            if _greedy_peelable(h, len(lists), n, adj_pos, k):
                return True, True
            if idx + 1 >= _PEEL_SCAN_CAP:
                break
        return exists, False

    def rec(lists: list, used: int) -> Optional[ListAssignment]:
        nonlocal enum_nodes
        enum_nodes += 1
        if enum_nodes > budget.max_assignments:
            raise BudgetExceededError(
                f"choosability enumeration exceeded {budget.max_assignments} nodes"
            )
        exists, all_ok = scan(lists)
        if not exists:
            return complete_with_fresh(lists, used)
        if all_ok or len(lists) == n:
            return None
        for new in range(k + 1):
            fresh = frozenset(range(used + 1, used + new + 1))
            for olds in combinations(range(1, used + 1), k - new):
                lists.append(frozenset(olds) | fresh)
                found = rec(lists, used + new)
                if found is not None:
                    return found
                lists.pop()
        return None

    return rec([], 0)


def is_k_choosable(g: Graph, k: int, *, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Whether every k-assignment on g admits a proper list coloring."""
    return find_bad_assignment(g, k, budget=budget) is None


def list_chromatic_number(g: Graph, *, budget: Budget = DEFAULT_BUDGET) -> int:
    """Least k such that g is k-choosable.

    Terminates: k = (max degree) + 1 is always enough for the greedy bound.
    """
    k = 1
    while True:
        if is_k_choosable(g, k, budget=budget):
            return k
        k += 1


def minimize_over_assignments(
    g: Graph, m: int, *, budget: Budget = DEFAULT_BUDGET
) -> tuple[ListAssignment, int]:
    """Exhaustive minimum of count over all m-assignments, up to color renaming.

    Returns (first minimizing assignment in canonical order, its count).
    Stops early once a count of zero appears: no assignment does worse.
    """
    order, earlier = _backtrack_order(g)
    meter = _NodeMeter(budget.max_nodes)
    best_count: Optional[int] = None
    best_lists: Optional[tuple[frozenset[int], ...]] = None
    for lists in canonical_assignments(g.num_vertices, m, budget=budget):
        lists_in_order = [sorted(lists[v]) for v in order]
        c = _count_colorings_ordered(lists_in_order, earlier, meter, stop_at_first=False)
        if best_count is None or c < best_count:
            best_count, best_lists = c, lists
            if c == 0:
                break
    assert best_lists is not None and best_count is not None
    return ListAssignment(best_lists), best_count


def list_color_function_bruteforce(
    g: Graph, m: int, *, budget: Budget = DEFAULT_BUDGET
) -> int:
    """List color function value at m: min over m-assignments of the count."""
    _, count = minimize_over_assignments(g, m, budget=budget)
    return count


def plf_equals_chrompoly(g: Graph, m: int, *, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Whether the list color function value at m equals P(g, m)."""
    from .graphs import chromatic_polynomial

    return list_color_function_bruteforce(g, m, budget=budget) == chromatic_polynomial(g, m)
