"""Graph construction and exact chromatic polynomial evaluation.

Graphs are immutable: a vertex count plus a set of undirected edges on
vertices 0..num_vertices-1.  Chromatic polynomial values are computed either
by deletion-contraction (works for any small graph) or by closed forms for
the supported families (complete, cycle, tree, complete bipartite K_{2,l}).
All counts are exact Python integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import BudgetExceededError, UnsupportedFamilyError

DEFAULT_DC_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices 0..num_vertices-1."""

    num_vertices: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise ValueError("graph must have at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < v < self.num_vertices):
                raise ValueError(f"edge ({u}, {v}) is not normalized or out of range")

    @classmethod
    def from_edges(cls, num_vertices: int, edges) -> "Graph":
        """Build a graph from any iterable of vertex pairs (loops rejected)."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            norm.add((min(u, v), max(u, v)))
        return cls(num_vertices, frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def to_json_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "edges": [[u, v] for u, v in self.sorted_edges()],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "Graph":
        return cls.from_edges(int(d["num_vertices"]), d["edges"])

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_json_dict(json.loads(text))


def make_complete(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def make_cycle(n: int) -> Graph:
    """C_n, n >= 3."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_path(n: int) -> Graph:
    """Path on n vertices (the canonical tree used by the CLI)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_complete_bipartite(n: int, l: int) -> Graph:
    """K_{n,l} with the n-side on vertices 0..n-1 and the l-side on n..n+l-1."""
    if n < 1 or l < 1:
        raise ValueError("both sides must be nonempty")
    return Graph.from_edges(n + l, [(i, n + j) for i in range(n) for j in range(l)])


def _is_tree(num_vertices: int, edges: frozenset[tuple[int, int]]) -> bool:
    if len(edges) != num_vertices - 1:
        return False
    # connectivity via union-find
    parent = list(range(num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = num_vertices
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


@dataclass(frozen=True)
class GraphFamily:
    """A named graph family instance: complete, cycle, tree, or complete bipartite.

    Use the classmethod constructors; they validate parameters up front so a
    family value can always be built into a concrete Graph.
    """

    kind: str
    n: int = 0
    l: int = 0
    edges: tuple[tuple[int, int], ...] = ()

    @classmethod
    def complete(cls, n: int) -> "GraphFamily":
        if n < 1:
            raise ValueError("n must be >= 1")
        return cls("complete", n=n)

    @classmethod
    def cycle(cls, n: int) -> "GraphFamily":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return cls("cycle", n=n)

    @classmethod
    def tree(cls, n: int, edges) -> "GraphFamily":
        g = Graph.from_edges(n, edges)
        if not _is_tree(n, g.edges):
            raise ValueError("edge list is not a tree on n vertices")
        return cls("tree", n=n, edges=tuple(g.sorted_edges()))

    @classmethod
    def complete_bipartite(cls, n: int, l: int) -> "GraphFamily":
        if n < 1 or l < 1:
            raise ValueError("both sides must be nonempty")
        return cls("complete_bipartite", n=n, l=l)

    def build(self) -> Graph:
        if self.kind == "complete":
            return make_complete(self.n)
        if self.kind == "cycle":
            return make_cycle(self.n)
        if self.kind == "tree":
            return Graph.from_edges(self.n, self.edges)
        if self.kind == "complete_bipartite":
            return make_complete_bipartite(self.n, self.l)
        raise UnsupportedFamilyError(f"unknown family kind {self.kind!r}")


def closed_form_chromatic_polynomial(family: GraphFamily, m: int) -> int:
    """Evaluate the chromatic polynomial of a family instance at m colors.

    Closed forms:
      complete K_n:          m (m-1) ... (m-n+1)
      cycle C_n:             (m-1)^n + (-1)^n (m-1)
      tree on n vertices:    m (m-1)^(n-1)
      K_{2,l}:               m (m-1)^l + m (m-1) (m-2)^l

    Complete bipartite families with n != 2 are rejected.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if family.kind == "complete":
        value = 1
        for i in range(family.n):
            value *= m - i
        return value
    if family.kind == "cycle":
        return (m - 1) ** family.n + (-1) ** family.n * (m - 1)
    if family.kind == "tree":
        return m * (m - 1) ** (family.n - 1) if family.n > 1 else m
    if family.kind == "complete_bipartite":
        if family.n != 2:
            raise UnsupportedFamilyError(
                "closed form implemented only for two vertices on the small side"
            )
        return chrompoly_k2l(family.l, m)
    raise UnsupportedFamilyError(f"unknown family kind {family.kind!r}")


def chrompoly_k2l(l: int, m: int) -> int:
    """P(K_{2,l}, m) = m (m-1)^l + m (m-1) (m-2)^l, exact."""
    if l < 1:
        raise ValueError("l must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    return m * (m - 1) ** l + m * (m - 1) * (m - 2) ** l


def _canonical_key(num_vertices: int, edges: frozenset[tuple[int, int]]):
    # Relabel vertices by iterated degree refinement (ties broken by original
    # index), then encode the exact edge set.  Two graphs sharing a key are
    # genuinely isomorphic -- the key IS a labeled graph -- so memoized
    # chromatic polynomial values are safe; the refinement only boosts the
    # hit rate for isomorphic intermediates.
    nbrs: list[list[int]] = [[] for _ in range(num_vertices)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    colors = [len(nbrs[v]) for v in range(num_vertices)]
    for _ in range(num_vertices):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v])))
            for v in range(num_vertices)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [palette[s] for s in sigs]
        if refined == colors:
            break
        colors = refined
    order = sorted(range(num_vertices), key=lambda v: (colors[v], v))
    pos = {v: i for i, v in enumerate(order)}
    canon = tuple(
        sorted((pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u]) for u, v in edges)
    )
    return num_vertices, canon


def _contract(num_vertices: int, edges: frozenset[tuple[int, int]], e: tuple[int, int]):
    # Merge v into u (u < v), reindex vertices above v down by one, and let
    # the set representation collapse any multi-edges produced by the merge.
    u, v = e
    out = set()
    for a, b in edges:
        if (a, b) == e:
            continue
        a2 = u if a == v else (a - 1 if a > v else a)
        b2 = u if b == v else (b - 1 if b > v else b)
        if a2 != b2:
            out.add((a2, b2) if a2 < b2 else (b2, a2))
    return num_vertices - 1, frozenset(out)


def chromatic_polynomial(g: Graph, m: int, *, max_nodes: int = DEFAULT_DC_NODE_BUDGET) -> int:
    """Exact P(g, m) by deletion-contraction with memoization.

    Intended for desk-scale graphs (roughly <= 14 vertices).  Raises
    BudgetExceededError if the recursion visits more than max_nodes states.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    memo: dict = {}
    nodes = 0

    def rec(num_vertices: int, edges: frozenset[tuple[int, int]]) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceededError(
                f"deletion-contraction exceeded {max_nodes} recursion nodes"
            )
        if not edges:
            return m**num_vertices
        key = _canonical_key(num_vertices, edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        e = min(edges)
        value = rec(num_vertices, edges - {e}) - rec(*_contract(num_vertices, edges, e))
        memo[key] = value
        return value

    return rec(g.num_vertices, g.edges)
