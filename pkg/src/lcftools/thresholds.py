"""Worst-case list assignments, closed-form counts, and threshold certificates.

The list color function of a graph is bounded above by its chromatic
polynomial; the threshold of interest is the least number of colors from
which the two agree forever.  For complete bipartite graphs K_{n,l} there is
an explicit family of hard list assignments built from a shared base of
colors plus disjoint private blocks, one per small-side vertex, with the
large side receiving transversals of those blocks.  For n = 2 these
assignments have exactly four large-side list types, and the number of
proper colorings depends only on how many lists take each type (the
"profile").  That structure supports:

  * exact closed-form counts (general n, and a specialized n = 2 form),
  * one-vertex extensions that keep a profile balanced,
  * exact integer inequalities certifying that the constructed count stays
    strictly below the chromatic polynomial, hence a machine-checkable
    certificate that the threshold exceeds a given m,
  * interval-arithmetic evaluation of known lower/upper bounds on the
    threshold with certified floors.

All counts are exact integers; tolerance parameters are exact rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable

import mpmath
from mpmath import iv

from .counting import ListAssignment, count_bipartite_fast
from .errors import CertificationError, StructureError
from .graphs import Graph, chrompoly_k2l

DEFAULT_EPSILON = Fraction(1, 4)

_MAX_INTERVAL_PREC = 1 << 16


def _check_epsilon(eps: Fraction) -> Fraction:
    eps = Fraction(eps)
    if not (0 < eps < 2):
        raise ValueError("epsilon must be a rational strictly between 0 and 2")
    return eps


@dataclass(frozen=True)
class TransversalParams:
    """Parameters of the hard assignment on K_{n, n^n * t} with m-color lists."""

    n: int
    t: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.t < 1:
            raise ValueError("t must be >= 1")
        if self.m < self.n + 1:
            raise ValueError("m must be >= n + 1")

    @property
    def l(self) -> int:
        return self.n**self.n * self.t


def transversal_assignment(params: TransversalParams) -> ListAssignment:
    """Build the hard m-assignment on K_{n, n^n * t}.

    Small-side vertex x_k (1-based) gets the shared base 1..m-n plus the
    private block S_k = {m + n(k-2) + 1, ..., m + n(k-2) + n}; the blocks are
    disjoint and S_1 tops out at color m, so x_1's list is exactly 1..m.
    Large-side lists take the base plus a transversal (one color from every
    block); transversals are ordered lexicographically and each is repeated
    on t consecutive vertices.
    """
    n, t, m = params.n, params.t, params.m
    base = frozenset(range(1, m - n + 1))
    blocks = [
        tuple(m + n * (k - 2) + j for j in range(1, n + 1)) for k in range(1, n + 1)
    ]
    xlists = [base | frozenset(block) for block in blocks]
    transversals = [frozenset(choice) for choice in product(*blocks)]
    ylists = [base | transversals[j // t] for j in range(len(transversals) * t)]
    return ListAssignment(tuple(xlists + ylists))


def transversal_count_formula(params: TransversalParams) -> int:
    """Exact count of proper colorings under the transversal assignment.

    Closed form (conventions: comb(a, b) = 0 when b > a; all arithmetic in
    exact integers):

        n^n * prod_{i=0}^{n} (m-i)^(t C(n,i) (n-1)^(n-i))
        + sum_{N=1}^{n} sum_{S=0}^{n-N} n^S C(n,S) C(m-n,N)
            * (sum_{i=0}^{N-1} (-1)^i C(N,i) (N-i)^(n-S))
            * prod_{i=0}^{S} (m-N-i)^(t C(S,i) (n-1)^(S-i) n^(n-S))
    """
    n, t, m = params.n, params.t, params.m
    total = n**n
    for i in range(n + 1):
        total *= (m - i) ** (t * comb(n, i) * (n - 1) ** (n - i))
    for big_n in range(1, n + 1):
        for s in range(0, n - big_n + 1):
            coeff = n**s * comb(n, s) * comb(m - n, big_n)
            if coeff == 0:
                continue
            surj = sum(
                (-1) ** i * comb(big_n, i) * (big_n - i) ** (n - s)
                for i in range(big_n)
            )
            prod_term = 1
            for i in range(s + 1):
                prod_term *= (m - big_n - i) ** (
                    t * comb(s, i) * (n - 1) ** (s - i) * n ** (n - s)
                )
            total += coeff * surj * prod_term
    return total


def y_list_types(m: int) -> tuple[frozenset[int], ...]:
    """The four large-side list types on K_{2,l} with lists of size m.

    All share the base 1..m-2 and add one of {m-1, m+1}, {m-1, m+2},
    {m, m+1}, {m, m+2}: one color from each small-side private pair.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    base = frozenset(range(1, m - 1))
    return (
        base | {m - 1, m + 1},
        base | {m - 1, m + 2},
        base | {m, m + 1},
        base | {m, m + 2},
    )


def _x_lists(m: int) -> tuple[frozenset[int], frozenset[int]]:
    # Small-side convention: x1 sees 1..m, x2 sees the base plus m+1, m+2.
    return frozenset(range(1, m + 1)), frozenset(range(1, m - 1)) | {m + 1, m + 2}


@dataclass(frozen=True)
class BalanceProfile:
    """Type counts (z1, z2, z3, z4) of a two-by-l structured assignment.

    Balanced means the four counts pairwise differ by at most one.
    """

    z1: int
    z2: int
    z3: int
    z4: int
    m: int
    l: int

    def __post_init__(self) -> None:
        zs = (self.z1, self.z2, self.z3, self.z4)
        if any(z < 0 for z in zs):
            raise ValueError("type counts must be nonnegative")
        if sum(zs) != self.l:
            raise ValueError("type counts must sum to l")
        if self.m < 3:
            raise ValueError("m must be >= 3")

    @property
    def zs(self) -> tuple[int, int, int, int]:
        return (self.z1, self.z2, self.z3, self.z4)

    @property
    def balanced(self) -> bool:
        return max(self.zs) - min(self.zs) <= 1


def profile_of(assignment: ListAssignment, m: int) -> BalanceProfile:
    """Classify a K_{2,l} assignment into its type counts.

    Requires the small-side convention (vertex 0 list = 1..m, vertex 1 list
    = 1..m-2 plus m+1, m+2) and every large-side list equal to one of the
    four types.  Raises StructureError naming the first vertex that breaks
    the pattern.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    lists = assignment.lists
    l = len(lists) - 2
    if l < 1:
        raise StructureError("assignment must cover two small-side vertices plus l >= 1")
    x1, x2 = _x_lists(m)
    if lists[0] != x1:
        raise StructureError(
            f"vertex 0 list {sorted(lists[0])} is not 1..{m}"
        )
    if lists[1] != x2:
        raise StructureError(
            f"vertex 1 list {sorted(lists[1])} is not {sorted(x2)}"
        )
    types = y_list_types(m)
    counts = [0, 0, 0, 0]
    for j, lst in enumerate(lists[2:], start=2):
        try:
            counts[types.index(lst)] += 1
        except ValueError:
            raise StructureError(
                f"vertex {j} list {sorted(lst)} matches none of the four types"
            ) from None
    return BalanceProfile(*counts, m=m, l=l)


def assignment_with_profile(m: int, zs: tuple[int, int, int, int]) -> ListAssignment:
    """Assignment realizing the given type counts: z1 type-1 lists, then z2, ..."""
    types = y_list_types(m)
    if m < 3:
        raise ValueError("m must be >= 3")
    if len(zs) != 4 or any(z < 0 for z in zs) or sum(zs) < 1:
        raise ValueError("need four nonnegative counts summing to at least 1")
    x1, x2 = _x_lists(m)
    ylists = [types[i] for i in range(4) for _ in range(zs[i])]
    return ListAssignment((x1, x2, *ylists))


def extend_balanced(assignment: ListAssignment, m: int) -> ListAssignment:
    """Append one large-side vertex, keeping the profile balanced.

    The new list takes the scarcest type (smallest index on ties), so a
    balanced profile stays balanced with l raised by one.
    """
    prof = profile_of(assignment, m)
    if not prof.balanced:
        raise ValueError(f"profile {prof.zs} is not balanced")
    zs = prof.zs
    pick = min(range(4), key=lambda i: (zs[i], i))
    new_list = y_list_types(m)[pick]
    return ListAssignment(assignment.lists + (new_list,))


def count_for_profile(m: int, profile: BalanceProfile) -> int:
    """Exact count of proper colorings for any assignment with this profile.

    Decomposes over the small-side color pair (a1, a2): each large-side list
    of type i contributes a factor m - |type_i ∩ {a1, a2}|, so the total is a
    sum of m * m products determined by the type counts alone.
    """
    if profile.m != m:
        raise ValueError("profile was built for a different m")
    if profile.l < 1:
        raise ValueError("l must be >= 1")
    types = y_list_types(m)
    x1, x2 = _x_lists(m)
    zs = profile.zs
    total = 0
    for a1 in sorted(x1):
        for a2 in sorted(x2):
            pair = {a1, a2}
            term = 1
            for ti, zi in zip(types, zs):
                term *= (m - len(ti & pair)) ** zi
            total += term
    return total


def uniform_profile_count(t: int, m: int) -> int:
    """Closed-form count for the uniform profile (t, t, t, t) on K_{2,4t}.

        (m-2)(m-1)^{4t} + (m-3)(m-2)^{4t+1}
        + 4 (m-2)^{2t+1} (m-1)^{2t} + 4 (m-2)^t (m-1)^{2t} m^t
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if m < 3:
        raise ValueError("m must be >= 3")
    return (
        (m - 2) * (m - 1) ** (4 * t)
        + (m - 3) * (m - 2) ** (4 * t + 1)
        + 4 * (m - 2) ** (2 * t + 1) * (m - 1) ** (2 * t)
        + 4 * (m - 2) ** t * (m - 1) ** (2 * t) * m**t
    )


def seed_gap_condition(m: int, t: int, eps: Fraction) -> bool:
    """Exact test that the uniform construction on K_{2,4t} undercuts P by margin eps.

    With eps = p/q in lowest terms, both of these integer inequalities must
    hold (they are exact rearrangements of the defining logarithmic bounds,
    valid because the bases lie strictly between 0 and 1):

        4 q (m-2)^(2t+1)   <  p (m-1)^(2t)
        4 q (m (m-2))^t    <  (2q - p) ((m-1)^2)^t
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    if t < 1:
        raise ValueError("t must be >= 1")
    eps = _check_epsilon(eps)
    p, q = eps.numerator, eps.denominator
    first = 4 * q * (m - 2) ** (2 * t + 1) < p * (m - 1) ** (2 * t)
    second = 4 * q * (m * (m - 2)) ** t < (2 * q - p) * ((m - 1) ** 2) ** t
    return first and second


def extension_gap_condition(m: int, l: int, eps: Fraction) -> bool:
    """Exact test that one-vertex extension preserves the strict gap at size l.

    Uses z = floor(l / 4); with eps = p/q both inequalities must hold:

        2 q (m-2)^(2z+1)   <  p (m-1)^(2z)
        4 q (m (m-2))^z    <  (2q - p) ((m-1)^2)^z
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    if l < 1:
        raise ValueError("l must be >= 1")
    eps = _check_epsilon(eps)
    p, q = eps.numerator, eps.denominator
    z = l // 4
    first = 2 * q * (m - 2) ** (2 * z + 1) < p * (m - 1) ** (2 * z)
    second = 4 * q * (m * (m - 2)) ** z < (2 * q - p) * ((m - 1) ** 2) ** z
    return first and second


def min_seed_blocks(m: int, eps: Fraction) -> int:
    """Least t for which seed_gap_condition(m, t, eps) holds."""
    if m < 3:
        raise ValueError("m must be >= 3")
    eps = _check_epsilon(eps)
    t = 1
    while not seed_gap_condition(m, t, eps):
        t += 1
    return t


def _certified_floor(builder: Callable[[], object]) -> int:
    """Floor of a real expression, certified by interval arithmetic.

    builder must produce the expression as an interval under the current
    working precision; precision is escalated until both interval endpoints
    share the same floor.  Terminates whenever the true value is not an
    integer (all uses here involve irrational values or exact zeros).
    """
    prec = 64
    saved = iv.prec
    try:
        while prec <= _MAX_INTERVAL_PREC:
            iv.prec = prec
            x = builder()
            lo = mpmath.floor(x.a)
            hi = mpmath.floor(x.b)
            if lo == hi:
                return int(lo)
            prec *= 2
    finally:
        iv.prec = saved
    raise CertificationError("interval precision escalation failed to resolve a floor")


def threshold_lower_bound(l: int) -> int:
    """Certified value of floor(sqrt(q / ln(16/7)) + 1) with q = floor(l/4).

    The threshold of K_{2,l} strictly exceeds this number for l >= 16.
    """
    if l < 16:
        raise ValueError("lower bound stated for l >= 16")
    q = l // 4
    inner = _certified_floor(
        lambda: iv.sqrt(iv.mpf(q) / iv.ln(iv.mpf(16) / iv.mpf(7)))
    )
    return inner + 1  # floor(x + 1) == floor(x) + 1


def thomassen_upper_bound(g: Graph) -> int:
    """Classical threshold upper bound |V|^10 + 1, exact."""
    return g.num_vertices**10 + 1


def _wqy_from_edge_count(num_edges: int) -> int:
    if num_edges < 1:
        raise ValueError("graph must have at least one edge")
    inner = _certified_floor(
        lambda: iv.mpf(num_edges - 1) / iv.ln(1 + iv.sqrt(iv.mpf(2)))
    )
    return inner + 1


def wqy_upper_bound(g: Graph) -> int:
    """Edge-count threshold upper bound: floor((|E|-1) / ln(1 + sqrt 2) + 1)."""
    return _wqy_from_edge_count(len(g.edges))


@dataclass(frozen=True)
class BoundReport:
    """Lower and upper threshold bounds for K_{2,l}."""

    l: int
    lower: int
    upper_wqy: int
    upper_thomassen: int
    q_value: int

    def to_json_dict(self) -> dict:
        return {
            "l": self.l,
            "lower": self.lower,
            "upper_wqy": self.upper_wqy,
            "upper_thomassen": str(self.upper_thomassen),
            "q_value": self.q_value,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "BoundReport":
        return cls(
            l=int(d["l"]),
            lower=int(d["lower"]),
            upper_wqy=int(d["upper_wqy"]),
            upper_thomassen=int(d["upper_thomassen"]),
            q_value=int(d["q_value"]),
        )


def threshold_bounds(l: int) -> BoundReport:
    """Assemble the bound report for K_{2,l} (l >= 16): 2+l vertices, 2l edges."""
    if l < 16:
        raise ValueError("bounds reported for l >= 16")
    return BoundReport(
        l=l,
        lower=threshold_lower_bound(l),
        upper_wqy=_wqy_from_edge_count(2 * l),
        upper_thomassen=(l + 2) ** 10 + 1,
        q_value=l // 4,
    )


@dataclass(frozen=True)
class WitnessRecord:
    """A machine-checkable certificate that the threshold of K_{2,l} exceeds m.

    Stores the witness assignment together with its exact count and the
    chromatic polynomial value, so verification needs nothing beyond
    recounting.  Counts serialize as decimal strings (they overflow doubles).
    """

    l: int
    m: int
    assignment: ListAssignment
    count_L: int
    count_m: int
    trace: dict

    def to_json_dict(self) -> dict:
        return {
            "l": self.l,
            "m": self.m,
            "assignment": self.assignment.to_json_dict(),
            "count_L": str(self.count_L),
            "count_m": str(self.count_m),
            "trace": self.trace,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "WitnessRecord":
        return cls(
            l=int(d["l"]),
            m=int(d["m"]),
            assignment=ListAssignment.from_json_dict(d["assignment"]),
            count_L=int(d["count_L"]),
            count_m=int(d["count_m"]),
            trace=dict(d["trace"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "WitnessRecord":
        return cls.from_json_dict(json.loads(text))


def certify_threshold_above(
    l: int, m: int, eps: Fraction = DEFAULT_EPSILON
) -> WitnessRecord:
    """Produce a witness assignment proving the threshold of K_{2,l} exceeds m.

    Picks the least block size t passing the exact seed inequality, builds
    the transversal assignment on K_{2,4t} (n = 2, whose small-side lists
    already match the two-by-l convention -- the color relabeling between the
    general construction and that convention is the identity), then extends
    one vertex at a time up to l keeping the profile balanced.  Requires
    l >= 4t.  The returned record is re-verified internally; a failed check
    raises CertificationError.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    eps = _check_epsilon(eps)
    t = min_seed_blocks(m, eps)
    if l < 4 * t:
        raise ValueError(
            f"l must be >= 4t = {4 * t} for the seed construction at m = {m}, eps = {eps}"
        )
    assignment = transversal_assignment(TransversalParams(n=2, t=t, m=m))
    steps = l - 4 * t
    for _ in range(steps):
        assignment = extend_balanced(assignment, m)
    prof = profile_of(assignment, m)
    count_L = count_for_profile(m, prof)
    count_m = chrompoly_k2l(l, m)
    if not count_L < count_m:
        raise CertificationError(
            f"construction failed to undercut the chromatic polynomial at l={l}, m={m}"
        )
    trace = {
        "t": t,
        "eps": f"{eps.numerator}/{eps.denominator}",
        "base_l": 4 * t,
        "extension_steps": steps,
        "profile": list(prof.zs),
        "relabeling": "identity",
    }
    return WitnessRecord(
        l=l, m=m, assignment=assignment, count_L=count_L, count_m=count_m, trace=trace
    )


def verify_witness(record: WitnessRecord) -> bool:
    """Re-check a certificate from the serialized assignment alone.

    Recounts the witness assignment with the independent bipartite counter,
    recomputes the chromatic polynomial, and confirms the strict gap.
    """
    recount = count_bipartite_fast(2, record.l, record.assignment)
    expected = chrompoly_k2l(record.l, record.m)
    return (
        recount == record.count_L
        and expected == record.count_m
        and record.count_L < record.count_m
    )
