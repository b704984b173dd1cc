"""Octahedral substructure number: witnesses, bounds, and exact search.

An octahedral graph O_t is the complement of a perfect matching on 2t
vertices: t disjoint vertex pairs, each pair a non-edge, every pair of
vertices from different pairs an edge (O_1 is a single non-adjacent pair,
O_2 is the 4-cycle, O_3 the octahedron).  ``tau(g)`` is the largest t such
that g contains an induced O_t; complete graphs have tau = 0.

Three strengths of estimate are provided:

* :func:`greedy_tau_lower` grows an explicit witness pair-by-pair with a
  multi-restart heuristic; the result always passes :func:`verify_witness`.
* :func:`cheap_tau_upper` uses the fact that the two ends of any non-edge
  of an induced O_t see the remaining 2t - 2 vertices as common neighbors,
  so ``tau <= 1 + max over non-edges |N(u) ∩ N(v)| / 2``.
* :func:`exact_tau` solves the problem as maximum clique on the
  compatibility graph H whose vertices are the non-edges of g, two being
  adjacent when endpoint-disjoint with all four cross pairs edges of g;
  ``tau(g) = omega(H)``.  Branch and bound with a greedy-coloring bound
  runs under a node budget and reports ``Unknown`` (with its incumbent)
  when the budget is exhausted.  H is never materialized up front: rows
  are produced on demand and cached only inside subproblems.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

import numpy as np

from .errors import InvalidParameter, InvalidVertex, TooLarge
from .graph import Graph, from_edges

__all__ = [
    "OtWitness",
    "WitnessViolation",
    "Unknown",
    "TauResult",
    "octahedron_graph",
    "verify_witness",
    "witness_violation",
    "cheap_tau_upper",
    "greedy_tau_lower",
    "exact_tau",
    "brute_force_tau",
    "tau",
]


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OtWitness:
    """A claimed induced O_t, given as its t defining non-adjacent pairs."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def t(self) -> int:
        return len(self.pairs)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for pair in self.pairs for v in pair))


@dataclass(frozen=True)
class WitnessViolation:
    """First reason a claimed witness fails, for diagnostics."""

    reason: str
    pair_index: int
    other_index: Optional[int] = None


@dataclass(frozen=True)
class Unknown:
    """Exact value not decided within the node budget.

    ``incumbent`` is the best witness size established before the budget
    ran out, hence a valid lower bound on tau.
    """

    node_limit_hit: bool
    incumbent: int


@dataclass(frozen=True)
class TauResult:
    """Bundle of bounds on tau for one graph.

    ``lower`` (with its verified ``witness``) and ``upper`` always satisfy
    lower <= tau <= upper; when ``exact`` is an int it sits in between.
    ``exact`` is None when exact search was not requested.
    """

    lower: int
    witness: OtWitness
    upper: int
    exact: Union[int, Unknown, None]
    timings: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Explicit octahedra
# ---------------------------------------------------------------------------

def octahedron_graph(t: int) -> tuple[Graph, OtWitness]:
    """O_t on vertices 0..2t-1 with defining pairs (2i, 2i+1)."""
    if t < 1:
        raise InvalidParameter(f"t must be >= 1, got {t}")
    pairs = tuple((2 * i, 2 * i + 1) for i in range(t))
    edges = [(u, v) for u in range(2 * t) for v in range(u + 1, 2 * t)
             if u // 2 != v // 2]
    return from_edges(2 * t, edges), OtWitness(pairs)


# ---------------------------------------------------------------------------
# Witness verification
# ---------------------------------------------------------------------------

def witness_violation(g: Graph, w: OtWitness) -> Optional[WitnessViolation]:
    """None if ``w`` is a valid induced-O_t witness, else the first failure.

    Checked in order: vertex distinctness, each pair being a non-edge, and
    every cross pair between two different pairs being an edge.
    """
    seen: dict[int, int] = {}
    for i, (a, b) in enumerate(w.pairs):
        for v in (a, b):
            if not 0 <= v < g.n:
                raise InvalidVertex(f"vertex {v} out of range [0, {g.n})")
            if v in seen:
                return WitnessViolation("duplicate vertex", i, seen[v])
            seen[v] = i
    for i, (a, b) in enumerate(w.pairs):
        if g.has_edge(a, b):
            return WitnessViolation("pair is an edge", i)
    for i in range(len(w.pairs)):
        a, b = w.pairs[i]
        for j in range(i + 1, len(w.pairs)):
            for x in w.pairs[j]:
                if not (g.has_edge(a, x) and g.has_edge(b, x)):
                    return WitnessViolation("missing cross edge", i, j)
    return None


def verify_witness(g: Graph, w: OtWitness) -> bool:
    """True iff the induced subgraph on ``w``'s 2t vertices is an O_t
    under the given pairing."""
    return witness_violation(g, w) is None


# ---------------------------------------------------------------------------
# Vectorized edge membership
# ---------------------------------------------------------------------------

class _EdgeKeys:
    """Sorted scalar-key table answering 'is (u, v) an edge' for arrays."""

    def __init__(self, g: Graph):
        if g.n >= 2 ** 31:
            raise TooLarge("vertex ids must fit 31 bits")
        self.n = max(int(g.n), 1)
        u = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(g.indptr))
        v = g.indices
        keep = u < v
        # CSR order makes min*n + max ascending already for u < v.
        self.keys = (u[keep] * self.n + v[keep])

    def has(self, a, b) -> np.ndarray:
        key = np.minimum(a, b) * self.n + np.maximum(a, b)
        if len(self.keys) == 0:
            return np.zeros(np.shape(key), dtype=bool)
        pos = np.minimum(np.searchsorted(self.keys, key), len(self.keys) - 1)
        return self.keys[pos] == key


# ---------------------------------------------------------------------------
# Candidate non-edges (pairs at graph distance exactly two)
# ---------------------------------------------------------------------------

def _wedge_scan(g: Graph) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
    """Yield per-vertex arrays (u, partners v > u, common-neighbor counts)
    over all non-adjacent pairs with at least one common neighbor.

    Any induced O_t with t >= 2 consists solely of such pairs, since each
    pair's ends have the other 2t - 2 witness vertices in common.
    """
    indptr, indices = g.indptr, g.indices
    n = g.n
    for u in range(n):
        nb = indices[indptr[u]:indptr[u + 1]]
        if nb.size == 0:
            continue
        two_hop = np.concatenate([indices[indptr[w]:indptr[w + 1]]
                                  for w in nb])
        cnt = np.bincount(two_hop, minlength=n)
        cnt[nb] = 0            # adjacent pairs are not candidates
        cnt[:u + 1] = 0        # one orientation only, and never u itself
        vs = np.nonzero(cnt)[0]
        if vs.size:
            yield u, vs, cnt[vs]


def _has_nonedge(g: Graph) -> bool:
    return g.n >= 2 and g.m < g.n * (g.n - 1) // 2


def _first_nonedge(g: Graph) -> tuple[int, int]:
    """Lexicographically first non-adjacent pair; caller ensures one exists."""
    for u in range(g.n - 1):
        nb = g.neighbors(u)
        later = nb[nb > u]
        if later.size == g.n - 1 - u:
            continue  # u is adjacent to every later vertex
        # neighbors are sorted: find where the run u+1, u+2, ... first breaks
        expected = np.arange(u + 1, u + 1 + later.size)
        gaps = np.nonzero(later != expected)[0]
        v = int(expected[gaps[0]]) if gaps.size else u + 1 + later.size
        return u, int(v)
    raise InvalidParameter("graph is complete; no non-edge exists")


# ---------------------------------------------------------------------------
# Cheap upper bound
# ---------------------------------------------------------------------------

def cheap_tau_upper(g: Graph) -> int:
    """0 for complete graphs, else 1 + floor(max common-neighbor count of a
    non-adjacent pair / 2).

    Sound because the ends of any non-edge of an induced O_t have the other
    2t - 2 witness vertices as common neighbors.
    """
    if not _has_nonedge(g):
        return 0
    best = 0
    for _, _, counts in _wedge_scan(g):
        m = int(counts.max())
        if m > best:
            best = m
    return 1 + best // 2


# ---------------------------------------------------------------------------
# Greedy lower bound
# ---------------------------------------------------------------------------

_COMMON_CAP = 400  # cap on the candidate pool carried between greedy steps


def _top_seed_pairs(g: Graph, k: int) -> list[tuple[int, int, int]]:
    """The k highest-common-count non-adjacent pairs as (count, u, v)."""
    heap: list[tuple[int, int, int]] = []
    for u, vs, counts in _wedge_scan(g):
        take = min(k, vs.size)
        idx = np.argpartition(counts, -take)[-take:] if vs.size > take \
            else np.arange(vs.size)
        for i in idx:
            item = (int(counts[i]), int(u), int(vs[i]))
            if len(heap) < k:
                heapq.heappush(heap, item)
            elif item > heap[0]:
                heapq.heapreplace(heap, item)
    heap.sort(reverse=True)
    return heap


def _grow_witness(g: Graph, seed_pair: tuple[int, int],
                  rng: np.random.Generator) -> list[tuple[int, int]]:
    """Extend one seed non-edge into a maximal-by-inclusion witness."""
    pairs = [seed_pair]
    a, b = seed_pair
    common = np.intersect1d(g.neighbors(a), g.neighbors(b))
    while common.size >= 2:
        c = common
        if c.size > _COMMON_CAP:
            # keep the vertices best connected inside the pool
            deg_in = np.array([np.isin(g.neighbors(x), c).sum() for x in c])
            c = c[np.argsort(deg_in, kind="stable")[-_COMMON_CAP:]]
            c.sort()
        adj = np.zeros((c.size, c.size), dtype=bool)
        for i, x in enumerate(c):
            adj[i] = np.isin(c, g.neighbors(x))
        nonadj = ~adj & np.triu(np.ones_like(adj), k=1)
        if not nonadj.any():
            break
        # float32 matmul hits BLAS; counts stay far below 2^24 so it is exact
        f = adj.astype(np.float32)
        within = (f @ f).astype(np.int64)
        scores = np.where(nonadj, within, -1)
        best = scores.max()
        ties = np.argwhere(scores == best)
        pick = ties[0] if len(ties) == 1 else ties[rng.integers(len(ties))]
        i, j = int(pick[0]), int(pick[1])
        u, v = int(c[i]), int(c[j])
        pairs.append((u, v))
        common = c[adj[i] & adj[j]]
    return pairs


def greedy_tau_lower(g: Graph, restarts: int = 8, seed: int = 0) -> OtWitness:
    """Best verified witness over multi-restart greedy growth.

    Each restart seeds with one of the highest-common-neighbor-count
    non-adjacent pairs, then repeatedly adds the non-adjacent pair of the
    surviving common pool with the most common neighbors inside the pool
    (ties broken by the restart's generator).  Returns an empty witness on
    complete graphs.
    """
    if restarts < 1:
        raise InvalidParameter(f"restarts must be >= 1, got {restarts}")
    if not _has_nonedge(g):
        return OtWitness(())
    seeds = _top_seed_pairs(g, restarts)
    if not seeds:
        # every non-edge has empty common neighborhood: any one is an O_1
        return OtWitness((_first_nonedge(g),))
    best: list[tuple[int, int]] = []
    for r, (_, u, v) in enumerate(seeds):
        rng = np.random.default_rng((seed, r))
        pairs = _grow_witness(g, (u, v), rng)
        if len(pairs) > len(best):
            best = pairs
    w = OtWitness(tuple(best))
    bad = witness_violation(g, w)
    if bad is not None:  # pragma: no cover - internal consistency guard
        raise AssertionError(f"greedy produced an invalid witness: {bad}")
    return w


# ---------------------------------------------------------------------------
# Exact value: maximum clique on the non-edge compatibility graph
# ---------------------------------------------------------------------------

class _SearchState:
    __slots__ = ("best", "best_pairs", "nodes", "node_limit", "limit_hit")

    def __init__(self, best: int, node_limit: int):
        self.best = best
        self.best_pairs: list[tuple[int, int]] = []
        self.nodes = 0
        self.node_limit = node_limit
        self.limit_hit = False

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes > self.node_limit:
            self.limit_hit = True
        return self.limit_hit


def _compat_mask(a: int, b: int, A: np.ndarray, B: np.ndarray,
                 ek: _EdgeKeys) -> np.ndarray:
    """Which non-edges (A[i], B[i]) are compatible with the non-edge (a, b):
    endpoint-disjoint and all four cross pairs edges."""
    m = (A != a) & (A != b) & (B != a) & (B != b)
    if not m.any():
        return m
    m &= ek.has(a, A) & ek.has(a, B) & ek.has(b, A) & ek.has(b, B)
    return m


def _pack_bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(),
                          "little")


class _Subproblem:
    """Clique search over one candidate subset, with cached bitset rows."""

    def __init__(self, ids: np.ndarray, A: np.ndarray, B: np.ndarray,
                 ek: _EdgeKeys, root_pair: tuple[int, int],
                 state: _SearchState):
        self.ids = ids
        self.A = A[ids]
        self.B = B[ids]
        self.ek = ek
        self.root_pair = root_pair
        self.state = state
        self.rows: dict[int, int] = {}
        self.stack: list[int] = []

    def row(self, v: int) -> int:
        r = self.rows.get(v)
        if r is None:
            m = _compat_mask(int(self.A[v]), int(self.B[v]),
                             self.A, self.B, self.ek)
            r = _pack_bits(m)
            self.rows[v] = r
        return r

    def record(self, size: int) -> None:
        st = self.state
        st.best = size
        st.best_pairs = [self.root_pair] + [
            (int(self.A[v]), int(self.B[v])) for v in self.stack]

    def run(self) -> None:
        full = (1 << len(self.ids)) - 1
        self.bnb(full, 1)

    def bnb(self, P: int, size: int) -> None:
        st = self.state
        if st.tick():
            return
        if P == 0:
            if size > st.best:
                self.record(size)
            return
        # greedy coloring: bound = color index, ascending along `order`
        order: list[int] = []
        cutoff: list[int] = []
        color = 0
        rest = P
        while rest:
            color += 1
            avail = rest
            while avail:
                bit = avail & -avail
                v = bit.bit_length() - 1
                order.append(v)
                cutoff.append(color)
                avail &= ~self.row(v)
                avail ^= bit
                rest ^= bit
        for i in range(len(order) - 1, -1, -1):
            if size + cutoff[i] <= st.best:
                return
            if st.limit_hit:
                return
            v = order[i]
            self.stack.append(v)
            self.bnb(P & self.row(v), size + 1)
            self.stack.pop()
            P &= ~(1 << v)


_CANDIDATE_LIMIT = 5_000_000


def _solve_tau(g: Graph, node_limit: int, warm_start: int,
               warm_pairs: tuple[tuple[int, int], ...]
               ) -> tuple[Union[int, Unknown], list[tuple[int, int]]]:
    """Exact tau by branch and bound; see :func:`exact_tau`."""
    if not _has_nonedge(g):
        return 0, []
    # floor: any single non-edge is an O_1
    best_pairs = list(warm_pairs)
    incumbent = warm_start
    if incumbent < 1:
        incumbent = 1
        best_pairs = [_first_nonedge(g)]

    a_parts, b_parts, c_parts = [], [], []
    total = 0
    for u, vs, counts in _wedge_scan(g):
        total += vs.size
        if total > _CANDIDATE_LIMIT:
            return Unknown(node_limit_hit=True,
                           incumbent=incumbent), best_pairs
        a_parts.append(np.full(vs.size, u, dtype=np.int64))
        b_parts.append(vs.astype(np.int64))
        c_parts.append(counts)
    if total == 0:
        return incumbent, best_pairs  # only isolated non-edges: tau = 1
    A = np.concatenate(a_parts)
    B = np.concatenate(b_parts)
    ub = 1 + np.concatenate(c_parts) // 2
    keys = A * np.int64(max(g.n, 1)) + B  # ascending by construction

    ek = _EdgeKeys(g)
    st = _SearchState(incumbent, node_limit)
    st.best_pairs = best_pairs
    order = np.argsort(ub, kind="stable")
    rank = np.empty(len(order), dtype=np.int64)
    rank[order] = np.arange(len(order))
    for pos in range(len(order) - 1, -1, -1):
        v = int(order[pos])
        if int(ub[v]) <= st.best:
            break  # ascending order: everything left is no better
        if st.tick():
            break
        a, b = int(A[v]), int(B[v])
        root_pair = (a, b)
        # Everything compatible with (a, b) has both ends adjacent to both
        # a and b, i.e. inside their common neighborhood — search only there.
        common = np.intersect1d(g.neighbors(a), g.neighbors(b),
                                assume_unique=True)
        ids = np.empty(0, dtype=np.int64)
        if common.size >= 2:
            iu, iv = np.triu_indices(common.size, k=1)
            cu, cv = common[iu], common[iv]
            keep = ~ek.has(cu, cv)  # candidate = non-adjacent pair
            k2 = cu[keep] * np.int64(max(g.n, 1)) + cv[keep]
            p = np.minimum(np.searchsorted(keys, k2), len(keys) - 1)
            p = p[keys[p] == k2]
            ids = p[rank[p] < pos]
        if ids.size == 0:
            if 1 > st.best:
                st.best = 1
                st.best_pairs = [root_pair]
            continue
        _Subproblem(ids, A, B, ek, root_pair, st).run()
        if st.limit_hit:
            break
    if st.limit_hit:
        return Unknown(node_limit_hit=True, incumbent=st.best), st.best_pairs
    return st.best, st.best_pairs


def exact_tau(g: Graph, node_limit: int = 10_000_000) -> Union[int, Unknown]:
    """tau(g), or ``Unknown`` carrying the incumbent if the branch-and-bound
    node budget is exhausted first.

    The search runs over pairs at graph distance exactly two (every O_t
    with t >= 2 lives there), with a per-candidate bound
    1 + common-neighbors/2 pruning the outer loop and greedy coloring
    pruning the subtrees; a single non-edge anywhere floors the value at 1.
    """
    if node_limit < 1:
        raise InvalidParameter(f"node_limit must be >= 1, got {node_limit}")
    value, _ = _solve_tau(g, node_limit, 0, ())
    return value


def brute_force_tau(g: Graph) -> int:
    """Exhaustive maximum over all sets of compatible non-edges (n <= 10).

    Written directly from the definition, independent of the search code,
    as the testing oracle.
    """
    if g.n > 10:
        raise TooLarge("brute-force tau is capped at 10 vertices")
    nbr = [set(map(int, g.neighbors(v))) for v in range(g.n)]
    nonedges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                if v not in nbr[u]]

    def compatible(e, f):
        a, b = e
        c, d = f
        if len({a, b, c, d}) < 4:
            return False
        return (c in nbr[a] and d in nbr[a] and c in nbr[b] and d in nbr[b])

    best = 0

    def extend(start: int, chosen: list) -> None:
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(nonedges)):
            e = nonedges[i]
            if all(compatible(e, f) for f in chosen):
                chosen.append(e)
                extend(i + 1, chosen)
                chosen.pop()

    extend(0, [])
    return best


# ---------------------------------------------------------------------------
# Assembled result
# ---------------------------------------------------------------------------

def tau(g: Graph, *, exact: bool = False, node_limit: int = 10_000_000,
        restarts: int = 8, seed: int = 0) -> TauResult:
    """Greedy lower bound with witness, cheap upper bound, and (on request)
    the exact value, with per-stage wall times."""
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    witness = greedy_tau_lower(g, restarts=restarts, seed=seed)
    timings["lower"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    upper = cheap_tau_upper(g)
    timings["upper"] = time.perf_counter() - t0
    lower = witness.t
    if lower > upper:  # pragma: no cover - internal consistency guard
        raise AssertionError(f"bound inversion: greedy {lower} > cheap {upper}")
    exact_value: Union[int, Unknown, None] = None
    if exact:
        t0 = time.perf_counter()
        exact_value, pairs = _solve_tau(g, node_limit, lower, witness.pairs)
        timings["exact"] = time.perf_counter() - t0
        found = exact_value.incumbent if isinstance(exact_value, Unknown) \
            else exact_value
        if found > lower and pairs:
            improved = OtWitness(tuple(pairs))
            if witness_violation(g, improved) is None:
                witness, lower = improved, improved.t
        if isinstance(exact_value, int) and not lower <= exact_value <= upper:
            # pragma: no cover - internal consistency guard
            raise AssertionError(
                f"bounds violated: {lower} <= {exact_value} <= {upper}")
    return TauResult(lower=lower, witness=witness, upper=upper,
                     exact=exact_value, timings=timings)
