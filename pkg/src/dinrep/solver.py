"""Exact minimum-palette computation by iterative deepening.

For each candidate palette size k = 1, 2, ... the solver decides whether a
valid representation exists using colors 0..k-1.  The first feasible k is
the exact answer, certified by the exhausted searches below it.

The decision search runs in two phases over the deterministic left-to-right
vertex order (all in-neighbors of a vertex precede it):

* enumerate size functions s(v) in [1, k] that strictly increase along
  every arc -- and, since sizes increase along whole paths, along every
  reachable pair -- with s(v) >= gamma(v) + 1 and s(v) <= k minus the
  longest path leaving v.  A size function where some pairwise non-adjacent
  set with pairwise distinct sizes sums above k is discarded (those sets
  must be pairwise disjoint).

* backtracking set assignment: each vertex takes s(v) colors, reusing old
  colors where allowed and introducing fresh colors only as the next unused
  ids (canonical introduction order breaks color symmetry).  Non-adjacent
  vertices with different sizes must stay disjoint; every in-neighbor must
  be hit by a reused color.

Everything is deterministic: fixed orders, fixed enumeration, no RNG.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from itertools import combinations

from .digraph import Digraph, is_acyclic, left_to_right_order
from .errors import BudgetExhaustedError, CyclicGraphError
from .representation import Representation, canonicalize

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SolveBudget:
    """Caps on the exact search: explored nodes and deepening ceiling."""

    max_nodes: int = 100_000_000
    max_palette: int = 64

    def __post_init__(self):
        if self.max_nodes < 1 or self.max_palette < 1:
            raise ValueError("budget fields must be positive")


DEFAULT_BUDGET = SolveBudget()


@dataclass(frozen=True)
class SolveResult:
    status: str  # one of OPTIMAL, INFEASIBLE, BUDGET_EXHAUSTED
    din: int | None
    witness: Representation | None
    nodes_explored: int
    elapsed: float
    best_upper: int | None = None


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool | None  # None means unknown (budget ran out)
    witness: Representation | None
    nodes_explored: int


class _OutOfNodes(Exception):
    pass


def _maximal_nonadjacent_cliques(n: int, adj: list[int]) -> list[int]:
    """Maximal cliques (as bitmasks, size >= 2) of the non-adjacency graph."""
    comp = [(~adj[i]) & (((1 << n) - 1) ^ (1 << i)) for i in range(n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            if r.bit_count() >= 2:
                out.append(r)
            return
        pivot = (p | x).bit_length() - 1
        candidates = p & ~comp[pivot]
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            expand(r | low, p & comp[v], x & comp[v])
            p &= ~low
            x |= low
            candidates &= ~low
    expand(0, (1 << n) - 1, 0)
    return out


class _Search:
    """Search state for one digraph; reusable across deepening levels."""

    def __init__(self, D: Digraph, max_nodes: int):
        n = D.n
        self.n = n
        self.order = left_to_right_order(D)
        posmap = {v: i for i, v in enumerate(self.order)}
        arcs = {(posmap[u], posmap[v]) for u, v in D.arcs}
        self.in_prev = [tuple(q for q in range(i) if (q, i) in arcs) for i in range(n)]
        out_next = [tuple(j for j in range(i + 1, n) if (i, j) in arcs) for i in range(n)]
        adj = [0] * n
        for i, j in arcs:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self.adj = adj
        anc = [0] * n
        gamma = [0] * n
        for i in range(n):
            m = 0
            g = 0
            for q in self.in_prev[i]:
                m |= anc[q] | (1 << q)
                g = max(g, gamma[q] + 1)
            anc[i] = m
            gamma[i] = g
        self.anc = anc
        self.gamma = gamma
        h_out = [0] * n
        for i in range(n - 1, -1, -1):
            h_out[i] = max((h_out[j] + 1 for j in out_next[i]), default=0)
        self.h_out = h_out
        # the clique prune is optional for correctness; skip the
        # enumeration where the complement graph could blow it up
        self.cliques = _maximal_nonadjacent_cliques(n, adj) if n <= 24 else []
        self.nodes = 0
        self.max_nodes = max_nodes
        # per-run state
        self.k = 0
        self.sizes = [0] * n
        self.phi = [0] * n
        self.used = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _OutOfNodes

    def run(self, k: int) -> list[int] | None:
        """Color masks (position-indexed) for palette [0, k), or None."""
        self.k = k
        if any(self.gamma[i] + 1 > k - self.h_out[i] for i in range(self.n)):
            return None
        if self._sizes_dfs(0):
            return list(self.phi)
        return None

    def _sizes_dfs(self, p: int) -> bool:
        self._tick()
        n, k, sizes = self.n, self.k, self.sizes
        if p == n:
            for clique in self.cliques:
                distinct = set()
                m = clique
                while m:
                    low = m & -m
                    distinct.add(sizes[low.bit_length() - 1])
                    m &= ~low
                if sum(distinct) > k:
                    return False
            self.used = 0
            return self._assign_dfs(0)
        lo = self.gamma[p] + 1
        m = self.anc[p]
        while m:
            low = m & -m
            q = low.bit_length() - 1
            if sizes[q] >= lo:
                lo = sizes[q] + 1
            m &= ~low
        hi = k - self.h_out[p]
        for value in range(lo, hi + 1):
            sizes[p] = value
            if self._sizes_dfs(p + 1):
                return True
        sizes[p] = 0
        return False

    def _forbidden(self, w: int, upto: int) -> int:
        """Colors of assigned vertices that must stay disjoint from w."""
        adj_w = self.adj[w]
        s_w = self.sizes[w]
        forb = 0
        for q in range(upto):
            if not (adj_w >> q) & 1 and self.sizes[q] != s_w:
                forb |= self.phi[q]
        return forb

    def _future_ok(self, p: int) -> bool:
        # every unassigned vertex must still be able to reach its size and
        # to intersect each already-assigned in-neighbor
        k = self.k
        spare = k - self.used
        old = (1 << self.used) - 1
        for w in range(p + 1, self.n):
            forb = self._forbidden(w, p + 1)
            if self.sizes[w] > (old & ~forb).bit_count() + spare:
                return False
            for q in self.in_prev[w]:
                if q <= p and not (self.phi[q] & ~forb):
                    return False
        return True

    def _assign_dfs(self, p: int) -> bool:
        self._tick()
        if p == self.n:
            return True
        k = self.k
        s_p = self.sizes[p]
        allowed = ((1 << self.used) - 1) & ~self._forbidden(p, p)
        need = []
        for q in self.in_prev[p]:
            m = self.phi[q] & allowed
            if not m:
                return False
            need.append(m)
        abits = []
        m = allowed
        while m:
            low = m & -m
            abits.append(low)
            m &= ~low
        saved_used = self.used
        t_min = max(0, s_p - len(abits))
        t_max = min(s_p, k - saved_used)
        for t in range(t_min, t_max + 1):
            reuse = s_p - t
            fresh = ((1 << t) - 1) << saved_used
            for combo in combinations(abits, reuse):
                self._tick()
                mask = fresh
                for bit in combo:
                    mask |= bit
                ok = True
                for req in need:
                    if not (mask & req):
                        ok = False
                        break
                if not ok:
                    continue
                self.phi[p] = mask
                self.used = saved_used + t
                if self._future_ok(p) and self._assign_dfs(p + 1):
                    return True
        self.phi[p] = 0
        self.used = saved_used
        return False

    def masks_to_representation(self, masks: list[int]) -> Representation:
        mapping = {}
        for p, vertex in enumerate(self.order):
            mask = masks[p]
            colors = set()
            while mask:
                low = mask & -mask
                colors.add(low.bit_length() - 1)
                mask &= ~low
            mapping[vertex] = colors
        return Representation.from_mapping(self.n, mapping)


def exact_din(D: Digraph, budget: SolveBudget | None = None) -> SolveResult:
    """Exact minimum palette size, with a verified witness.

    Cyclic inputs are reported infeasible immediately.  Otherwise the
    deepening loop proves every k below the answer infeasible, so an
    ``optimal`` result is a completeness certificate as well as a witness.
    """
    budget = budget or DEFAULT_BUDGET
    start = time.perf_counter()
    if not is_acyclic(D):
        return SolveResult(INFEASIBLE, None, None, 0, time.perf_counter() - start)
    search = _Search(D, budget.max_nodes)
    try:
        for k in range(1, budget.max_palette + 1):
            masks = search.run(k)
            if masks is not None:
                witness = canonicalize(search.masks_to_representation(masks))
                return SolveResult(
                    OPTIMAL, k, witness, search.nodes, time.perf_counter() - start
                )
    except _OutOfNodes:
        pass
    return SolveResult(
        BUDGET_EXHAUSTED, None, None, search.nodes, time.perf_counter() - start
    )


def feasible_with_palette(
    D: Digraph, k: int, budget: SolveBudget | None = None
) -> FeasibilityResult:
    """Decide whether some valid representation uses at most k colors.

    Tri-state: yes (with witness), no, or unknown when the node budget runs
    out first.
    """
    if k < 1:
        raise ValueError(f"palette size must be >= 1, got {k}")
    budget = budget or DEFAULT_BUDGET
    if not is_acyclic(D):
        raise CyclicGraphError("feasibility is defined for acyclic digraphs")
    search = _Search(D, budget.max_nodes)
    try:
        masks = search.run(k)
    except _OutOfNodes:
        return FeasibilityResult(None, None, search.nodes)
    if masks is None:
        return FeasibilityResult(False, None, search.nodes)
    witness = canonicalize(search.masks_to_representation(masks))
    return FeasibilityResult(True, witness, search.nodes)


# ---------------------------------------------------------------------------
# exhaustive extremal enumeration at desk scale


def _all_forward_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _graph_for_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Digraph:
    return Digraph(n, {pairs[b] for b in range(len(pairs)) if (mask >> b) & 1})


def _solve_mask(args: tuple[int, int, SolveBudget]) -> tuple[int, int | None]:
    n, mask, budget = args
    pairs = _all_forward_pairs(n)
    result = exact_din(_graph_for_mask(n, pairs, mask), budget)
    return mask, result.din


def extremal_din(
    n: int,
    budget: SolveBudget | None = None,
    *,
    workers: int | None = None,
    allow_n6: bool = False,
) -> tuple[int, list[Digraph]]:
    """Largest exact palette over all DAGs on n vertices, with witnesses.

    Every DAG appears among the arc subsets of the complete DAG on ordered
    vertices under some topological labeling, so enumerating the
    2^(n(n-1)/2) labeled subsets covers all of them.  No isomorphism
    reduction is attempted; at this scale correctness beats cleverness.
    n = 6 (32768 solves) must be opted into explicitly.
    """
    cap = 6 if allow_n6 else 5
    if not 2 <= n <= cap:
        raise ValueError(f"extremal enumeration supports 2 <= n <= {cap}, got {n}")
    budget = budget or DEFAULT_BUDGET
    pairs = _all_forward_pairs(n)
    total = 1 << len(pairs)
    results: dict[int, int | None] = {}
    if workers and workers > 1:
        with multiprocessing.Pool(workers) as pool:
            jobs = ((n, mask, budget) for mask in range(total))
            for mask, din in pool.imap_unordered(_solve_mask, jobs, chunksize=64):
                results[mask] = din
    else:
        for mask in range(total):
            results[mask] = _solve_mask((n, mask, budget))[1]
    exhausted = [mask for mask, din in results.items() if din is None]
    if exhausted:
        raise BudgetExhaustedError(
            f"budget exhausted on {len(exhausted)} of {total} digraphs (n={n})"
        )
    best = max(results.values())
    witnesses = [
        _graph_for_mask(n, pairs, mask)
        for mask in range(total)
        if results[mask] == best
    ]
    return best, witnesses
