"""Exact structural decisions for prime coprime graphs.

Most predicates are decided twice: once from the graph (BFS, flow, search)
and once from the group's order profile via the matching characterization.
The two routes are cross-asserted; a disagreement raises CrossCheckError,
which always signals an implementation bug rather than bad input.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
import numpy as np

from .graph import ThetaGraph, min_degree, prime_order_set
from .numtheory import is_one_or_prime, is_prime

__all__ = [
    "ConnectivityResult",
    "CrossCheckError",
    "HamiltonianVerdict",
    "components_after_removal",
    "diameter",
    "domination_number",
    "girth",
    "is_complete",
    "is_connected",
    "is_eulerian",
    "is_hamiltonian",
    "is_planar",
    "is_singleton_dominating",
    "open_problem_classify",
    "planarity_decision",
    "validate_cycle",
    "vertex_connectivity",
]

DEFAULT_NODE_BUDGET = 10_000_000


class CrossCheckError(RuntimeError):
    """A graph computation disagreed with its group-theoretic criterion.

    On constructor-built groups this always signals an implementation bug.
    On a user-supplied order list it can instead mean the list is not the
    order profile of any finite group (the theorems presuppose one); the
    message says so in that case.
    """


def _cross_check_failed(t: ThetaGraph, detail: str) -> CrossCheckError:
    if t.group.family == "custom":
        detail += (
            "; the supplied order list is likely not the order profile of any"
            " finite group"
        )
    return CrossCheckError(detail)


# ---------------------------------------------------------------------------
# connectivity, distance, girth
# ---------------------------------------------------------------------------


def _bfs_distances(t: ThetaGraph, src: int) -> np.ndarray:
    n = t.n_vertices
    dist = np.full(n, -1, dtype=np.int64)
    dist[src] = 0
    q = deque([src])
    while q:
        u = q.popleft()
        for w in np.flatnonzero(t.adj[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(int(w))
    return dist


def is_connected(t: ThetaGraph) -> bool:
    return bool((_bfs_distances(t, 0) >= 0).all())


def diameter(t: ThetaGraph) -> int:
    """Longest shortest-path distance; only defined on connected graphs.

    Fast path: these graphs are almost always of diameter <= 2, which a
    boolean A | A^2 coverage test decides without all-pairs BFS.
    """
    n = t.n_vertices
    if not is_connected(t):
        raise ValueError("diameter is undefined for a disconnected graph")
    if n == 1:
        return 0
    a = t.adj
    if bool((a | np.eye(n, dtype=bool)).all()):
        return 1
    within2 = a | (a @ a)
    np.fill_diagonal(within2, True)
    if within2.all():
        return 2
    return max(int(_bfs_distances(t, src).max()) for src in range(n))


def girth(t: ThetaGraph):
    """Length of a shortest cycle, or math.inf for forests.

    A triangle test via A & A^2 settles girth 3 immediately; otherwise BFS
    from every vertex, where a non-tree edge (u, w) closes a cycle of
    length dist[u] + dist[w] + 1. The minimum over all roots is exact for
    unweighted graphs.
    """
    n = t.n_vertices
    if n >= 3 and bool((t.adj & (t.adj @ t.adj)).any()):
        return 3
    best = math.inf
    for src in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[src] = 0
        q = deque([src])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                continue
            for w in np.flatnonzero(t.adj[u]):
                w = int(w)
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3
    return best


def components_after_removal(t: ThetaGraph, removed) -> int:
    """Connected components of the subgraph induced on V minus removed."""
    removed = set(removed)
    n = t.n_vertices
    seen = [False] * n
    count = 0
    for start in range(n):
        if start in removed or seen[start]:
            continue
        count += 1
        seen[start] = True
        q = deque([start])
        while q:
            u = q.popleft()
            for w in np.flatnonzero(t.adj[u]):
                w = int(w)
                if not seen[w] and w not in removed:
                    seen[w] = True
                    q.append(w)
    return count


# ---------------------------------------------------------------------------
# dual-criterion predicates
# ---------------------------------------------------------------------------


def is_eulerian(t: ThetaGraph) -> bool:
    """Eulerian iff connected with all degrees even iff (group side)
    |G| is odd and every non-identity element has prime order."""
    graph_side = is_connected(t) and bool((t.degrees % 2 == 0).all())
    orders = t.group.orders
    group_side = (len(orders) % 2 == 1) and all(
        is_prime(o) for i, o in enumerate(orders) if i != t.group.identity_index
    )
    if graph_side != group_side:
        raise _cross_check_failed(
            t,
            f"eulerian criteria disagree on {t.group.describe()}: "
            f"graph={graph_side} group={group_side}",
        )
    return graph_side


def is_complete(t: ThetaGraph) -> bool:
    """Complete iff the group has no element of composite order."""
    n = t.n_vertices
    graph_side = t.edge_count == n * (n - 1) // 2
    group_side = all(is_one_or_prime(o) for o in t.group.orders)
    if graph_side != group_side:
        raise _cross_check_failed(
            t,
            f"completeness criteria disagree on {t.group.describe()}: "
            f"graph={graph_side} group={group_side}",
        )
    return graph_side


def is_singleton_dominating(t: ThetaGraph, v: int) -> bool:
    """{v} dominates iff o(v) is 1 or prime iff v is adjacent to all others."""
    if not 0 <= v < t.n_vertices:
        raise IndexError(f"vertex index out of range: {v}")
    group_side = is_one_or_prime(t.group.orders[v])
    graph_side = int(t.degrees[v]) == t.n_vertices - 1
    if graph_side != group_side:
        raise _cross_check_failed(
            t, f"domination criteria disagree on {t.group.describe()} at vertex {v}"
        )
    return graph_side


def domination_number(t: ThetaGraph) -> tuple[int, frozenset[int]]:
    """Always 1, witnessed by the identity (a universal vertex)."""
    e = t.group.identity_index
    if not is_singleton_dominating(t, e):
        raise CrossCheckError("identity vertex fails to dominate")
    return 1, frozenset({e})


# ---------------------------------------------------------------------------
# planarity
# ---------------------------------------------------------------------------


def planarity_decision(t: ThetaGraph) -> tuple[bool, str]:
    """Exact planarity plus the method that decided it.

    Dense graphs are rejected by the edge bound |E| > 3|V| - 6; everything
    else goes through the left-right planarity test.
    """
    n, m = t.n_vertices, t.edge_count
    if n >= 3 and m > 3 * n - 6:
        return False, "euler_bound"
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(t.edges())
    ok, _ = nx.check_planarity(g, counterexample=False)
    return bool(ok), "left_right"


def is_planar(t: ThetaGraph) -> bool:
    return planarity_decision(t)[0]


# ---------------------------------------------------------------------------
# hamiltonicity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HamiltonianVerdict:
    status: str  # yes | no | inconclusive
    cycle: tuple[int, ...] | None
    method: str  # exact_search | ore_sufficient | toughness_refuted
    nodes_explored: int
    witness_cut: frozenset[int] | None = None


def validate_cycle(t: ThetaGraph, cycle) -> bool:
    """A Hamiltonian cycle visits every vertex once with all hops adjacent."""
    n = t.n_vertices
    if cycle is None or len(cycle) != n or len(set(cycle)) != n or n < 3:
        return False
    return all(t.adj[cycle[k], cycle[(k + 1) % n]] for k in range(n))


def _nonadjacent_pairs(t: ThetaGraph):
    n = t.n_vertices
    for i in range(n):
        for j in range(i + 1, n):
            if not t.adj[i, j]:
                yield i, j


def _ore_condition_holds(t: ThetaGraph) -> bool:
    n = t.n_vertices
    return all(t.degrees[i] + t.degrees[j] >= n for i, j in _nonadjacent_pairs(t))


def _ore_cycle(t: ThetaGraph) -> tuple[int, ...]:
    """Constructive cycle under Ore's condition.

    Start from the trivial cycle of the complete closure and strip the
    missing edges one by one; whenever the cycle uses a missing edge (u, v),
    the degree-sum bound guarantees a crossing pair that lets the cycle be
    rewired without it.
    """
    n = t.n_vertices
    cycle = list(range(n))
    extra = {(i, j) for i, j in _nonadjacent_pairs(t)}

    def linked(a: int, b: int) -> bool:
        if t.adj[a, b]:
            return True
        return (a, b) in extra or (b, a) in extra

    for e in sorted(extra):
        extra.discard(e)
        u, v = e
        pos = {x: k for k, x in enumerate(cycle)}
        ku, kv = pos[u], pos[v]
        if (kv - ku) % n == 1:
            pass  # cycle runs u -> v
        elif (ku - kv) % n == 1:
            u, v = v, u
            ku, kv = kv, ku
        else:
            continue  # cycle does not use this edge
        # path x_0..x_{n-1} from u to v around the other side of the cycle
        path = list(reversed(cycle[kv:] + cycle[:kv]))
        rewired = False
        for j in range(1, n - 1):
            if linked(u, path[j + 1]) and linked(v, path[j]):
                cycle = path[: j + 1] + path[j + 1 :][::-1]
                rewired = True
                break
        if not rewired:
            raise CrossCheckError("Ore rewiring failed; degree-sum bound violated")
    if not validate_cycle(t, cycle):
        raise CrossCheckError("Ore construction produced an invalid cycle")
    return tuple(cycle)


def _toughness_refutation(t: ThetaGraph) -> tuple[frozenset[int], int] | None:
    """Try the 1-toughness splits suggested by the order profile.

    Candidates: the complement of each composite-order class (elements of
    one composite order are pairwise non-adjacent), and the prime-order set
    S(G). If removing a candidate leaves more components than vertices
    removed, the graph is not 1-tough, hence not Hamiltonian.
    """
    n = t.n_vertices
    orders = t.group.orders
    candidates: list[frozenset[int]] = []
    for d in sorted({o for o in orders if not is_one_or_prime(o)}):
        cls = frozenset(i for i, o in enumerate(orders) if o == d)
        candidates.append(frozenset(range(n)) - cls)
    candidates.append(frozenset(prime_order_set(t).indices))
    for cut in candidates:
        if not cut or len(cut) >= n:
            continue
        comps = components_after_removal(t, cut)
        if comps > len(cut):
            return cut, comps
    return None


def _hamiltonian_search(t: ThetaGraph, node_budget: int) -> tuple[str, tuple[int, ...] | None, int]:
    """Exact backtracking over vertices in ascending-degree order."""
    n = t.n_vertices
    order = sorted(range(n), key=lambda v: (int(t.degrees[v]), v))
    start = order[0]
    rank = {v: k for k, v in enumerate(order)}
    nbrs = [sorted((int(w) for w in t.neighbors(v)), key=lambda w: rank[w]) for v in range(n)]
    used = [False] * n
    used[start] = True
    path = [start]
    nodes = 0

    def dfs() -> bool | None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            return None
        v = path[-1]
        if len(path) == n:
            return bool(t.adj[v, start])
        for w in nbrs[v]:
            if used[w]:
                continue
            used[w] = True
            path.append(w)
            res = dfs()
            if res:
                return True
            used[w] = False
            path.pop()
            if res is None:
                return None
        return False

    res = dfs()
    if res is None:
        return "inconclusive", None, nodes
    if res:
        return "yes", tuple(path), nodes
    return "no", None, nodes


def is_hamiltonian(t: ThetaGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> HamiltonianVerdict:
    """Decide Hamiltonicity: Ore bound, then 1-toughness refutation, then
    budgeted exact search. A yes always carries a certificate cycle and a
    toughness-based no carries the separating set."""
    n = t.n_vertices
    if n < 3:
        return HamiltonianVerdict("no", None, "exact_search", 0)
    if not is_connected(t):
        return HamiltonianVerdict("no", None, "exact_search", 0)
    if _ore_condition_holds(t):
        return HamiltonianVerdict("yes", _ore_cycle(t), "ore_sufficient", 0)
    refutation = _toughness_refutation(t)
    if refutation is not None:
        cut, _ = refutation
        return HamiltonianVerdict("no", None, "toughness_refuted", 0, witness_cut=cut)
    status, cycle, nodes = _hamiltonian_search(t, node_budget)
    if status == "yes" and not validate_cycle(t, cycle):
        raise CrossCheckError("search produced an invalid Hamiltonian cycle")
    return HamiltonianVerdict(status, cycle, "exact_search", nodes)


# ---------------------------------------------------------------------------
# vertex connectivity (Menger via unit-capacity max-flow)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    witness_cut: frozenset[int] | None  # absent for complete graphs
    method: str  # complete_rule | max_flow


class _SplitFlowNet:
    """Vertex-split digraph: x_in = 2x, x_out = 2x+1; split arcs carry
    capacity 1, connection arcs are effectively uncapacitated so a minimum
    cut consists of split arcs only."""

    def __init__(self, t: ThetaGraph):
        n = t.n_vertices
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.graph: list[list[int]] = [[] for _ in range(2 * n)]
        big = n + 1
        for x in range(n):
            self._add(2 * x, 2 * x + 1, 1)
        for a, b in t.edges():
            self._add(2 * a + 1, 2 * b, big)
            self._add(2 * b + 1, 2 * a, big)

    def _add(self, u: int, v: int, c: int) -> None:
        self.graph[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(c)
        self.graph[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)

    def reset(self, base_cap: list[int]) -> None:
        self.cap = base_cap.copy()

    def max_flow(self, s: int, sink: int) -> int:
        flow = 0
        while True:
            pred = self._bfs(s, sink)
            if pred is None:
                return flow
            bottleneck = min(self.cap[eid] for eid in self._path_edges(pred, sink))
            for eid in self._path_edges(pred, sink):
                self.cap[eid] -= bottleneck
                self.cap[eid ^ 1] += bottleneck
            flow += bottleneck

    def _bfs(self, s: int, sink: int):
        pred = [-1] * (2 * self.n)
        pred[s] = -2
        q = deque([s])
        while q:
            u = q.popleft()
            for eid in self.graph[u]:
                v = self.head[eid]
                if pred[v] == -1 and self.cap[eid] > 0:
                    pred[v] = eid
                    if v == sink:
                        return pred
                    q.append(v)
        return None

    def _path_edges(self, pred, sink):
        v = sink
        while pred[v] != -2:
            eid = pred[v]
            yield eid
            v = self.head[eid ^ 1]

    def min_cut_vertices(self, s: int) -> frozenset[int]:
        """After max_flow: vertices whose split arc crosses the cut."""
        seen = [False] * (2 * self.n)
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for eid in self.graph[u]:
                v = self.head[eid]
                if not seen[v] and self.cap[eid] > 0:
                    seen[v] = True
                    q.append(v)
        return frozenset(x for x in range(self.n) if seen[2 * x] and not seen[2 * x + 1])


def _local_connectivity(net: _SplitFlowNet, base_cap: list[int], u: int, v: int):
    """kappa(u, v) for non-adjacent u, v, with the separating vertex set."""
    net.reset(base_cap)
    value = net.max_flow(2 * u + 1, 2 * v)
    cut = net.min_cut_vertices(2 * u + 1)
    return value, cut


def _complete_graph_side(t: ThetaGraph) -> bool:
    n = t.n_vertices
    return t.edge_count == n * (n - 1) // 2


def vertex_connectivity(t: ThetaGraph) -> ConnectivityResult:
    """kappa via max-flow over the standard reduced pair set: a fixed
    minimum-degree vertex against all its non-neighbors, plus all
    non-adjacent pairs among its neighbors.

    Completeness is detected from the edge count alone, so this stays a
    pure graph computation even on order lists that are not groups."""
    n = t.n_vertices
    if _complete_graph_side(t):
        return ConnectivityResult(n - 1, None, "complete_rule")
    if not is_connected(t):
        return ConnectivityResult(0, frozenset(), "max_flow")
    s = int(np.argmin(t.degrees))
    net = _SplitFlowNet(t)
    base_cap = net.cap.copy()
    best: int | None = None
    best_cut: frozenset[int] | None = None
    neighbor = t.adj[s]
    targets = [v for v in range(n) if v != s and not neighbor[v]]
    pairs = [(s, v) for v in targets]
    ns = [int(w) for w in t.neighbors(s)]
    pairs.extend((u, v) for u, v in combinations(ns, 2) if not t.adj[u, v])
    for u, v in pairs:
        value, cut = _local_connectivity(net, base_cap, u, v)
        if best is None or value < best:
            best, best_cut = value, cut
    assert best is not None and best_cut is not None
    if best > min_degree(t):
        raise CrossCheckError("kappa exceeds the minimum degree")
    if len(best_cut) != best or components_after_removal(t, best_cut) < 2:
        raise CrossCheckError("minimum cut witness failed re-validation")
    return ConnectivityResult(best, best_cut, "max_flow")


def open_problem_classify(t: ThetaGraph) -> str:
    """Compare kappa with |S(G)|: complete | kappa_equals_S | kappa_exceeds_S.

    kappa < |S(G)| cannot happen: every member of S(G) is a universal
    vertex, so any vertex set smaller than S(G) leaves one behind and the
    remaining graph stays connected. Seeing it means a bug.
    """
    if is_complete(t):
        return "complete"
    kappa = vertex_connectivity(t).kappa
    s_size = prime_order_set(t).size
    if kappa < s_size:
        raise CrossCheckError(
            f"kappa={kappa} < |S|={s_size} on {t.group.describe()}; "
            "impossible since S(G) consists of universal vertices"
        )
    return "kappa_equals_S" if kappa == s_size else "kappa_exceeds_S"
