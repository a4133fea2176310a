"""The prime coprime graph of a finite group.

Vertices are the group elements; two distinct vertices are joined exactly
when the gcd of their element orders is 1 or a prime. The graph is stored
as a dense symmetric boolean matrix -- every target graph here has at most
a few hundred vertices, so O(1) adjacency and trivially cached degrees beat
any sparse representation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .groups import GroupSpec
from .numtheory import is_one_or_prime

__all__ = [
    "PrimeOrderSet",
    "ThetaGraph",
    "adjacent",
    "build_theta",
    "degree",
    "export_dot",
    "export_json",
    "min_degree",
    "prime_order_set",
]


@dataclass(frozen=True)
class ThetaGraph:
    group: GroupSpec
    adj: np.ndarray  # (n, n) bool, symmetric, zero diagonal
    degrees: np.ndarray  # (n,) int
    warnings: tuple[tuple[str, str], ...] = ()

    @property
    def n_vertices(self) -> int:
        return len(self.group.orders)

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with i < j, ascending."""
        ii, jj = np.nonzero(np.triu(self.adj, k=1))
        return list(zip(ii.tolist(), jj.tolist()))

    def neighbors(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.adj[i])


@dataclass(frozen=True)
class PrimeOrderSet:
    """Identity plus all elements of prime order."""

    indices: frozenset[int]
    includes_identity: bool = True

    @property
    def size(self) -> int:
        return len(self.indices)


def build_theta(g: GroupSpec) -> ThetaGraph:
    """Construct the graph from a group's order profile.

    Adjacency is vectorised: a gcd table over the order vector, then a
    primality lookup. Groups of size <= 2 are accepted but flagged, since
    the defining setting assumes |G| > 2.
    """
    orders = np.asarray(g.orders, dtype=np.int64)
    n = len(orders)
    gcds = np.gcd.outer(orders, orders)
    max_val = int(gcds.max())
    lookup = np.zeros(max_val + 1, dtype=bool)
    for v in range(1, max_val + 1):
        lookup[v] = is_one_or_prime(v)
    adj = lookup[gcds]
    np.fill_diagonal(adj, False)
    degrees = adj.sum(axis=1).astype(np.int64)
    warnings = tuple(g.warnings)
    if n <= 2:
        warnings += (
            ("small_group", f"|G|={n} is at or below 2; the graph definition assumes |G|>2"),
        )
    adj.setflags(write=False)
    degrees.setflags(write=False)
    return ThetaGraph(group=g, adj=adj, degrees=degrees, warnings=warnings)


def adjacent(t: ThetaGraph, i: int, j: int) -> bool:
    n = t.n_vertices
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"vertex index out of range: ({i},{j}) for n={n}")
    return bool(t.adj[i, j])


def prime_order_set(t: ThetaGraph) -> PrimeOrderSet:
    """S(G): the identity together with all prime-order elements."""
    idx = frozenset(
        i for i, o in enumerate(t.group.orders) if is_one_or_prime(o)
    )
    return PrimeOrderSet(indices=idx)


def degree(t: ThetaGraph, i: int) -> int:
    if not 0 <= i < t.n_vertices:
        raise IndexError(f"vertex index out of range: {i}")
    return int(t.degrees[i])


def min_degree(t: ThetaGraph) -> int:
    return int(t.degrees.min())


def export_dot(t: ThetaGraph) -> str:
    """Undirected DOT document; nodes named by group labels, edges i<j."""
    lines = ["graph theta {"]
    for label in t.group.labels:
        lines.append(f'  "{label}";')
    for i, j in t.edges():
        lines.append(f'  "{t.group.labels[i]}" -- "{t.group.labels[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(t: ThetaGraph) -> str:
    """Graph as a JSON document: metadata, labels, orders, edges, degrees."""
    doc = {
        "group": {
            "family": t.group.family,
            "params": t.group.params,
            "order": t.group.size,
        },
        "labels": list(t.group.labels),
        "orders": list(t.group.orders),
        "edges": [[i, j] for i, j in t.edges()],
        "degrees": t.degrees.tolist(),
        "warnings": [{"code": c, "message": m} for c, m in t.warnings],
    }
    return json.dumps(doc, indent=2) + "\n"
