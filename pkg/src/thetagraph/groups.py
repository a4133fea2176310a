"""Finite groups reduced to labeled element-order profiles.

The coprimality graph of a group depends only on element orders, so a group
is stored as a list of (label, order) pairs plus family metadata. Full
multiplication tables are never kept here; tests rebuild them from the
defining presentations where an independent oracle is wanted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm

from .numtheory import is_prime

__all__ = [
    "GroupSpec",
    "cyclic",
    "dicyclic",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "from_orders",
    "heisenberg",
    "order_profile",
]


@dataclass(frozen=True)
class GroupSpec:
    """A finite group as labeled element orders.

    Exactly one element (at ``identity_index``) has order 1. ``warnings``
    holds machine-readable (code, message) pairs produced at construction,
    e.g. a Lagrange violation in a user-supplied order list.
    """

    family: str
    params: dict
    labels: tuple[str, ...]
    orders: tuple[int, ...]
    identity_index: int = 0
    warnings: tuple[tuple[str, str], ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a group needs at least one element")
        if len(self.labels) != len(self.orders):
            raise ValueError("labels and orders must have equal length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("element labels must be unique")
        identities = [i for i, o in enumerate(self.orders) if o == 1]
        if len(identities) != 1:
            raise ValueError(f"expected exactly one identity element, found {len(identities)}")
        if identities[0] != self.identity_index:
            raise ValueError("identity_index does not point at the order-1 element")
        if any(o < 1 for o in self.orders):
            raise ValueError("element orders must be positive")

    @property
    def size(self) -> int:
        return len(self.orders)

    def describe(self) -> str:
        """Compact constructor-style descriptor, e.g. ``cyclic(6)``."""
        if self.family == "product":
            return f"product({self.params['left']},{self.params['right']})"
        if self.family == "custom":
            return f"custom(order={self.size})"
        args = ",".join(str(v) for v in self.params.values())
        return f"{self.family}({args})"


def order_profile(g: GroupSpec) -> dict[int, int]:
    """Multiset of element orders as {order: count}, ascending by order."""
    counts: dict[int, int] = {}
    for o in sorted(g.orders):
        counts[o] = counts.get(o, 0) + 1
    return counts


def cyclic(n: int) -> GroupSpec:
    """Z_n under addition; element k has order n / gcd(n, k)."""
    if n < 1:
        raise ValueError(f"cyclic requires n >= 1, got {n}")
    orders = tuple(n // gcd(n, k) for k in range(n))
    labels = tuple(str(k) for k in range(n))
    return GroupSpec("cyclic", {"n": n}, labels, orders)


def _power_label(sym: str, k: int) -> str:
    if k == 0:
        return "1"
    if k == 1:
        return sym
    return f"{sym}^{k}"


def dihedral(n: int) -> GroupSpec:
    """D_n of size 2n: rotations r^i first, then the n reflections s·r^i.

    Every reflection has order 2; rotation r^i has order n / gcd(n, i).
    """
    if n < 1:
        raise ValueError(f"dihedral requires n >= 1, got {n}")
    rot_orders = [n // gcd(n, i) for i in range(n)]
    rot_labels = [_power_label("r", i) for i in range(n)]
    ref_orders = [2] * n
    ref_labels = ["s" if i == 0 else f"s{_power_label('r', i)}" for i in range(n)]
    return GroupSpec(
        "dihedral",
        {"n": n},
        tuple(rot_labels + ref_labels),
        tuple(rot_orders + ref_orders),
    )


def dicyclic(n: int) -> GroupSpec:
    """Dic_n of size 4n: powers a^k first, then the 2n elements x·a^k.

    From the relations a^(2n) = 1, x^2 = a^n, a·x = x·a^(-1): the cyclic part
    a^k has order 2n / gcd(2n, k), and (x·a^k)^2 = a^n of order 2, so every
    x-coset element has order 4. Tests confirm this against a multiplication
    table built from the presentation.
    """
    if n < 2:
        raise ValueError(f"dicyclic requires n >= 2, got {n}")
    a_orders = [2 * n // gcd(2 * n, k) for k in range(2 * n)]
    a_labels = [_power_label("a", k) for k in range(2 * n)]
    x_orders = [4] * (2 * n)
    x_labels = ["x" if k == 0 else f"x{_power_label('a', k)}" for k in range(2 * n)]
    return GroupSpec(
        "dicyclic",
        {"n": n},
        tuple(a_labels + x_labels),
        tuple(a_orders + x_orders),
    )


def elementary_abelian(p: int, m: int) -> GroupSpec:
    """(Z_p)^m: identity plus p^m - 1 elements of order p."""
    if not is_prime(p):
        raise ValueError(f"elementary_abelian requires a prime p, got {p}")
    if m < 1:
        raise ValueError(f"elementary_abelian requires m >= 1, got {m}")
    size = p**m
    vectors = [[(k // p**j) % p for j in range(m)] for k in range(size)]
    labels = tuple(",".join(str(c) for c in v) for v in vectors)
    orders = tuple(1 if all(c == 0 for c in v) else p for v in vectors)
    return GroupSpec("elementary_abelian", {"p": p, "m": m}, labels, orders)


def heisenberg(p: int) -> GroupSpec:
    """Upper unitriangular 3x3 matrices over F_p, enumerated explicitly.

    A matrix is the triple (a, b, c) of its strictly-upper entries; orders
    are found by repeated multiplication.
    """
    if not is_prime(p):
        raise ValueError(f"heisenberg requires a prime p, got {p}")

    def mul(m1, m2):
        a1, b1, c1 = m1
        a2, b2, c2 = m2
        return ((a1 + a2) % p, (b1 + b2 + a1 * c2) % p, (c1 + c2) % p)

    identity = (0, 0, 0)
    labels = []
    orders = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                m = (a, b, c)
                labels.append(f"({a},{b},{c})")
                x = m
                o = 1
                while x != identity:
                    x = mul(x, m)
                    o += 1
                orders.append(o)
    return GroupSpec("heisenberg", {"p": p}, tuple(labels), tuple(orders))


def direct_product(g: GroupSpec, h: GroupSpec) -> GroupSpec:
    """G x H; the order of (a, b) is lcm(o(a), o(b))."""
    labels = []
    orders = []
    for la, oa in zip(g.labels, g.orders):
        for lb, ob in zip(h.labels, h.orders):
            labels.append(f"({la},{lb})")
            orders.append(lcm(oa, ob))
    identity = g.identity_index * h.size + h.identity_index
    return GroupSpec(
        "product",
        {"left": g.describe(), "right": h.describe()},
        tuple(labels),
        tuple(orders),
        identity_index=identity,
    )


def from_orders(labels: list[str], orders: list[int]) -> GroupSpec:
    """A user-supplied group given only as labels and element orders.

    An order list alone cannot prove group-ness, so Lagrange violations
    (an order not dividing the element count) produce a warning on the
    returned spec rather than an error. Structural problems -- no identity,
    several identities, mismatched lengths -- are rejected.
    """
    if len(labels) != len(orders):
        raise ValueError("labels and orders must have equal length")
    if not labels:
        raise ValueError("empty group input")
    identities = [i for i, o in enumerate(orders) if o == 1]
    if len(identities) != 1:
        raise ValueError(f"expected exactly one order-1 element, found {len(identities)}")
    n = len(orders)
    warnings = tuple(
        ("lagrange_violation", f"order {o} of element {labels[i]!r} does not divide group size {n}")
        for i, o in enumerate(orders)
        if o >= 1 and n % o != 0
    )
    return GroupSpec(
        "custom",
        {"n": n},
        tuple(labels),
        tuple(orders),
        identity_index=identities[0],
        warnings=warnings,
    )
