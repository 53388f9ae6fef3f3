"""Finite groups as explicit multiplication tables, plus the order-theoretic
and subgroup-theoretic queries the graph constructions need.

Elements are indices ``0..n-1`` with ``0`` the identity.  Presented families
(dihedral, generalized quaternion, semidihedral) are enumerated in the normal
form ``a^i b^j`` with the product rule read off the defining relations;
symmetric groups compose permutations listed in lexicographic order; direct
products work componentwise in mixed radix.
"""

from __future__ import annotations

import itertools
import math
import random
from array import array
from dataclasses import dataclass
from enum import Enum

from .families import (
    Cyclic,
    Dihedral,
    DirectProduct,
    ElementaryAbelian,
    GeneralizedQuaternion,
    GroupSpec,
    GroupSpecError,
    Semidihedral,
    Symmetric,
    is_prime,
    order_cap,
)

# Exhaustive associativity checking is cubic; above this order a seeded random
# spot check is used instead.
_EXHAUSTIVE_ASSOC_LIMIT = 128
_SPOT_CHECK_TRIPLES = 2000


class FiniteGroup:
    """Multiplication-table realization of a finite group.

    Immutable after construction; safe to share across workers.
    """

    __slots__ = ("spec", "n", "_table", "inverse", "orders", "labels")

    def __init__(self, spec: GroupSpec, n: int, table: array,
                 inverse: tuple[int, ...], orders: tuple[int, ...],
                 labels: tuple[str, ...]):
        self.spec = spec
        self.n = n
        self._table = table
        self.inverse = inverse
        self.orders = orders
        self.labels = labels

    def mul(self, a: int, b: int) -> int:
        return self._table[a * self.n + b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        acc = 0
        while k:
            if k & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            k >>= 1
        return acc

    def rows(self) -> list[list[int]]:
        """Multiplication table as row lists (copy)."""
        n, t = self.n, self._table
        return [list(t[i * n:(i + 1) * n]) for i in range(n)]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"FiniteGroup({self.spec.render()}, order={self.n})"


@dataclass(frozen=True)
class CyclicSubgroup:
    generator: int
    elements: tuple[int, ...]  # sorted

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class MaximalCyclicFamily:
    """All subset-maximal cyclic subgroups, each listed once."""

    members: tuple[CyclicSubgroup, ...]

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def size_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for m in self.members:
            hist[m.size] = hist.get(m.size, 0) + 1
        return hist

    def common_elements(self) -> tuple[int, ...]:
        """Elements lying in every member (the intersection of the family)."""
        common = set(self.members[0].elements)
        for m in self.members[1:]:
            common &= set(m.elements)
        return tuple(sorted(common))


class NilpotentShape(Enum):
    P_GROUP = "P_GROUP"
    Z2_CROSS_ODD_P_GROUP = "Z2_CROSS_ODD_P_GROUP"
    OTHER = "OTHER"
    NOT_NILPOTENT = "NOT_NILPOTENT"


@dataclass(frozen=True)
class Classification:
    is_p_group: bool
    p: int | None
    is_cyclic: bool
    is_abelian: bool
    is_elementary_abelian_2: bool
    is_prime_exponent: bool
    is_nilpotent: bool
    nilpotent_shape: NilpotentShape
    exponent: int
    full_exponent: bool


# --- table builders ----------------------------------------------------------

def _pow_label(sym: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return sym
    return f"{sym}^{e}"


def _two_gen_labels(n_a: int, a_sym: str, b_sym: str) -> list[str]:
    labels = []
    for j in (0, 1):
        for i in range(n_a):
            parts = [p for p in (_pow_label(a_sym, i), b_sym if j else "") if p]
            labels.append("*".join(parts) if parts else "e")
    return labels


def _cyclic(n: int):
    table = array("i", ((a + b) % n for a in range(n) for b in range(n)))
    labels = tuple(str(i) for i in range(n))
    return table, labels


def _elementary_abelian(p: int, k: int):
    n = p**k
    # element index = base-p digits, most significant first
    weights = [p**(k - 1 - i) for i in range(k)]

    def digits(x):
        return [(x // w) % p for w in weights]

    table = array("i", (0 for _ in range(n * n)))
    for a in range(n):
        da = digits(a)
        row = a * n
        for b in range(n):
            db = digits(b)
            table[row + b] = sum(((x + y) % p) * w for x, y, w in zip(da, db, weights))
    labels = tuple("(" + ",".join(map(str, digits(x))) + ")" for x in range(n))
    return table, labels


def _dihedral(order: int):
    # <x, y : x^n = y^2 = e, xy = yx^-1>; index = i + n*j for x^i y^j
    n = order // 2
    table = array("i", (0 for _ in range(order * order)))
    for i in range(n):
        for j in (0, 1):
            a = i + n * j
            row = a * order
            for k in range(n):
                for l in (0, 1):
                    b = k + n * l
                    ii = (i + (k if j == 0 else -k)) % n
                    table[row + b] = ii + n * (j ^ l)
    return table, tuple(_two_gen_labels(n, "x", "y"))


def _quaternion(order: int):
    # <a, b : a^(2n) = e, a^n = b^2, ab = ba^-1>; index = i + 2n*j for a^i b^j
    half = order // 2  # 2n
    n = order // 4
    table = array("i", (0 for _ in range(order * order)))
    for i in range(half):
        for j in (0, 1):
            a = i + half * j
            row = a * order
            for k in range(half):
                for l in (0, 1):
                    b = k + half * l
                    ii = (i + (k if j == 0 else -k) + (n if (j and l) else 0)) % half
                    table[row + b] = ii + half * (j ^ l)
    return table, tuple(_two_gen_labels(half, "a", "b"))


def _semidihedral(order: int):
    # <a, b : a^(4n) = b^2 = e, ba = a^(2n-1) b>; index = i + 4n*j for a^i b^j
    half = order // 2  # 4n
    twist = half // 2 - 1  # 2n - 1
    table = array("i", (0 for _ in range(order * order)))
    for i in range(half):
        for j in (0, 1):
            a = i + half * j
            row = a * order
            for k in range(half):
                for l in (0, 1):
                    b = k + half * l
                    ii = (i + (k if j == 0 else k * twist)) % half
                    table[row + b] = ii + half * (j ^ l)
    return table, tuple(_two_gen_labels(half, "a", "b"))


def _perm_cycles(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "id"


def _symmetric(n: int):
    perms = list(itertools.permutations(range(n)))  # lexicographic; identity first
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    table = array("i", (0 for _ in range(size * size)))
    for a, pa in enumerate(perms):
        row = a * size
        for b, pb in enumerate(perms):
            table[row + b] = index[tuple(pa[x] for x in pb)]
    return table, tuple(_perm_cycles(p) for p in perms)


def _direct_product(factors: list[FiniteGroup]):
    ns = [g.n for g in factors]
    n = math.prod(ns)
    weights = []
    w = n
    for size in ns:
        w //= size
        weights.append(w)

    def decode(x):
        out = []
        for weight, size in zip(weights, ns):
            out.append((x // weight) % size)
        return out

    table = array("i", (0 for _ in range(n * n)))
    for a in range(n):
        da = decode(a)
        row = a * n
        for b in range(n):
            db = decode(b)
            table[row + b] = sum(
                g.mul(x, y) * weight
                for g, x, y, weight in zip(factors, da, db, weights))
    labels = tuple(
        "(" + ", ".join(g.labels[x] for g, x in zip(factors, decode(i))) + ")"
        for i in range(n))
    return table, labels


def _validate_table(n: int, table: array) -> tuple[int, ...]:
    """Check closure, identity and inverse laws; return the inverse table.

    Associativity is exhaustive up to order 128 and a seeded spot check above.
    """
    if min(table) < 0 or max(table) >= n:
        raise ValueError("multiplication table entry out of range")
    rows = [list(table[i * n:(i + 1) * n]) for i in range(n)]
    ident = list(range(n))
    if rows[0] != ident or [rows[a][0] for a in range(n)] != ident:
        raise ValueError("element 0 is not an identity")
    inverse = [-1] * n
    for a in range(n):
        row = rows[a]
        for b in range(n):
            if row[b] == 0:
                if rows[b][a] != 0:
                    raise ValueError(f"one-sided inverse at element {a}")
                inverse[a] = b
                break
        if inverse[a] < 0:
            raise ValueError(f"element {a} has no inverse")
    if n <= _EXHAUSTIVE_ASSOC_LIMIT:
        for a in range(n):
            ra = rows[a]
            for b in range(n):
                rb = rows[b]
                if rows[ra[b]] != [ra[x] for x in rb]:
                    raise ValueError(f"associativity fails at ({a}, {b})")
    else:
        rng = random.Random(0xC0FFEE ^ n)
        for _ in range(_SPOT_CHECK_TRIPLES):
            a, b, c = (rng.randrange(n) for _ in range(3))
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise ValueError(f"associativity fails at ({a}, {b}, {c})")
    return tuple(inverse)


def _element_orders(n: int, table: array) -> tuple[int, ...]:
    orders = [1] * n
    for a in range(1, n):
        x = a
        k = 1
        while x != 0:
            x = table[x * n + a]
            k += 1
        orders[a] = k
    return tuple(orders)


def build_group(spec: GroupSpec, cap: int | None = None) -> FiniteGroup:
    """Realize a parsed family expression as an explicit multiplication table."""
    limit = order_cap() if cap is None else cap
    if spec.order > limit:
        raise GroupSpecError(f"group order {spec.order} exceeds the cap {limit}")
    if isinstance(spec, Cyclic):
        table, labels = _cyclic(spec.n)
    elif isinstance(spec, ElementaryAbelian):
        table, labels = _elementary_abelian(spec.p, spec.rank)
    elif isinstance(spec, Dihedral):
        table, labels = _dihedral(spec.group_order)
    elif isinstance(spec, GeneralizedQuaternion):
        table, labels = _quaternion(spec.group_order)
    elif isinstance(spec, Semidihedral):
        table, labels = _semidihedral(spec.group_order)
    elif isinstance(spec, Symmetric):
        table, labels = _symmetric(spec.n)
    elif isinstance(spec, DirectProduct):
        factors = [build_group(f, cap=limit) for f in spec.factors]
        table, labels = _direct_product(factors)
    else:  # pragma: no cover - parser only produces the variants above
        raise TypeError(f"unknown spec variant {type(spec).__name__}")
    n = spec.order
    inverse = _validate_table(n, table)
    orders = _element_orders(n, table)
    return FiniteGroup(spec, n, table, inverse, orders, labels)


# --- queries ------------------------------------------------------------------

def element_order_table(group: FiniteGroup) -> tuple[int, ...]:
    """o(a) for every element; o(a) is the least k >= 1 with a^k = identity."""
    return group.orders


def cyclic_subgroup(group: FiniteGroup, a: int) -> CyclicSubgroup:
    if not 0 <= a < group.n:
        raise IndexError(f"element {a} out of range")
    elems = []
    x = a
    while True:
        elems.append(x)
        x = group.mul(x, a)
        if x == a:
            break
    return CyclicSubgroup(a, tuple(sorted(elems)))


def _cyclic_masks(group: FiniteGroup) -> list[int]:
    """Bitmask of <a> for every element a."""
    masks = []
    for a in range(group.n):
        mask = 0
        x = a
        while True:
            mask |= 1 << x
            x = group.mul(x, a)
            if x == a:
                break
        masks.append(mask)
    return masks


def maximal_cyclic_subgroups(group: FiniteGroup) -> MaximalCyclicFamily:
    """The subset-maximal cyclic subgroups, deduplicated as element sets."""
    masks = _cyclic_masks(group)
    seen: dict[int, int] = {}  # mask -> smallest generator
    for a, mask in enumerate(masks):
        if mask not in seen:
            seen[mask] = a
    distinct = list(seen.items())
    members = []
    for mask, gen in distinct:
        if any(other != mask and mask | other == other for other, _ in distinct):
            continue
        elems = tuple(i for i in range(group.n) if (mask >> i) & 1)
        members.append(CyclicSubgroup(gen, elems))
    members.sort(key=lambda s: (s.size, s.elements))
    family = MaximalCyclicFamily(tuple(members))
    covered = 0
    for m in members:
        for e in m.elements:
            covered |= 1 << e
    if covered != (1 << group.n) - 1:  # pragma: no cover - would be a bug
        raise ValueError("maximal cyclic subgroups fail to cover the group")
    return family


def exponent_info(group: FiniteGroup) -> tuple[int, bool]:
    """(exponent, attained?) — the lcm of element orders, and whether some
    element realizes it."""
    spectrum = set(group.orders)
    exp = math.lcm(*spectrum)
    return exp, exp in spectrum


def order_spectrum(group: FiniteGroup) -> tuple[int, ...]:
    return tuple(sorted(set(group.orders)))


def is_nilpotent(group: FiniteGroup) -> bool:
    """Coprime-order elements must commute (a table-local nilpotency test)."""
    orders = group.orders
    n = group.n
    for x in range(1, n):
        ox = orders[x]
        for y in range(x + 1, n):
            if math.gcd(ox, orders[y]) == 1 and group.mul(x, y) != group.mul(y, x):
                return False
    return True


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_abelian(group: FiniteGroup) -> bool:
    n = group.n
    for a in range(1, n):
        for b in range(a + 1, n):
            if group.mul(a, b) != group.mul(b, a):
                return False
    return True


def classify_group(group: FiniteGroup) -> Classification:
    n = group.n
    factors = _factorize(n)
    p_group = len(factors) <= 1  # the trivial group counts as a p-group
    p = next(iter(factors)) if len(factors) == 1 else None
    cyclic = max(group.orders) == n
    abelian = is_abelian(group)
    exp, full = exponent_info(group)
    nilpotent = is_nilpotent(group)
    if not nilpotent:
        shape = NilpotentShape.NOT_NILPOTENT
    elif p_group:
        shape = NilpotentShape.P_GROUP
    elif (len(factors) == 2 and factors.get(2) == 1
          and all(q % 2 == 1 for q in factors if q != 2)):
        shape = NilpotentShape.Z2_CROSS_ODD_P_GROUP
    else:
        shape = NilpotentShape.OTHER
    return Classification(
        is_p_group=p_group,
        p=p,
        is_cyclic=cyclic,
        is_abelian=abelian,
        is_elementary_abelian_2=abelian and exp <= 2,
        is_prime_exponent=is_prime(exp),
        is_nilpotent=nilpotent,
        nilpotent_shape=shape,
        exponent=exp,
        full_exponent=full,
    )
