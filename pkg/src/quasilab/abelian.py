"""Finite abelian groups and the subtraction quasigroups they induce.

The central constructions: ``subtraction_quasigroup`` builds x*y = x - y over
a group, and ``recover_group`` inverts it, extracting the unique abelian group
hiding inside any quasigroup of that shape (the addition is rebuilt as
x + y := x*(e*y) where e is the right unit, and every group axiom plus the
x - y representation is verified explicitly).
"""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

import numpy as np

from .errors import (
    NoRightUnit,
    NotAbelianGroup,
    NotLatin,
    OrderTooLarge,
    RepresentationMismatch,
)
from .permutations import Permutation
from .quasigroup import Quasigroup

__all__ = [
    "AbelianGroup",
    "cyclic",
    "direct_product",
    "enumerate_abelian_groups",
    "automorphism_group",
    "subtraction_quasigroup",
    "recover_group",
    "two_torsion",
    "core_groupoid",
]

ENUMERATION_MAX_ORDER = 64
AUTOMORPHISM_MAX_ORDER = 16


class AbelianGroup:
    """Immutable abelian group given by its full addition table.

    Construction validates every axiom (Latin, two-sided unit, commutativity,
    associativity); ``zero`` and the negation map are derived from the table.
    """

    __slots__ = ("_table", "_zero", "_neg", "factors", "label")

    def __init__(self, table, factors: Optional[tuple[int, ...]] = None,
                 label: Optional[str] = None):
        arr = np.asarray(table, dtype=np.int64)
        n = arr.shape[0]
        if arr.ndim != 2 or arr.shape != (n, n) or n == 0:
            raise NotAbelianGroup("table shape")
        try:
            Quasigroup._check_latin(arr)
        except NotLatin as exc:
            raise NotAbelianGroup(f"Latin property ({exc})") from None
        idx = np.arange(n)
        units = np.nonzero((arr == idx[None, :]).all(axis=1) & (arr == idx[:, None]).all(axis=0))[0]
        if not units.size:
            raise NotAbelianGroup("two-sided unit exists")
        zero = int(units[0])
        bad = np.argwhere(arr != arr.T)
        if bad.size:
            a, b = (int(v) for v in bad[0])
            raise NotAbelianGroup("commutativity", (a, b))
        bad = np.argwhere(arr[arr] != arr[:, arr])
        if bad.size:
            a, b, c = (int(v) for v in bad[0])
            raise NotAbelianGroup("associativity", (a, b, c))
        arr.setflags(write=False)
        neg = (arr == zero).argmax(axis=1).astype(np.int64)
        neg.setflags(write=False)
        self._table = arr
        self._zero = zero
        self._neg = neg
        self.factors = factors
        self.label = label

    @property
    def order(self) -> int:
        return int(self._table.shape[0])

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def zero(self) -> int:
        return self._zero

    @property
    def neg(self) -> np.ndarray:
        """Negation map as an array: neg[a] = -a."""
        return self._neg

    def add(self, a: int, b: int) -> int:
        return int(self._table[a, b])

    def negate(self, a: int) -> int:
        return int(self._neg[a])

    def element_order(self, a: int) -> int:
        m, acc = 1, a
        while acc != self._zero:
            acc = int(self._table[acc, a])
            m += 1
        return m

    @property
    def exponent(self) -> int:
        exp = 1
        for a in range(self.order):
            o = self.element_order(a)
            exp = exp * o // _gcd(exp, o)
        return exp

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AbelianGroup)
            and self.order == other.order
            and bool((self._table == other._table).all())
        )

    def __hash__(self) -> int:
        return hash(self._table.tobytes())

    def __repr__(self) -> str:
        tag = self.label or f"order {self.order}"
        return f"AbelianGroup({tag})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def cyclic(n: int) -> AbelianGroup:
    """Z_n with addition mod n."""
    if n < 1:
        raise NotAbelianGroup(f"order must be positive, got {n}")
    idx = np.arange(n)
    return AbelianGroup((idx[:, None] + idx[None, :]) % n, factors=(n,), label=f"Z{n}")


def direct_product(groups: Sequence[AbelianGroup]) -> AbelianGroup:
    """Componentwise sum; elements encoded mixed-radix, first factor most
    significant (C order of the coordinate tuple)."""
    if not groups:
        raise NotAbelianGroup("direct product needs at least one factor")
    if len(groups) == 1:
        return groups[0]
    sizes = tuple(g.order for g in groups)
    coords = [c.ravel() for c in np.indices(sizes)]
    n = int(np.prod(sizes))
    sums = [g.table[coords[i][:, None], coords[i][None, :]] for i, g in enumerate(groups)]
    table = np.ravel_multi_index(sums, sizes)
    factors = tuple(itertools.chain.from_iterable(g.factors or (g.order,) for g in groups))
    label = "x".join(g.label or f"?{g.order}" for g in groups)
    return AbelianGroup(table, factors=factors, label=label)


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions_desc(e: int) -> list[tuple[int, ...]]:
    """Partitions of e in descending lexicographic order: (e), (e-1,1), ..."""
    if e == 0:
        return [()]
    out = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(e, e, ())
    return out


def enumerate_abelian_groups(n: int, max_order: int = ENUMERATION_MAX_ORDER) -> list[AbelianGroup]:
    """One representative per isomorphism class of abelian groups of order n.

    Classes correspond to a choice of partition of each prime exponent;
    output follows descending partition order per prime, primes ascending.
    """
    if n > max_order:
        raise OrderTooLarge(f"order {n} above enumeration bound {max_order}")
    if n < 1:
        raise NotAbelianGroup(f"order must be positive, got {n}")
    if n == 1:
        return [cyclic(1)]
    primes = sorted(_factorint(n).items())
    per_prime = [[tuple(p**a for a in part) for part in _partitions_desc(e)] for p, e in primes]
    groups = []
    for combo in itertools.product(*per_prime):
        orders = tuple(itertools.chain.from_iterable(combo))
        groups.append(direct_product([cyclic(m) for m in orders]))
    return groups


def _span(add: np.ndarray, zero: int, base: set[int], gen: int) -> set[int]:
    """Subgroup generated by a subgroup ``base`` and one extra element."""
    span = set(base)
    frontier = list(span)
    while frontier:
        a = frontier.pop()
        b = int(add[a, gen])
        if b not in span:
            span.add(b)
            frontier.append(b)
    return span


def automorphism_group(g: AbelianGroup, max_order: int = AUTOMORPHISM_MAX_ORDER) -> list[Permutation]:
    """All bijections fixing zero and preserving addition, sorted by image.

    Backtracks over images of a greedy generating sequence; candidate images
    must match the generator's element order, and the partial map is extended
    homomorphically with consistency and injectivity checks at each step.
    """
    n = g.order
    if n > max_order:
        raise OrderTooLarge(f"order {n} above automorphism bound {max_order}")
    add = g.table
    zero = g.zero

    gens: list[int] = []
    span: set[int] = {zero}
    for a in range(n):
        if a not in span:
            gens.append(a)
            span = _span(add, zero, span, a)

    orders = [g.element_order(a) for a in range(n)]
    results: list[Permutation] = []

    def extend(theta: dict[int, int], gen: int, img: int) -> Optional[dict[int, int]]:
        new = dict(theta)
        used = set(new.values())
        old_elems = list(new)
        if gen in new:
            return new if new[gen] == img else None
        if img in used:
            return None
        new[gen] = img
        used.add(img)
        added = [gen]
        frontier = list(old_elems) + [gen]
        while frontier:
            a = frontier.pop()
            b = int(add[a, gen])
            ib = int(add[new[a], img])
            if b in new:
                if new[b] != ib:
                    return None
            else:
                if ib in used:
                    return None
                new[b] = ib
                used.add(ib)
                added.append(b)
                frontier.append(b)
        # homomorphism check on every pair touching a newly mapped element
        for a in added:
            ia = new[a]
            for b, ib in new.items():
                if new[int(add[a, b])] != int(add[ia, ib]):
                    return None
        return new

    def dfs(i: int, theta: dict[int, int]):
        if i == len(gens):
            if len(theta) == n:
                results.append(Permutation([theta[x] for x in range(n)]))
            return
        gen = gens[i]
        target = orders[gen]
        for img in range(n):
            if orders[img] != target:
                continue
            new = extend(theta, gen, img)
            if new is not None:
                dfs(i + 1, new)

    dfs(0, {zero: zero})
    results.sort()
    return results


def subtraction_quasigroup(g: AbelianGroup) -> Quasigroup:
    """The quasigroup x*y = x + (-y) over ``g``."""
    table = g.table[:, g.neg]
    return Quasigroup(table, label=f"{g.label or f'order-{g.order} group'} subtraction")


def recover_group(q: Quasigroup) -> AbelianGroup:
    """Extract the abelian group with q.mul(x, y) == x - y, or fail loudly.

    The addition is defined as x + y := x*(e*y) for the right unit e (under
    x*y = x - y one has e = 0 and e*y = -y, so this is x + y).  Raises
    :class:`NoRightUnit`, :class:`NotAbelianGroup` (with the first failing
    pair/triple) or :class:`RepresentationMismatch`.
    """
    t = q.table
    n = q.order
    idx = np.arange(n)
    right_units = np.nonzero((t == idx[:, None]).all(axis=0))[0]
    if not right_units.size:
        raise NoRightUnit(f"no column of the table is the identity map")
    e = int(right_units[0])
    add = t[:, t[e]]

    units = np.nonzero((add == idx[None, :]).all(axis=1) & (add == idx[:, None]).all(axis=0))[0]
    if not units.size:
        raise NotAbelianGroup("two-sided unit exists")
    zero = int(units[0])
    bad = np.argwhere(add != add.T)
    if bad.size:
        a, b = (int(v) for v in bad[0])
        raise NotAbelianGroup("commutativity", (a, b))
    bad = np.argwhere(add[add] != add[:, add])
    if bad.size:
        a, b, c = (int(v) for v in bad[0])
        raise NotAbelianGroup("associativity", (a, b, c))

    group = AbelianGroup(add, label=f"recovered from {q.label or 'table'}")
    bad = np.argwhere(t != add[:, group.neg])
    if bad.size:
        x, y = (int(v) for v in bad[0])
        raise RepresentationMismatch(x, y)
    return group


def two_torsion(g: AbelianGroup) -> set[int]:
    """Elements with a + a = 0."""
    diag = g.table[np.arange(g.order), np.arange(g.order)]
    return {int(a) for a in np.nonzero(diag == g.zero)[0]}


def core_groupoid(q: Quasigroup) -> np.ndarray:
    """The magma x o y = x*(y*x) as a raw table (not Latin in general)."""
    n = q.order
    t = q.table
    core = t[np.arange(n)[:, None], t.T]
    core.setflags(write=False)
    return core
