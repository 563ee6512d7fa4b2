"""Autotopies, pseudoautomorphisms, nuclei and structural predicates.

Autotopy enumeration seeds candidates from (alpha, c) pairs: for an autotopy
(alpha, beta, gamma) the third component is pinned by gamma(x*0) = alpha(x)*c
with c = beta(0), and beta follows as beta(y) = alpha(0) \\ gamma(0*y).  Every
seed is then verified against the full n^2 grid, so the enumeration is exact:
n! * n candidates instead of (n!)^3 triples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .abelian import AbelianGroup, core_groupoid, recover_group
from .errors import EmptyList, NotDecomposable, OrderMismatch, OrderTooLarge
from .permutations import Permutation, orbit
from .quasigroup import Quasigroup

__all__ = [
    "Autotopy",
    "AutotopyDecomposition",
    "PseudoautomorphismWitness",
    "GAProfile",
    "GProfile",
    "DistributivityProfile",
    "is_autotopy",
    "autotopies",
    "automorphisms",
    "decompose_autotopy",
    "pseudoautomorphisms",
    "a_pseudoautomorphisms",
    "component_transitive",
    "is_ga",
    "is_g",
    "nucleus",
    "check_left_bol",
    "left_bol_counterexample",
    "check_moufang",
    "moufang_counterexample",
    "core_distributive",
    "isomorphic",
    "relabel",
    "canonical_key",
    "lp_isotope",
]

AUTOTOPY_MAX_ORDER = 7
AUTOMORPHISM_MAX_ORDER = 8
CANONICAL_MAX_ORDER = 8


@dataclass(frozen=True)
class Autotopy:
    """Permutation triple with gamma(x*y) = alpha(x)*beta(y)."""

    alpha: Permutation
    beta: Permutation
    gamma: Permutation

    @classmethod
    def identity(cls, n: int) -> "Autotopy":
        e = Permutation.identity(n)
        return cls(e, e, e)

    def component(self, which: int) -> Permutation:
        return (self.alpha, self.beta, self.gamma)[which - 1]

    def __mul__(self, other: "Autotopy") -> "Autotopy":
        return Autotopy(self.alpha * other.alpha, self.beta * other.beta, self.gamma * other.gamma)

    def inverse(self) -> "Autotopy":
        return Autotopy(self.alpha.inverse(), self.beta.inverse(), self.gamma.inverse())

    def sort_key(self):
        return (self.alpha.image, self.beta.image, self.gamma.image)

    def __lt__(self, other: "Autotopy") -> bool:
        return self.sort_key() < other.sort_key()


def is_autotopy(q: Quasigroup, t: Autotopy) -> bool:
    tab = q.table
    lhs = t.gamma.array[tab]
    rhs = tab[np.ix_(t.alpha.array, t.beta.array)]
    return bool((lhs == rhs).all())


def autotopies(q: Quasigroup, max_order: int = AUTOTOPY_MAX_ORDER) -> list[Autotopy]:
    """Complete, duplicate-free, canonically sorted autotopy group of q."""
    n = q.order
    if n > max_order:
        raise OrderTooLarge(f"order {n} above autotopy bound {max_order}")
    tab = q.table
    ldiv = q.ldiv_table
    col0 = tab[:, 0]
    row0 = tab[0]
    found: list[Autotopy] = []
    gamma = np.empty(n, dtype=np.int64)
    for alpha in itertools.permutations(range(n)):
        alpha_arr = np.array(alpha, dtype=np.int64)
        a0 = alpha[0]
        for c in range(n):
            gamma[col0] = tab[alpha_arr, c]
            beta = ldiv[a0, gamma[row0]]
            if (gamma[tab] == tab[np.ix_(alpha_arr, beta)]).all():
                found.append(Autotopy(Permutation(alpha), Permutation(beta), Permutation(gamma)))
    found.sort()
    return found


def automorphisms(q: Quasigroup, max_order: int = AUTOMORPHISM_MAX_ORDER) -> list[Permutation]:
    """All alpha with (alpha, alpha, alpha) an autotopy, sorted by image."""
    n = q.order
    if n > max_order:
        raise OrderTooLarge(f"order {n} above automorphism bound {max_order}")
    tab = q.table
    out = []
    for alpha in itertools.permutations(range(n)):
        arr = np.array(alpha, dtype=np.int64)
        if (arr[tab] == tab[np.ix_(arr, arr)]).all():
            out.append(Permutation(alpha))
    return out


@dataclass(frozen=True)
class AutotopyDecomposition:
    """Factorisation (alpha, beta, gamma) = (L+_a, L+_(-b), L+_(a+b)) . theta
    over the recovered abelian group, theta a group automorphism."""

    a: int
    b: int
    theta: Permutation


def decompose_autotopy(q: Quasigroup, t: Autotopy,
                       group: Optional[AbelianGroup] = None) -> AutotopyDecomposition:
    """Factor an autotopy of a subtraction quasigroup through its group.

    ``a`` is read off as alpha(0), ``b`` as -beta(0) (0 meaning the group
    zero); theta is the remaining map, verified to be an automorphism and to
    reproduce all three components.  Raises :class:`NotDecomposable` if any
    verification fails, which would contradict the structure theory.
    """
    g = group if group is not None else recover_group(q)
    add = g.table
    zero = g.zero
    a = t.alpha(zero)
    nb = t.beta(zero)          # this is -b
    b = g.negate(nb)
    theta = add[g.negate(a)][t.alpha.array]   # theta(x) = -a + alpha(x)
    if not (theta[add] == add[np.ix_(theta, theta)]).all():
        raise NotDecomposable("residual map is not a group automorphism")
    if not (t.beta.array == add[nb][theta]).all():
        raise NotDecomposable("second component is not L+_(-b) . theta")
    ab = g.add(a, b)
    if not (t.gamma.array == add[ab][theta]).all():
        raise NotDecomposable("third component is not L+_(a+b) . theta")
    return AutotopyDecomposition(a=a, b=b, theta=Permutation(theta))


@dataclass(frozen=True)
class PseudoautomorphismWitness:
    """theta with a companion c: right means (theta, R_c.theta, R_c.theta)
    is an autotopy, left means (L_c.theta, theta, L_c.theta) is."""

    theta: Permutation
    companion: int
    side: str

    def to_autotopy(self, q: Quasigroup) -> Autotopy:
        if self.side == "right":
            r_c = q.right_translation(self.companion)
            return Autotopy(self.theta, r_c * self.theta, r_c * self.theta)
        l_c = q.left_translation(self.companion)
        return Autotopy(l_c * self.theta, self.theta, l_c * self.theta)


def _check_side(side: str) -> None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _pseudo_pairs(q: Quasigroup, side: str,
                  ats: Optional[Sequence[Autotopy]] = None,
                  max_order: int = AUTOTOPY_MAX_ORDER,
                  ) -> list[tuple[PseudoautomorphismWitness, Autotopy]]:
    _check_side(side)
    tab = q.table
    if ats is None:
        ats = autotopies(q, max_order=max_order)
    pairs = []
    for t in ats:
        if side == "right":
            if t.beta != t.gamma:
                continue
            # beta = R_c . alpha forces c = alpha(x) \ beta(x), constant in x
            c = q.ldiv(t.alpha(0), t.beta(0))
            if (t.beta.array == tab[t.alpha.array, c]).all():
                pairs.append((PseudoautomorphismWitness(t.alpha, c, "right"), t))
        else:
            if t.alpha != t.gamma:
                continue
            # alpha = L_c . beta forces c = alpha(x) / beta(x), constant in x
            c = q.rdiv(t.alpha(0), t.beta(0))
            if (t.alpha.array == tab[c, t.beta.array]).all():
                pairs.append((PseudoautomorphismWitness(t.beta, c, "left"), t))
    pairs.sort(key=lambda p: (p[0].theta.image, p[0].companion))
    return pairs


def pseudoautomorphisms(q: Quasigroup, side: str,
                        max_order: int = AUTOTOPY_MAX_ORDER,
                        ats: Optional[Sequence[Autotopy]] = None,
                        ) -> list[PseudoautomorphismWitness]:
    """All (theta, companion) pairs on the given side.

    Pass ``ats`` to reuse an already-enumerated autotopy list.
    """
    return [w for w, _ in _pseudo_pairs(q, side, ats=ats, max_order=max_order)]


def a_pseudoautomorphisms(q: Quasigroup, side: str,
                          max_order: int = AUTOTOPY_MAX_ORDER) -> list[Autotopy]:
    """Autotopies of shape (alpha, beta, beta) (right) or (alpha, beta, alpha) (left)."""
    _check_side(side)
    ats = autotopies(q, max_order=max_order)
    if side == "right":
        return [t for t in ats if t.beta == t.gamma]
    return [t for t in ats if t.alpha == t.gamma]


def component_transitive(ts: Sequence[Autotopy], which: int) -> bool:
    """Does the group generated by the chosen components act transitively?

    ``which`` selects the component (1, 2 or 3); the orbit of 0 under the
    closure of the selected permutations must be the whole carrier.
    """
    if which not in (1, 2, 3):
        raise ValueError(f"component must be 1, 2 or 3, got {which}")
    if not ts:
        raise EmptyList("no autotopies given")
    perms = [t.component(which) for t in ts]
    return len(orbit(0, perms)) == perms[0].degree


@dataclass(frozen=True)
class GAProfile:
    left_ga: bool
    right_ga: bool
    ga: bool


@dataclass(frozen=True)
class GProfile:
    left_g: bool
    right_g: bool


def _third_components_transitive(q: Quasigroup, ts: Sequence[Autotopy]) -> bool:
    if not ts:
        return q.order == 1
    return len(orbit(0, [t.gamma for t in ts])) == q.order


def is_ga(q: Quasigroup, max_order: int = AUTOTOPY_MAX_ORDER) -> GAProfile:
    """GA flags: transitivity of third components of A-pseudoautomorphisms."""
    ats = autotopies(q, max_order=max_order)
    right = [t for t in ats if t.beta == t.gamma]
    left = [t for t in ats if t.alpha == t.gamma]
    right_ga = _third_components_transitive(q, right)
    left_ga = _third_components_transitive(q, left)
    return GAProfile(left_ga=left_ga, right_ga=right_ga, ga=left_ga and right_ga)


def is_g(q: Quasigroup, max_order: int = AUTOTOPY_MAX_ORDER) -> GProfile:
    """G flags: transitivity of third components of pseudoautomorphism triples."""
    ats = autotopies(q, max_order=max_order)
    right = [t for _, t in _pseudo_pairs(q, "right", ats=ats)]
    left = [t for _, t in _pseudo_pairs(q, "left", ats=ats)]
    return GProfile(
        left_g=_third_components_transitive(q, left),
        right_g=_third_components_transitive(q, right),
    )


def nucleus(q: Quasigroup, side: str) -> set[int]:
    """Left/right/middle nucleus by exhaustive scan."""
    t = q.table
    n = q.order
    out = set()
    for a in range(n):
        if side == "right":
            ok = (t[:, t[:, a]] == t[t, a]).all()          # x*(y*a) == (x*y)*a
        elif side == "left":
            ok = (t[a][t] == t[t[a]]).all()                # a*(x*y) == (a*x)*y
        elif side == "middle":
            ok = (t[:, t[a]] == t[t[:, a]]).all()          # x*(a*y) == (x*a)*y
        else:
            raise ValueError(f"side must be 'left', 'right' or 'middle', got {side!r}")
        if ok:
            out.add(a)
    return out


def left_bol_counterexample(q: Quasigroup) -> Optional[tuple[int, int, int]]:
    """First (x, y, z) violating x(y.xz) = Rinv_{e_x}(x.yx) * z, where x*e_x = x."""
    t = q.table
    n = q.order
    for x in range(n):
        e_x = int(q.ldiv_table[x, x])
        rinv = np.argsort(t[:, e_x])
        rowx = t[x]
        lhs = rowx[t[:, rowx]]            # lhs[y, z] = x*(y*(x*z))
        w = rinv[rowx[t[:, x]]]           # w[y] = Rinv(x*(y*x))
        rhs = t[w]                        # rhs[y, z] = w[y]*z
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            y, z = (int(v) for v in bad[0])
            return (x, y, z)
    return None


def check_left_bol(q: Quasigroup) -> bool:
    return left_bol_counterexample(q) is None


def moufang_counterexample(q: Quasigroup) -> Optional[tuple[int, int, int]]:
    """First (x, y, z) violating x(y.xz) = ((x.y f_x)x) * z, where f_x*x = x."""
    t = q.table
    n = q.order
    for x in range(n):
        f_x = int(q.rdiv_table[x, x])
        rowx = t[x]
        colx = t[:, x]
        lhs = rowx[t[:, rowx]]            # lhs[y, z] = x*(y*(x*z))
        u = rowx[t[:, f_x]]               # u[y] = x*(y*f_x)
        v = colx[u]                       # v[y] = (x*(y*f_x))*x
        rhs = t[v]                        # rhs[y, z] = v[y]*z
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            y, z = (int(v_) for v_ in bad[0])
            return (x, y, z)
    return None


def check_moufang(q: Quasigroup) -> bool:
    return moufang_counterexample(q) is None


@dataclass(frozen=True)
class DistributivityProfile:
    left: bool
    right: bool


def core_distributive(q: Quasigroup) -> DistributivityProfile:
    """Both distributive laws of the core x o y = x*(y*x), checked on all triples."""
    c = core_groupoid(q)
    left_lhs = c[:, c]                                    # x o (y o z)
    left_rhs = c[c[:, :, None], c[:, None, :]]            # (x o y) o (x o z)
    right_lhs = c[c]                                      # (x o y) o z
    right_rhs = c[c[:, None, :], c[None, :, :]]           # (x o z) o (y o z)
    return DistributivityProfile(
        left=bool((left_lhs == left_rhs).all()),
        right=bool((right_lhs == right_rhs).all()),
    )


def isomorphic(q1: Quasigroup, q2: Quasigroup) -> Optional[Permutation]:
    """A bijection phi with phi(x*y) = phi(x) o phi(y), or None.

    Backtracks on images in carrier order; at each step only the product
    constraints newly covered by the latest assignment are rechecked.
    """
    if q1.order != q2.order:
        raise OrderMismatch(f"orders differ: {q1.order} vs {q2.order}")
    n = q1.order
    t1 = q1.to_lists()
    t2 = q2.to_lists()
    phi = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        for x in range(k + 1):
            row = t1[x]
            for y in range(k + 1):
                p = row[y]
                if p > k:
                    continue
                if x == k or y == k or p == k:
                    if t2[phi[x]][phi[y]] != phi[p]:
                        return False
        return True

    def dfs(k: int) -> bool:
        if k == n:
            return True
        for img in range(n):
            if used[img]:
                continue
            phi[k] = img
            used[img] = True
            if consistent(k) and dfs(k + 1):
                return True
            used[img] = False
        phi[k] = -1
        return False

    return Permutation(phi) if dfs(0) else None


def relabel(q: Quasigroup, perm: Permutation) -> Quasigroup:
    """Transport the table along a bijection of the carrier."""
    pa = perm.array
    inv = perm.inverse().array
    return Quasigroup(pa[q.table[np.ix_(inv, inv)]])


def canonical_key(q: Quasigroup, max_order: int = CANONICAL_MAX_ORDER) -> bytes:
    """Lexicographically least relabeling of the table, as bytes.

    Equal keys are exactly isomorphism; cost is n! relabelings, so this is
    for small orders only.
    """
    n = q.order
    if n > max_order:
        raise OrderTooLarge(f"order {n} above canonical-form bound {max_order}")
    t = q.table
    best = None
    for perm in itertools.permutations(range(n)):
        pa = np.array(perm, dtype=np.int64)
        inv = np.argsort(pa)
        key = pa[t[np.ix_(inv, inv)]].astype(np.uint8).tobytes()
        if best is None or key < best:
            best = key
    return best


def lp_isotope(q: Quasigroup, a: int, b: int) -> Quasigroup:
    """Principal loop isotope x o y = Rinv_a(x) * Linv_b(y); its unit is b*a."""
    alpha = q.right_translation(a).inverse()
    beta = q.left_translation(b).inverse()
    return q.isotope(alpha, beta, Permutation.identity(q.order))
