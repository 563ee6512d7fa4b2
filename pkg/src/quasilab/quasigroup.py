"""Finite quasigroups as validated Cayley tables.

A quasigroup of order n is an n x n Latin square over {0..n-1}; entry
``table[x][y]`` is the product x*y.  Left and right division are derived
tables, computed lazily and cached (instances are immutable, so the fill is
idempotent and safe under concurrent use).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import BadSymbol, DegreeMismatch, NotLatin, NotSquare, OutOfRange
from .permutations import Permutation

__all__ = [
    "Quasigroup",
    "ParastropheSelector",
    "UnitProfile",
    "from_table",
]


_PARASTROPHE_NAMES = {
    "e": (1, 2, 3),
    "id": (1, 2, 3),
    "(12)": (2, 1, 3),
    "(13)": (3, 2, 1),
    "(23)": (1, 3, 2),
    "(123)": (2, 3, 1),
    "(132)": (3, 1, 2),
}


@dataclass(frozen=True)
class ParastropheSelector:
    """A permutation of the three slots of the relation x1*x2 = x3.

    ``sigma`` is the image tuple (sigma(1), sigma(2), sigma(3)).  The derived
    operation o satisfies  x_sigma(1) o x_sigma(2) = x_sigma(3)  whenever
    x1*x2 = x3; e.g. the (13)-parastrophe is  a o b = c  iff  c*b = a.
    """

    sigma: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.sigma) != [1, 2, 3]:
            raise ValueError(f"selector must permute (1, 2, 3), got {self.sigma}")

    @classmethod
    def from_name(cls, name: str) -> "ParastropheSelector":
        try:
            return cls(_PARASTROPHE_NAMES[name])
        except KeyError:
            raise ValueError(
                f"unknown parastrophe name {name!r}; known: {sorted(_PARASTROPHE_NAMES)}"
            ) from None

    @classmethod
    def identity(cls) -> "ParastropheSelector":
        return cls((1, 2, 3))

    def __mul__(self, inner: "ParastropheSelector") -> "ParastropheSelector":
        """Combined selector: parastrophe(parastrophe(q, inner), self)
        equals parastrophe(q, self * inner)."""
        s, t = self.sigma, inner.sigma
        return ParastropheSelector((t[s[0] - 1], t[s[1] - 1], t[s[2] - 1]))

    @property
    def name(self) -> str:
        for k, v in _PARASTROPHE_NAMES.items():
            if v == self.sigma and k != "id":
                return k
        raise AssertionError("unreachable")


SelectorLike = Union[ParastropheSelector, str, tuple]


def _as_selector(sel: SelectorLike) -> ParastropheSelector:
    if isinstance(sel, ParastropheSelector):
        return sel
    if isinstance(sel, str):
        return ParastropheSelector.from_name(sel)
    return ParastropheSelector(tuple(sel))


@dataclass(frozen=True)
class UnitProfile:
    """Unit elements and basic equational facts read off one table scan."""

    left_unit: Optional[int]
    right_unit: Optional[int]
    is_loop: bool
    is_unipotent: bool
    is_commutative: bool
    is_associative: bool


class Quasigroup:
    """Immutable finite quasigroup over the carrier {0..n-1}."""

    __slots__ = ("_table", "_label", "_ldiv", "_rdiv")

    def __init__(self, rows, label: Optional[str] = None):
        try:
            arr = np.asarray(rows)
        except ValueError:
            raise NotSquare("ragged rows: need a square matrix") from None
        if arr.dtype == object or arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NotSquare(f"need a nonempty square matrix, got shape {getattr(arr, 'shape', None)}")
        if not np.issubdtype(arr.dtype, np.integer):
            if np.issubdtype(arr.dtype, np.floating) and np.all(arr == np.floor(arr)):
                raise BadSymbol("entries must be integers, not floats")
            raise BadSymbol(f"entries must be integers, got dtype {arr.dtype}")
        n = arr.shape[0]
        bad = np.argwhere((arr < 0) | (arr >= n))
        if bad.size:
            r, c = (int(v) for v in bad[0])
            raise BadSymbol(f"entry {int(arr[r, c])} at ({r}, {c}) outside 0..{n - 1}")
        table = arr.astype(np.int64)
        self._check_latin(table)
        table.setflags(write=False)
        self._table = table
        self._label = label
        self._ldiv = None
        self._rdiv = None

    @staticmethod
    def _check_latin(table: np.ndarray) -> None:
        n = table.shape[0]
        for r in range(n):
            counts = np.bincount(table[r], minlength=n)
            if counts.max() > 1:
                s = int(np.argmax(counts > 1))
                c1, c2 = np.nonzero(table[r] == s)[0][:2]
                raise NotLatin("row", r, s, (int(c1), int(c2)))
        for c in range(n):
            counts = np.bincount(table[:, c], minlength=n)
            if counts.max() > 1:
                s = int(np.argmax(counts > 1))
                r1, r2 = np.nonzero(table[:, c] == s)[0][:2]
                raise NotLatin("column", c, s, (int(r1), int(r2)))

    # -- basic access ----------------------------------------------------------

    @property
    def order(self) -> int:
        return int(self._table.shape[0])

    @property
    def table(self) -> np.ndarray:
        """Read-only n x n Cayley table."""
        return self._table

    @property
    def label(self) -> Optional[str]:
        return self._label

    def to_lists(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self._table]

    def _check_elem(self, *xs: int) -> None:
        n = self.order
        for x in xs:
            if not (0 <= x < n):
                raise OutOfRange(f"element {x} outside 0..{n - 1}")

    # -- operation and divisions -------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        """x*y by table lookup."""
        self._check_elem(x, y)
        return int(self._table[x, y])

    @property
    def ldiv_table(self) -> np.ndarray:
        # argsort of a permutation row is its inverse: position of each value.
        if self._ldiv is None:
            t = np.argsort(self._table, axis=1)
            t.setflags(write=False)
            self._ldiv = t
        return self._ldiv

    @property
    def rdiv_table(self) -> np.ndarray:
        if self._rdiv is None:
            t = np.argsort(self._table, axis=0)
            t.setflags(write=False)
            self._rdiv = t
        return self._rdiv

    def ldiv(self, x: int, y: int) -> int:
        """x \\ y: the unique z with x*z = y."""
        self._check_elem(x, y)
        return int(self.ldiv_table[x, y])

    def rdiv(self, x: int, y: int) -> int:
        """x / y: the unique z with z*y = x.

        Note the argument convention: the dividend comes first, so
        ``rdiv(x, y)`` solves z*y = x. The usual reading "y / x" is
        ``rdiv(y, x)``.
        """
        self._check_elem(x, y)
        return int(self.rdiv_table[x, y])

    # -- translations, parastrophes, isotopes -------------------------------------

    def translation(self, side: str, a: int) -> Permutation:
        """Left translation y -> a*y or right translation x -> x*a."""
        self._check_elem(a)
        if side == "left":
            return Permutation(self._table[a])
        if side == "right":
            return Permutation(self._table[:, a])
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def left_translation(self, a: int) -> Permutation:
        return self.translation("left", a)

    def right_translation(self, a: int) -> Permutation:
        return self.translation("right", a)

    def parastrophe(self, sel: SelectorLike) -> "Quasigroup":
        """Conjugate quasigroup obtained by permuting the slots of x1*x2 = x3."""
        sel = _as_selector(sel)
        n = self.order
        x1, x2 = np.indices((n, n))
        triple = (x1, x2, self._table)
        s = sel.sigma
        new = np.empty((n, n), dtype=np.int64)
        new[triple[s[0] - 1], triple[s[1] - 1]] = triple[s[2] - 1]
        return Quasigroup(new)

    def isotope(self, alpha: Permutation, beta: Permutation, gamma: Permutation) -> "Quasigroup":
        """Quasigroup o with gamma(x o y) = alpha(x) * beta(y)."""
        n = self.order
        for p in (alpha, beta, gamma):
            if p.degree != n:
                raise DegreeMismatch(f"permutation degree {p.degree} != order {n}")
        ginv = gamma.inverse().array
        new = ginv[self._table[np.ix_(alpha.array, beta.array)]]
        return Quasigroup(new)

    # -- predicates ---------------------------------------------------------------

    def unit_predicates(self) -> UnitProfile:
        t = self._table
        n = self.order
        idx = np.arange(n)
        left_hits = np.nonzero((t == idx[None, :]).all(axis=1))[0]
        right_hits = np.nonzero((t == idx[:, None]).all(axis=0))[0]
        left_unit = int(left_hits[0]) if left_hits.size else None
        right_unit = int(right_hits[0]) if right_hits.size else None
        diag = t[idx, idx]
        lhs = t[t]            # lhs[x, y, z] = (x*y)*z
        rhs = t[:, t]         # rhs[x, y, z] = x*(y*z)
        return UnitProfile(
            left_unit=left_unit,
            right_unit=right_unit,
            is_loop=left_unit is not None and left_unit == right_unit,
            is_unipotent=bool((diag == diag[0]).all()),
            is_commutative=bool((t == t.T).all()),
            is_associative=bool((lhs == rhs).all()),
        )

    # -- value semantics ------------------------------------------------------------

    def key(self) -> bytes:
        """Canonical hashable key: the row-major table bytes (orders < 256)."""
        return self._table.astype(np.uint8).tobytes()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Quasigroup)
            and self.order == other.order
            and bool((self._table == other._table).all())
        )

    def __hash__(self) -> int:
        return hash((self.order, self.key()))

    def __repr__(self) -> str:
        tag = f" {self._label!r}" if self._label else ""
        return f"Quasigroup(order={self.order}{tag})"

    def __str__(self) -> str:
        head = f"# {self._label}\n" if self._label else ""
        return head + "\n".join(" ".join(str(int(v)) for v in row) for row in self._table)


def from_table(n: int, rows: Sequence[Sequence[int]], label: Optional[str] = None) -> Quasigroup:
    """Validate ``rows`` as an order-``n`` Cayley table and wrap it."""
    if n < 1:
        raise NotSquare(f"order must be positive, got {n}")
    rows = list(rows)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise NotSquare(f"expected {n} rows of {n} entries")
    return Quasigroup(rows, label=label)
