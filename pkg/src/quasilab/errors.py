"""Exception hierarchy for the quasilab package.

Every error raised on purpose by the library derives from ``QuasilabError``,
so callers (notably the CLI) can separate expected failures from bugs.
"""

from __future__ import annotations


class QuasilabError(Exception):
    """Base class for all quasilab errors."""


# -- Cayley table construction ------------------------------------------------

class NotSquare(QuasilabError):
    """Table is not an n x n matrix for the declared order."""


class BadSymbol(QuasilabError):
    """Table entry is not an integer in {0..n-1}."""


class NotLatin(QuasilabError):
    """A row or column repeats a symbol."""

    def __init__(self, axis: str, index: int, symbol: int, positions: tuple[int, int]):
        self.axis = axis
        self.index = index
        self.symbol = symbol
        self.positions = positions
        where = "rows" if axis == "column" else "columns"
        super().__init__(
            f"{axis} {index} repeats symbol {symbol} ({where} {positions[0]} and {positions[1]})"
        )


class OutOfRange(QuasilabError):
    """Element argument outside {0..n-1}."""


class DegreeMismatch(QuasilabError):
    """Permutation degree does not match the quasigroup order."""


# -- identity DSL --------------------------------------------------------------

class ParseError(QuasilabError):
    """Identity text does not match the grammar.

    Carries the byte position of the offending character and a hint about
    what was expected there.
    """

    def __init__(self, message: str, position: int, expected: str | None = None):
        self.position = position
        self.expected = expected
        hint = f" (expected {expected})" if expected else ""
        super().__init__(f"{message} at position {position}{hint}")


class MissingEquals(ParseError):
    """Equation lacks the '=' separating its two sides."""


class EmptySide(ParseError):
    """One side of the equation has no term."""


class UnknownIdentity(QuasilabError):
    """Requested builtin identity name is not in the catalog."""

    def __init__(self, name: str, known: tuple[str, ...]):
        self.name = name
        self.known = known
        super().__init__(f"unknown identity {name!r}; known: {', '.join(known)}")


class UnboundVariable(QuasilabError):
    """Term evaluation hit a variable missing from the assignment."""


# -- search and enumeration bounds ---------------------------------------------

class OrderTooLarge(QuasilabError):
    """Requested order exceeds the configured bound for this operation."""


class TooManyVariables(QuasilabError):
    """Identity has more variables than the exhaustive checker supports."""


class OrderMismatch(QuasilabError):
    """Two structures that must share an order do not."""


class EmptyList(QuasilabError):
    """Operation needs a nonempty collection."""


# -- abelian group recovery ----------------------------------------------------

class NoRightUnit(QuasilabError):
    """Quasigroup has no right unit, so group recovery cannot start."""


class NotAbelianGroup(QuasilabError):
    """A table violates an abelian group axiom."""

    def __init__(self, axiom: str, witness: tuple[int, ...] | None = None):
        self.axiom = axiom
        self.witness = witness
        at = f" at {witness}" if witness is not None else ""
        super().__init__(f"not an abelian group: {axiom} fails{at}")


class RepresentationMismatch(QuasilabError):
    """Recovered group exists but x*y != x - y somewhere."""

    def __init__(self, x: int, y: int):
        self.x = x
        self.y = y
        super().__init__(f"table is not x - y over the recovered group (first mismatch at x={x}, y={y})")


class NotDecomposable(QuasilabError):
    """Autotopy does not factor into translations and a group automorphism."""


# -- file formats ---------------------------------------------------------------

class TableFormatError(QuasilabError):
    """Cayley table text does not follow the interchange format."""


class GroupSpecError(QuasilabError):
    """Group spec string (e.g. 'Z4', 'Z2xZ2') is malformed."""
