"""Exception types raised by the quandle library.

Every validation error carries a machine-readable ``code`` and a ``witness``
tuple pinpointing the first failing instance, so reports can print them as
``code: witness...`` lines.
"""

from __future__ import annotations


class QuandleError(Exception):
    """Base class for all library errors."""

    code = "error"
    witness: tuple = ()


class InvalidQuandle(QuandleError):
    """An operation table violates one of the quandle axioms."""


class DiagonalViolation(InvalidQuandle):
    def __init__(self, element: int):
        super().__init__(f"table[{element}][{element}] != {element}")
        self.code = "diagonal_violation"
        self.witness = (element,)


class ColumnNotBijective(InvalidQuandle):
    def __init__(self, column: int):
        super().__init__(f"column {column} is not a permutation")
        self.code = "column_not_bijective"
        self.witness = (column,)


class DistributivityViolation(InvalidQuandle):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"(a<b)<c != (a<c)<(b<c) at (a,b,c)=({a},{b},{c})")
        self.code = "distributivity_violation"
        self.witness = (a, b, c)


class NotAGroup(QuandleError):
    def __init__(self, reason: str, witness: tuple = ()):
        detail = f" at {witness}" if witness else ""
        super().__init__(f"not a group table: {reason}{detail}")
        self.code = "not_a_group"
        self.reason = reason
        self.witness = witness


class SubsetNotClosed(QuandleError):
    def __init__(self, a: int, b: int):
        super().__init__(f"subset not closed: {a} < {b} falls outside")
        self.code = "subset_not_closed"
        self.witness = (a, b)


class NotAHomomorphism(QuandleError):
    def __init__(self, a: int, b: int):
        super().__init__(f"map does not preserve < at ({a},{b})")
        self.code = "not_a_homomorphism"
        self.witness = (a, b)


class EmptyFiber(QuandleError):
    def __init__(self, b: int):
        super().__init__(f"element {b} has an empty preimage")
        self.code = "empty_fiber"
        self.witness = (b,)


class NotASection(QuandleError):
    def __init__(self, b: int):
        super().__init__(f"f(s({b})) != {b}")
        self.code = "not_a_section"
        self.witness = (b,)


class NotSymmetric(QuandleError):
    def __init__(self, a: int, b: int):
        super().__init__(f"{a} < {b} != {b} < {a}")
        self.code = "not_symmetric"
        self.witness = (a, b)


class NotSurjective(QuandleError):
    def __init__(self, missing: int):
        super().__init__(f"codomain element {missing} is not in the image")
        self.code = "not_surjective"
        self.witness = (missing,)


class PreconditionFailed(QuandleError):
    def __init__(self, message: str):
        super().__init__(message)
        self.code = "precondition_failed"


class OrderTooLarge(QuandleError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"order {n} exceeds the cap {cap} (pass force=True to override)")
        self.code = "order_too_large"
        self.witness = (n, cap)


class MainTheoremViolation(RuntimeError):
    """Internal consistency tripwire: the three centrality characterizations
    disagreed on a concrete input.  This can only happen through an
    implementation bug, so it is raised rather than reported."""
