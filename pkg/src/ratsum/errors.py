"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(Exception):
    """Syntax error in a summand expression.

    Carries the byte offset of the offending token so callers can point at it.
    """

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
        self.message = message


class DegenerateInput(Exception):
    """The input denotes nothing summable (e.g. an identically zero denominator)."""


class UnsupportedDenominator(Exception):
    """The denominator does not factor into linear factors with roots in Q(n)."""


class SingularTerm(Exception):
    """A term of the sum is singular at the requested evaluation point."""

    def __init__(self, k: int | None, n0: int):
        if k is None:
            super().__init__(f"summand degenerates at n = {n0}")
        else:
            super().__init__(f"term k = {k} is singular at n = {n0}")
        self.k = k
        self.n0 = n0


class PoleError(Exception):
    """Numeric evaluation was requested at a pole."""


class ConstantBase(Exception):
    """affine_relate needs a non-constant base function."""


class NegativeDilation(Exception):
    """A class member carried a non-positive dilation; caller bug."""
