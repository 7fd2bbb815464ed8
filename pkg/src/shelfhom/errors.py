"""Structured error types shared across the package.

Every error the library raises deliberately derives from ShelfHomError so
callers (and the CLI exit-code mapping) can tell input problems, resource
caps, and internal assertion failures apart.
"""


class ShelfHomError(Exception):
    """Base class for all structured errors raised by shelfhom."""


# --- input / law violations -------------------------------------------------

class SizeMismatch(ShelfHomError):
    """Tables that should share one carrier size do not."""


class OutOfRange(ShelfHomError):
    """An element or index lies outside the carrier / basis range."""


class EmptyList(ShelfHomError):
    """An operation that needs at least one item got none."""


class DistributivityViolation(ShelfHomError):
    """Self-distributivity fails; carries the first violating triple."""

    def __init__(self, x, y, z, lhs, rhs):
        self.x, self.y, self.z = x, y, z
        self.lhs, self.rhs = lhs, rhs
        super().__init__(
            f"({x}*{y})*{z} = {lhs} but ({x}*{z})*({y}*{z}) = {rhs}"
        )


class MutualDistributivityViolation(ShelfHomError):
    """Mutual distributivity fails for the operation pair (k, l)."""

    def __init__(self, k, l, x, y, z, lhs, rhs):
        self.k, self.l = k, l
        self.x, self.y, self.z = x, y, z
        self.lhs, self.rhs = lhs, rhs
        super().__init__(
            f"ops ({k},{l}): ({x} *_{k} {y}) *_{l} {z} = {lhs} "
            f"but ({x} *_{l} {z}) *_{k} ({y} *_{l} {z}) = {rhs}"
        )


class SpecPreconditionFailed(ShelfHomError):
    """A family constructor's eager precondition does not hold."""


class RetractionNotIdentityOnA(ShelfHomError):
    """A retraction map fails to restrict to the identity on the base."""


class NotASpindle(ShelfHomError):
    """Operation requires x*x = x for all x."""


class NotInvertible(ShelfHomError):
    """Some right translation x -> x*y is not a bijection."""


class ParseError(ShelfHomError):
    """Malformed input document."""


class DegreeNegative(ShelfHomError):
    """Chain degree must be nonnegative."""


class DegreeOutOfRange(ShelfHomError):
    """Requested degree is not covered by the built complex."""


class ChainMapViolation(ShelfHomError):
    """Chain-map precondition pairing is wrong, or commuting fails."""


class DegenerateNotSubcomplex(ShelfHomError):
    """The requested differential does not preserve degenerate chains."""


# --- resource caps ------------------------------------------------------------

class PracticalSizeLimit(ShelfHomError):
    """Carrier size beyond the factorial/backtracking guard."""


class MemoryCapExceeded(ShelfHomError):
    """A chain complex would exceed the configured basis-element cap."""


class CapExceeded(ShelfHomError):
    """A scan or complex construction hit its configured cap."""


class BoundExceeded(ShelfHomError):
    """Closure grew past max_ops; carries the partial result."""

    def __init__(self, message, partial):
        self.partial = partial
        super().__init__(message)


# --- internal assertions ------------------------------------------------------

class DDNotZero(ShelfHomError):
    """d o d != 0 while building a complex; signals an implementation bug."""
