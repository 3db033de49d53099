"""Exception hierarchy shared by all modules.

Every domain error derives from :class:`LukatreeError`, itself a ValueError,
so callers that do not care about the fine distinction can catch one thing.
The CLI maps LukatreeError to exit code 1 and leaves flag misuse to argparse
(exit code 2).
"""


class LukatreeError(ValueError):
    """Base class for all domain errors raised by this package."""


# -- alphabet construction ---------------------------------------------------

class DuplicateLetterError(LukatreeError):
    """Two letters of the alphabet share the same symbol."""


class FirstDegreeNotMinusOneError(LukatreeError):
    """The first letter of a tree alphabet must have degree -1."""


class DegreesNotSortedError(LukatreeError):
    """Degrees of a tree alphabet must be non-decreasing."""


class DegreeBelowMinusOneError(LukatreeError):
    """No letter of a tree alphabet may have degree below -1."""


class ArityMismatchError(LukatreeError):
    """A counts tuple has a different length than its alphabet."""


# -- words and permutations --------------------------------------------------

class NotAValidWordError(LukatreeError):
    """The word's degrees do not sum to -1, so it encodes nothing."""


class NotAPermutationError(LukatreeError):
    """The sequence is not a permutation of 1..n."""


class TupleNotValidError(LukatreeError):
    """The counts tuple is not f-valid (weighted degree sum is not -1)."""


# -- sampling ----------------------------------------------------------------

class DomainTooSmallError(LukatreeError):
    """The requested quantity is undefined below its minimum domain."""


# -- enumeration -------------------------------------------------------------

class LimitExceededError(LukatreeError):
    """Exhaustive enumeration was requested beyond the configured size cap."""


class EmptySupportError(LukatreeError):
    """A goodness-of-fit test needs a support of at least two outcomes."""


# -- experiments -------------------------------------------------------------

class InfeasibleParityError(LukatreeError):
    """No Motzkin tree exists with the requested size and unary count."""
