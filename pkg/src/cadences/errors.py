"""Exception hierarchy for the cadences package."""


class CadenceError(Exception):
    """Base class for all package errors."""


class SlpError(CadenceError):
    """Base class for grammar construction and parsing errors."""


class EmptyGrammarError(SlpError):
    """The rule list is empty."""


class ForwardReferenceError(SlpError):
    """A pair rule references a rule at or after its own position."""


class LengthOverflowError(SlpError):
    """An expansion length exceeds the 63-bit limit."""


class EmptyInputError(SlpError):
    """A literal was requested for the empty string."""


class SlpFormatError(SlpError):
    """Serialized grammar text deviates from the SLPv1 format."""


class TooLongError(SlpError):
    """Expansion exceeds the caller-supplied bound.

    ``length`` carries the actual expansion length.
    """

    def __init__(self, length, max_len):
        super().__init__(f"expansion length {length} exceeds bound {max_len}")
        self.length = length
        self.max_len = max_len


class OutOfRangeError(CadenceError):
    """A position argument lies outside the valid index range."""


class AlphabetMismatchError(CadenceError):
    """Operation requires a different alphabet than the input provides."""


class IntervalError(CadenceError):
    """Interval arguments violate the required ordering."""


class PreconditionViolatedError(CadenceError):
    """A documented precondition does not hold for the given arguments."""


class InternalError(CadenceError):
    """A computed witness failed re-verification; indicates a bug."""


class TooLargeError(CadenceError):
    """Input exceeds the size the brute-force oracles accept."""


class UnsupportedError(CadenceError):
    """Requested parameters are outside the supported range."""


class HypothesisViolatedError(CadenceError):
    """Checker input does not satisfy the required structural hypothesis."""
