"""Exception types shared across the library."""


class StarfreeError(Exception):
    """Base class for errors raised by this library."""


class SizeMismatchError(StarfreeError):
    """Transformations over different ground sets were combined."""


class TransformationParseError(StarfreeError):
    """Malformed textual encoding of a transformation."""


class NotAperiodicError(StarfreeError):
    """An operation requiring an aperiodic transformation got a cyclic one."""


class NotMinimalError(StarfreeError):
    """An operation requiring a minimal DFA got a reducible one."""


class AlphabetMismatchError(StarfreeError):
    """A binary language operation was applied across different alphabets."""


class UnknownLetterError(StarfreeError):
    """A word contains a letter outside the automaton's alphabet."""


class AutomatonFormatError(StarfreeError):
    """Malformed automaton document."""


class ClosureLimitError(StarfreeError):
    """Semigroup closure exceeded the configured element ceiling."""


class BudgetExceededError(StarfreeError):
    """Search parameters outside the supported budget and no override given."""
