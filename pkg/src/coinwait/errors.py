"""Exception types shared across the package."""


class CoinwaitError(Exception):
    """Base class for all errors raised by coinwait."""


class EmptyPatternError(CoinwaitError):
    """The pattern text was empty (after trimming whitespace)."""


class InvalidSymbolError(CoinwaitError):
    """A pattern character was not a coin symbol, or mixed 0/1 with H/T.

    Attributes:
        symbol: the offending character.
        index:  its position within the trimmed input text.
    """

    def __init__(self, symbol: str, index: int):
        self.symbol = symbol
        self.index = index
        super().__init__(f"invalid symbol {symbol!r} at index {index}")


class InvalidLengthError(CoinwaitError):
    """A pattern length argument was outside its allowed range."""


class InvalidIndexError(CoinwaitError):
    """An index was below the pattern length, where counts are undefined."""


class InvalidHorizonError(CoinwaitError):
    """A horizon was too small for the requested computation."""


class TooLargeError(CoinwaitError):
    """The request would exceed a hard size ceiling."""


class SimulationRunawayError(CoinwaitError):
    """A simulated game hit the per-game toss cap.

    Completion is almost sure, so reaching the cap signals a bug in the
    simulator rather than bad luck.
    """
