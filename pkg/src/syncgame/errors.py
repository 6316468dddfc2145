"""Exception types shared across the package."""


class SyncgameError(Exception):
    """Base class for all errors raised by this package."""


class AutomatonFormatError(SyncgameError):
    """The automaton description is malformed or violates an invariant."""


class CapExceededError(SyncgameError):
    """A state-space cap was exceeded (game solver or reset-word search)."""


class MonoidTooLargeError(SyncgameError):
    """The transition monoid grew past the configured element cap."""


class NotSynchronizingError(SyncgameError):
    """Raised when an operation requires a synchronizing automaton.

    ``pair`` holds a witness: an unmergeable state pair.
    """

    def __init__(self, pair: tuple[int, int]):
        self.pair = pair
        super().__init__(f"not synchronizing: states {pair[0]} and {pair[1]} cannot be merged")


class NotDsError(SyncgameError):
    """Raised when an operation requires the transition monoid to lie in DS.

    ``witness`` is a triple (a, b, d_class) of element indices and the
    regular D-class id whose closure the product ab violates.
    """

    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        a, b, d = witness
        super().__init__(
            f"monoid is not in DS: product of elements {a} and {b} "
            f"leaves their regular D-class {d}"
        )


class ProtocolError(SyncgameError):
    """A strategy or game-session call was made out of turn."""


class SessionError(SyncgameError):
    """A game-session request could not be honored."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)
