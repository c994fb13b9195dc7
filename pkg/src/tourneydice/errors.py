"""Exception types shared across the package."""


class InvalidTournamentError(ValueError):
    """Base class for malformed tournament input."""


class SelfLoopError(InvalidTournamentError):
    pass


class VertexOutOfRangeError(InvalidTournamentError):
    pass


class DuplicateEdgeError(InvalidTournamentError):
    """A vertex pair is oriented twice (same or opposite directions)."""


class MissingEdgeError(InvalidTournamentError):
    """Some vertex pair has no orientation."""


class NTooSmallError(InvalidTournamentError):
    pass


class NotPrimeError(InvalidTournamentError):
    pass


class WrongResidueClassError(InvalidTournamentError):
    pass


class ParseError(InvalidTournamentError):
    """Input text is not well-formed for the requested format."""


class ParityError(ValueError):
    """n falls in the wrong residue class for the requested construction."""


class SideCountMismatchError(ValueError):
    pass


class DuplicateLabelError(ValueError):
    pass


class TieDetectedError(ValueError):
    """A matchup came out at exactly 1/2, so the pair cannot be oriented."""
