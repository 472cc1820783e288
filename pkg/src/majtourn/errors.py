"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class MajTournError(Exception):
    """Base class for all package errors."""


class InputError(MajTournError, ValueError):
    """Malformed or out-of-range input."""


class CapacityError(MajTournError):
    """Input exceeds a size cap (bitset width, oracle limit, solver range)."""


class ContractError(MajTournError):
    """An operation was called on an object violating its precondition."""


class NotATournamentError(ContractError):
    pass
