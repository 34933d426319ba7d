"""Exception types raised by the library."""


class MarginalCodesError(Exception):
    """Base class for all library errors."""


class AlphabetMismatch(MarginalCodesError, ValueError):
    pass


class CapExceeded(MarginalCodesError):
    """A configured search budget (subset states, pending buffers) ran out."""


class NotSatisfying(MarginalCodesError):
    pass


class NotFinite(MarginalCodesError):
    pass


class NotRightInfinite(MarginalCodesError):
    pass


class PromiseViolated(MarginalCodesError):
    """A user assertion about a transducer failed its bounded sanity check."""


class FormatError(MarginalCodesError, ValueError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
