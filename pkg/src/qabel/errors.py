class QabelError(Exception):
    """Base class for errors raised by this package."""


class BackendMismatchError(QabelError, TypeError):
    pass


class TabulationError(QabelError, ValueError):
    """An arithmetic function is not defined far enough for the requested order."""


class FunctionTableError(QabelError, ValueError):
    def __init__(self, path, line: int, message: str):
        self.path = str(path)
        self.line = line
        super().__init__(f"{self.path}:{line}: {message}")


class OrderGuardError(QabelError, ValueError):
    """Partition enumeration was requested beyond the configured order guard."""


class AdequacyError(QabelError, ValueError):
    """Truncation order too small for a path point."""


class SectorError(QabelError, ValueError):
    """A path point lies outside the requested Stolz sector."""


class RegistrationError(QabelError, ValueError):
    pass
