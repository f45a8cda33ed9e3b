"""Exception types shared by all modules.

Every error carries a short ``code`` (its class name) which the command
line front end reports as ``domain error: <code>``.
"""


class EngineError(Exception):
    @property
    def code(self):
        return type(self).__name__


class DepthExceeded(EngineError):
    pass


class Undefined(EngineError):
    pass


class DivisionByZero(EngineError):
    pass


class ResourceLimit(EngineError):
    pass


class ZeroInverse(EngineError):
    pass


class EmptySet(EngineError):
    pass


class EqualInputs(EngineError):
    pass


class UnsupportedRep(EngineError):
    pass


class TransfiniteUnsupported(EngineError):
    pass


class NotRepresentable(EngineError):
    pass


class NotAChain(EngineError):
    pass


class NotANumber(EngineError):
    pass


class EmptyIntervalViolation(EngineError):
    pass


class ParseError(EngineError):
    def __init__(self, position, message=""):
        super().__init__(f"position {position}: {message}" if message else f"position {position}")
        self.position = position
