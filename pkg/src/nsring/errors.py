"""Exception types raised by the engine."""


class NSRingError(ValueError):
    """Base class for invalid input to any engine operation."""


class EmptyGenerators(NSRingError):
    pass


class NonCoprime(NSRingError):
    pass


class ZeroGenerator(NSRingError):
    pass


class NotAMember(NSRingError):
    pass


class ParentMismatch(NSRingError):
    pass


class NotContained(NSRingError):
    pass


class BadTemplate(NSRingError):
    pass
