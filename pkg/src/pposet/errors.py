"""Exception hierarchy shared by every module of the package."""


class PosetError(Exception):
    """Base class for all errors raised by pposet."""


class PosetSyntaxError(PosetError):
    """A poset file could not be parsed."""


class CycleError(PosetError):
    """The listed relations close up to something that is not antisymmetric."""


class InvalidDuplicationError(PosetError):
    """Duplication requested at an element that does not admit it."""


class CertificateError(PosetError):
    """A construction certificate is malformed (label collision, unknown label)."""


class NotCIError(PosetError):
    """An operation that needs a complete-intersection poset got one that is not."""


class ResourceLimitError(PosetError):
    """An enumeration exceeded its configured step budget."""


class InvariantError(PosetError):
    """An internal invariant failed. This indicates a bug, never bad input."""


class CIDisagreementError(InvariantError):
    """The three complete-intersection deciders returned different answers."""
