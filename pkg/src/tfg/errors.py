"""Exception hierarchy shared by all modules."""


class TFGError(Exception):
    pass


class DomainError(TFGError, ValueError):
    """An argument lies outside the domain of an operation."""


class NotAHomeomorphism(DomainError):
    """A cocycle whose induced label map is not a bijection."""


class Inconclusive(TFGError):
    """A finite-level certificate could neither confirm nor refute a claim."""


class VerificationFailure(TFGError, AssertionError):
    """An identity that should hold exactly did not."""
