"""Exception types shared across the engine."""


class OscoverError(Exception):
    """Base class for all engine errors."""


class DomainError(OscoverError, ValueError):
    """An input lies outside the domain of an operation."""


class LatticeError(OscoverError):
    """Internal inconsistency of the intersection form (should never happen)."""


class DataError(OscoverError, ValueError):
    """Declared data contradicts what the lattice computes."""


class ConstructionInconsistency(OscoverError):
    """A verification step of the family construction failed.

    Carries the name of the failing check and the classes involved so the
    ambiguity can be localized.
    """

    def __init__(self, check, detail="", classes=None):
        self.check = check
        self.detail = detail
        self.classes = dict(classes or {})
        msg = f"construction check {check!r} failed"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
