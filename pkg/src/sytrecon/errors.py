"""Exception types raised across the package."""


class SytError(ValueError):
    """Base class for every error raised by sytrecon."""


# tableau core
class InvalidPartition(SytError):
    pass


class ShapeMismatch(SytError):
    pass


class NotStandard(SytError):
    pass


class AlphabetViolation(SytError):
    pass


class EmptyShape(SytError):
    pass


class InvalidCoord(SytError):
    pass


class SizeOutOfRange(SytError):
    pass


# taquin / minors
class EntryAbsent(SytError):
    pass


class RangeInvalid(SytError):
    pass


class KTooLarge(SytError):
    pass


class MalformedKey(SytError):
    pass


# reconstruction
class NoCandidate(SytError):
    pass


class ShapeAmbiguous(SytError):
    """Several shapes share the observed containment set."""

    def __init__(self, candidates):
        self.candidates = list(candidates)
        shapes = ", ".join(str(p) for p in self.candidates)
        super().__init__(f"shape not determined; candidates: {shapes}")


class InconsistentDiff(SytError):
    pass


class PreconditionUnmet(SytError):
    pass


class NoSurvivingMinor(SytError):
    pass


# verification
class CeilingExceeded(SytError):
    pass


class IdentityViolated(AssertionError):
    """An identity that should always hold failed; carries the witness."""

    def __init__(self, identity, witness, detail=""):
        self.identity = identity
        self.witness = witness
        msg = f"{identity} violated for tableau {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
