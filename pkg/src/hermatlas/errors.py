"""Exception hierarchy shared by every stage of the pipeline."""


class AtlasError(Exception):
    """Base class for all errors raised by hermatlas."""


class InvalidConductorError(AtlasError, ValueError):
    pass


class NotRealCoefficientError(AtlasError, ValueError):
    pass


class InconsistentMonodromyError(AtlasError, ValueError):
    pass


class DisconnectedCoverError(AtlasError, ValueError):
    pass


class NotUnitaryError(AtlasError, ValueError):
    pass


class ConductorMismatchError(AtlasError, ValueError):
    pass


class NotBlockDiagonalError(AtlasError, ValueError):
    pass


class WrongPartError(AtlasError, ValueError):
    pass


class UnsplittableOverFieldError(AtlasError):
    """A commutant element has no eigenvalue in the ambient field."""


class RankUndecidedError(AtlasError):
    """No sampled centralizer was abelian, so no rank certificate exists."""


class NotEllipticError(AtlasError, ValueError):
    pass


class UnclassifiedError(AtlasError):
    """No catalogue row matches an invariant triple."""

    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(f"no catalogue entry matches (dim_C, k_dim, rank) = {self.triple}")


class AmbiguousClassificationError(UnclassifiedError):
    """Several non-isomorphic catalogue rows share an invariant triple."""

    def __init__(self, triple, candidates):
        super().__init__(triple)
        self.candidates = list(candidates)
        self.args = (f"(dim_C, k_dim, rank) = {self.triple} matches non-isomorphic rows "
                     f"{', '.join(self.candidates)}",)


class ParseError(AtlasError, ValueError):
    """Schema violation in a configuration document."""

    def __init__(self, message, *, key=None, line=None):
        self.key = key
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key {key!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class UnknownFixtureError(AtlasError, KeyError):
    def __str__(self):
        return f"unknown fixture {self.args[0]!r}"
