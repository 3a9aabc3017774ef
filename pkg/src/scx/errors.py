"""Exception types shared across the package.

Everything raised on bad domain input derives from :class:`ScxError`, which the
CLI maps to exit code 1 (usage problems exit with 2).
"""


class ScxError(Exception):
    """Base class for domain errors."""


class InvalidInput(ScxError):
    """Malformed value (bad vertex label, empty facet list, ...)."""


class EmptySet(InvalidInput):
    """A complex may not contain the empty set."""


class Duplicate(InvalidInput):
    """The same set appeared twice in a collection."""


class MissingFace(InvalidInput):
    """A set is present but one of its non-empty subsets is not."""

    def __init__(self, owner, missing):
        self.owner = tuple(owner)
        self.missing = tuple(missing)
        super().__init__(f"set {self.owner} present but face {self.missing} missing")


class SizeLimit(ScxError):
    """Input exceeds a configured tractability cap."""


class UnknownVertex(ScxError):
    """Vertex id not present in the graph."""


class NotAConnectionGraph(ScxError):
    """Reconstruction failed: the graph is not the intersection or incidence
    graph of any simplicial complex."""


class IllegalMove(ScxError):
    """A homotopy move whose legality certificate does not hold."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class IntersectionNotContractible(ScxError):
    """Two overlapping, non-nested sets whose common link fails the
    contractibility certificate; signals a non-refined input complex."""

    def __init__(self, y, z):
        self.y = tuple(y)
        self.z = tuple(z)
        super().__init__(
            f"common link of {self.y} and {self.z} is not contractible"
        )


class CertificateFailure(ScxError):
    """A staged certificate in a generated trace failed; carries the index."""

    def __init__(self, index: int, reason: str = ""):
        self.index = index
        super().__init__(f"certificate {index} failed{': ' + reason if reason else ''}")


class NonInjective(ScxError):
    """A vertex function required to be injective is not."""


class NotOneDimensional(ScxError):
    """Operation requires a complex of dimension at most one."""
