"""
Errors raised by the topology library.

Management commands map ManifoldSyntaxError to exit code 1 and every other
TopologyError to exit code 2.
"""


class TopologyError(Exception):
    """Base class for domain errors."""


class NotCoprimeError(TopologyError, ValueError):
    def __init__(self, p, q):
        self.p, self.q = p, q
        if p == 0 and q == 0:
            super().__init__("(0,0) is not a slope")
        else:
            super().__init__(f"{p} and {q} are not coprime")


class DeterminantError(TopologyError, ValueError):
    def __init__(self, det):
        self.det = det
        super().__init__(f"determinant {det} is not +1 or -1")


class NotMonodromyError(TopologyError, ValueError):
    """Raised for det -1 matrices where a torus-bundle monodromy is required."""

    def __init__(self, matrix):
        self.matrix = matrix
        super().__init__(f"{matrix} is not a monodromy (determinant -1)")


class NonHyperbolicError(TopologyError):
    pass


class UnrecognizedFillingError(TopologyError):
    pass


class UnsupportedManifoldError(TopologyError):
    pass


class OrbitCapExceeded(TopologyError):
    """The relation orbit left the height cap; `partial_orbit` holds what was reached."""

    def __init__(self, triple, cap, partial_orbit):
        self.triple = triple
        self.cap = cap
        self.partial_orbit = partial_orbit
        super().__init__(
            f"orbit of {triple} exceeds height cap {cap} "
            f"({len(partial_orbit)} members explored)"
        )


class ManifoldSyntaxError(TopologyError, ValueError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class CensusIdentificationError(TopologyError):
    """A flat/Nil torus bundle did not match its Seifert identification."""


class NotATriangleError(TopologyError, ValueError):
    def __init__(self, slopes):
        self.slopes = slopes
        super().__init__(f"{', '.join(str(s) for s in slopes)} is not a Farey triangle")
