"""Exception hierarchy.

Every domain failure raises a subclass of :class:`FriezeError`.  The CLI
prints the class name on stderr and exits with status 2, so the names are
part of the public interface.
"""


class FriezeError(Exception):
    """Base class for all domain errors raised by friezekit."""

    @property
    def name(self) -> str:
        return type(self).__name__


class InvalidInput(FriezeError, ValueError):
    """Input has the wrong shape (length, width, rank, ...)."""


# exact
class NonSquare(FriezeError):
    pass


class Singular(FriezeError):
    pass


# coxeter
class NotClosed(FriezeError):
    """A closure continuant of the first row has the wrong value.

    ``which`` is 1, 2 or 3, naming the violated determinant in the order
    K(a_1..a_{m+2}) = 0, K(a_2..a_{m+3}) = 0, K(a_2..a_{m+2}) = 1.
    """

    def __init__(self, which: int, value=None):
        self.which = which
        self.value = value
        super().__init__(f"closure condition {which} fails (got {value})")


class ZeroSeedEntry(FriezeError):
    pass


class NotSuperperiodic(FriezeError):
    pass


class DegenerateQuadruple(FriezeError):
    pass


class EvenN(FriezeError):
    pass


class ConsecutiveCoincidence(FriezeError):
    pass


# polygon
class OutOfRange(FriezeError):
    pass


class NotAQuiddity(FriezeError):
    pass


class InvalidTriangulation(FriezeError):
    pass


class InvalidDissection(FriezeError):
    pass


# quiverfrieze
class InvalidRank(FriezeError):
    pass


class Cyclic(FriezeError):
    pass


class InvalidQuiver(FriezeError):
    pass


class ZeroDivisionAtVertex(FriezeError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"zero divisor while evaluating vertex {vertex}")


class ZeroClusterVariable(FriezeError):
    pass


# sltiling
class RankOutOfRange(FriezeError):
    pass


class NotCoprime(FriezeError):
    pass


class PreconditionFailed(FriezeError):
    pass
