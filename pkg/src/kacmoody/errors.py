"""Exception hierarchy.

Indices carried by exceptions are 1-based, matching the generator names
``e1, f1, ...`` used throughout the package.
"""


class KacMoodyError(Exception):
    """Base class for every error raised by this package."""


# -- generalised Cartan matrices -------------------------------------------

class GCMError(KacMoodyError, ValueError):
    pass


class NotSquare(GCMError):
    pass


class AxiomC1Violated(GCMError):
    def __init__(self, i):
        self.i = i
        super().__init__(f"diagonal entry a[{i}][{i}] must be 2")


class AxiomC2Violated(GCMError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"off-diagonal entry a[{i}][{j}] must be <= 0")


class AxiomC3Violated(GCMError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"a[{i}][{j}] and a[{j}][{i}] must vanish together")


class NotSymmetrisable(GCMError):
    pass


class EmptySubset(GCMError):
    pass


class DimensionMismatch(KacMoodyError, ValueError):
    pass


class IndexOutOfRange(KacMoodyError, IndexError):
    pass


# -- roots ---------------------------------------------------------------

class RootError(KacMoodyError, ValueError):
    pass


class NotSignPure(RootError):
    pass


class AlphaNotReal(RootError):
    pass


class BetaNotRoot(RootError):
    pass


class NotImaginaryPositive(RootError):
    def __init__(self, t):
        self.t = t
        super().__init__(f"root #{t} is not a positive imaginary root")


class SumIsRoot(RootError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"beta_{i} + beta_{j} is a root")


class PreconditionViolated(RootError):
    pass


class HeightBoundTooLarge(RootError):
    pass


# -- Lie algebra engine --------------------------------------------------

class EngineError(KacMoodyError):
    pass


class ResourceLimit(EngineError):
    def __init__(self, message, degree=None):
        self.degree = degree
        super().__init__(message)


class TruncationExceeded(EngineError):
    def __init__(self, degree, height):
        self.degree = tuple(degree)
        self.height = height
        super().__init__(
            f"degree {list(self.degree)} lies outside the truncation |ht| <= {height}")


class HeightExceedsTruncation(EngineError):
    pass


class ZeroElement(EngineError, ValueError):
    pass


class NotHomogeneous(EngineError, ValueError):
    pass


class DenominatorZero(EngineError):
    pass


class InternalConsistencyError(EngineError):
    """A computed quantity contradicts a structural identity of g(A)."""


class ExpressionSyntaxError(EngineError, ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownGenerator(EngineError, ValueError):
    pass


# -- subalgebras ---------------------------------------------------------

class SubalgebraError(KacMoodyError):
    pass


class NotRealRoot(SubalgebraError, ValueError):
    pass


class NotAbelian(SubalgebraError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"brackets do not vanish: {witness}")


class NotInNimPlus(SubalgebraError, ValueError):
    pass
