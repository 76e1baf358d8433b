"""Exception hierarchy shared by every module of the package."""


class CPNError(ValueError):
    """Base class for all numerical/validation errors raised here."""


class DimensionMismatch(CPNError):
    pass


class AllZero(CPNError):
    """Every amplitude vanished; the vector names no point of CP^n."""


class ZeroResult(CPNError):
    """A linear combination cancelled to the zero vector."""


class ZeroPivot(CPNError):
    """The requested chart does not contain the point."""


class NotUnitary(CPNError):
    pass


class NotSpecialUnitary(CPNError):
    pass


class NotHermitian(CPNError):
    pass


class KernelState(CPNError):
    """The operator annihilates the state, so it has no image in CP^n."""


class NotUnit(CPNError):
    pass
