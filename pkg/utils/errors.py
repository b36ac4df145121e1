"""
Exception hierarchy for the paracontact geometry engine
"""


class ParacontactError(Exception):
    """Base class for every error raised by the engine"""


class SingularMatrix(ParacontactError):
    """A matrix that must be invertible has zero determinant"""


class DimensionMismatch(ParacontactError):
    """Arrays or tensors disagree on the frame dimension"""


class DegeneratePlane(ParacontactError):
    """A plane section is degenerate: g(X,X)g(Y,Y) - g(X,Y)^2 = 0"""


class DegenerateDirection(ParacontactError):
    """No non-null horizontal direction is available for a curvature probe.

    Raised as is when H cannot be read; also the base of the horizontal-direction errors.
    """


class NoNonNullHorizontalDirection(DegenerateDirection):
    """The paracontact distribution has no non-null basis direction"""


class EvenDimension(ParacontactError):
    """Almost paracontact structures live on odd-dimensional frames only"""


class NotQuasiParaSasakian(ParacontactError):
    """A verifier that needs a quasi-para-Sasakian structure got something else"""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DimensionTooSmall(ParacontactError):
    """The operation is only defined above some dimension"""


class WrongDimension(ParacontactError):
    """The operation is only defined in one particular dimension"""


class ModelError(ParacontactError):
    """Invalid model input (catalog lookups and model files)"""


class UnknownModel(ModelError):
    """No built-in model with the requested name"""


class ParseError(ModelError):
    """A model file could not be parsed"""

    def __init__(self, message, line=None, field=None):
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        super().__init__(f"{message} ({', '.join(location)})" if location else message)
        self.line = line
        self.field = field


class DuplicateEntry(ModelError):
    """A structure constant was given twice (antisymmetry is implied)"""


class InvalidFrame(ParacontactError):
    """Structure constants or metric fail frame validation"""


class UnknownIdentity(ParacontactError):
    """An identity key that the suite does not know"""


class UnknownFlag(ParacontactError):
    """An expectation names a classification flag that does not exist"""
