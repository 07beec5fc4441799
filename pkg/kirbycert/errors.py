"""
Exception hierarchy for kirbycert.

Every error carries a stable ``code`` string. Reports and the CLI use the code,
so renaming a class never changes what a certificate says.
"""


class KirbyCertError(Exception):
    """Base class for all kirbycert errors."""

    code = "KirbyCertError"

    def __str__(self) -> str:
        message = super().__str__()
        return f"{self.code}: {message}" if message else self.code


# Presentation model

class PresentationError(KirbyCertError, ValueError):
    code = "PresentationError"


class DimensionMismatch(PresentationError):
    code = "DimensionMismatch"


class AsymmetricMatrix(PresentationError):
    code = "AsymmetricMatrix"


class NonzeroDiagonal(PresentationError):
    code = "NonzeroDiagonal"


class InvalidSlope(PresentationError):
    code = "InvalidSlope"


class InvalidKnotTag(PresentationError):
    code = "InvalidKnotTag"


class DuplicateId(PresentationError):
    code = "DuplicateId"


class UnknownId(PresentationError, KeyError):
    code = "UnknownId"

    # KeyError would quote the message otherwise
    __str__ = KirbyCertError.__str__


class NonIntegral(PresentationError):
    code = "NonIntegral"


class Meridional(PresentationError):
    code = "Meridional"


# Moves

class MoveError(KirbyCertError):
    code = "MoveError"


class NotUnknot(MoveError):
    code = "NotUnknot"


class NotMeridional(MoveError):
    code = "NotMeridional"


class FramingNotUnit(MoveError):
    code = "FramingNotUnit"


class SameComponent(MoveError):
    code = "SameComponent"


class InvalidSign(MoveError, ValueError):
    code = "InvalidSign"


class EmptyJustification(MoveError, ValueError):
    code = "EmptyJustification"


class AlreadyIntegral(MoveError):
    code = "AlreadyIntegral"


# Linear algebra

class LinearAlgebraError(KirbyCertError, ValueError):
    code = "LinearAlgebraError"


class NonSquare(LinearAlgebraError):
    code = "NonSquare"


class NonSymmetric(LinearAlgebraError):
    code = "NonSymmetric"


# 2-bridge arithmetic

class TwoBridgeError(KirbyCertError, ValueError):
    code = "TwoBridgeError"


class EvenP(TwoBridgeError):
    code = "EvenP"


class NotCoprime(TwoBridgeError):
    code = "NotCoprime"


class DegenerateQ(TwoBridgeError):
    code = "DegenerateQ"


class ZeroDenominator(TwoBridgeError):
    code = "ZeroDenominator"


# Family and interchange

class InvalidParams(KirbyCertError, ValueError):
    code = "InvalidParams"


class SchemaError(KirbyCertError, ValueError):
    code = "SchemaError"
