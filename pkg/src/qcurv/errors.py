"""Exception types raised across the package."""


class QCurvError(Exception):
    """Base class for all package errors."""


class ZeroDenominator(QCurvError, ZeroDivisionError):
    pass


class PoleEvaluation(QCurvError, ZeroDivisionError):
    def __init__(self, point):
        super().__init__(f"rational function has a pole at {point}")
        self.point = point


class OrderMismatch(QCurvError, ValueError):
    pass


class NonUnitConstantTerm(QCurvError, ZeroDivisionError):
    pass


class ConstantTermNotOne(QCurvError, ValueError):
    pass


class HalfPowerViolation(QCurvError, AssertionError):
    def __init__(self, index):
        super().__init__(f"square-root coefficient formula fails at index {index}")
        self.index = index


class IdentityViolation(QCurvError, AssertionError):
    """An internal two-route consistency assertion failed (implementation bug)."""


class InvalidN(QCurvError, ValueError):
    pass


class UnsupportedDimension(QCurvError, ValueError):
    pass


class UnsupportedN(QCurvError, ValueError):
    pass


class InvalidOrder(QCurvError, ValueError):
    pass


class SingularRecursion(QCurvError, ZeroDivisionError):
    pass


class NonPolynomialFamily(QCurvError, ArithmeticError):
    pass


class NonPolynomialResult(QCurvError, ArithmeticError):
    pass


class UnknownCheck(QCurvError, KeyError):
    pass


class InadmissibleModel(QCurvError, ValueError):
    pass
