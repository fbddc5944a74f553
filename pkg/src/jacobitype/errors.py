"""Exception hierarchy shared by every module of the package."""


class JacobiTypeError(Exception):
    """Base class for all library errors."""


# exactalg

class ZeroDenominator(JacobiTypeError, ZeroDivisionError):
    pass


class PoleAtPoint(JacobiTypeError, ZeroDivisionError):
    pass


class IndeterminateAtPoint(JacobiTypeError, ZeroDivisionError):
    """Numerator and denominator both vanish at the evaluation point."""


class NotSeparable(JacobiTypeError):
    pass


class ProbeFailure(JacobiTypeError):
    pass


class PolySyntaxError(JacobiTypeError, SyntaxError):
    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.text = text
        self.offset = offset


# families

class InvalidParams(JacobiTypeError, ValueError):
    pass


class RatioVanishes(JacobiTypeError):
    def __init__(self, n: int, i: int):
        super().__init__(f"f({n},{i}) = 0")
        self.n, self.i = n, i


class RatioPole(JacobiTypeError):
    def __init__(self, n: int, i: int):
        super().__init__(f"f({n},{i}) has a pole")
        self.n, self.i = n, i


class BetaVanishes(JacobiTypeError):
    def __init__(self, n: int):
        super().__init__(f"beta({n}) = 0: no three-term recurrence past index {n}")
        self.n = n


class NotThreeTerm(JacobiTypeError):
    pass


class InsufficientMoments(JacobiTypeError):
    pass


class TableMismatch(JacobiTypeError):
    """Tabulated alpha/beta disagree with the values derived from f."""


# classify

class ClassifyError(JacobiTypeError):
    """Base for classifier failures; ``partial`` carries whatever was decomposed."""

    def __init__(self, message: str, partial: dict | None = None):
        super().__init__(message)
        self.partial = partial or {}


class NotJacobiType(ClassifyError):
    pass


class NoMatch(ClassifyError):
    pass


class MissingForcedFactor(ClassifyError):
    pass


class NotRationalNormalForm(ClassifyError):
    pass


class Ambiguous(ClassifyError):
    pass


class ClassifyNotSeparable(ClassifyError, NotSeparable):
    pass


# besselnum

class DomainError(JacobiTypeError, ValueError):
    pass


class ConvergenceFailure(JacobiTypeError):
    def __init__(self, k: int):
        super().__init__(f"Newton iteration for zero #{k} did not converge")
        self.k = k


# gauge

class GaugeVanishesOnDiagonal(JacobiTypeError):
    def __init__(self, n: int):
        super().__init__(f"g({n},{n}) = 0")
        self.n = n


class IdentityFailure(JacobiTypeError):
    def __init__(self, which: str, n: int, k: int | None = None):
        where = f"n={n}" if k is None else f"n={n}, k={k}"
        super().__init__(f"identity {which!r} fails at {where}")
        self.which, self.n, self.k = which, n, k


class InvalidDecomposition(JacobiTypeError):
    pass
