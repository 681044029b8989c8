"""Exception hierarchy.

Every error carries a short ``formula`` naming the identity whose domain was
violated; the CLI prints it in its one-line diagnostic.
"""

from __future__ import annotations


class PseudoGammaError(Exception):
    formula: str = ""

    def __init__(self, message: str, *, formula: str | None = None):
        super().__init__(message)
        if formula is not None:
            self.formula = formula


class NumericalDomainError(PseudoGammaError, ValueError):
    """Input outside the domain where a formula is evaluated."""


# ee_num
class ZeroNotRepresentable(NumericalDomainError):
    formula = "log-polar value (ln|z|, arg z)"


class CancellationToZero(NumericalDomainError):
    formula = "a + b = a(1 + b/a)"


class SingularAtMinusOne(NumericalDomainError):
    formula = "ln(1 + x)"


# classical
ZETA_SERIES = "zeta(s) = (1 - 2^(1-s))^-1 sum_n 2^-(n+1) sum_k (-1)^k C(n,k) (k+1)^-s"
ZETA_INTEGRAL = "zeta(s) = s/(s-1) - s int_1^inf (v - floor v) v^-(s+1) dv"
GAMMA_PRODUCT = "Gamma(s) = e^(-g0 s)/s prod_n e^(s/n)/(1 + s/n)"
XI_DEFINITION = "xi(s) = pi^(-s/2) (s/2)Gamma(s/2) (s-1)zeta(s)"
FUNCTIONAL_EQUATION = "pi^(-(1-s)/2) Gamma((1-s)/2) zeta(1-s) = pi^(-s/2) Gamma(s/2) zeta(s)"


class PoleAtOne(NumericalDomainError):
    formula = "zeta has its only (simple, residue 1) pole at s = 1"


class NearExclusionPoint(NumericalDomainError):
    formula = ZETA_SERIES


class MaxTermsExceeded(PseudoGammaError, ArithmeticError):
    pass


class DomainError(NumericalDomainError):
    pass


class PoleAtNonpositiveInteger(NumericalDomainError):
    formula = GAMMA_PRODUCT

    def __init__(self, message: str, *, distance: float, pole: int):
        super().__init__(message)
        self.distance = distance
        self.pole = pole


# pseudo_gamma
NABLA_DEFINITION = (
    "nabla(s) = ((W2-1/2)/(W1-1/2))^q "
    "[prod_k ((s-1/2) - e^(ik pi/2^K)(W1-1/2)) / ((s-1/2) - e^(ik pi/2^K)(W2-1/2))]^(q/2^(K+1))"
)
MAIN_BOUND = "|nabla(u)| <= R^(1/(4.4088 R)), 1/2 < u <= 2"


class RegimeViolation(NumericalDomainError):
    formula = "T >= T0 = 2445999554999, R >= 2T - 1"


class InvalidOverride(NumericalDomainError):
    formula = "K = floor((15 log R + 2 log 12)/(4 log 2))"


class ProductTooLarge(NumericalDomainError):
    formula = NABLA_DEFINITION


class FactorPole(NumericalDomainError):
    formula = NABLA_DEFINITION


class DenominatorPole(NumericalDomainError):
    formula = "nabla(s) = [(z^N - w1^N)/(z^N - w2^N)]^(q/N), z = s - 1/2"


class HypothesisViolation(NumericalDomainError):
    formula = MAIN_BOUND


class ConfigError(PseudoGammaError, ValueError):
    pass
