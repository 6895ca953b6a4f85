import logging
import math
from dataclasses import dataclass, replace
from enum import Enum

from ..exceptions import ConfigurationError, PreconditionError
from ..guess import GuessKind
from ..rootfind import (SchemeKind, SolveReport, ToleranceSpec, boundingPolynomials, ostrowski, ostrowskiNewton,
                        positiveNewton, requireScalarScheme, twoStepNewton)
from .objective import ScalarObjective

logger = logging.getLogger(__name__)


class WaveType(Enum):
    """
    Type of a wave of the Riemann solution. The 2-wave is always a CONTACT.
    """
    SHOCK = 'shock'
    RAREFACTION = 'rarefaction'
    CONTACT = 'contact'


@dataclass(frozen=True)
class StarBracket:
    """
    Lower and upper bound of the root of the depth or pressure function, with the function values at both ends.

    :param minus: Lower bound
    :param plus: Upper bound
    :param phi_minus: Function value at the lower bound
    :param phi_plus: Function value at the upper bound
    :param phi_evals: Number of function evaluations spent on the bracket
    :param two_shocks: True when both nonlinear waves are shocks
    """
    minus: float
    plus: float
    phi_minus: float
    phi_plus: float
    phi_evals: int = 0
    two_shocks: bool = False

    def convexCombination(self):
        """
        The bound weighted by the other end's residual: (phi+ h- - phi- h+) / (phi+ - phi-)
        """
        if self.phi_plus == self.phi_minus:
            return self.minus
        return (self.phi_plus * self.minus - self.phi_minus * self.plus) / (self.phi_plus - self.phi_minus)


class RiemannProblem(object):
    """
    Common part of the shallow water and Euler Riemann problems. The middle state is the root of a scalar
    function (depth or pressure) that is increasing and concave, so the same guesses and schemes apply to both.
    Subclasses provide the system specific formulas.

    :param left: Left primitive state
    :param right: Right primitive state
    :param params: System parameters
    """
    system = None

    def __init__(self, left, right, params):
        self.left = left
        self.right = right
        self.params = params

    def _outerValues(self):
        raise NotImplementedError

    def _evaluate(self, x):
        raise NotImplementedError

    def checkPositivity(self):
        raise NotImplementedError

    def _positivityError(self):
        raise NotImplementedError

    def twoRarefactionValue(self):
        raise NotImplementedError

    def guess(self, kind, objective=None):
        raise NotImplementedError

    def starClosures(self, value, u_star=None, sound_speeds=None):
        raise NotImplementedError

    def _iterateDirectly(self, scheme_kind, guess_kind, tol, objective):
        requireScalarScheme(scheme_kind)

    def objective(self):
        """
        The depth or pressure function as a counting ScalarObjective returning (phi, phi').

        :rtype: ScalarObjective
        """
        return ScalarObjective(self._evaluate, name=f'{self.system} phi')

    def minState(self):
        return min(self._outerValues())

    def maxState(self):
        return max(self._outerValues())

    def classifyWaves(self, objective=None):
        """
        Classify the 1- and 3-wave from the signs of phi at the smaller and larger outer value.
        In the mixed case the shock is on the side with the smaller outer value; equal outer values with
        phi = 0 are a state at rest and classify as two (degenerate) rarefactions.

        :return: (left wave, right wave)
        """
        objective = objective or self.objective()
        if objective.value(self.minState()) > 0:
            return WaveType.RAREFACTION, WaveType.RAREFACTION
        if objective.value(self.maxState()) < 0:
            return WaveType.SHOCK, WaveType.SHOCK
        value_left, value_right = self._outerValues()
        if value_left == value_right:
            return WaveType.RAREFACTION, WaveType.RAREFACTION
        if value_left < value_right:
            return WaveType.SHOCK, WaveType.RAREFACTION
        return WaveType.RAREFACTION, WaveType.SHOCK

    def bracketStar(self, objective=None):
        """
        Bracket the root when the solution has at least one shock: (max, RR) for two shocks and
        (min, min(max, RR)) otherwise. Needs at most three function evaluations.

        :param objective: Objective whose counter is charged, a fresh one by default
        :rtype: StarBracket
        """
        objective = objective or self.objective()
        start = objective.evaluations
        low, high = self.minState(), self.maxState()
        phi_low = objective.value(low)
        if phi_low > 0:
            raise PreconditionError(f'{self} has two rarefactions, the root is known explicitly')
        phi_high = phi_low if high == low else objective.value(high)
        two_rarefaction = self.twoRarefactionValue()
        if phi_high < 0:
            minus, phi_minus = high, phi_high
            plus, phi_plus = two_rarefaction, objective.value(two_rarefaction)
            two_shocks = True
        else:
            minus, phi_minus = low, phi_low
            if high <= two_rarefaction:
                plus, phi_plus = high, phi_high
            else:
                plus, phi_plus = two_rarefaction, objective.value(two_rarefaction)
            two_shocks = False
        return StarBracket(minus, plus, phi_minus, phi_plus, objective.evaluations - start, two_shocks)

    def solveStar(self, guess_kind=GuessKind.SS, scheme_kind=SchemeKind.POSITIVE_NEWTON, tol: ToleranceSpec = None):
        """
        Solve for the middle state. A solution with two rarefactions is returned exactly without iterating;
        otherwise the selected initial guess is refined by the selected scheme.

        :param guess_kind: The initial guess
        :param scheme_kind: The iterative scheme
        :param tol: Termination criterion
        :return: (star state, SolveReport)
        """
        tol = tol or ToleranceSpec()
        guess_kind = GuessKind(guess_kind)
        scheme_kind = SchemeKind(scheme_kind)
        if not self.checkPositivity():
            raise self._positivityError()
        objective = self.objective()
        lower = self.minState()
        phi_lower = objective.value(lower)
        if phi_lower >= 0:
            value = lower if phi_lower == 0 else self.twoRarefactionValue()
            report = SolveReport(value, 0, objective.evaluations, True, self._evaluate(value)[0], (value,))
            return self.starClosures(value), report

        direct = self._iterateDirectly(scheme_kind, guess_kind, tol, objective)
        if direct is not None:
            star, report = direct
            return star, replace(report, function_evals=report.function_evals + objective.evaluations)

        if scheme_kind is SchemeKind.BOUNDING_POLYNOMIALS:
            report = boundingPolynomials(objective, lower, self.twoRarefactionValue(), tol)
        else:
            result = self.guess(guess_kind, objective)
            if result.bracket is not None:
                lower = result.bracket.minus
            x0 = result.value
            if not (math.isfinite(x0) and x0 > 0):
                logger.debug('%s guess %r is not positive, using %r', guess_kind.name, x0, lower)
                x0 = lower
            if scheme_kind is SchemeKind.POSITIVE_NEWTON:
                report = positiveNewton(objective, x0, lower, tol)
            elif scheme_kind is SchemeKind.TWO_STEP_NEWTON:
                report = twoStepNewton(objective, x0, tol)
            elif scheme_kind is SchemeKind.OSTROWSKI:
                report = ostrowski(objective, x0, tol)
            elif scheme_kind is SchemeKind.OSTROWSKI_NEWTON:
                report = ostrowskiNewton(objective, x0, lower, tol)
            else:
                raise ConfigurationError(f'Scheme {scheme_kind.label} is not supported for {self.system}')
        report = replace(report, function_evals=objective.evaluations)
        return self.starClosures(report.root), report

    def __repr__(self):
        return f'{type(self).__name__}({self.left!r}, {self.right!r}, {self.params!r})'

    def __str__(self):
        return f'{self.system} Riemann problem {self.left} | {self.right}'
