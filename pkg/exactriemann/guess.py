import logging
import math
from dataclasses import dataclass, replace
from enum import Enum

from . import approximate
from .exceptions import ConfigurationError, PreconditionError

logger = logging.getLogger(__name__)

# scaling of the outer depths probed by the quadratic approximation
QA_SCALE = (2 * math.sqrt(2) - 1) ** 2


class GuessKind(Enum):
    """
    Initial guess selector. QA exists for the shallow water equations only.
    """
    RR = 'RR'
    AV = 'AV'
    QA = 'QA'
    PV = 'PV'
    SS = 'SS'
    CC = 'CC'
    HLLE = 'HLLE'

    @property
    def label(self):
        return _GUESS_LABELS[self]


_GUESS_LABELS = {
    GuessKind.RR: 'RR (two-rarefaction)',
    GuessKind.AV: 'AV (average)',
    GuessKind.QA: 'QA (quadratic approximation)',
    GuessKind.PV: 'PV (primitive variables)',
    GuessKind.SS: 'SS (two-shock)',
    GuessKind.CC: 'CC (convex combination)',
    GuessKind.HLLE: 'HLLE',
}

SWE_GUESSES = (GuessKind.AV, GuessKind.RR, GuessKind.QA, GuessKind.CC, GuessKind.PV, GuessKind.SS, GuessKind.HLLE)
EULER_GUESSES = (GuessKind.AV, GuessKind.RR, GuessKind.PV, GuessKind.SS, GuessKind.CC, GuessKind.HLLE)


@dataclass(frozen=True)
class GuessResult:
    """
    An initial guess of the middle depth or star pressure.

    :param value: The guess
    :param phi_evals: Function evaluations spent on the guess
    :param is_exact: True when the guess is known to be the root (two rarefactions)
    :param clamped: True when a non-positive value was replaced by the lower bound
    :param bracket: The StarBracket computed along the way, if any
    """
    value: float
    phi_evals: int = 0
    is_exact: bool = False
    clamped: bool = False
    bracket: object = None


def _convexCombination(rp, objective):
    try:
        bracket = rp.bracketStar(objective)
    except PreconditionError:
        return GuessResult(rp.twoRarefactionValue(), is_exact=True)
    return GuessResult(bracket.convexCombination(), bracket=bracket)


def _sweQuadratic(rp, objective):
    g = rp.params.g
    h_min, h_max = rp.minState(), rp.maxState()
    if objective.value(QA_SCALE * h_min) >= 0:
        return GuessResult(rp.twoRarefactionDepth())
    jump = rp.left.u - rp.right.u
    if objective.value(QA_SCALE * h_max) < 0:
        value = math.sqrt(h_min * h_max) * (1 + math.sqrt(2) * jump / (math.sqrt(g * h_min) + math.sqrt(g * h_max)))
    else:
        radicand = 3 * h_min + 2 * math.sqrt(2 * h_min * h_max) + math.sqrt(2 / g) * jump * math.sqrt(h_min)
        value = (-math.sqrt(2 * h_min) + math.sqrt(radicand)) ** 2 if radicand >= 0 else float('nan')
    if not value > 0:
        logger.debug('QA guess %r for %s clamped to h_min %r', value, rp, h_min)
        return GuessResult(h_min, clamped=True)
    return GuessResult(value)


def swePrimitiveVariables(rp):
    """
    Positivity preserving linearized depth, positive exactly when the middle state is wet.
    """
    g = rp.params.g
    h_sum = rp.left.h + rp.right.h
    return h_sum / 2 + (rp.left.u - rp.right.u) * h_sum / 4 / (math.sqrt(g * rp.left.h) + math.sqrt(g * rp.right.h))


def _sweTwoShock(rp):
    g = rp.params.g
    h_bar = swePrimitiveVariables(rp)
    y_left = math.sqrt(g / 2 * (h_bar + rp.left.h) / (h_bar * rp.left.h))
    y_right = math.sqrt(g / 2 * (h_bar + rp.right.h) / (h_bar * rp.right.h))
    return ((rp.left.h * y_left + rp.right.h * y_right - rp.right.u + rp.left.u)
            / (y_left + y_right))


def _middleOrClamp(rp, value, name):
    if math.isfinite(value) and value > 0:
        return GuessResult(value)
    logger.debug('%s guess %r for %s clamped to %r', name, value, rp, rp.minState())
    return GuessResult(rp.minState(), clamped=True)


def sweGuess(kind, rp, objective=None):
    """
    Initial guess of the middle depth.

    :param kind: GuessKind
    :param rp: SweRiemannProblem, wet
    :param objective: Objective charged for depth function evaluations, a fresh one by default
    :rtype: GuessResult
    """
    kind = GuessKind(kind)
    objective = objective or rp.objective()
    start = objective.evaluations
    if kind is GuessKind.RR:
        result = GuessResult(rp.twoRarefactionDepth())
    elif kind is GuessKind.AV:
        result = GuessResult((rp.left.h + rp.right.h) / 2)
    elif kind is GuessKind.QA:
        result = _sweQuadratic(rp, objective)
    elif kind is GuessKind.PV:
        result = GuessResult(swePrimitiveVariables(rp))
    elif kind is GuessKind.SS:
        result = GuessResult(_sweTwoShock(rp))
    elif kind is GuessKind.CC:
        result = _convexCombination(rp, objective)
    else:
        result = _middleOrClamp(rp, approximate.hlle(rp).q_middle[0], 'HLLE')
    return replace(result, phi_evals=objective.evaluations - start)


def eulerPrimitiveVariables(rp):
    """
    Linearized star pressure bounded below by the smaller outer pressure.
    """
    a_left, a_right = rp.soundSpeeds
    linear = ((rp.left.p + rp.right.p) / 2
              - (rp.right.u - rp.left.u) * (rp.left.rho + rp.right.rho) * (a_left + a_right) / 8)
    return max(rp.minState(), linear)


def _eulerTwoShock(rp):
    gamma = rp.params.gamma
    p_bar = eulerPrimitiveVariables(rp)
    weights = []
    for state in (rp.left, rp.right):
        c = 2 / ((gamma + 1) * state.rho)
        b = (gamma - 1) / (gamma + 1) * state.p
        weights.append(math.sqrt(c / (p_bar + b)))
    g_left, g_right = weights
    return (g_left * rp.left.p + g_right * rp.right.p - (rp.right.u - rp.left.u)) / (g_left + g_right)


def _eulerHllePressure(rp):
    gamma = rp.params.gamma
    rho, rho_u, energy = approximate.hlle(rp).q_middle
    if not rho > 0:
        return float('nan')
    return (gamma - 1) * (energy - rho_u * rho_u / (2 * rho))


def eulerGuess(kind, rp, objective=None):
    """
    Initial guess of the star pressure.

    :param kind: GuessKind, any but QA
    :param rp: EulerRiemannProblem without vacuum
    :param objective: Objective charged for pressure function evaluations, a fresh one by default
    :rtype: GuessResult
    """
    kind = GuessKind(kind)
    objective = objective or rp.objective()
    start = objective.evaluations
    if kind is GuessKind.RR:
        result = GuessResult(rp.twoRarefactionPressure())
    elif kind is GuessKind.AV:
        result = GuessResult((rp.left.p + rp.right.p) / 2)
    elif kind is GuessKind.QA:
        raise ConfigurationError('The QA guess is only available for the shallow water equations')
    elif kind is GuessKind.PV:
        result = GuessResult(eulerPrimitiveVariables(rp))
    elif kind is GuessKind.SS:
        result = GuessResult(_eulerTwoShock(rp))
    elif kind is GuessKind.CC:
        result = _convexCombination(rp, objective)
    else:
        result = _middleOrClamp(rp, _eulerHllePressure(rp), 'HLLE')
    return replace(result, phi_evals=objective.evaluations - start)


def guessesFor(system):
    """
    The guesses available for a system, in report order.
    """
    if system == 'swe':
        return SWE_GUESSES
    if system == 'euler':
        return EULER_GUESSES
    raise ConfigurationError(f'system {system} not supported')
