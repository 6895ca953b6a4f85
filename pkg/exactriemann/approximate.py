"""
Non-iterative and adaptive interface solvers: the HLLE middle state, the Roe solver with the Harten-Hyman
entropy fix, and adaptive estimates of the middle depth and star pressure that pick the cheapest accurate
approximation from the signs of the depth or pressure function at the outer states.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .exceptions import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HlleState:
    """
    :param s_left: Left wave speed
    :param s_right: Right wave speed
    :param q_middle: Conserved middle state
    """
    s_left: float
    s_right: float
    q_middle: tuple


@dataclass(frozen=True)
class RoeData:
    """
    Roe linearization of one interface.

    :param averages: (u, c, third) Roe averages; third is the transverse velocity or the enthalpy
    :param speeds: Eigenvalues, ascending
    :param waves: The three waves, each a conserved jump
    :param amdq: Left-going fluctuation with the entropy fix applied
    :param apdq: Right-going fluctuation with the entropy fix applied
    """
    averages: tuple
    speeds: tuple
    waves: tuple
    amdq: tuple
    apdq: tuple


def conservedPair(rp):
    """
    Outer conserved states of a Riemann problem as (3, 1) arrays
    """
    if rp.system == 'swe':
        left, right = rp.left.toConserved(), rp.right.toConserved()
    else:
        left, right = rp.left.toConserved(rp.params.gamma), rp.right.toConserved(rp.params.gamma)
    return (np.array(left.asTuple(), dtype=float).reshape(3, 1),
            np.array(right.asTuple(), dtype=float).reshape(3, 1))


def hlle(rp):
    """
    HLLE solution of a Riemann problem: one middle state between the Einfeldt speeds, fixed by conservation.

    :param rp: SweRiemannProblem or EulerRiemannProblem
    :rtype: HlleState
    """
    q_l, q_r = conservedPair(rp)
    s_l, s_r, q_m = kernels.hlleMiddle(rp.system, q_l, q_r, rp.params)
    if not np.all(np.isfinite(q_m)):
        raise DomainError(f'HLLE middle state of {rp} is not finite')
    return HlleState(float(s_l[0]), float(s_r[0]), tuple(float(x) for x in q_m[:, 0]))


def roe(rp):
    """
    Roe solver of a Riemann problem with entropy fixed fluctuations.

    :param rp: SweRiemannProblem or EulerRiemannProblem
    :rtype: RoeData
    """
    q_l, q_r = conservedPair(rp)
    waves, speeds, averages = kernels.roeWaves(rp.system, q_l, q_r, rp.params)
    amdq, apdq = kernels.hartenHymanFluctuations(rp.system, q_l, q_r, waves, speeds, rp.params)
    return RoeData(tuple(float(x[0]) for x in averages),
                   tuple(float(x) for x in speeds[:, 0]),
                   tuple(tuple(float(x) for x in waves[:, p, 0]) for p in range(3)),
                   tuple(float(x) for x in amdq[:, 0]),
                   tuple(float(x) for x in apdq[:, 0]))


class AdaptiveBranch(Enum):
    TWO_RAREFACTIONS = 'two-rarefactions'
    TWO_SHOCKS = 'two-shocks'
    MIXED = 'mixed'


@dataclass(frozen=True)
class AdaptiveEstimate:
    """
    :param value: Estimated middle depth or star pressure
    :param u_star: Middle velocity at value
    :param branch: AdaptiveBranch taken
    :param is_exact: True for the two-rarefaction branch
    :param phi_evals: Depth or pressure function evaluations spent
    :param report: SolveReport of the Newton refinement, if any
    """
    value: float
    u_star: float
    branch: AdaptiveBranch
    is_exact: bool
    phi_evals: int
    report: object = None


def _mixedBracket(rp, objective, phi_min, phi_max):
    from .base.riemann_problem import StarBracket

    low, high = rp.minState(), rp.maxState()
    two_rarefaction = rp.twoRarefactionValue()
    if high <= two_rarefaction:
        return StarBracket(low, high, phi_min, phi_max)
    return StarBracket(low, two_rarefaction, phi_min, objective.value(two_rarefaction))


def adaptiveSwe(rp):
    """
    Non-iterative middle depth: h_RR for two rarefactions (exact), the quadratic approximation for two
    shocks and the convex combination of the bracket otherwise.

    :param rp: SweRiemannProblem, wet
    :rtype: AdaptiveEstimate
    """
    from .guess import GuessKind

    if not rp.checkPositivity():
        raise rp._positivityError()
    objective = rp.objective()
    phi_min = objective.value(rp.minState())
    if phi_min > 0:
        value = rp.twoRarefactionValue()
        return AdaptiveEstimate(value, rp.starVelocity(value), AdaptiveBranch.TWO_RAREFACTIONS, True,
                                objective.evaluations)
    phi_max = phi_min if rp.maxState() == rp.minState() else objective.value(rp.maxState())
    if phi_max < 0:
        value = rp.guess(GuessKind.QA, objective).value
        branch = AdaptiveBranch.TWO_SHOCKS
    else:
        value = _mixedBracket(rp, objective, phi_min, phi_max).convexCombination()
        branch = AdaptiveBranch.MIXED
    logger.debug('adaptive estimate %r (%s) for %s', value, branch.value, rp)
    return AdaptiveEstimate(value, rp.starVelocity(value), branch, False, objective.evaluations)


def adaptiveEuler(rp, tol=None):
    """
    Star pressure by the adaptive solver: p_RR for two rarefactions (exact), the convex combination for
    one shock and one rarefaction, and positive Newton iterations started from the convex combination
    and bounded below by p_max for two shocks.

    :param rp: EulerRiemannProblem without vacuum
    :param tol: ToleranceSpec of the Newton branch
    :rtype: AdaptiveEstimate
    """
    from .base.riemann_problem import StarBracket
    from .rootfind import ToleranceSpec, positiveNewton

    tol = tol or ToleranceSpec()
    if not rp.checkPositivity():
        raise rp._positivityError()
    objective = rp.objective()
    phi_min = objective.value(rp.minState())
    if phi_min > 0:
        value = rp.twoRarefactionValue()
        return AdaptiveEstimate(value, rp.starVelocity(value), AdaptiveBranch.TWO_RAREFACTIONS, True,
                                objective.evaluations)
    p_max = rp.maxState()
    phi_max = phi_min if p_max == rp.minState() else objective.value(p_max)
    if phi_max < 0:
        two_rarefaction = rp.twoRarefactionValue()
        bracket = StarBracket(p_max, two_rarefaction, phi_max, objective.value(two_rarefaction))
        report = positiveNewton(objective, bracket.convexCombination(), p_max, tol)
        return AdaptiveEstimate(report.root, rp.starVelocity(report.root), AdaptiveBranch.TWO_SHOCKS,
                                False, objective.evaluations, report)
    value = _mixedBracket(rp, objective, phi_min, phi_max).convexCombination()
    return AdaptiveEstimate(value, rp.starVelocity(value), AdaptiveBranch.MIXED, False, objective.evaluations)
