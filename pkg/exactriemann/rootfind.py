import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum

from .exceptions import ConfigurationError, DomainError, NonConvergenceError, PreconditionError

logger = logging.getLogger(__name__)

# below this the Ostrowski denominator is treated as zero (relative to the residual scale)
_DEGENERATE_DENOMINATOR = 10 ** 300


class TerminationMode(Enum):
    """
    Termination criterion of an iterative scheme
    """
    RESIDUAL = 'residual'
    STAGNATION = 'stagnation'
    SCALED_RESIDUAL = 'scaled'


class SchemeKind(Enum):
    """
    Iterative scheme selector. GOTTLIEB_GROTH and VAN_LEER are only available for the Euler equations.
    """
    POSITIVE_NEWTON = 'positive-newton'
    TWO_STEP_NEWTON = 'two-step-newton'
    OSTROWSKI = 'ostrowski'
    OSTROWSKI_NEWTON = 'ostrowski-newton'
    BOUNDING_POLYNOMIALS = 'bounding-polynomials'
    GOTTLIEB_GROTH = 'gottlieb-groth'
    VAN_LEER = 'van-leer'

    @property
    def label(self):
        return _SCHEME_LABELS[self]


_SCHEME_LABELS = {
    SchemeKind.POSITIVE_NEWTON: 'Positive Newton',
    SchemeKind.TWO_STEP_NEWTON: 'Two-step Newton',
    SchemeKind.OSTROWSKI: 'Ostrowski',
    SchemeKind.OSTROWSKI_NEWTON: 'Ostrowski-Newton',
    SchemeKind.BOUNDING_POLYNOMIALS: 'Bounding polynomials',
    SchemeKind.GOTTLIEB_GROTH: 'GG',
    SchemeKind.VAN_LEER: 'van Leer',
}


@dataclass(frozen=True)
class ToleranceSpec:
    """
    Termination criterion and iteration cap of a solve. Only the tolerances of the chosen mode are read:
    eps_r for RESIDUAL, eps_s for STAGNATION and eps_r1, eps_r2 for SCALED_RESIDUAL.
    Gottlieb-Groth and van Leer use eps_r for their own relative criteria.

    :param mode: The termination mode
    :param eps_r: Residual tolerance
    :param eps_s: Relative stagnation tolerance
    :param eps_r1: Relative part of the scaled residual tolerance
    :param eps_r2: Absolute part of the scaled residual tolerance
    :param max_iter: Maximum number of iterations
    """
    mode: TerminationMode = TerminationMode.RESIDUAL
    eps_r: float = 1e-12
    eps_s: float = 1e-12
    eps_r1: float = 1e-12
    eps_r2: float = 1e-12
    max_iter: int = 20

    def __post_init__(self):
        if not isinstance(self.mode, TerminationMode):
            object.__setattr__(self, 'mode', TerminationMode(self.mode))
        for name in ('eps_r', 'eps_s', 'eps_r1', 'eps_r2'):
            value = getattr(self, name)
            if not value > 0:
                raise DomainError(f'Tolerance {name} must be positive, got {value}')
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise DomainError(f'max_iter must be a positive integer, got {self.max_iter}')

    @property
    def epsilon(self):
        """
        The tolerance read by the chosen mode (the relative one for SCALED_RESIDUAL)
        """
        if self.mode is TerminationMode.STAGNATION:
            return self.eps_s
        if self.mode is TerminationMode.SCALED_RESIDUAL:
            return self.eps_r1
        return self.eps_r


@dataclass(frozen=True)
class SolveReport:
    """
    Outcome of an iterative solve.

    :param root: The accepted (or, when not converged, the best) iterate
    :param iterations: Number of iterations. Ostrowski half-steps count 0.5
    :param function_evals: Number of objective calls, each giving psi and psi' together
    :param converged: True when the termination criterion holds at root, or when a bounding polynomial
        bracket closed below the tolerance
    :param final_residual: psi(root)
    :param iterates: The sequence of evaluated iterates, oldest first
    :param derivative_evals: Number of derivative-only calls (two-step Newton midpoints)
    :param brackets: Bounding polynomials only: the (x_minus, x_plus) bracket after every iteration
    """
    root: float
    iterations: float
    function_evals: int
    converged: bool
    final_residual: float
    iterates: tuple = field(default=(), repr=False, compare=False)
    derivative_evals: int = 0
    brackets: tuple = field(default=(), repr=False, compare=False)


@dataclass(frozen=True)
class GgIterState:
    """
    Per-iterate quantities of the Gottlieb-Groth iteration on the star velocity.
    w_left/w_right are None on a rarefaction side and a_star_left/a_star_right are None on a shock side.
    """
    u_k: float
    p_star_left: float
    p_star_right: float
    dp_star_left: float
    dp_star_right: float
    w_left: float = None
    w_right: float = None
    a_star_left: float = None
    a_star_right: float = None


@dataclass(frozen=True)
class VlIterState:
    """
    Per-iterate quantities of van Leer's iteration on the star pressure.
    """
    p_k: float
    u_star_left: float
    u_star_right: float
    du_star_left: float
    du_star_right: float
    a_left: float
    a_right: float


def _isPositive(x):
    return math.isfinite(x) and x > 0


def checkTermination(tol: ToleranceSpec, history):
    """
    Decide whether an iteration may stop.

    :param tol: The tolerance specification
    :param history: Sequence of (x, psi(x)) pairs, oldest first
    :return: True when the criterion of tol.mode holds at the last iterate
    :rtype: bool
    """
    if len(history) == 0:
        raise PreconditionError('Termination needs at least one iterate')
    x_k, psi_k = history[-1]
    if tol.mode is TerminationMode.RESIDUAL:
        return abs(psi_k) < tol.eps_r
    if tol.mode is TerminationMode.SCALED_RESIDUAL:
        return abs(psi_k) < abs(history[0][1]) * tol.eps_r1 + tol.eps_r2
    if len(history) < 2:
        raise PreconditionError('Stagnation criterion needs two iterates')
    x_prev = history[-2][0]
    if x_k == x_prev:
        return True
    return abs(x_k - x_prev) / (abs(x_k + x_prev) / 2) < tol.eps_s


class _Trace(object):
    """
    Bookkeeping shared by the schemes: evaluated iterates, residuals and the report.
    """

    def __init__(self, objective, tol):
        self.objective = objective
        self.tol = tol
        self.history = []
        self.iterations = 0
        self._start_evals = objective.evaluations
        self._start_derivatives = objective.derivative_evaluations

    def evaluate(self, x):
        if not _isPositive(x):
            raise NonConvergenceError(f'Iterate {x!r} of {self.objective.name} left (0, inf)', self.report(False))
        value, derivative = self.objective(x)
        self.history.append((x, value))
        return value, derivative

    def derivative(self, x):
        if not _isPositive(x):
            raise NonConvergenceError(f'Iterate {x!r} of {self.objective.name} left (0, inf)', self.report(False))
        return self.objective.derivative(x)

    def converged(self):
        if self.tol.mode is TerminationMode.STAGNATION and len(self.history) < 2:
            return False
        return checkTermination(self.tol, self.history)

    def report(self, converged):
        if not self.history:
            return SolveReport(float('nan'), self.iterations, self.evaluations, False, float('nan'), (),
                               self.derivativeEvaluations)
        if converged:
            root, residual = self.history[-1]
        else:
            root, residual = min(self.history, key=lambda pair: abs(pair[1]))
        return SolveReport(root, self.iterations, self.evaluations, converged, residual,
                           tuple(x for x, _ in self.history), self.derivativeEvaluations)

    @property
    def evaluations(self):
        return self.objective.evaluations - self._start_evals

    @property
    def derivativeEvaluations(self):
        return self.objective.derivative_evaluations - self._start_derivatives

    def exhausted(self):
        return self.iterations >= self.tol.max_iter

    def fail(self, reason):
        raise NonConvergenceError(reason, self.report(False))


def _newtonStep(trace, x, value, derivative):
    if not (math.isfinite(derivative) and derivative > 0):
        trace.fail(f'Derivative {derivative!r} at {x!r} is not positive')
    return x - value / derivative


def _newtonPhase(trace, x, lower_bound, correct):
    """
    Plain Newton iterations from x, preceded by the positivity correction when correct is set.
    """
    value, derivative = trace.evaluate(x)
    if trace.converged():
        return trace.report(True)
    if trace.exhausted():
        trace.fail(f'No convergence within {trace.tol.max_iter} iterations')
    x = _newtonStep(trace, x, value, derivative)
    if correct:
        x = max(lower_bound, x)
    trace.iterations += 1
    while True:
        value, derivative = trace.evaluate(x)
        if trace.converged():
            return trace.report(True)
        if trace.exhausted():
            trace.fail(f'No convergence within {trace.tol.max_iter} iterations')
        x = _newtonStep(trace, x, value, derivative)
        trace.iterations += 1


def positiveNewton(objective, x0_raw, lower_bound, tol: ToleranceSpec = None):
    """
    Newton's method started from the left of the root. The raw guess is replaced by
    max(lower_bound, x0_raw - psi(x0_raw)/psi'(x0_raw)), after which all iterates are positive and
    non-decreasing for increasing, concave objectives.

    :param objective: The ScalarObjective
    :param x0_raw: Initial guess
    :param lower_bound: A positive lower bound of the root
    :param tol: Termination criterion
    :return: The report of the converged solve
    :rtype: SolveReport
    """
    tol = tol or ToleranceSpec()
    if not _isPositive(lower_bound):
        raise DomainError(f'Lower bound must be positive, got {lower_bound!r}')
    trace = _Trace(objective, tol)
    if not _isPositive(x0_raw):
        logger.debug('Guess %r is not positive, starting from the lower bound %r', x0_raw, lower_bound)
        return _newtonPhase(trace, lower_bound, lower_bound, correct=False)
    return _newtonPhase(trace, x0_raw, lower_bound, correct=True)


def twoStepNewton(objective, x0, tol: ToleranceSpec = None):
    """
    The predictor-corrector Newton method of McDougall and Wotherspoon (order 1 + sqrt(2)).
    The first iteration is a plain Newton step; later iterations take one function value and one
    derivative, the derivative of the predictor being the one of the previous corrector.

    :param objective: The ScalarObjective
    :param x0: Initial guess
    :param tol: Termination criterion
    :rtype: SolveReport
    """
    tol = tol or ToleranceSpec()
    trace = _Trace(objective, tol)
    value, derivative = trace.evaluate(x0)
    if trace.converged():
        return trace.report(True)
    x = _newtonStep(trace, x0, value, derivative)
    previous_derivative = derivative
    trace.iterations = 1
    while True:
        value, _ = trace.evaluate(x)
        if trace.converged():
            return trace.report(True)
        if trace.exhausted():
            trace.fail(f'No convergence within {tol.max_iter} iterations')
        predictor = x - value / previous_derivative
        derivative = trace.derivative((x + predictor) / 2)
        x = _newtonStep(trace, x, value, derivative)
        previous_derivative = derivative
        trace.iterations += 1


def _ostrowskiIteration(trace, x, value, derivative):
    """
    One Ostrowski iteration from x. Returns (next iterate, report) where report is set when the
    half-step already meets the criterion.
    """
    half = _newtonStep(trace, x, value, derivative)
    half_value, half_derivative = trace.evaluate(half)
    trace.iterations += 0.5
    if trace.converged():
        return half, trace.report(True)
    denominator = value - 2 * half_value
    scale = max(abs(value), abs(half_value))
    if abs(denominator) <= scale / _DEGENERATE_DENOMINATOR:
        logger.debug('Degenerate Ostrowski denominator at %r, taking a Newton step', half)
        following = _newtonStep(trace, half, half_value, half_derivative)
    else:
        following = half - half_value / derivative * value / denominator
    trace.iterations += 0.5
    return following, None


def ostrowski(objective, x0, tol: ToleranceSpec = None):
    """
    Ostrowski's two-stage method. Termination is checked after every half-step, and half-steps
    count 0.5 iterations.

    :param objective: The ScalarObjective
    :param x0: Initial guess
    :param tol: Termination criterion
    :rtype: SolveReport
    """
    tol = tol or ToleranceSpec()
    trace = _Trace(objective, tol)
    x = x0
    while True:
        value, derivative = trace.evaluate(x)
        if trace.converged():
            return trace.report(True)
        if trace.exhausted():
            trace.fail(f'No convergence within {tol.max_iter} iterations')
        x, report = _ostrowskiIteration(trace, x, value, derivative)
        if report is not None:
            return report


def ostrowskiNewton(objective, x0, lower_bound, tol: ToleranceSpec = None):
    """
    One Ostrowski iteration followed by positive Newton. An Ostrowski output that is not a positive
    number is replaced by lower_bound before the positivity correction.

    :param objective: The ScalarObjective
    :param x0: Initial guess
    :param lower_bound: A positive lower bound of the root
    :param tol: Termination criterion
    :rtype: SolveReport
    """
    tol = tol or ToleranceSpec()
    if not _isPositive(lower_bound):
        raise DomainError(f'Lower bound must be positive, got {lower_bound!r}')
    trace = _Trace(objective, tol)
    if not _isPositive(x0):
        return _newtonPhase(trace, lower_bound, lower_bound, correct=False)
    value, derivative = trace.evaluate(x0)
    if trace.converged():
        return trace.report(True)
    half = x0 - value / derivative if math.isfinite(derivative) and derivative > 0 else float('nan')
    if _isPositive(half):
        x, report = _ostrowskiIteration(trace, x0, value, derivative)
        if report is not None:
            return report
    else:
        x = half
        trace.iterations += 1
    if not _isPositive(x):
        logger.debug('Ostrowski output %r replaced by the lower bound %r', x, lower_bound)
        x = lower_bound
    return _newtonPhase(trace, x, lower_bound, correct=True)


def boundingPolynomials(objective, x_minus0, x_plus0, tol: ToleranceSpec = None):
    """
    Two-sided iteration on the roots of the Hermite quadratics that bound psi from below and above.
    Both ends converge cubically and keep the root bracketed. The iteration stops when either end
    meets the criterion or the bracket is narrower than tol.epsilon * x_plus; in the latter case the
    end with the smaller residual is returned.

    A new end only replaces the old one when psi has the right sign there, so an end pushed across
    the root by rounding shrinks the bracket from the other side instead.

    :param objective: The ScalarObjective, increasing and concave
    :param x_minus0: Lower bound of the root
    :param x_plus0: Upper bound of the root
    :param tol: Termination criterion, applied to each end separately
    :return: The report; report.brackets holds the bracket after every iteration
    :rtype: SolveReport
    """
    tol = tol or ToleranceSpec()
    if not x_minus0 <= x_plus0:
        raise PreconditionError(f'Bracket [{x_minus0}, {x_plus0}] is empty')
    trace = _Trace(objective, tol)
    minus = (x_minus0,) + tuple(trace.evaluate(x_minus0))
    lower = [minus[:2]]
    if _endAccepted(tol, lower):
        return _bracketReport(trace, minus, [(x_minus0, x_plus0)])
    plus = (x_plus0,) + tuple(trace.evaluate(x_plus0))
    upper = [plus[:2]]
    if _endAccepted(tol, upper):
        return _bracketReport(trace, plus, [(x_minus0, x_plus0)])
    if minus[1] > 0 or plus[1] < 0:
        trace.fail(f'[{x_minus0!r}, {x_plus0!r}] does not bracket the root')
    brackets = [(x_minus0, x_plus0)]

    while True:
        if plus[0] - minus[0] < tol.epsilon * plus[0]:
            logger.debug('Bracket [%r, %r] closed after %d iterations', minus[0], plus[0], trace.iterations)
            return _bracketReport(trace, min(minus, plus, key=lambda end: abs(end[1])), brackets)
        if trace.exhausted():
            trace.fail(f'No convergence within {tol.max_iter} iterations')
        x_minus, value_minus, slope_minus = minus
        x_plus, value_plus, slope_plus = plus
        width = x_plus - x_minus
        secant = (value_plus - value_minus) / width
        curvature_minus = (secant - slope_minus) / width
        curvature_plus = (slope_plus - secant) / width
        discriminant_minus = slope_minus * slope_minus - 4 * value_minus * curvature_minus
        discriminant_plus = slope_plus * slope_plus - 4 * value_plus * curvature_plus
        if discriminant_minus < 0 or discriminant_plus < 0:
            trace.fail(f'Negative discriminant in bracket [{x_minus!r}, {x_plus!r}]')
        x_minus = x_minus - 2 * value_minus / (slope_minus + math.sqrt(discriminant_minus))
        x_plus = x_plus - 2 * value_plus / (slope_plus + math.sqrt(discriminant_plus))
        trace.iterations += 1

        candidates = [(x,) + tuple(trace.evaluate(x)) for x in (x_minus, x_plus)]
        lower.append(candidates[0][:2])
        upper.append(candidates[1][:2])
        for end in candidates:
            if end[1] <= 0 and end[0] > minus[0]:
                minus = end
            if end[1] >= 0 and end[0] < plus[0]:
                plus = end
        brackets.append((minus[0], plus[0]))
        accepted = [end for end, history in zip(candidates, (lower, upper)) if _endAccepted(tol, history)]
        if accepted:
            return _bracketReport(trace, min(accepted, key=lambda end: abs(end[1])), brackets)


def _endAccepted(tol, history):
    if tol.mode is TerminationMode.STAGNATION and len(history) < 2:
        return False
    return checkTermination(tol, history)


def _bracketReport(trace, end, brackets):
    report = trace.report(True)
    return replace(report, root=end[0], final_residual=end[1], brackets=tuple(brackets))


def _ggSide(u, state, sound_speed, gamma, sign):
    """
    Star pressure and its velocity derivative on one side for star velocity u. sign is -1 on the left
    and +1 on the right.
    """
    delta = u - state.u
    impedance = state.rho * sound_speed
    if sign * delta >= 0:
        x = (gamma + 1) / 4 * delta / sound_speed
        w = x + sign * math.sqrt(1 + x * x)
        p_star = state.p + impedance * delta * w
        dp_star = 2 * impedance * w ** 3 / (1 + w * w)
        return p_star, dp_star, w, None
    a_star = sound_speed + sign * (gamma - 1) / 2 * delta
    if not a_star > 0:
        return float('nan'), float('nan'), None, a_star
    p_star = state.p * (a_star / sound_speed) ** (2 * gamma / (gamma - 1))
    dp_star = sign * gamma * p_star / a_star
    return p_star, dp_star, None, a_star


def ggState(rp, u):
    """
    Evaluate the Gottlieb-Groth intermediate quantities at star velocity u.

    :param rp: EulerRiemannProblem
    :param u: Star velocity iterate
    :rtype: GgIterState
    """
    gamma = rp.params.gamma
    p_l, dp_l, w_l, a_l = _ggSide(u, rp.left, rp.left.soundSpeed(gamma), gamma, -1)
    p_r, dp_r, w_r, a_r = _ggSide(u, rp.right, rp.right.soundSpeed(gamma), gamma, +1)
    return GgIterState(u, p_l, p_r, dp_l, dp_r, w_l, w_r, a_l, a_r)


def gottliebGroth(rp, tol: ToleranceSpec = None, u0=None):
    """
    Gottlieb and Groth's Newton iteration on the star velocity. Stops when
    |(p*_r - p*_l)/p*_r| < tol.eps_r. The default start is their two-rarefaction velocity.

    :param rp: EulerRiemannProblem
    :param tol: Tolerance (eps_r and max_iter are read)
    :param u0: Optional starting velocity
    :return: The star state and the report; report.iterates holds the velocity iterates
    """
    tol = tol or ToleranceSpec()
    gamma = rp.params.gamma
    a_l = rp.left.soundSpeed(gamma)
    a_r = rp.right.soundSpeed(gamma)
    if u0 is None:
        z1 = 2 / (gamma - 1)
        z2 = a_r / a_l * (rp.left.p / rp.right.p) ** ((gamma - 1) / (2 * gamma))
        u0 = ((rp.left.u + z1 * a_l) * z2 + (rp.right.u - z1 * a_r)) / (1 + z2)
    u = u0
    iterates = []
    best = None
    iterations = 0
    while True:
        state = ggState(rp, u)
        iterates.append(u)
        if not (_isPositive(state.p_star_left) and _isPositive(state.p_star_right)):
            raise NonConvergenceError(f'Vacuum at velocity iterate {u!r}', _ggReport(best, iterations, iterates, False))
        relative = (state.p_star_right - state.p_star_left) / state.p_star_right
        if best is None or abs(relative) < abs(best[1]):
            best = (state, relative)
        if abs(relative) < tol.eps_r:
            report = _ggReport(best, iterations, iterates, True)
            return rp.starClosures(state.p_star_right, u_star=u,
                                   sound_speeds=(state.a_star_left, state.a_star_right)), report
        if iterations >= tol.max_iter:
            raise NonConvergenceError(f'No convergence within {tol.max_iter} iterations',
                                      _ggReport(best, iterations, iterates, False))
        slope = state.dp_star_left - state.dp_star_right
        u = u - (state.p_star_left - state.p_star_right) / slope
        iterations += 1


def _ggReport(best, iterations, iterates, converged):
    if best is None:
        return SolveReport(float('nan'), iterations, len(iterates), False, float('nan'), tuple(iterates))
    state, relative = best
    return SolveReport(state.p_star_right, iterations, len(iterates), converged, relative, tuple(iterates))


def _vlSide(p, state, gamma, sign):
    impedance = math.sqrt(gamma * state.p * state.rho)
    ratio = p / state.p
    if p >= state.p:
        a = impedance * math.sqrt((gamma + 1) / (2 * gamma) * ratio + (gamma - 1) / (2 * gamma))
        derivative = (a * a + gamma * state.p * state.rho) / (2 * a ** 3)
    else:
        exponent = (gamma - 1) / (2 * gamma)
        a = exponent * impedance * (1 - ratio) / (1 - ratio ** exponent)
        derivative = ratio ** (-(gamma + 1) / (2 * gamma)) / impedance
    u_star = state.u + sign * (p - state.p) / a
    return u_star, sign * derivative, a


def vlState(rp, p):
    """
    Evaluate van Leer's intermediate quantities at pressure p.

    :param rp: EulerRiemannProblem
    :param p: Pressure iterate
    :rtype: VlIterState
    """
    gamma = rp.params.gamma
    u_l, du_l, a_l = _vlSide(p, rp.left, gamma, -1)
    u_r, du_r, a_r = _vlSide(p, rp.right, gamma, +1)
    return VlIterState(p, u_l, u_r, du_l, du_r, a_l, a_r)


def vanLeer(rp, p0, tol: ToleranceSpec = None):
    """
    van Leer's iteration on the star pressure, reducing the gap between the two velocity estimates.
    Stops when |(u*_r - u*_l)/u*_r| < tol.eps_r. No positivity safeguard: an iterate leaving (0, inf)
    is a NonConvergenceError.

    :param rp: EulerRiemannProblem
    :param p0: Starting pressure (the two-shock guess in the benchmark pairing)
    :param tol: Tolerance (eps_r and max_iter are read)
    :return: The star state and the report
    """
    tol = tol or ToleranceSpec()
    p = p0
    iterates = []
    best = None
    iterations = 0
    while True:
        if not _isPositive(p):
            raise NonConvergenceError(f'Pressure iterate {p!r} left (0, inf)', _vlReport(best, iterations, iterates, False))
        state = vlState(rp, p)
        iterates.append(p)
        gap = state.u_star_right - state.u_star_left
        if gap == 0:
            relative = 0.0
        elif state.u_star_right == 0:
            relative = math.inf
        else:
            relative = gap / state.u_star_right
        if best is None or abs(relative) < abs(best[1]):
            best = (state, relative)
        if abs(relative) < tol.eps_r:
            u_star = (state.u_star_left + state.u_star_right) / 2
            return rp.starClosures(p, u_star=u_star), _vlReport(best, iterations, iterates, True)
        if iterations >= tol.max_iter:
            raise NonConvergenceError(f'No convergence within {tol.max_iter} iterations',
                                      _vlReport(best, iterations, iterates, False))
        p = p - (state.u_star_left - state.u_star_right) / (state.du_star_left - state.du_star_right)
        iterations += 1


def _vlReport(best, iterations, iterates, converged):
    if best is None:
        return SolveReport(float('nan'), iterations, len(iterates), False, float('nan'), tuple(iterates))
    state, relative = best
    return SolveReport(state.p_k, iterations, len(iterates), converged, relative, tuple(iterates))


def estimateOrder(errors):
    """
    Empirical convergence orders log(e[k+1]/e[k]) / log(e[k]/e[k-1]) from a sequence of absolute errors.

    :param errors: Errors |x_k - x_*|, oldest first; zeros are dropped
    :return: The list of order estimates
    """
    errors = [float(e) for e in errors if e != 0]
    if len(errors) < 3:
        raise PreconditionError('Order estimation needs at least three non-zero errors')
    orders = []
    for previous, current, following in zip(errors, errors[1:], errors[2:]):
        orders.append(math.log(following / current) / math.log(current / previous))
    return orders


def requireScalarScheme(scheme_kind):
    """
    Reject schemes that do not operate on a ScalarObjective.
    """
    if scheme_kind in (SchemeKind.GOTTLIEB_GROTH, SchemeKind.VAN_LEER):
        raise ConfigurationError(f'{scheme_kind.label} is only available for the Euler equations')
    return scheme_kind
