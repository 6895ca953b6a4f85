"""
Vectorized Riemann solver kernels over arrays of interfaces.

States are arrays of shape (num_eqn, num_rp), waves have shape (num_eqn, num_waves, num_rp) and speeds
(num_waves, num_rp), the layout used by wave propagation finite volume codes. Shallow water states are
(h, hu, hv) and Euler states are (rho, rho u, E).
"""
import logging

import numpy as np

from .exceptions import ConfigurationError, DomainError, DryStateError, NonConvergenceError, VacuumError

logger = logging.getLogger(__name__)

num_eqn = 3

# relative depth or density jump below which shock speeds use the impedance form
_SMALL_JUMP = 1e-8


def _checkSystem(system):
    if system not in ('swe', 'euler'):
        raise ConfigurationError(f'system {system} not supported')


def primitives(system, q, params):
    """
    (h, u, v) for the shallow water equations, (rho, u, p) for the Euler equations
    """
    _checkSystem(system)
    q = np.asarray(q, dtype=float)
    with np.errstate(divide='ignore', invalid='ignore'):
        u = q[1] / q[0]
        if system == 'swe':
            return q[0], u, q[2] / q[0]
        return q[0], u, (params.gamma - 1) * (q[2] - 0.5 * q[1] * u)


def conserved(system, w, params):
    """
    Inverse of primitives
    """
    _checkSystem(system)
    first, u, last = (np.asarray(x, dtype=float) for x in w)
    if system == 'swe':
        return np.array([first, first * u, first * last])
    return np.array([first, first * u, last / (params.gamma - 1) + 0.5 * first * u * u])


def flux(system, q, params):
    """
    Physical flux of the conserved states q
    """
    first, u, last = primitives(system, q, params)
    if system == 'swe':
        hu = first * u
        return np.array([hu, hu * u + 0.5 * params.g * first * first, hu * last])
    rho_u = first * u
    energy = np.asarray(q, dtype=float)[2]
    return np.array([rho_u, rho_u * u + last, u * (energy + last)])


def soundSpeed(system, q, params):
    first, _, last = primitives(system, q, params)
    with np.errstate(invalid='ignore'):
        if system == 'swe':
            return np.sqrt(params.g * first)
        return np.sqrt(params.gamma * last / first)


def characteristicSpeeds(system, q, params):
    """
    (u - c, u + c) of the states q
    """
    _, u, _ = primitives(system, q, params)
    c = soundSpeed(system, q, params)
    return u - c, u + c


def isPhysical(system, q, params):
    """
    Mask of states with positive depth, or positive density and pressure
    """
    first, _, last = primitives(system, q, params)
    if system == 'swe':
        return first > 0
    return (first > 0) & (last > 0)


def roeAverages(system, q_l, q_r, params):
    """
    Roe averaged velocity and sound speed, plus the transverse velocity (shallow water) or the
    enthalpy (Euler) as third entry.
    """
    first_l, u_l, last_l = primitives(system, q_l, params)
    first_r, u_r, last_r = primitives(system, q_r, params)
    root_l = np.sqrt(first_l)
    root_r = np.sqrt(first_r)
    u_hat = (root_l * u_l + root_r * u_r) / (root_l + root_r)
    if system == 'swe':
        v_hat = (root_l * last_l + root_r * last_r) / (root_l + root_r)
        c_hat = np.sqrt(params.g * (first_l + first_r) / 2)
        return u_hat, c_hat, v_hat
    enthalpy_l = (np.asarray(q_l, dtype=float)[2] + last_l) / first_l
    enthalpy_r = (np.asarray(q_r, dtype=float)[2] + last_r) / first_r
    h_hat = (root_l * enthalpy_l + root_r * enthalpy_r) / (root_l + root_r)
    c_squared = (params.gamma - 1) * (h_hat - 0.5 * u_hat * u_hat)
    if np.any(c_squared <= 0):
        raise DomainError('Roe averaged sound speed is not real')
    return u_hat, np.sqrt(c_squared), h_hat


def roeWaves(system, q_l, q_r, params):
    """
    Roe decomposition of the jump q_r - q_l into three waves.

    :return: (waves, speeds, averages) with speeds sorted ascending
    """
    q_l = np.asarray(q_l, dtype=float)
    q_r = np.asarray(q_r, dtype=float)
    if not (np.all(isPhysical(system, q_l, params)) and np.all(isPhysical(system, q_r, params))):
        raise DomainError('Roe solver called with non-physical states')
    u_hat, c_hat, third = roeAverages(system, q_l, q_r, params)
    delta = q_r - q_l
    waves = np.empty((num_eqn, 3) + delta.shape[1:])
    if system == 'swe':
        alpha1 = ((u_hat + c_hat) * delta[0] - delta[1]) / (2 * c_hat)
        alpha3 = (delta[1] - (u_hat - c_hat) * delta[0]) / (2 * c_hat)
        alpha2 = delta[2] - third * delta[0]
        waves[:, 0] = alpha1 * np.array([np.ones_like(u_hat), u_hat - c_hat, third])
        waves[:, 1] = alpha2 * np.array([np.zeros_like(u_hat), np.zeros_like(u_hat), np.ones_like(u_hat)])
        waves[:, 2] = alpha3 * np.array([np.ones_like(u_hat), u_hat + c_hat, third])
    else:
        gamma = params.gamma
        alpha2 = (gamma - 1) / c_hat ** 2 * ((third - u_hat ** 2) * delta[0] + u_hat * delta[1] - delta[2])
        alpha3 = (delta[1] + (c_hat - u_hat) * delta[0] - c_hat * alpha2) / (2 * c_hat)
        alpha1 = delta[0] - alpha2 - alpha3
        waves[:, 0] = alpha1 * np.array([np.ones_like(u_hat), u_hat - c_hat, third - u_hat * c_hat])
        waves[:, 1] = alpha2 * np.array([np.ones_like(u_hat), u_hat, 0.5 * u_hat ** 2])
        waves[:, 2] = alpha3 * np.array([np.ones_like(u_hat), u_hat + c_hat, third + u_hat * c_hat])
    speeds = np.array([u_hat - c_hat, u_hat, u_hat + c_hat])
    return waves, speeds, (u_hat, c_hat, third)


def fluctuationsFromWaves(waves, speeds):
    """
    A^-dq = sum(min(s, 0) W) and A^+dq = sum(max(s, 0) W)
    """
    amdq = np.sum(np.minimum(speeds, 0) * waves, axis=1)
    apdq = np.sum(np.maximum(speeds, 0) * waves, axis=1)
    return amdq, apdq


def hartenHymanFluctuations(system, q_l, q_r, waves, speeds, params):
    """
    Fluctuations with the Harten-Hyman entropy fix: a transonic rarefaction in the 1- or 3-family is
    split between both directions so that the total stays sum(s W).
    """
    amdq, apdq = fluctuationsFromWaves(waves, speeds)
    q_l = np.asarray(q_l, dtype=float)
    q_r = np.asarray(q_r, dtype=float)
    q_middle_l = q_l + waves[:, 0]
    q_middle_r = q_r - waves[:, 2]
    for family, q_before, q_after in ((0, q_l, q_middle_l), (2, q_middle_r, q_r)):
        valid = isPhysical(system, q_before, params) & isPhysical(system, q_after, params)
        with np.errstate(invalid='ignore', divide='ignore'):
            speed_before = characteristicSpeeds(system, q_before, params)[0 if family == 0 else 1]
            speed_after = characteristicSpeeds(system, q_after, params)[0 if family == 0 else 1]
            transonic = valid & (speed_before < 0) & (speed_after > 0)
            beta = np.where(transonic, (speed_after - speeds[family]) / (speed_after - speed_before), 0.0)
        if not transonic.any():
            continue
        wave = waves[:, family]
        standard_minus = np.minimum(speeds[family], 0) * wave
        standard_plus = np.maximum(speeds[family], 0) * wave
        fixed_minus = beta * speed_before * wave
        fixed_plus = (1 - beta) * speed_after * wave
        amdq = np.where(transonic, amdq - standard_minus + fixed_minus, amdq)
        apdq = np.where(transonic, apdq - standard_plus + fixed_plus, apdq)
    return amdq, apdq


def hlleSpeeds(system, q_l, q_r, params):
    """
    Einfeldt speeds: s_l = min(lambda_1(q_l), roe lambda_1) and s_r = max(lambda_3(q_r), roe lambda_3)
    """
    u_hat, c_hat, _ = roeAverages(system, q_l, q_r, params)
    left_min, _ = characteristicSpeeds(system, q_l, params)
    _, right_max = characteristicSpeeds(system, q_r, params)
    return np.minimum(left_min, u_hat - c_hat), np.maximum(right_max, u_hat + c_hat)


def hlleMiddle(system, q_l, q_r, params):
    """
    HLLE middle state q_m = (f(q_r) - f(q_l) - s_r q_r + s_l q_l) / (s_l - s_r)

    :return: (s_l, s_r, q_m)
    """
    q_l = np.asarray(q_l, dtype=float)
    q_r = np.asarray(q_r, dtype=float)
    if not (np.all(isPhysical(system, q_l, params)) and np.all(isPhysical(system, q_r, params))):
        raise DomainError('HLLE solver called with non-physical states')
    s_l, s_r = hlleSpeeds(system, q_l, q_r, params)
    if np.any(s_l >= s_r):
        raise DomainError('Degenerate HLLE wave speeds')
    q_m = (flux(system, q_r, params) - flux(system, q_l, params) - s_r * q_r + s_l * q_l) / (s_l - s_r)
    return s_l, s_r, q_m


def hlleWaves(system, q_l, q_r, params):
    """
    The two HLLE waves q_m - q_l and q_r - q_m with speeds s_l and s_r
    """
    s_l, s_r, q_m = hlleMiddle(system, q_l, q_r, params)
    waves = np.stack([q_m - np.asarray(q_l, dtype=float), np.asarray(q_r, dtype=float) - q_m], axis=1)
    return waves, np.array([s_l, s_r])


class ArrayProblem(object):
    """
    A batch of Riemann problems of one system held as arrays of outer primitive states, with the depth
    or pressure function evaluated elementwise.

    :param system: 'swe' or 'euler'
    :param q_l: Left conserved states, shape (3, n)
    :param q_r: Right conserved states, shape (3, n)
    :param params: SweParams or EulerParams
    """

    def __init__(self, system, q_l, q_r, params):
        _checkSystem(system)
        self.system = system
        self.params = params
        self.left = primitives(system, q_l, params)
        self.right = primitives(system, q_r, params)
        self.c_left = soundSpeed(system, q_l, params)
        self.c_right = soundSpeed(system, q_r, params)

    @classmethod
    def _fromParts(cls, system, params, left, right, c_left, c_right):
        problem = cls.__new__(cls)
        problem.system = system
        problem.params = params
        problem.left = left
        problem.right = right
        problem.c_left = c_left
        problem.c_right = c_right
        return problem

    def subset(self, index):
        return ArrayProblem._fromParts(self.system, self.params, tuple(x[index] for x in self.left),
                                       tuple(x[index] for x in self.right), self.c_left[index], self.c_right[index])

    @property
    def size(self):
        return self.left[0].size

    def outerValues(self):
        if self.system == 'swe':
            return self.left[0], self.right[0]
        return self.left[2], self.right[2]

    def minState(self):
        return np.minimum(*self.outerValues())

    def positive(self):
        """
        Mask of wet (shallow water) or vacuum free (Euler) problems
        """
        jump = self.right[1] - self.left[1]
        if self.system == 'swe':
            return jump < 2 * (self.c_left + self.c_right)
        return 2 * (self.c_left + self.c_right) / (self.params.gamma - 1) > jump

    def twoRarefaction(self):
        jump = self.right[1] - self.left[1]
        if self.system == 'swe':
            g = self.params.g
            return (2 * self.c_left + 2 * self.c_right - jump) ** 2 / (16 * g)
        gamma = self.params.gamma
        z = (gamma - 1) / (2 * gamma)
        numerator = self.c_left + self.c_right - (gamma - 1) / 2 * jump
        return (numerator / (self.c_left / self.left[2] ** z + self.c_right / self.right[2] ** z)) ** (1 / z)

    def _side(self, x, state, c):
        with np.errstate(invalid='ignore', divide='ignore'):
            if self.system == 'swe':
                g = self.params.g
                h_k = state[0]
                shock = x > h_k
                y = np.sqrt(g * (x + h_k) / (2 * x * h_k))
                value = np.where(shock, (x - h_k) * y, 2 * (np.sqrt(g * x) - c))
                slope = np.where(shock, g * (2 * x * x + x * h_k + h_k * h_k) / (4 * x * x * h_k * y), np.sqrt(g / x))
                return value, slope
            gamma = self.params.gamma
            rho_k, _, p_k = state
            shock = x > p_k
            big_c = 2 / ((gamma + 1) * rho_k)
            big_b = (gamma - 1) / (gamma + 1) * p_k
            root = np.sqrt(big_c / (x + big_b))
            ratio = x / p_k
            value = np.where(shock, (x - p_k) * root, 2 * c / (gamma - 1) * (ratio ** ((gamma - 1) / (2 * gamma)) - 1))
            slope = np.where(shock, root * (1 - (x - p_k) / (2 * (x + big_b))),
                             ratio ** (-(gamma + 1) / (2 * gamma)) / (rho_k * c))
            return value, slope

    def __call__(self, x):
        """
        (phi(x), phi'(x)) elementwise
        """
        value_l, slope_l = self._side(x, self.left, self.c_left)
        value_r, slope_r = self._side(x, self.right, self.c_right)
        return value_l + value_r + self.right[1] - self.left[1], slope_l + slope_r

    def starVelocity(self, x):
        value_l, _ = self._side(x, self.left, self.c_left)
        value_r, _ = self._side(x, self.right, self.c_right)
        return 0.5 * (self.left[1] + self.right[1]) + 0.5 * (value_r - value_l)

    def guess(self, kind):
        """
        Elementwise AV, RR, PV or SS guess
        """
        name = getattr(kind, 'value', kind)
        left_value, right_value = self.outerValues()
        if name == 'AV':
            return 0.5 * (left_value + right_value)
        if name == 'RR':
            return self.twoRarefaction()
        if self.system == 'swe':
            g = self.params.g
            h_l, h_r = left_value, right_value
            pv = 0.5 * (h_l + h_r) + 0.25 * (self.left[1] - self.right[1]) * (h_l + h_r) / (self.c_left + self.c_right)
            if name == 'PV':
                return pv
            if name == 'SS':
                with np.errstate(invalid='ignore', divide='ignore'):
                    y_l = np.sqrt(0.5 * g * (pv + h_l) / (pv * h_l))
                    y_r = np.sqrt(0.5 * g * (pv + h_r) / (pv * h_r))
                    return (h_l * y_l + h_r * y_r - self.right[1] + self.left[1]) / (y_l + y_r)
        else:
            gamma = self.params.gamma
            rho_l, u_l, p_l = self.left
            rho_r, u_r, p_r = self.right
            pv = np.maximum(np.minimum(p_l, p_r),
                            0.5 * (p_l + p_r) - 0.125 * (u_r - u_l) * (rho_l + rho_r) * (self.c_left + self.c_right))
            if name == 'PV':
                return pv
            if name == 'SS':
                g_l = np.sqrt(2 / ((gamma + 1) * rho_l) / (pv + (gamma - 1) / (gamma + 1) * p_l))
                g_r = np.sqrt(2 / ((gamma + 1) * rho_r) / (pv + (gamma - 1) / (gamma + 1) * p_r))
                return (g_l * p_l + g_r * p_r - (u_r - u_l)) / (g_l + g_r)
        raise ConfigurationError(f'Guess {name} has no vectorized form')


VECTOR_GUESSES = ('AV', 'RR', 'PV', 'SS')
VECTOR_SCHEMES = ('positive-newton', 'ostrowski-newton')


def supportsArrays(guess_kind, scheme_kind, tol):
    """
    True when solveStarArray handles the combination; others are solved one interface at a time.
    """
    return (getattr(guess_kind, 'value', guess_kind) in VECTOR_GUESSES
            and getattr(scheme_kind, 'value', scheme_kind) in VECTOR_SCHEMES
            and getattr(tol.mode, 'value', tol.mode) == 'residual')


def _valid(x):
    return np.isfinite(x) & (x > 0)


def _ostrowskiArray(problem, x, eps):
    """
    One Ostrowski iteration on every entry; entries whose half-step is not positive get nan.
    """
    value, slope = problem(x)
    done = np.abs(value) < eps
    with np.errstate(invalid='ignore', divide='ignore'):
        half = x - value / slope
        usable = _valid(half) & ~done
        half_value, half_slope = problem(np.where(usable, half, x))
        denominator = value - 2 * half_value
        degenerate = np.abs(denominator) <= np.maximum(np.abs(value), np.abs(half_value)) * 1e-300
        following = np.where(degenerate, half - half_value / half_slope,
                             half - half_value / slope * value / denominator)
    half_done = usable & (np.abs(half_value) < eps)
    result = np.where(done, x, np.where(half_done, half, np.where(usable, following, np.nan)))
    return result, done | half_done


def _positiveNewtonArray(problem, x, lower, converged, tol, iterations):
    x = np.where(_valid(x), x, lower)
    eps = tol.eps_r
    corrected = False
    while True:
        value, slope = problem(x)
        converged = converged | (np.abs(value) < eps)
        if converged.all():
            return x
        if iterations >= tol.max_iter:
            raise NonConvergenceError(f'{np.count_nonzero(~converged)} of {x.size} interfaces did not converge '
                                      f'within {tol.max_iter} iterations')
        with np.errstate(invalid='ignore', divide='ignore'):
            step = x - value / slope
        if not corrected:
            step = np.maximum(lower, step)
            corrected = True
        x = np.where(converged, x, step)
        iterations += 1


def solveStarArray(problem: ArrayProblem, guess_kind, scheme_kind, tol):
    """
    Middle depth or star pressure of every problem in the batch, with the two-rarefaction shortcut,
    an AV/RR/PV/SS guess and positive Newton or Ostrowski-Newton under the residual criterion.

    :return: Array of roots
    """
    if not supportsArrays(guess_kind, scheme_kind, tol):
        raise ConfigurationError(f'{guess_kind} with {scheme_kind} has no vectorized form')
    positive = problem.positive()
    if not positive.all():
        where = int(np.argmin(positive))
        if problem.system == 'swe':
            raise DryStateError(f'interface {where}')
        raise VacuumError(f'interface {where}')
    lower = problem.minState()
    value_lower, _ = problem(lower)
    root = np.where(value_lower > 0, problem.twoRarefaction(), lower)
    todo = np.nonzero(value_lower < 0)[0]
    if todo.size == 0:
        return root
    batch = problem.subset(todo)
    batch_lower = lower[todo]
    x = batch.guess(guess_kind)
    converged = np.zeros(todo.size, dtype=bool)
    iterations = 0
    if getattr(scheme_kind, 'value', scheme_kind) == 'ostrowski-newton':
        x = np.where(_valid(x), x, batch_lower)
        x, converged = _ostrowskiArray(batch, x, tol.eps_r)
        iterations = 1
    root[todo] = _positiveNewtonArray(batch, x, batch_lower, converged, tol, iterations)
    return root


def _shockSpeed(outer_first, outer_u, star_first, u_star, c_outer, ratio_term, sign):
    jump = outer_first - star_first
    with np.errstate(invalid='ignore', divide='ignore'):
        mass = (outer_first * outer_u - star_first * u_star) / jump
    small = np.abs(jump) <= _SMALL_JUMP * np.maximum(outer_first, star_first)
    return np.where(small, outer_u + sign * c_outer * ratio_term, mass)


def exactStructure(problem: ArrayProblem, root):
    """
    Middle states, wave speeds and fan edges of the exact solutions with the given roots.

    :return: dict with the four constant states (conserved, shape (3, n)), the wave speeds (3, n),
             the fan edges and the shock masks
    """
    system = problem.system
    params = problem.params
    u_star = problem.starVelocity(root)
    first_l, u_l, last_l = problem.left
    first_r, u_r, last_r = problem.right
    with np.errstate(invalid='ignore', divide='ignore'):
        if system == 'swe':
            g = params.g
            left_shock = root > first_l
            right_shock = root > first_r
            c_star_l = c_star_r = np.sqrt(g * root)
            star_first_l = star_first_r = root
            ratio_l = np.sqrt((root / first_l + 1) * root / first_l / 2)
            ratio_r = np.sqrt((root / first_r + 1) * root / first_r / 2)
            q_star_l = np.array([root, root * u_star, root * last_l])
            q_star_r = np.array([root, root * u_star, root * last_r])
        else:
            gamma = params.gamma
            mu = (gamma - 1) / (gamma + 1)
            z = (gamma - 1) / (2 * gamma)
            left_shock = root > last_l
            right_shock = root > last_r
            star_first_l = np.where(left_shock, first_l * (root / last_l + mu) / (mu * root / last_l + 1),
                                    first_l * (root / last_l) ** (1 / gamma))
            star_first_r = np.where(right_shock, first_r * (root / last_r + mu) / (mu * root / last_r + 1),
                                    first_r * (root / last_r) ** (1 / gamma))
            c_star_l = problem.c_left * (root / last_l) ** z
            c_star_r = problem.c_right * (root / last_r) ** z
            ratio_l = np.sqrt((gamma + 1) / (2 * gamma) * root / last_l + (gamma - 1) / (2 * gamma))
            ratio_r = np.sqrt((gamma + 1) / (2 * gamma) * root / last_r + (gamma - 1) / (2 * gamma))
            q_star_l = conserved(system, (star_first_l, u_star, root), params)
            q_star_r = conserved(system, (star_first_r, u_star, root), params)
        shock_l = _shockSpeed(first_l, u_l, star_first_l, u_star, problem.c_left, ratio_l, -1)
        shock_r = _shockSpeed(first_r, u_r, star_first_r, u_star, problem.c_right, ratio_r, +1)
    left_head = np.where(left_shock, shock_l, u_l - problem.c_left)
    left_tail = np.where(left_shock, shock_l, u_star - c_star_l)
    right_tail = np.where(right_shock, shock_r, u_star + c_star_r)
    right_head = np.where(right_shock, shock_r, u_r + problem.c_right)
    speeds = np.array([0.5 * (left_head + left_tail), u_star, 0.5 * (right_tail + right_head)])
    return {
        'q_star_l': q_star_l,
        'q_star_r': q_star_r,
        'u_star': u_star,
        'speeds': speeds,
        'edges': (left_head, left_tail, u_star, right_tail, right_head),
        'left_shock': left_shock,
        'right_shock': right_shock,
    }


def _fanAtOrigin(problem, sign):
    """
    Primitive state of the left (sign +1) or right (sign -1) fan on the ray xi = 0
    """
    if sign > 0:
        first, u, last = problem.left
        c = problem.c_left
    else:
        first, u, last = problem.right
        c = problem.c_right
    if problem.system == 'swe':
        c_fan = (sign * u + 2 * c) / 3
        return c_fan * c_fan / problem.params.g, sign * c_fan, last
    gamma = problem.params.gamma
    factor = 2 / (gamma + 1) + sign * (gamma - 1) / ((gamma + 1) * c) * u
    return (first * factor ** (2 / (gamma - 1)), 2 / (gamma + 1) * (sign * c + (gamma - 1) / 2 * u),
            last * factor ** (2 * gamma / (gamma - 1)))


def sampleAtOrigin(problem: ArrayProblem, q_l, q_r, structure):
    """
    Conserved state on the interface ray xi = 0. A ray on a wave edge gets the state right of it.
    """
    system = problem.system
    params = problem.params
    left_head, left_tail, contact, right_tail, right_head = structure['edges']
    with np.errstate(invalid='ignore', divide='ignore'):
        fan_l = conserved(system, _fanAtOrigin(problem, +1), params)
        fan_r = conserved(system, _fanAtOrigin(problem, -1), params)
    on_left = 0 < contact
    left_value = np.where(0 < left_head, q_l,
                          np.where(~structure['left_shock'] & (0 < left_tail), fan_l, structure['q_star_l']))
    right_value = np.where(0 >= right_head, q_r,
                           np.where(~structure['right_shock'] & (0 >= right_tail), fan_r, structure['q_star_r']))
    return np.where(on_left, left_value, right_value)


def exactFluctuations(system, q_l, q_r, params, root):
    """
    Fluctuations and waves of the exact solutions with known roots: A^-dq = f(q0) - f(q_l),
    A^+dq = f(q_r) - f(q0) with q0 sampled on the interface, and the three jumps between the constant
    states with shock speeds, mean fan speeds and the contact speed.

    :return: (amdq, apdq, waves, speeds)
    """
    q_l = np.asarray(q_l, dtype=float)
    q_r = np.asarray(q_r, dtype=float)
    problem = ArrayProblem(system, q_l, q_r, params)
    structure = exactStructure(problem, root)
    q_origin = sampleAtOrigin(problem, q_l, q_r, structure)
    if not np.all(isPhysical(system, q_origin, params)):
        raise DomainError('Sampled interface state is not physical')
    flux_origin = flux(system, q_origin, params)
    amdq = flux_origin - flux(system, q_l, params)
    apdq = flux(system, q_r, params) - flux_origin
    waves = np.stack([structure['q_star_l'] - q_l, structure['q_star_r'] - structure['q_star_l'],
                      q_r - structure['q_star_r']], axis=1)
    return amdq, apdq, waves, structure['speeds']
