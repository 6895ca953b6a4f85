import logging
import math
from dataclasses import dataclass

from .base.riemann_problem import RiemannProblem, WaveType
from .exceptions import DomainError, VacuumError
from .factory import Creator
from .guess import eulerGuess
from .rootfind import SchemeKind, gottliebGroth, vanLeer
from .swe import checkOrdered

logger = logging.getLogger(__name__)

# density jumps below this (relative) use the impedance form of the shock speed
_SMALL_JUMP = 1e-8


@dataclass(frozen=True)
class EulerParams:
    """
    :param gamma: Ratio of specific heats, shared by both sides
    """
    gamma: float = 1.4

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma > 1):
            raise DomainError(f'gamma must be larger than 1, got {self.gamma}')


@dataclass(frozen=True)
class EulerPrimitive:
    """
    Primitive state of an ideal gas.

    :param rho: Density
    :param u: Velocity
    :param p: Pressure
    """
    rho: float
    u: float
    p: float

    def __post_init__(self):
        if not all(math.isfinite(x) for x in (self.rho, self.u, self.p)):
            raise DomainError(f'Non-finite Euler state {self}')
        if self.rho < 0 or self.p < 0:
            raise DomainError(f'Negative density or pressure in {self}')

    def soundSpeed(self, gamma):
        return math.sqrt(gamma * self.p / self.rho)

    def toConserved(self, gamma):
        """
        :rtype: EulerConserved
        """
        return EulerConserved(self.rho, self.rho * self.u, self.p / (gamma - 1) + self.rho * self.u * self.u / 2)

    def flux(self, gamma):
        """
        Physical flux (rho u, rho u^2 + p, u (E + p))
        """
        energy = self.p / (gamma - 1) + self.rho * self.u * self.u / 2
        return self.rho * self.u, self.rho * self.u * self.u + self.p, self.u * (energy + self.p)

    def __str__(self):
        return f'(rho={self.rho:g}, u={self.u:g}, p={self.p:g})'


@dataclass(frozen=True)
class EulerConserved:
    """
    Conserved state (rho, rho u, E) with E = rho (u^2 / 2 + e).
    """
    rho: float
    rho_u: float
    E: float

    def internalEnergy(self):
        """
        Specific internal energy e
        """
        return (self.E - self.rho_u * self.rho_u / (2 * self.rho)) / self.rho

    def toPrimitive(self, gamma):
        """
        :rtype: EulerPrimitive
        """
        if not self.rho > 0:
            raise DomainError(f'Density {self.rho} is not positive')
        u = self.rho_u / self.rho
        return EulerPrimitive(self.rho, u, (gamma - 1) * (self.E - self.rho * u * u / 2))

    def asTuple(self):
        return self.rho, self.rho_u, self.E


@dataclass(frozen=True)
class WaveFunctionConstants:
    """
    C = 2 / ((gamma + 1) rho) and B = (gamma - 1) / (gamma + 1) p of one side
    """
    C: float
    B: float

    @classmethod
    def fromState(cls, state: EulerPrimitive, gamma):
        return cls(2 / ((gamma + 1) * state.rho), (gamma - 1) / (gamma + 1) * state.p)


@dataclass(frozen=True)
class EulerStarState:
    """
    Star region of the Euler Riemann solution.

    :param p_star: Pressure
    :param u_star: Velocity
    :param rho_star_l: Density left of the contact
    :param rho_star_r: Density right of the contact
    :param left_wave: Type of the 1-wave
    :param right_wave: Type of the 3-wave
    """
    p_star: float
    u_star: float
    rho_star_l: float
    rho_star_r: float
    left_wave: WaveType
    right_wave: WaveType

    @property
    def value(self):
        return self.p_star


def _sideValue(p, state, gamma, sound_speed):
    if p > state.p:
        constants = WaveFunctionConstants.fromState(state, gamma)
        return (p - state.p) * math.sqrt(constants.C / (p + constants.B))
    return 2 * sound_speed / (gamma - 1) * ((p / state.p) ** ((gamma - 1) / (2 * gamma)) - 1)


def _sideTerms(p, state, gamma, sound_speed):
    """
    f(p; w_k), f' and f''. Shock branch for p > p_k, rarefaction branch otherwise.
    """
    if p > state.p:
        constants = WaveFunctionConstants.fromState(state, gamma)
        shifted = p + constants.B
        root = math.sqrt(constants.C / shifted)
        return ((p - state.p) * root,
                root * (1 - (p - state.p) / (2 * shifted)),
                -root / 4 * (4 * constants.B + 3 * p + state.p) / (shifted * shifted))
    ratio = p / state.p
    return (2 * sound_speed / (gamma - 1) * (ratio ** ((gamma - 1) / (2 * gamma)) - 1),
            ratio ** (-(gamma + 1) / (2 * gamma)) / (state.rho * sound_speed),
            -(gamma + 1) * sound_speed / (2 * gamma * gamma * state.p * state.p)
            * ratio ** (-(3 * gamma + 1) / (2 * gamma)))


def shockDensity(state, p_star, gamma):
    """
    Density behind a shock with pressure p_star
    """
    ratio = p_star / state.p
    mu = (gamma - 1) / (gamma + 1)
    return state.rho * (ratio + mu) / (mu * ratio + 1)


def rarefactionDensity(state, p_star, gamma):
    """
    Density at the tail of an isentropic fan with pressure p_star
    """
    return state.rho * (p_star / state.p) ** (1 / gamma)


def shockSpeed(state, rho_star, u_star, p_star, gamma, sign):
    """
    Rankine-Hugoniot speed of a shock from the mass jump. sign is -1 for the 1-shock and +1 for the 3-shock.
    """
    jump = state.rho - rho_star
    if abs(jump) > _SMALL_JUMP * max(state.rho, rho_star):
        return (state.rho * state.u - rho_star * u_star) / jump
    return state.u + sign * state.soundSpeed(gamma) * math.sqrt(
        (gamma + 1) / (2 * gamma) * p_star / state.p + (gamma - 1) / (2 * gamma))


class EulerRiemannProblem(RiemannProblem):
    """
    Riemann problem for the one dimensional Euler equations of an ideal gas.

    :param left: Left state, positive density and pressure
    :param right: Right state, positive density and pressure
    :param params: EulerParams, gamma = 1.4 by default
    """
    system = 'euler'

    def __init__(self, left: EulerPrimitive, right: EulerPrimitive, params: EulerParams = None):
        if not (left.rho > 0 and right.rho > 0 and left.p > 0 and right.p > 0):
            raise DomainError(f'Initial data {left} | {right} must have positive densities and pressures')
        super().__init__(left, right, params or EulerParams())
        self._a_left = left.soundSpeed(self.params.gamma)
        self._a_right = right.soundSpeed(self.params.gamma)

    @property
    def soundSpeeds(self):
        return self._a_left, self._a_right

    def _outerValues(self):
        return self.left.p, self.right.p

    def _checkPressure(self, p):
        if not (math.isfinite(p) and p > 0):
            raise DomainError(f'Pressure function evaluated at {p!r}, must be positive and finite')

    def pressureFunction(self, p):
        """
        phi(p) = f(p; w_l) + f(p; w_r) + u_r - u_l. Its root is the star pressure.

        :param p: Pressure, positive
        """
        self._checkPressure(p)
        gamma = self.params.gamma
        return (_sideValue(p, self.left, gamma, self._a_left) + _sideValue(p, self.right, gamma, self._a_right)
                + self.right.u - self.left.u)

    def pressureFunctionDerivatives(self, p):
        """
        :param p: Pressure, positive
        :return: (phi', phi'')
        """
        self._checkPressure(p)
        gamma = self.params.gamma
        left = _sideTerms(p, self.left, gamma, self._a_left)
        right = _sideTerms(p, self.right, gamma, self._a_right)
        return left[1] + right[1], left[2] + right[2]

    def _evaluate(self, p):
        self._checkPressure(p)
        gamma = self.params.gamma
        left = _sideTerms(p, self.left, gamma, self._a_left)
        right = _sideTerms(p, self.right, gamma, self._a_right)
        return left[0] + right[0] + self.right.u - self.left.u, left[1] + right[1]

    def checkPressurePositivity(self):
        """
        True when no vacuum is generated: 2 (a_l + a_r) / (gamma - 1) > u_r - u_l
        """
        return 2 * (self._a_left + self._a_right) / (self.params.gamma - 1) > self.right.u - self.left.u

    def checkPositivity(self):
        return self.checkPressurePositivity()

    def _positivityError(self):
        return VacuumError(self)

    def twoRarefactionPressure(self):
        """
        Root of phi if both waves were rarefactions. Never underestimates the star pressure.
        """
        gamma = self.params.gamma
        z = (gamma - 1) / (2 * gamma)
        numerator = self._a_left + self._a_right - (gamma - 1) / 2 * (self.right.u - self.left.u)
        denominator = self._a_left / self.left.p ** z + self._a_right / self.right.p ** z
        return (numerator / denominator) ** (1 / z)

    def twoRarefactionValue(self):
        return self.twoRarefactionPressure()

    def starVelocity(self, p):
        """
        u* = (u_l + u_r) / 2 + (f(p; w_r) - f(p; w_l)) / 2
        """
        gamma = self.params.gamma
        return ((self.left.u + self.right.u) / 2
                + (_sideValue(p, self.right, gamma, self._a_right) - _sideValue(p, self.left, gamma, self._a_left)) / 2)

    def guess(self, kind, objective=None):
        return eulerGuess(kind, self, objective)

    def starClosures(self, value, u_star=None, sound_speeds=None):
        """
        Star state for the star pressure value. Densities follow the shock relation or the isentropic law;
        a rarefaction side with a known star sound speed uses rho = gamma p / a^2.

        :param value: Star pressure
        :param u_star: Star velocity, from the pressure by default
        :param sound_speeds: Optional (a*_l, a*_r), None entries are ignored
        :rtype: EulerStarState
        """
        if not (math.isfinite(value) and value > 0):
            raise DomainError(f'Star pressure {value!r} is not positive')
        gamma = self.params.gamma
        if u_star is None:
            u_star = self.starVelocity(value)
        a_star_left, a_star_right = sound_speeds or (None, None)
        densities = []
        waves = []
        for state, a_star in ((self.left, a_star_left), (self.right, a_star_right)):
            if value > state.p:
                waves.append(WaveType.SHOCK)
                densities.append(shockDensity(state, value, gamma))
            else:
                waves.append(WaveType.RAREFACTION)
                if a_star:
                    densities.append(gamma * value / (a_star * a_star))
                else:
                    densities.append(rarefactionDensity(state, value, gamma))
        return EulerStarState(value, u_star, densities[0], densities[1], waves[0], waves[1])

    def _iterateDirectly(self, scheme_kind, guess_kind, tol, objective):
        if scheme_kind is SchemeKind.GOTTLIEB_GROTH:
            return gottliebGroth(self, tol)
        if scheme_kind is SchemeKind.VAN_LEER:
            return vanLeer(self, self.guess(guess_kind, objective).value, tol)
        return None

    def waveSpeeds(self, star: EulerStarState):
        """
        Edges of the wave fan: (left head, left tail, contact, right tail, right head).
        Head and tail coincide for shocks.
        """
        gamma = self.params.gamma
        z = (gamma - 1) / (2 * gamma)
        if star.left_wave is WaveType.SHOCK:
            left_head = left_tail = shockSpeed(self.left, star.rho_star_l, star.u_star, star.p_star, gamma, -1)
        else:
            left_head = self.left.u - self._a_left
            left_tail = star.u_star - self._a_left * (star.p_star / self.left.p) ** z
        if star.right_wave is WaveType.SHOCK:
            right_head = right_tail = shockSpeed(self.right, star.rho_star_r, star.u_star, star.p_star, gamma, +1)
        else:
            right_tail = star.u_star + self._a_right * (star.p_star / self.right.p) ** z
            right_head = self.right.u + self._a_right
        return left_head, left_tail, star.u_star, right_tail, right_head

    def sampleSolution(self, star: EulerStarState, xi):
        """
        State of the similarity solution on the ray x/t = xi. A ray on a wave edge gets the state right of it.

        :param star: Star state of this problem
        :param xi: Similarity coordinate
        :rtype: EulerPrimitive
        """
        speeds = self.waveSpeeds(star)
        checkOrdered(speeds)
        left_head, left_tail, contact, right_tail, right_head = speeds
        gamma = self.params.gamma
        if xi < contact:
            if xi < left_head:
                return self.left
            if star.left_wave is WaveType.RAREFACTION and xi < left_tail:
                return self._fanState(self.left, self._a_left, xi, +1)
            return EulerPrimitive(star.rho_star_l, star.u_star, star.p_star)
        if xi >= right_head:
            return self.right
        if star.right_wave is WaveType.RAREFACTION and xi >= right_tail:
            return self._fanState(self.right, self._a_right, xi, -1)
        return EulerPrimitive(star.rho_star_r, star.u_star, star.p_star)

    def _fanState(self, state, sound_speed, xi, sign):
        """
        State inside a rarefaction fan; sign is +1 for the left fan and -1 for the right fan.
        """
        gamma = self.params.gamma
        factor = 2 / (gamma + 1) + sign * (gamma - 1) / ((gamma + 1) * sound_speed) * (state.u - xi)
        u = 2 / (gamma + 1) * (sign * sound_speed + (gamma - 1) / 2 * state.u + xi)
        return EulerPrimitive(state.rho * factor ** (2 / (gamma - 1)), u,
                              state.p * factor ** (2 * gamma / (gamma - 1)))


class EulerCreator(Creator):
    def createProblem(self, left, right, **params):
        return EulerRiemannProblem(EulerPrimitive(*left), EulerPrimitive(*right), EulerParams(**params))
