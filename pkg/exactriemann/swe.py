import logging
import math
from dataclasses import dataclass

from .base.riemann_problem import RiemannProblem, StarBracket, WaveType
from .exceptions import ConsistencyError, DomainError, DryStateError
from .factory import Creator
from .guess import sweGuess

logger = logging.getLogger(__name__)

SweBracket = StarBracket

# relative slack when checking that wave speeds are ordered
ORDER_SLACK = 1e-12
# depth jumps below this (relative) use the impedance form of the shock speed
_SMALL_JUMP = 1e-8


@dataclass(frozen=True)
class SweParams:
    """
    :param g: Gravitational acceleration
    """
    g: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.g) and self.g > 0):
            raise DomainError(f'Gravitational acceleration must be positive, got {self.g}')


@dataclass(frozen=True)
class SwePrimitive:
    """
    Primitive shallow water state.

    :param h: Depth
    :param u: Normal velocity
    :param v: Transverse velocity, carried passively
    """
    h: float
    u: float
    v: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(x) for x in (self.h, self.u, self.v)):
            raise DomainError(f'Non-finite shallow water state {self}')
        if self.h < 0:
            raise DomainError(f'Negative depth {self.h}')

    def soundSpeed(self, g):
        return math.sqrt(g * self.h)

    def toConserved(self):
        """
        :rtype: SweConserved
        """
        return SweConserved(self.h, self.h * self.u, self.h * self.v)

    def flux(self, g):
        """
        Physical flux (hu, hu^2 + g h^2 / 2, huv)
        """
        hu = self.h * self.u
        return hu, hu * self.u + g * self.h * self.h / 2, hu * self.v

    def __str__(self):
        return f'(h={self.h:g}, u={self.u:g}, v={self.v:g})'


@dataclass(frozen=True)
class SweConserved:
    """
    Conserved shallow water state (h, hu, hv).
    """
    h: float
    hu: float
    hv: float = 0.0

    def toPrimitive(self):
        """
        :rtype: SwePrimitive
        """
        if self.h == 0:
            return SwePrimitive(0.0, 0.0, 0.0)
        return SwePrimitive(self.h, self.hu / self.h, self.hv / self.h)

    def asTuple(self):
        return self.h, self.hu, self.hv


@dataclass(frozen=True)
class SweStarState:
    """
    Middle state of the shallow water Riemann solution.

    :param h_star: Middle depth
    :param u_star: Middle velocity
    :param v_left: Transverse velocity left of the contact
    :param v_right: Transverse velocity right of the contact
    :param left_wave: Type of the 1-wave
    :param right_wave: Type of the 3-wave
    """
    h_star: float
    u_star: float
    v_left: float
    v_right: float
    left_wave: WaveType
    right_wave: WaveType

    @property
    def value(self):
        return self.h_star


def _sideTerms(h, h_k, g):
    """
    f(h; h_k) and its first three derivatives. Rarefaction branch for h <= h_k, shock branch otherwise.
    """
    if h <= h_k:
        root_g = math.sqrt(g)
        root_h = math.sqrt(h)
        return (2 * (math.sqrt(g * h) - math.sqrt(g * h_k)),
                root_g / root_h,
                -root_g / (2 * h * root_h),
                3 * root_g / (4 * h * h * root_h))
    y = math.sqrt(g * (h + h_k) / (2 * h * h_k))
    return ((h - h_k) * y,
            g * (2 * h * h + h * h_k + h_k * h_k) / (4 * h * h * h_k * y),
            -g * h_k * (5 * h + 3 * h_k) / (8 * h ** 3 * y * (h + h_k)),
            3 * g * h_k * (10 * h * h + 13 * h * h_k + 5 * h_k * h_k) / (16 * h ** 4 * y * (h + h_k) ** 2))


def _sideValue(h, h_k, g):
    if h <= h_k:
        return 2 * (math.sqrt(g * h) - math.sqrt(g * h_k))
    return (h - h_k) * math.sqrt(g * (h + h_k) / (2 * h * h_k))


def shockSpeed(state, h_star, u_star, g, sign):
    """
    Rankine-Hugoniot speed of the shock between an outer state and the middle state, from the mass jump.
    sign is -1 for the 1-shock and +1 for the 3-shock.
    """
    jump = state.h - h_star
    if abs(jump) > _SMALL_JUMP * max(state.h, h_star):
        return (state.h * state.u - h_star * u_star) / jump
    ratio = h_star / state.h
    return state.u + sign * state.soundSpeed(g) * math.sqrt((ratio + 1) * ratio / 2)


class SweRiemannProblem(RiemannProblem):
    """
    Riemann problem for the one dimensional shallow water equations with a passive transverse velocity.

    :param left: Left state, positive depth
    :param right: Right state, positive depth
    :param params: SweParams, g = 1 by default
    """
    system = 'swe'

    def __init__(self, left: SwePrimitive, right: SwePrimitive, params: SweParams = None):
        if not (left.h > 0 and right.h > 0):
            raise DomainError(f'Dry initial data {left} | {right} is not supported')
        super().__init__(left, right, params or SweParams())

    def _outerValues(self):
        return self.left.h, self.right.h

    def _checkDepth(self, h):
        if not (math.isfinite(h) and h > 0):
            raise DomainError(f'Depth function evaluated at {h!r}, must be positive and finite')

    def depthFunction(self, h):
        """
        phi(h) = f(h; h_l) + f(h; h_r) + u_r - u_l. Its root is the middle depth.

        :param h: Depth, positive
        :return: The value of phi at h
        """
        self._checkDepth(h)
        g = self.params.g
        return _sideValue(h, self.left.h, g) + _sideValue(h, self.right.h, g) + self.right.u - self.left.u

    def depthFunctionDerivatives(self, h):
        """
        :param h: Depth, positive
        :return: (phi', phi'', phi''')
        """
        self._checkDepth(h)
        g = self.params.g
        left = _sideTerms(h, self.left.h, g)
        right = _sideTerms(h, self.right.h, g)
        return left[1] + right[1], left[2] + right[2], left[3] + right[3]

    def _evaluate(self, h):
        self._checkDepth(h)
        g = self.params.g
        left = _sideTerms(h, self.left.h, g)
        right = _sideTerms(h, self.right.h, g)
        return left[0] + right[0] + self.right.u - self.left.u, left[1] + right[1]

    def checkDepthPositivity(self):
        """
        True when the middle state stays wet: u_r - u_l < 2 (sqrt(g h_l) + sqrt(g h_r))
        """
        g = self.params.g
        return self.right.u - self.left.u < 2 * (self.left.soundSpeed(g) + self.right.soundSpeed(g))

    def checkPositivity(self):
        return self.checkDepthPositivity()

    def _positivityError(self):
        return DryStateError(self)

    def twoRarefactionDepth(self):
        """
        Root of phi if both waves were rarefactions. Never underestimates the middle depth.
        """
        g = self.params.g
        numerator = self.left.u - self.right.u + 2 * self.left.soundSpeed(g) + 2 * self.right.soundSpeed(g)
        return numerator * numerator / (16 * g)

    def twoRarefactionValue(self):
        return self.twoRarefactionDepth()

    def starVelocity(self, h):
        """
        u* = (u_l + u_r) / 2 + (f(h; h_r) - f(h; h_l)) / 2
        """
        g = self.params.g
        return ((self.left.u + self.right.u) / 2
                + (_sideValue(h, self.right.h, g) - _sideValue(h, self.left.h, g)) / 2)

    def guess(self, kind, objective=None):
        return sweGuess(kind, self, objective)

    def starClosures(self, value, u_star=None, sound_speeds=None):
        """
        Middle state for the middle depth value.

        :rtype: SweStarState
        """
        if u_star is None:
            u_star = self.starVelocity(value)
        left_wave = WaveType.SHOCK if value > self.left.h else WaveType.RAREFACTION
        right_wave = WaveType.SHOCK if value > self.right.h else WaveType.RAREFACTION
        return SweStarState(value, u_star, self.left.v, self.right.v, left_wave, right_wave)

    def waveSpeeds(self, star: SweStarState):
        """
        Edges of the wave fan: (left head, left tail, contact, right tail, right head).
        Head and tail coincide for shocks.
        """
        g = self.params.g
        c_star = math.sqrt(g * star.h_star)
        if star.left_wave is WaveType.SHOCK:
            left_head = left_tail = shockSpeed(self.left, star.h_star, star.u_star, g, -1)
        else:
            left_head = self.left.u - self.left.soundSpeed(g)
            left_tail = star.u_star - c_star
        if star.right_wave is WaveType.SHOCK:
            right_head = right_tail = shockSpeed(self.right, star.h_star, star.u_star, g, +1)
        else:
            right_tail = star.u_star + c_star
            right_head = self.right.u + self.right.soundSpeed(g)
        return left_head, left_tail, star.u_star, right_tail, right_head

    def sampleSolution(self, star: SweStarState, xi):
        """
        State of the similarity solution on the ray x/t = xi. A ray on a wave edge gets the state right of it.

        :param star: Middle state of this problem
        :param xi: Similarity coordinate
        :rtype: SwePrimitive
        """
        speeds = self.waveSpeeds(star)
        checkOrdered(speeds)
        left_head, left_tail, contact, right_tail, right_head = speeds
        g = self.params.g
        if xi < contact:
            if xi < left_head:
                return self.left
            if star.left_wave is WaveType.RAREFACTION and xi < left_tail:
                c = (self.left.u + 2 * self.left.soundSpeed(g) - xi) / 3
                return SwePrimitive(c * c / g, xi + c, self.left.v)
            return SwePrimitive(star.h_star, star.u_star, star.v_left)
        if xi >= right_head:
            return self.right
        if star.right_wave is WaveType.RAREFACTION and xi >= right_tail:
            c = (xi - self.right.u + 2 * self.right.soundSpeed(g)) / 3
            return SwePrimitive(c * c / g, xi - c, self.right.v)
        return SwePrimitive(star.h_star, star.u_star, star.v_right)


def checkOrdered(speeds):
    """
    Raise ConsistencyError unless the wave fan edges are ordered left to right.
    """
    for previous, following in zip(speeds, speeds[1:]):
        if following < previous - ORDER_SLACK * max(1.0, abs(previous), abs(following)):
            raise ConsistencyError(f'Wave speeds {speeds} are not ordered')


class SweCreator(Creator):
    def createProblem(self, left, right, **params):
        return SweRiemannProblem(SwePrimitive(*left), SwePrimitive(*right), SweParams(**params))
