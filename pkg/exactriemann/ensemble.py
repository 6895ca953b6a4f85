"""
Pseudo-random Riemann problem ensembles, the bisection reference oracle and the initial guess and
iterative scheme benchmarks run on them.
"""
import logging
import math
import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import optimize

from .euler import EulerParams, EulerPrimitive, EulerRiemannProblem
from .exceptions import (ConfigurationError, DomainError, DryStateError, NonConvergenceError, OracleError,
                         RiemannError, VacuumError)
from .guess import GuessKind, guessesFor
from .rootfind import SchemeKind, ToleranceSpec
from .swe import SweParams, SwePrimitive, SweRiemannProblem

logger = logging.getLogger(__name__)

# problems solved untimed before every timed pass
WARM_UP = 1000
# relative width of the final oracle bracket
ORACLE_XTOL = 1e-14

REPORT_COLUMNS = ('kind', 'scheme', 'tol', 'time_s', 'avg_iter', 'arie_weak_pct', 'arie_strong_pct', 'failures')

SWE_PAIRINGS = (
    (SchemeKind.POSITIVE_NEWTON, GuessKind.SS),
    (SchemeKind.OSTROWSKI, GuessKind.SS),
    (SchemeKind.OSTROWSKI_NEWTON, GuessKind.SS),
    (SchemeKind.TWO_STEP_NEWTON, GuessKind.SS),
    (SchemeKind.BOUNDING_POLYNOMIALS, GuessKind.RR),
)
EULER_PAIRINGS = (
    (SchemeKind.POSITIVE_NEWTON, GuessKind.SS),
    (SchemeKind.OSTROWSKI_NEWTON, GuessKind.SS),
    (SchemeKind.OSTROWSKI, GuessKind.SS),
    (SchemeKind.GOTTLIEB_GROTH, GuessKind.RR),
    (SchemeKind.TWO_STEP_NEWTON, GuessKind.SS),
    (SchemeKind.VAN_LEER, GuessKind.SS),
    (SchemeKind.BOUNDING_POLYNOMIALS, GuessKind.RR),
)


class Strength(Enum):
    WEAK = 'weak'
    STRONG = 'strong'


@dataclass(frozen=True)
class EnsembleSpec:
    """
    Recipe of a reproducible ensemble.

    :param system: 'swe' or 'euler'
    :param n_problems: Number of problems
    :param weak_fraction: Probability of a weak wave problem
    :param seed: Seed of the Mersenne Twister generator
    :param shock_only_filter: Redraw problems whose solution has two rarefactions. Both systems test
        phi(min state) <= 0 rather than the sign of the velocity jump. For the Euler strong draws
        (u_l > 0 > u_r) the two tests agree, and weak draws at rest always pass, so the filter only
        acts on custom distributions.
    :param g: Gravity of the shallow water problems
    :param gamma: Ratio of specific heats of the Euler problems
    """
    system: str = 'swe'
    n_problems: int = 100000
    weak_fraction: float = 0.8
    seed: int = 0
    shock_only_filter: bool = True
    g: float = 1.0
    gamma: float = 1.4

    def __post_init__(self):
        if self.system not in ('swe', 'euler'):
            raise ConfigurationError(f'system {self.system} not supported')
        if self.n_problems < 0:
            raise ConfigurationError(f'Ensemble size must not be negative, got {self.n_problems}')
        if not 0 <= self.weak_fraction <= 1:
            raise ConfigurationError(f'weak_fraction must be in [0, 1], got {self.weak_fraction}')

    @property
    def params(self):
        if self.system == 'swe':
            return SweParams(self.g)
        return EulerParams(self.gamma)


@dataclass(frozen=True)
class EnsembleProblem:
    rp: object
    strength: Strength


@dataclass
class BenchReport:
    """
    Result of one guess or scheme over an ensemble.

    :param kind: Initial guess label
    :param scheme: Scheme label
    :param tol: Tolerance epsilon
    :param time_s: Wall time of the timed pass
    :param avg_iter: Average iterations over converged problems that needed iterating
    :param arie_weak_pct: Average relative initial error on weak wave problems, percent
    :param arie_strong_pct: Average relative initial error on strong wave problems, percent
    :param failures: Problems whose solve raised a typed failure
    :param max_rel_error: Largest relative deviation of a converged root from the oracle
    :param n_problems: Problems in the ensemble
    :param n_shortcut: Problems solved exactly by the two-rarefaction check, left out of the averages
    """
    kind: str
    scheme: str
    tol: float
    time_s: float = 0.0
    avg_iter: float = 0.0
    arie_weak_pct: float = 0.0
    arie_strong_pct: float = 0.0
    failures: int = 0
    max_rel_error: float = 0.0
    n_problems: int = 0
    n_shortcut: int = 0
    failure_reasons: dict = field(default_factory=dict)

    def asRow(self):
        return {column: getattr(self, column) for column in REPORT_COLUMNS}

    def __str__(self):
        return (f'{self.scheme}-{self.kind}: {self.avg_iter:.2f} iterations, {self.failures} failures, '
                f'{self.time_s:.3f} s')


def _decade(rng, low, high):
    return 10.0 ** rng.uniform(low, high)


def _drawSwe(rng, strength, params):
    if strength is Strength.WEAK:
        return SweRiemannProblem(SwePrimitive(rng.uniform(0.1, 1.0), 0.0),
                                 SwePrimitive(rng.uniform(0.1, 1.0), 0.0), params)
    h_left, h_right = _decade(rng, -4, 4), _decade(rng, -4, 4)
    u_left, u_right = _decade(rng, -2, 2), -_decade(rng, -2, 2)
    return SweRiemannProblem(SwePrimitive(h_left, u_left), SwePrimitive(h_right, u_right), params)


def _drawEuler(rng, strength, params):
    if strength is Strength.WEAK:
        return EulerRiemannProblem(EulerPrimitive(rng.uniform(0.1, 0.9), 0.0, rng.uniform(0.1, 1.0)),
                                   EulerPrimitive(rng.uniform(0.1, 0.9), 0.0, rng.uniform(0.1, 1.0)), params)
    p_left, p_right = _decade(rng, -4, 4), _decade(rng, -4, 4)
    u_left, u_right = _decade(rng, -2, 2), -_decade(rng, -2, 2)
    return EulerRiemannProblem(EulerPrimitive(rng.uniform(0.01, 0.9), u_left, p_left),
                               EulerPrimitive(rng.uniform(0.01, 0.9), u_right, p_right), params)


def hasShock(rp):
    """
    True when at least one nonlinear wave is a shock
    """
    return rp.objective().value(rp.minState()) <= 0


def generate(spec: EnsembleSpec):
    """
    Draw the problems of an ensemble. The same spec always gives the same list.

    Strong wave problems take outer depths or pressures 10^k with k uniform in [-4, 4] and velocities
    u_l = 10^k, u_r = -10^k with k uniform in [-2, 2]; Euler densities are uniform in [0.01, 0.9].
    Weak wave problems are at rest with depths or pressures uniform in [0.1, 1] and Euler densities
    uniform in [0.1, 0.9]. With shock_only_filter, draws with two rarefactions are redrawn.

    :rtype: list of EnsembleProblem
    """
    rng = np.random.RandomState(spec.seed)
    params = spec.params
    draw = _drawSwe if spec.system == 'swe' else _drawEuler
    problems = []
    while len(problems) < spec.n_problems:
        strength = Strength.WEAK if rng.uniform() < spec.weak_fraction else Strength.STRONG
        rp = draw(rng, strength, params)
        if spec.shock_only_filter and not hasShock(rp):
            continue
        problems.append(EnsembleProblem(rp, strength))
    logger.info('generated %d %s problems with seed %d', len(problems), spec.system, spec.seed)
    return problems


def _phiValue(rp):
    if rp.system == 'swe':
        return rp.depthFunction
    return rp.pressureFunction


def oracleRoot(rp):
    """
    Middle depth or star pressure by bisection on [min state, two-rarefaction value], down to a
    bracket width of 1e-14 max(1, root). Only the depth or pressure function itself is used.

    :param rp: SweRiemannProblem or EulerRiemannProblem without dry state or vacuum
    :return: The root
    """
    if not rp.checkPositivity():
        raise rp._positivityError()
    phi = _phiValue(rp)
    low, high = rp.minState(), rp.twoRarefactionValue()
    phi_low = phi(low)
    if phi_low == 0:
        return low
    if phi_low > 0:
        return high
    phi_high = phi(high)
    if phi_high == 0:
        return high
    if phi_high < 0:
        raise OracleError(f'No sign change of phi on [{low!r}, {high!r}] for {rp}')
    root = optimize.bisect(phi, low, high, xtol=ORACLE_XTOL, rtol=ORACLE_XTOL, maxiter=400)
    return root


def oracleRoots(problems):
    return [oracleRoot(problem.rp) for problem in problems]


def _solve(rp, guess_kind, scheme_kind, tol):
    return rp.solveStar(guess_kind, scheme_kind, tol)


def _runPass(problems, guess_kind, scheme_kind, tol, report, record):
    """
    Solve every problem; failures are counted per exception type.
    """
    for index, problem in enumerate(problems):
        try:
            star, solve_report = _solve(problem.rp, guess_kind, scheme_kind, tol)
        except (NonConvergenceError, DryStateError, VacuumError, DomainError) as error:
            if record is not None:
                report.failures += 1
                name = type(error).__name__
                report.failure_reasons[name] = report.failure_reasons.get(name, 0) + 1
            continue
        if record is not None:
            record(index, star, solve_report)


def _initialValue(rp, guess_kind):
    try:
        return rp.guess(guess_kind).value
    except RiemannError:
        return float('nan')


def benchmark(problems, roots, guess_kind, scheme_kind, tol: ToleranceSpec = None, warm_up=WARM_UP):
    """
    Time one guess and scheme pairing over an ensemble and compare against oracle roots.

    The timed region covers the solver calls only; a warm-up pass over the first problems runs untimed.

    :param problems: List of EnsembleProblem
    :param roots: Oracle roots in the same order
    :param guess_kind: GuessKind
    :param scheme_kind: SchemeKind
    :param tol: ToleranceSpec
    :param warm_up: Number of problems solved before timing
    :rtype: BenchReport
    """
    tol = tol or ToleranceSpec()
    guess_kind = GuessKind(guess_kind)
    scheme_kind = SchemeKind(scheme_kind)
    report = BenchReport(guess_kind.name, scheme_kind.label, tol.epsilon, n_problems=len(problems))
    _runPass(problems[:warm_up], guess_kind, scheme_kind, tol, report, None)

    results = {}

    def record(index, star, solve_report):
        results[index] = solve_report

    start = time.perf_counter()
    _runPass(problems, guess_kind, scheme_kind, tol, report, record)
    report.time_s = time.perf_counter() - start

    iterations = []
    errors = {Strength.WEAK: [], Strength.STRONG: []}
    for index, (problem, root) in enumerate(zip(problems, roots)):
        if not hasShock(problem.rp):
            report.n_shortcut += 1
            continue
        solve_report = results.get(index)
        if solve_report is not None and solve_report.converged:
            iterations.append(solve_report.iterations)
            scale = abs(root) if root else 1.0
            report.max_rel_error = max(report.max_rel_error, abs(solve_report.root - root) / scale)
        initial = _initialValue(problem.rp, guess_kind)
        if math.isfinite(initial) and root:
            errors[problem.strength].append(abs(root - initial) / abs(root))
    report.avg_iter = float(np.mean(iterations)) if iterations else 0.0
    report.arie_weak_pct = 100 * float(np.mean(errors[Strength.WEAK])) if errors[Strength.WEAK] else 0.0
    report.arie_strong_pct = 100 * float(np.mean(errors[Strength.STRONG])) if errors[Strength.STRONG] else 0.0
    logger.info('%s', report)
    return report


def benchInitialGuesses(spec: EnsembleSpec, tol: ToleranceSpec = None, problems=None, roots=None):
    """
    Every initial guess of the system as the start of positive Newton.

    :return: list of BenchReport, one per GuessKind
    """
    problems = problems if problems is not None else generate(spec)
    roots = roots if roots is not None else oracleRoots(problems)
    return [benchmark(problems, roots, kind, SchemeKind.POSITIVE_NEWTON, tol) for kind in guessesFor(spec.system)]


def schemePairings(system):
    if system == 'swe':
        return SWE_PAIRINGS
    if system == 'euler':
        return EULER_PAIRINGS
    raise ConfigurationError(f'system {system} not supported')


def benchSchemes(spec: EnsembleSpec, tol: ToleranceSpec = None, problems=None, roots=None):
    """
    Every iterative scheme of the system with its best performing initial guess.

    :return: list of BenchReport, one per pairing
    """
    problems = problems if problems is not None else generate(spec)
    roots = roots if roots is not None else oracleRoots(problems)
    return [benchmark(problems, roots, guess_kind, scheme_kind, tol)
            for scheme_kind, guess_kind in schemePairings(spec.system)]
