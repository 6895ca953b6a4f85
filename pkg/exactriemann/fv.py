"""
One dimensional wave propagation finite volume solver for the shallow water and Euler equations:
Godunov's method with optional second order limited corrections, reflecting walls, and an interface
Riemann solver chosen among the exact iterative solver, Roe and HLLE.
"""
import logging
import time
from dataclasses import asdict, dataclass, field, replace
from enum import Enum

import numpy as np

from . import factory, kernels
from .euler import EulerParams
from .exceptions import ConfigurationError, PositivityError
from .guess import GuessKind
from .rootfind import SchemeKind, TerminationMode, ToleranceSpec
from .swe import SweParams

logger = logging.getLogger(__name__)

NUM_GHOST = 2

CONVERGENCE_COLUMNS = ('solver', 'cells', 'l2', 'linf', 'l2_q1', 'linf_q1', 'l2_q2', 'linf_q2')
TIMING_COLUMNS = ('solver', 'order', 'cells', 'steps', 'time_s')


class SolverKind(Enum):
    EXACT = 'exact'
    ROE = 'roe'
    HLLE = 'hlle'


class Limiter(Enum):
    MC = 'mc'
    MINMOD = 'minmod'
    NONE = 'none'


class Case(Enum):
    SWE_BLAST = 'swe-blast'
    EULER_BLAST = 'euler-blast'


@dataclass(frozen=True)
class ExactIterative:
    """
    Settings of the exact interface solver.

    :param scheme: SchemeKind
    :param guess: GuessKind
    :param tol: ToleranceSpec, residual below 1e-10 by default
    """
    scheme: SchemeKind = SchemeKind.POSITIVE_NEWTON
    guess: GuessKind = GuessKind.SS
    tol: ToleranceSpec = field(default_factory=lambda: ToleranceSpec(TerminationMode.RESIDUAL, eps_r=1e-10))

    def __post_init__(self):
        object.__setattr__(self, 'scheme', SchemeKind(self.scheme))
        object.__setattr__(self, 'guess', GuessKind(self.guess))

    def __str__(self):
        return f'{self.scheme.label}-{self.guess.name}'


@dataclass(frozen=True)
class FvConfig:
    """
    Finite volume run configuration.

    :param system: 'swe' or 'euler'
    :param x_lower: Left end of the domain
    :param x_upper: Right end of the domain
    :param cells: Number of cells
    :param cfl: Target CFL number
    :param t_final: Final time
    :param order: 1 for Godunov's method, 2 for limited second order corrections
    :param limiter: Limiter of the second order corrections
    :param boundary: Boundary condition on both ends, only 'reflecting'
    :param solver: SolverKind of the interface Riemann solver
    :param exact: ExactIterative settings used when solver is EXACT
    :param g: Gravity
    :param gamma: Ratio of specific heats
    :param cfl_max: A step whose realized CFL number exceeds this is retaken
    :param max_steps: Upper bound of time steps per run
    """
    system: str = 'swe'
    x_lower: float = -5.0
    x_upper: float = 5.0
    cells: int = 50
    cfl: float = 0.9
    t_final: float = 10.0
    order: int = 1
    limiter: Limiter = Limiter.MC
    boundary: str = 'reflecting'
    solver: SolverKind = SolverKind.EXACT
    exact: ExactIterative = field(default_factory=ExactIterative)
    g: float = 1.0
    gamma: float = 1.4
    cfl_max: float = 1.0
    max_steps: int = 10 ** 6

    def __post_init__(self):
        object.__setattr__(self, 'limiter', Limiter(self.limiter))
        object.__setattr__(self, 'solver', SolverKind(self.solver))
        if self.system not in ('swe', 'euler'):
            raise ConfigurationError(f'system {self.system} not supported')
        if self.cells < 4:
            raise ConfigurationError(f'At least 4 cells are needed, got {self.cells}')
        if not 0 < self.cfl < 1:
            raise ConfigurationError(f'cfl must be in (0, 1), got {self.cfl}')
        if self.order not in (1, 2):
            raise ConfigurationError(f'order must be 1 or 2, got {self.order}')
        if self.boundary != 'reflecting':
            raise ConfigurationError(f'Boundary {self.boundary} not supported')
        if not self.x_upper > self.x_lower:
            raise ConfigurationError(f'Empty domain [{self.x_lower}, {self.x_upper}]')
        if self.t_final < 0:
            raise ConfigurationError(f'Negative final time {self.t_final}')

    @property
    def params(self):
        if self.system == 'swe':
            return SweParams(self.g)
        return EulerParams(self.gamma)

    @property
    def dx(self):
        return (self.x_upper - self.x_lower) / self.cells

    @property
    def solverLabel(self):
        if self.solver is SolverKind.EXACT:
            return f'exact ({self.exact})'
        return self.solver.value


@dataclass
class GridFunction:
    """
    Cell averages of the conserved variables.

    :param q: Array of shape (3, cells)
    :param dx: Cell width
    :param x_lower: Left end of the domain
    :param t: Current time
    :param max_speed: Largest wave speed of the last step, None before the first step
    :param steps: Steps taken so far
    """
    q: np.ndarray
    dx: float
    x_lower: float = 0.0
    t: float = 0.0
    max_speed: float = None
    steps: int = 0

    @property
    def cells(self):
        return self.q.shape[1]

    def centers(self):
        return self.x_lower + (np.arange(self.cells) + 0.5) * self.dx

    def total(self, component=0):
        """
        Integral of one conserved component over the domain
        """
        return float(np.sum(self.q[component]) * self.dx)

    def copy(self):
        return replace(self, q=self.q.copy())

    def __str__(self):
        return f'grid of {self.cells} cells at t={self.t:g}'


@dataclass(frozen=True)
class FluctuationSet:
    """
    :param amdq: Left-going fluctuations, shape (3, interfaces)
    :param apdq: Right-going fluctuations, shape (3, interfaces)
    :param waves: Waves, shape (3, num_waves, interfaces)
    :param speeds: Wave speeds, shape (num_waves, interfaces)
    """
    amdq: np.ndarray
    apdq: np.ndarray
    waves: np.ndarray
    speeds: np.ndarray

    def maxSpeed(self):
        return float(np.max(np.abs(self.speeds))) if self.speeds.size else 0.0


def _scalarRoots(system, q_l, q_r, params, exact):
    """
    Roots one interface at a time through the scalar solver
    """
    left = kernels.primitives(system, q_l, params)
    right = kernels.primitives(system, q_r, params)
    values = asdict(params)
    roots = np.empty(q_l.shape[1])
    for index in range(q_l.shape[1]):
        rp = factory.createProblem(system, [float(x[index]) for x in left], [float(x[index]) for x in right],
                                   **values)
        _, report = rp.solveStar(exact.guess, exact.scheme, exact.tol)
        roots[index] = report.root
    return roots


def exactRoots(system, q_l, q_r, params, exact: ExactIterative):
    """
    Middle depths or star pressures of every interface, vectorized where the scheme allows it.
    """
    if kernels.supportsArrays(exact.guess, exact.scheme, exact.tol):
        problem = kernels.ArrayProblem(system, q_l, q_r, params)
        return kernels.solveStarArray(problem, exact.guess, exact.scheme, exact.tol)
    return _scalarRoots(system, q_l, q_r, params, exact)


def interfaceFluctuations(config: FvConfig, q_left, q_right):
    """
    Fluctuations and waves of the Riemann problems between q_left and q_right.

    :param config: FvConfig naming the system and the solver
    :param q_left: Left conserved states, shape (3, interfaces)
    :param q_right: Right conserved states, shape (3, interfaces)
    :rtype: FluctuationSet
    """
    system = config.system
    params = config.params
    q_left = np.asarray(q_left, dtype=float)
    q_right = np.asarray(q_right, dtype=float)
    if config.solver is SolverKind.ROE:
        waves, speeds, _ = kernels.roeWaves(system, q_left, q_right, params)
        amdq, apdq = kernels.hartenHymanFluctuations(system, q_left, q_right, waves, speeds, params)
    elif config.solver is SolverKind.HLLE:
        waves, speeds = kernels.hlleWaves(system, q_left, q_right, params)
        amdq, apdq = kernels.fluctuationsFromWaves(waves, speeds)
    else:
        roots = exactRoots(system, q_left, q_right, params, config.exact)
        amdq, apdq, waves, speeds = kernels.exactFluctuations(system, q_left, q_right, params, roots)
    return FluctuationSet(amdq, apdq, waves, speeds)


def reflectingGhosts(q, num_ghost=NUM_GHOST):
    """
    Pad with mirrored cells whose normal momentum is negated
    """
    left = q[:, :num_ghost][:, ::-1].copy()
    right = q[:, -num_ghost:][:, ::-1].copy()
    left[1] *= -1
    right[1] *= -1
    return np.concatenate([left, q, right], axis=1)


def mcLimiter(theta):
    return np.maximum(0, np.minimum(np.minimum((1 + theta) / 2, 2), 2 * theta))


def minmodLimiter(theta):
    return np.maximum(0, np.minimum(1, theta))


def unlimited(theta):
    return np.ones_like(theta)


LIMITERS = {
    Limiter.MC: mcLimiter,
    Limiter.MINMOD: minmodLimiter,
    Limiter.NONE: unlimited,
}


def limitWaves(waves, speeds, limiter):
    """
    Scale every wave by the limiter of its ratio to the same family's wave at the upwind interface.
    """
    interfaces = waves.shape[2]
    index = np.arange(interfaces)
    upwind = np.where(speeds > 0, index - 1, index + 1).clip(0, interfaces - 1)
    upwind_waves = np.take_along_axis(waves, np.broadcast_to(upwind, waves.shape), axis=2)
    norm = np.sum(waves * waves, axis=0)
    dot = np.sum(waves * upwind_waves, axis=0)
    with np.errstate(invalid='ignore', divide='ignore'):
        theta = np.where(norm > 0, dot / norm, 0.0)
    return LIMITERS[limiter](theta) * waves


def correctionFluxes(fluctuations: FluctuationSet, dtdx, limiter):
    """
    Second order correction fluxes 1/2 sum |s| (1 - dt/dx |s|) limited W at every interface
    """
    limited = limitWaves(fluctuations.waves, fluctuations.speeds, limiter)
    weight = 0.5 * np.abs(fluctuations.speeds) * (1 - dtdx * np.abs(fluctuations.speeds))
    return np.sum(weight * limited, axis=1)


def checkPositivity(system, q, params, t):
    """
    Raise PositivityError unless every depth, or density and internal energy, is positive
    """
    if system == 'swe':
        bad = ~(q[0] > 0)
        quantity = 'depth'
    else:
        internal = q[2] - 0.5 * q[1] * q[1] / q[0]
        bad = ~((q[0] > 0) & (internal > 0))
        quantity = 'density or internal energy'
    if bad.any():
        cells = np.nonzero(bad)[0]
        raise PositivityError(f'Non-positive {quantity} in {cells.size} cells (first {cells[0]}) at t={t:g}')


def characteristicSpeed(system, q, params):
    left, right = kernels.characteristicSpeeds(system, q, params)
    return float(np.max(np.maximum(np.abs(left), np.abs(right))))


def step(grid: GridFunction, config: FvConfig, t_end=None):
    """
    Advance one time step. The step size comes from the wave speeds of the previous step (from the
    characteristic speeds of the data before the first step) and is retaken with the current speeds
    when the realized CFL number exceeds config.cfl_max.

    :param grid: Current GridFunction
    :param config: FvConfig
    :param t_end: Do not step past this time
    :return: New GridFunction
    """
    params = config.params
    dx = grid.dx
    t_end = config.t_final if t_end is None else t_end
    padded = reflectingGhosts(grid.q)
    fluctuations = interfaceFluctuations(config, padded[:, :-1], padded[:, 1:])
    speed = fluctuations.maxSpeed()
    previous = grid.max_speed if grid.max_speed is not None else characteristicSpeed(config.system, grid.q, params)

    def clipped(reference):
        dt = config.cfl * dx / reference if reference > 0 else t_end - grid.t
        return min(dt, t_end - grid.t)

    dt = clipped(previous)
    if dt * speed / dx > config.cfl_max:
        logger.info('step at t=%g retaken, CFL %.3f above %.3f', grid.t, dt * speed / dx, config.cfl_max)
        dt = clipped(speed)
    dtdx = dt / dx
    cells = grid.cells
    left = slice(NUM_GHOST - 1, NUM_GHOST - 1 + cells)
    right = slice(NUM_GHOST, NUM_GHOST + cells)
    q = grid.q - dtdx * (fluctuations.apdq[:, left] + fluctuations.amdq[:, right])
    if config.order == 2:
        corrections = correctionFluxes(fluctuations, dtdx, config.limiter)
        q -= dtdx * (corrections[:, right] - corrections[:, left])
    checkPositivity(config.system, q, params, grid.t + dt)
    return GridFunction(q, dx, grid.x_lower, grid.t + dt, speed, grid.steps + 1)


def evolve(grid: GridFunction, config: FvConfig):
    """
    Step until config.t_final.

    :rtype: GridFunction
    """
    if config.solver is SolverKind.EXACT and not kernels.supportsArrays(config.exact.guess, config.exact.scheme,
                                                                       config.exact.tol):
        logger.warning('%s has no vectorized form, interfaces are solved one at a time', config.exact)
    while grid.t < config.t_final:
        if grid.steps >= config.max_steps:
            raise ConfigurationError(f'{config.max_steps} steps taken before t={config.t_final:g}')
        grid = step(grid, config)
    return grid


def caseConfig(case, **overrides):
    """
    FvConfig with the domain, final time and exact scheme of a test case.

    :param case: Case
    :param overrides: Any FvConfig field
    """
    case = Case(case)
    if case is Case.SWE_BLAST:
        defaults = dict(system='swe', x_lower=-5.0, x_upper=5.0, t_final=10.0,
                        exact=ExactIterative(SchemeKind.OSTROWSKI_NEWTON, GuessKind.SS))
    else:
        defaults = dict(system='euler', x_lower=0.0, x_upper=1.0, t_final=0.5,
                        exact=ExactIterative(SchemeKind.POSITIVE_NEWTON, GuessKind.SS))
    defaults.update(overrides)
    return FvConfig(**defaults)


def initialGrid(case, config: FvConfig):
    """
    Blast wave data on the cell centers of config's grid
    """
    case = Case(case)
    dx = config.dx
    grid = GridFunction(np.zeros((3, config.cells)), dx, config.x_lower)
    x = grid.centers()
    if case is Case.SWE_BLAST:
        if config.system != 'swe':
            raise ConfigurationError(f'{case.value} needs the swe system, got {config.system}')
        grid.q[0] = np.where(x <= -2, 30.0, np.where(x < 2, 1.0, 50.0))
    else:
        if config.system != 'euler':
            raise ConfigurationError(f'{case.value} needs the euler system, got {config.system}')
        gamma = config.gamma
        grid.q[0] = 0.1
        grid.q[2] = np.where(x < 0.1, 1000 / (gamma - 1), np.where(x <= 0.9, 1.0, 100 / (gamma - 1)))
    return grid


def runCase(case, config: FvConfig):
    """
    Run a blast wave case.

    :return: (final GridFunction, wall time in seconds)
    """
    grid = initialGrid(case, config)
    start = time.perf_counter()
    grid = evolve(grid, config)
    wall_time = time.perf_counter() - start
    logger.info('%s with %s on %d cells finished after %d steps in %.3f s', Case(case).value, config.solverLabel,
                config.cells, grid.steps, wall_time)
    return grid, wall_time


def restrict(q_fine, cells):
    """
    Average a fine grid function onto a grid with cells cells
    """
    fine = q_fine.shape[1]
    if fine % cells:
        raise ConfigurationError(f'{fine} cells cannot be averaged onto {cells} cells')
    return q_fine.reshape(q_fine.shape[0], cells, fine // cells).mean(axis=2)


def gridNorms(error, dx):
    """
    (L2, Linf) grid norms of one component: sqrt(dx sum e^2) and max |e|
    """
    return float(np.sqrt(dx * np.sum(error * error))), float(np.max(np.abs(error)))


def selfConvergence(case, config: FvConfig, grids, ref_cells, solvers=None):
    """
    Errors of each solver on coarse grids against the same solver's solution on ref_cells cells.

    :param case: Case
    :param config: FvConfig, its cells field is replaced
    :param grids: Cell counts of the coarse grids, each dividing ref_cells
    :param ref_cells: Cells of the reference grid
    :param solvers: SolverKinds, all three by default
    :return: list of row dicts with CONVERGENCE_COLUMNS
    """
    for cells in grids:
        if ref_cells % cells:
            raise ConfigurationError(f'Grid of {cells} cells does not nest in the {ref_cells} cell reference')
    rows = []
    for solver in solvers or list(SolverKind):
        solver_config = replace(config, solver=solver)
        reference, _ = runCase(case, replace(solver_config, cells=ref_cells))
        for cells in grids:
            coarse, _ = runCase(case, replace(solver_config, cells=cells))
            error = coarse.q - restrict(reference.q, cells)
            row = {'solver': solver_config.solverLabel, 'cells': cells}
            for component in range(3):
                l2, linf = gridNorms(error[component], coarse.dx)
                suffix = '' if component == 0 else f'_q{component}'
                row['l2' + suffix] = l2
                row['linf' + suffix] = linf
            rows.append(row)
    return rows


def timeSolvers(case, cells=4050, orders=(1, 2), solvers=None, config=None):
    """
    Wall time of the three interface solvers for first and second order runs of a case.

    :return: list of row dicts with TIMING_COLUMNS
    """
    config = config or caseConfig(case)
    rows = []
    for order in orders:
        for solver in solvers or list(SolverKind):
            run_config = replace(config, cells=cells, order=order, solver=solver)
            grid, wall_time = runCase(case, run_config)
            rows.append({'solver': run_config.solverLabel, 'order': order, 'cells': cells, 'steps': grid.steps,
                         'time_s': wall_time})
    return rows


def writeSnapshot(grid: GridFunction, path):
    """
    Write the cell centers and conserved components as CSV (x, q0, q1, q2)
    """
    data = np.column_stack([grid.centers(), grid.q.T])
    np.savetxt(path, data, delimiter=',', header='x,q0,q1,q2', comments='', fmt='%.17g')
