"""
Command line front end: single problem solves, ensemble benchmarks and finite volume experiments.

Exit codes: 0 success, 1 solver failure, 2 usage error, 3 dry state, 4 vacuum.
"""
import argparse
import logging
import sys

from . import ensemble, factory, fv
from .exceptions import (ConfigurationError, DomainError, DryStateError, NonConvergenceError, RiemannError,
                         VacuumError)
from .guess import GuessKind
from .rootfind import SchemeKind, TerminationMode, ToleranceSpec
from .utils import FORMATS, renderTable, writeOutput

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SOLVER_FAILURE = 1
EXIT_USAGE = 2
EXIT_DRY_STATE = 3
EXIT_VACUUM = 4

SOLVE_COLUMNS = ('system', 'guess', 'scheme', 'value', 'u_star', 'left_wave', 'right_wave', 'iterations',
                 'function_evals', 'residual', 'converged')


def parseState(text):
    """
    '1,0' -> [1.0, 0.0]
    """
    try:
        return [float(x) for x in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'State {text!r} must be comma separated numbers')


def parseGrids(text):
    try:
        return [int(x) for x in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'Grids {text!r} must be comma separated integers')


def _addTolerance(parser, default_tol=1e-12):
    parser.add_argument('--tol-mode', choices=[m.value for m in TerminationMode], default='residual',
                        help='termination criterion (default: %(default)s)')
    parser.add_argument('--tol', type=float, default=default_tol,
                        help='tolerance of the chosen criterion, relative part for scaled (default: %(default)s)')
    parser.add_argument('--tol-abs', type=float, default=1e-12,
                        help='absolute part of the scaled residual criterion (default: %(default)s)')
    parser.add_argument('--max-iter', type=int, default=20, help='iteration cap (default: %(default)s)')


def _addOutput(parser, default_format='text'):
    parser.add_argument('--format', choices=FORMATS, default=default_format,
                        help='output format (default: %(default)s)')
    parser.add_argument('--output', default=None, help='write to this file instead of stdout')
    parser.add_argument('--mask-timing', action='store_true', help='print timing columns as - for diffing')


def _addParams(parser):
    parser.add_argument('--g', type=float, default=1.0, help='gravity (default: %(default)s)')
    parser.add_argument('--gamma', type=float, default=1.4, help='ratio of specific heats (default: %(default)s)')


def toleranceFromArgs(args):
    mode = TerminationMode(args.tol_mode)
    if mode is TerminationMode.STAGNATION:
        return ToleranceSpec(mode, eps_s=args.tol, max_iter=args.max_iter)
    if mode is TerminationMode.SCALED_RESIDUAL:
        return ToleranceSpec(mode, eps_r1=args.tol, eps_r2=args.tol_abs, max_iter=args.max_iter)
    return ToleranceSpec(mode, eps_r=args.tol, max_iter=args.max_iter)


def buildParser():
    parser = argparse.ArgumentParser(prog='exactriemann',
                                     description='Exact and approximate Riemann solvers for the shallow water '
                                                 'and Euler equations')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logging')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    solve = commands.add_parser('solve', help='solve one Riemann problem')
    solve.add_argument('--system', choices=('swe', 'euler'), default='swe', help='(default: %(default)s)')
    solve.add_argument('--left', type=parseState, required=True, help='h,u[,v] or rho,u,p')
    solve.add_argument('--right', type=parseState, required=True, help='h,u[,v] or rho,u,p')
    solve.add_argument('--guess', choices=[k.value for k in GuessKind], default='SS', help='(default: %(default)s)')
    solve.add_argument('--scheme', choices=[k.value for k in SchemeKind], default='positive-newton',
                       help='(default: %(default)s)')
    _addParams(solve)
    _addTolerance(solve)
    _addOutput(solve)
    solve.set_defaults(handler=runSolve)

    for name, handler, text in (('bench-ig', runBenchInitialGuesses, 'compare initial guesses with positive Newton'),
                                ('bench-iter', runBenchSchemes, 'compare iterative schemes')):
        bench = commands.add_parser(name, help=text)
        bench.add_argument('--system', choices=('swe', 'euler'), default='swe', help='(default: %(default)s)')
        bench.add_argument('--n', type=int, default=100000, help='ensemble size (default: %(default)s)')
        bench.add_argument('--seed', type=int, default=0, help='(default: %(default)s)')
        bench.add_argument('--weak-fraction', type=float, default=0.8, help='(default: %(default)s)')
        bench.add_argument('--no-filter', action='store_true', help='keep problems with two rarefactions')
        _addParams(bench)
        _addTolerance(bench)
        _addOutput(bench, 'csv')
        bench.set_defaults(handler=handler)

    run = commands.add_parser('fv-run', help='run a blast wave case')
    _addCase(run)
    run.add_argument('--cells', type=int, default=None, help='cells (default: 50, 4050 with --timing)')
    run.add_argument('--timing', action='store_true', help='time all solvers at first and second order')
    run.add_argument('--snapshot', default=None, help='write the final state as CSV to this file')
    _addOutput(run)
    run.set_defaults(handler=runFv)

    converge = commands.add_parser('fv-converge', help='self-convergence error table of a blast wave case')
    _addCase(converge)
    converge.add_argument('--grids', type=parseGrids, default=[50, 150, 450, 1350], help='(default: 50,150,450,1350)')
    converge.add_argument('--ref', type=int, default=4050, help='reference cells (default: %(default)s)')
    _addOutput(converge)
    converge.set_defaults(handler=runConvergence)
    return parser


def _addCase(parser):
    parser.add_argument('--case', choices=[c.value for c in fv.Case], default='swe-blast', help='(default: %(default)s)')
    parser.add_argument('--solver', choices=[s.value for s in fv.SolverKind], default='exact',
                        help='(default: %(default)s)')
    parser.add_argument('--order', type=int, choices=(1, 2), default=1, help='(default: %(default)s)')
    parser.add_argument('--limiter', choices=[lim.value for lim in fv.Limiter], default='mc',
                        help='(default: %(default)s)')
    parser.add_argument('--cfl', type=float, default=0.9, help='(default: %(default)s)')
    parser.add_argument('--t-final', type=float, default=None, help='final time (default: the case\'s)')
    parser.add_argument('--gamma', type=float, default=1.4, help='(default: %(default)s)')


def _emit(args, columns, rows):
    text = renderTable(columns, rows, args.format, mask_timing=args.mask_timing)
    writeOutput(text, args.output, sys.stdout)


def runSolve(args):
    params = {'g': args.g} if args.system == 'swe' else {'gamma': args.gamma}
    rp = factory.createProblem(args.system, args.left, args.right, **params)
    guess_kind = GuessKind(args.guess)
    scheme_kind = SchemeKind(args.scheme)
    star, report = rp.solveStar(guess_kind, scheme_kind, toleranceFromArgs(args))
    row = {
        'system': args.system,
        'guess': guess_kind.name,
        'scheme': scheme_kind.label,
        'value': star.value,
        'u_star': star.u_star,
        'left_wave': star.left_wave.value,
        'right_wave': star.right_wave.value,
        'iterations': report.iterations,
        'function_evals': report.function_evals,
        'residual': report.final_residual,
        'converged': report.converged,
    }
    _emit(args, SOLVE_COLUMNS, [row])
    return EXIT_OK if report.converged else EXIT_SOLVER_FAILURE


def _ensembleSpec(args):
    return ensemble.EnsembleSpec(args.system, args.n, args.weak_fraction, args.seed, not args.no_filter,
                                 args.g, args.gamma)


def runBenchInitialGuesses(args):
    reports = ensemble.benchInitialGuesses(_ensembleSpec(args), toleranceFromArgs(args))
    _emit(args, ensemble.REPORT_COLUMNS, [report.asRow() for report in reports])
    return EXIT_OK


def runBenchSchemes(args):
    reports = ensemble.benchSchemes(_ensembleSpec(args), toleranceFromArgs(args))
    _emit(args, ensemble.REPORT_COLUMNS, [report.asRow() for report in reports])
    return EXIT_OK


def _fvConfig(args, cells):
    overrides = dict(solver=args.solver, order=args.order, limiter=args.limiter, cfl=args.cfl, gamma=args.gamma)
    if cells is not None:
        overrides['cells'] = cells
    if args.t_final is not None:
        overrides['t_final'] = args.t_final
    return fv.caseConfig(args.case, **overrides)


def runFv(args):
    if args.timing:
        cells = args.cells or 4050
        rows = fv.timeSolvers(args.case, cells=cells, config=_fvConfig(args, cells))
        _emit(args, fv.TIMING_COLUMNS, rows)
        return EXIT_OK
    config = _fvConfig(args, args.cells)
    grid, wall_time = fv.runCase(args.case, config)
    if args.snapshot:
        fv.writeSnapshot(grid, args.snapshot)
    row = {'solver': config.solverLabel, 'order': config.order, 'cells': config.cells, 'steps': grid.steps,
           'time_s': wall_time}
    _emit(args, fv.TIMING_COLUMNS, [row])
    return EXIT_OK


def runConvergence(args):
    rows = fv.selfConvergence(args.case, _fvConfig(args, None), args.grids, args.ref)
    _emit(args, fv.CONVERGENCE_COLUMNS, rows)
    return EXIT_OK


def main(argv=None):
    parser = buildParser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.handler(args)
    except DryStateError as error:
        print(f'dry state: {error}', file=sys.stderr)
        return EXIT_DRY_STATE
    except VacuumError as error:
        print(f'vacuum: {error}', file=sys.stderr)
        return EXIT_VACUUM
    except (ConfigurationError, DomainError) as error:
        print(f'usage error: {error}', file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergenceError, RiemannError) as error:
        print(f'solver failure: {error}', file=sys.stderr)
        return EXIT_SOLVER_FAILURE
