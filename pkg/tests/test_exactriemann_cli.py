import io
import json
import os
import tempfile
import unittest

import numpy as np
from mock import patch

from exactriemann import cli, fv


def run(*argv):
    """
    Run the command line with captured stdout and stderr.

    :return: (exit code, stdout text, stderr text)
    """
    with patch('sys.stdout', new_callable=io.StringIO) as stdout, \
            patch('sys.stderr', new_callable=io.StringIO) as stderr:
        code = cli.main(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class TestSolveCommand(unittest.TestCase):

    def test_sod_json(self):
        code, output, _ = run('solve', '--system', 'euler', '--left', '1,0,1', '--right', '0.125,0,0.1',
                              '--format', 'json')
        row = json.loads(output)[0]

        self.assertEqual(cli.EXIT_OK, code)
        self.assertAlmostEqual(0.30313, row['value'], places=5)
        self.assertAlmostEqual(0.92745, row['u_star'], places=5)
        self.assertEqual('rarefaction', row['left_wave'])
        self.assertTrue(row['converged'])

    def test_swe_text(self):
        code, output, _ = run('solve', '--left', '2,0', '--right', '1,0', '--scheme', 'ostrowski', '--g', '9.81')

        self.assertEqual(cli.EXIT_OK, code)
        self.assertIn('Ostrowski', output)
        self.assertIn('shock', output)

    def test_dry_state(self):
        code, _, error = run('solve', '--left', '1,-3', '--right', '1,3')

        self.assertEqual(cli.EXIT_DRY_STATE, code)
        self.assertIn('dry state', error)

    def test_vacuum(self):
        code, _, _ = run('solve', '--system', 'euler', '--left', '1,-10,1', '--right', '1,10,1')
        self.assertEqual(cli.EXIT_VACUUM, code)

    def test_usage_errors(self):
        self.assertEqual(cli.EXIT_USAGE, run('solve', '--system', 'euler', '--left', '1,0,1', '--right', '0.125,0,0.1',
                                             '--guess', 'QA')[0])
        self.assertEqual(cli.EXIT_USAGE, run('solve', '--left', '-1,0', '--right', '1,0')[0])
        self.assertEqual(cli.EXIT_USAGE, run('solve', '--left', '2,0', '--right', '1,0', '--scheme', 'van-leer')[0])
        with patch('sys.stderr', new_callable=io.StringIO), self.assertRaises(SystemExit) as context:
            cli.main(['solve', '--left', 'a,b', '--right', '1,0'])
        self.assertEqual(2, context.exception.code)

    def test_solver_failure(self):
        code, _, error = run('solve', '--left', '2,0', '--right', '1,0', '--tol', '1e-300', '--max-iter', '1')

        self.assertEqual(cli.EXIT_SOLVER_FAILURE, code)
        self.assertIn('solver failure', error)

    def test_tolerance_modes(self):
        args = cli.buildParser().parse_args(['solve', '--left', '1,0', '--right', '1,0', '--tol-mode', 'scaled',
                                             '--tol', '1e-6', '--tol-abs', '1e-9'])
        tol = cli.toleranceFromArgs(args)

        self.assertEqual((1e-6, 1e-9), (tol.eps_r1, tol.eps_r2))
        args = cli.buildParser().parse_args(['solve', '--left', '1,0', '--right', '1,0', '--tol-mode', 'stagnation'])
        self.assertEqual(1e-12, cli.toleranceFromArgs(args).eps_s)

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'solve.csv')
            code, output, _ = run('solve', '--left', '2,0', '--right', '1,0', '--format', 'csv', '--output', path)
            with open(path, encoding='utf-8') as fh:
                lines = fh.read().splitlines()

        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual('', output)
        self.assertEqual(','.join(cli.SOLVE_COLUMNS), lines[0])


class TestBenchCommands(unittest.TestCase):

    def test_bench_initial_guesses(self):
        argv = ('bench-ig', '--system', 'euler', '--n', '30', '--seed', '2', '--mask-timing')
        code, output, _ = run(*argv)
        lines = output.splitlines()

        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual(7, len(lines), msg='Header and one row per initial guess')
        self.assertTrue(lines[0].startswith('kind,scheme,tol,time_s'))
        self.assertEqual(output, run(*argv)[1], msg='Masked output must be reproducible')

    def test_bench_schemes(self):
        code, output, _ = run('bench-iter', '--n', '20', '--format', 'json')
        rows = json.loads(output)

        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual(5, len(rows))
        self.assertEqual('Positive Newton', rows[0]['scheme'])


class TestFvCommands(unittest.TestCase):

    @patch.object(fv, 'runCase')
    def test_fv_run(self, run_case):
        run_case.return_value = (fv.GridFunction(np.ones((3, 4)), 1.0, steps=7), 1.25)
        code, output, _ = run('fv-run', '--case', 'euler-blast', '--solver', 'hlle', '--order', '2', '--format', 'csv')

        self.assertEqual(cli.EXIT_OK, code)
        case, config = run_case.call_args[0]
        self.assertEqual('euler-blast', case)
        self.assertEqual((50, 2, fv.SolverKind.HLLE, 0.5), (config.cells, config.order, config.solver, config.t_final))
        self.assertEqual('hlle,2,50,7,1.25', output.splitlines()[1])

    @patch.object(fv, 'timeSolvers')
    def test_fv_timing(self, time_solvers):
        time_solvers.return_value = []
        code, _, _ = run('fv-run', '--timing', '--t-final', '1')

        self.assertEqual(cli.EXIT_OK, code)
        self.assertEqual(4050, time_solvers.call_args[1]['cells'])
        self.assertEqual(1.0, time_solvers.call_args[1]['config'].t_final)

    @patch.object(fv, 'selfConvergence')
    def test_fv_converge(self, self_convergence):
        self_convergence.return_value = [{'solver': 'roe', 'cells': 50, 'l2': 0.5}]
        code, output, _ = run('fv-converge', '--format', 'csv')

        self.assertEqual(cli.EXIT_OK, code)
        case, config, grids, ref = self_convergence.call_args[0]
        self.assertEqual(([50, 150, 450, 1350], 4050), (grids, ref))
        self.assertEqual('swe', config.system)
        self.assertTrue(output.startswith(','.join(fv.CONVERGENCE_COLUMNS)))

    def test_bad_grids(self):
        with patch('sys.stderr', new_callable=io.StringIO), self.assertRaises(SystemExit):
            cli.main(['fv-converge', '--grids', '50,x'])
