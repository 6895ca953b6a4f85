import os
import tempfile
import unittest
from dataclasses import replace

import numpy as np

from exactriemann import fv, kernels
from exactriemann.exceptions import ConfigurationError, PositivityError
from exactriemann.guess import GuessKind
from exactriemann.rootfind import SchemeKind
from exactriemann.swe import SweParams


def uniformGrid(config, first=1.0, last=0.0):
    q = np.zeros((3, config.cells))
    q[0] = first
    q[2] = last
    return fv.GridFunction(q, config.dx, config.x_lower)


class TestConfig(unittest.TestCase):

    def test_invalid(self):
        for overrides in (dict(cells=3), dict(cfl=1.0), dict(order=3), dict(boundary='periodic'),
                          dict(system='mhd'), dict(x_upper=-6.0), dict(t_final=-1.0), dict(solver='godunov')):
            with self.assertRaises((ConfigurationError, ValueError), msg=f'{overrides} must be rejected'):
                fv.FvConfig(**overrides)

    def test_case_config(self):
        config = fv.caseConfig('euler-blast', cells=100, solver='roe')

        self.assertEqual('euler', config.system)
        self.assertEqual((0.0, 1.0, 0.5), (config.x_lower, config.x_upper, config.t_final))
        self.assertEqual(0.01, config.dx)
        self.assertIs(fv.SolverKind.ROE, config.solver)
        self.assertEqual('roe', config.solverLabel)
        self.assertIs(SchemeKind.OSTROWSKI_NEWTON, fv.caseConfig('swe-blast').exact.scheme)

    def test_initial_grids(self):
        grid = fv.initialGrid('swe-blast', fv.caseConfig('swe-blast', cells=10))
        np.testing.assert_array_equal(grid.q[0], [30, 30, 30, 1, 1, 1, 1, 50, 50, 50])

        config = fv.caseConfig('euler-blast', cells=10)
        grid = fv.initialGrid('euler-blast', config)
        np.testing.assert_array_equal(grid.q[0], 0.1)
        self.assertAlmostEqual(1000 / 0.4, grid.q[2][0], places=10)
        self.assertEqual(1.0, grid.q[2][5])
        self.assertAlmostEqual(100 / 0.4, grid.q[2][-1], places=10)

        with self.assertRaises(ConfigurationError):
            fv.initialGrid('euler-blast', fv.caseConfig('swe-blast'))


class TestScheme(unittest.TestCase):

    def test_limiters(self):
        theta = np.array([-1.0, 0.0, 0.5, 1.0, 3.0])

        np.testing.assert_allclose(fv.mcLimiter(theta), [0, 0, 0.75, 1, 2])
        np.testing.assert_allclose(fv.minmodLimiter(theta), [0, 0, 0.5, 1, 1])
        np.testing.assert_allclose(fv.unlimited(theta), 1)

    def test_reflecting_ghosts(self):
        q = np.arange(12, dtype=float).reshape(3, 4)
        padded = fv.reflectingGhosts(q)

        self.assertEqual((3, 8), padded.shape)
        np.testing.assert_array_equal(padded[:, 2:6], q)
        np.testing.assert_array_equal(padded[0, :2], [1, 0])
        np.testing.assert_array_equal(padded[1, :2], [-5, -4])
        np.testing.assert_array_equal(padded[1, 6:], [-7, -6])

    def test_fluctuations_sum_to_flux_jump(self):
        rng = np.random.RandomState(3)
        for system in ('swe', 'euler'):
            config = fv.FvConfig(system=system)
            q_l = kernels.conserved(system, (rng.uniform(0.5, 2, 20), rng.uniform(-1, 1, 20), rng.uniform(0.5, 2, 20)),
                                    config.params)
            q_r = kernels.conserved(system, (rng.uniform(0.5, 2, 20), rng.uniform(-1, 1, 20), rng.uniform(0.5, 2, 20)),
                                    config.params)
            jump = kernels.flux(system, q_r, config.params) - kernels.flux(system, q_l, config.params)
            for solver in fv.SolverKind:
                fluctuations = fv.interfaceFluctuations(replace(config, solver=solver), q_l, q_r)
                np.testing.assert_allclose(fluctuations.amdq + fluctuations.apdq, jump, rtol=1e-10, atol=1e-12,
                                           err_msg=f'{system} {solver.value}')

    def test_scalar_and_array_roots_agree(self):
        rng = np.random.RandomState(4)
        params = SweParams()
        q_l = kernels.conserved('swe', (rng.uniform(0.5, 2, 30), rng.uniform(-1, 1, 30), np.zeros(30)), params)
        q_r = kernels.conserved('swe', (rng.uniform(0.5, 2, 30), rng.uniform(-1, 1, 30), np.zeros(30)), params)
        array = fv.exactRoots('swe', q_l, q_r, params, fv.ExactIterative())
        scalar = fv.exactRoots('swe', q_l, q_r, params, fv.ExactIterative(SchemeKind.TWO_STEP_NEWTON, GuessKind.CC))

        np.testing.assert_allclose(array, scalar, rtol=1e-9)

    def test_uniform_state_at_rest(self):
        for system, last in (('swe', 0.0), ('euler', 2.5)):
            for solver in fv.SolverKind:
                config = fv.FvConfig(system=system, cells=20, solver=solver, order=2, t_final=1.0)
                grid = uniformGrid(config, last=last)
                result = fv.step(grid, config)
                np.testing.assert_allclose(result.q, grid.q, atol=1e-14, err_msg=f'{system} {solver.value}')
                self.assertGreater(result.t, 0)

    def test_positivity_check(self):
        q = np.ones((3, 4))
        q[0, 2] = -1
        with self.assertRaises(PositivityError):
            fv.checkPositivity('swe', q, SweParams(), 0.0)
        q = np.ones((3, 4))
        q[2, 1] = 0.1
        q[1, 1] = 1.0
        with self.assertRaises(PositivityError):
            fv.checkPositivity('euler', q, None, 0.0)

    def test_restrict(self):
        fine = np.arange(1, 7, dtype=float).reshape(1, 6)

        np.testing.assert_array_equal(fv.restrict(fine, 2), [[2, 5]])
        with self.assertRaises(ConfigurationError):
            fv.restrict(fine, 4)

    def test_grid_norms(self):
        l2, linf = fv.gridNorms(np.array([3.0, -4.0]), 0.25)

        self.assertAlmostEqual(2.5, l2, places=14)
        self.assertEqual(4.0, linf)


class TestRuns(unittest.TestCase):

    def test_mass_conservation(self):
        for solver in fv.SolverKind:
            for order in (1, 2):
                config = fv.caseConfig('swe-blast', cells=50, t_final=2.0, solver=solver, order=order)
                initial = fv.initialGrid('swe-blast', config)
                grid, _ = fv.runCase('swe-blast', config)
                self.assertAlmostEqual(initial.total(0), grid.total(0), delta=1e-10 * initial.total(0),
                                       msg=f'{solver.value} order {order} lost mass')
                self.assertAlmostEqual(2.0, grid.t, places=12)

    def test_euler_blast(self):
        config = fv.caseConfig('euler-blast', cells=50, t_final=0.01, order=2)
        initial = fv.initialGrid('euler-blast', config)
        grid, wall_time = fv.runCase('euler-blast', config)

        self.assertAlmostEqual(0.01, grid.t, places=14)
        self.assertGreater(grid.steps, 1)
        self.assertGreaterEqual(wall_time, 0)
        self.assertAlmostEqual(initial.total(0), grid.total(0), delta=1e-10)
        self.assertAlmostEqual(initial.total(2), grid.total(2), delta=1e-10 * initial.total(2))

    def test_realized_cfl(self):
        config = fv.caseConfig('swe-blast', cells=50, t_final=1.0)
        grid = fv.initialGrid('swe-blast', config)
        while grid.t < config.t_final:
            t = grid.t
            grid = fv.step(grid, config)
            self.assertLessEqual((grid.t - t) * grid.max_speed / grid.dx, config.cfl_max + 1e-12)

    def test_max_steps(self):
        config = fv.caseConfig('swe-blast', cells=50, max_steps=2)
        with self.assertRaises(ConfigurationError):
            fv.runCase('swe-blast', config)

    def test_scalar_path_warns(self):
        config = fv.caseConfig('swe-blast', cells=20, t_final=0.1,
                               exact=fv.ExactIterative(SchemeKind.TWO_STEP_NEWTON, GuessKind.SS))
        with self.assertLogs('exactriemann.fv', 'WARNING'):
            grid, _ = fv.runCase('swe-blast', config)
        self.assertAlmostEqual(0.1, grid.t, places=14)

    def test_self_convergence_on_reference_grid(self):
        config = fv.caseConfig('swe-blast', t_final=0.5)
        rows = fv.selfConvergence('swe-blast', config, [50], 50, solvers=[fv.SolverKind.ROE])

        self.assertEqual(1, len(rows))
        self.assertEqual(set(fv.CONVERGENCE_COLUMNS), set(rows[0]))
        self.assertEqual(0.0, rows[0]['l2'])
        self.assertEqual(0.0, rows[0]['linf_q2'])

    def test_self_convergence_errors_decrease(self):
        config = fv.caseConfig('swe-blast', t_final=0.5)
        rows = fv.selfConvergence('swe-blast', config, [30, 90], 270, solvers=[fv.SolverKind.HLLE])

        self.assertGreater(rows[0]['l2'], rows[1]['l2'])

    def test_grids_must_nest(self):
        with self.assertRaises(ConfigurationError):
            fv.selfConvergence('swe-blast', fv.caseConfig('swe-blast'), [40], 4050)

    def test_time_solvers(self):
        rows = fv.timeSolvers('swe-blast', cells=20, config=fv.caseConfig('swe-blast', t_final=0.2))

        self.assertEqual(6, len(rows))
        self.assertEqual([1, 1, 1, 2, 2, 2], [row['order'] for row in rows])
        self.assertTrue(all(row['steps'] > 0 for row in rows))

    def test_snapshot(self):
        config = fv.caseConfig('swe-blast', cells=10)
        grid = fv.initialGrid('swe-blast', config)
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'snapshot.csv')
            fv.writeSnapshot(grid, path)
            with open(path, encoding='utf-8') as fh:
                self.assertEqual('x,q0,q1,q2', fh.readline().strip())
            data = np.loadtxt(path, delimiter=',', skiprows=1)

        self.assertEqual((10, 4), data.shape)
        np.testing.assert_array_equal(data[:, 0], grid.centers())
        np.testing.assert_array_equal(data[:, 1], grid.q[0])
