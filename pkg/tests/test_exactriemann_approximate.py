import math
import unittest

import numpy as np

from exactriemann import kernels
from exactriemann.approximate import AdaptiveBranch, adaptiveEuler, adaptiveSwe, conservedPair, hlle, roe
from exactriemann.ensemble import oracleRoot
from exactriemann.euler import EulerParams, EulerPrimitive, EulerRiemannProblem
from exactriemann.exceptions import DryStateError, VacuumError
from exactriemann.guess import GuessKind
from exactriemann.swe import SweParams, SwePrimitive, SweRiemannProblem


def swe(left, right, g=1.0):
    return SweRiemannProblem(SwePrimitive(*left), SwePrimitive(*right), SweParams(g))


def euler(left, right, gamma=1.4):
    return EulerRiemannProblem(EulerPrimitive(*left), EulerPrimitive(*right), EulerParams(gamma))


def fluxJump(rp):
    q_l, q_r = conservedPair(rp)
    return (kernels.flux(rp.system, q_r, rp.params) - kernels.flux(rp.system, q_l, rp.params))[:, 0]


class TestHlle(unittest.TestCase):

    def test_equal_states(self):
        rp = swe((1.5, 0.3, 0.1), (1.5, 0.3, 0.1))
        state = hlle(rp)

        np.testing.assert_allclose(state.q_middle, (1.5, 0.45, 0.15), rtol=1e-14)
        self.assertLess(state.s_left, state.s_right)

    def test_conservation(self):
        for rp in (swe((2, 0), (1, 0)), swe((1, 5), (1, -5)), euler((1, 0, 1), (0.125, 0, 0.1))):
            state = hlle(rp)
            q_l, q_r = (q[:, 0] for q in conservedPair(rp))
            expected = state.s_right * q_r - state.s_left * q_l - fluxJump(rp)
            np.testing.assert_allclose((state.s_right - state.s_left) * np.array(state.q_middle), expected,
                                       rtol=1e-12, atol=1e-12, err_msg=f'HLLE middle state of {rp}')

    def test_speeds_bound_characteristics(self):
        rp = euler((1, 0, 1), (0.125, 0, 0.1))
        state = hlle(rp)
        gamma = rp.params.gamma

        self.assertLessEqual(state.s_left, rp.left.u - rp.left.soundSpeed(gamma))
        self.assertGreaterEqual(state.s_right, rp.right.u + rp.right.soundSpeed(gamma))


class TestRoe(unittest.TestCase):

    def test_equal_states(self):
        data = roe(swe((1, 0.5), (1, 0.5)))

        self.assertEqual((0.0, 0.0, 0.0), data.amdq)
        self.assertEqual((0.0, 0.0, 0.0), data.apdq)
        for wave in data.waves:
            self.assertEqual((0.0, 0.0, 0.0), wave)

    def test_waves_sum_to_jump(self):
        for rp in (swe((3, 1, 0.2), (0.5, -2, -0.4), 9.81), euler((1, 0, 1), (0.125, 0, 0.1))):
            data = roe(rp)
            q_l, q_r = (q[:, 0] for q in conservedPair(rp))
            np.testing.assert_allclose(np.sum(data.waves, axis=0), q_r - q_l, rtol=1e-12, atol=1e-14)

    def test_fluctuations_sum_to_flux_jump(self):
        for rp in (swe((3, 1, 0.2), (0.5, -2, -0.4), 9.81), swe((1, -1), (1, 1)), euler((1, 0, 1), (0.125, 0, 0.1)),
                   euler((1, 0.75, 1), (0.125, 0, 0.1))):
            data = roe(rp)
            np.testing.assert_allclose(np.array(data.amdq) + np.array(data.apdq), fluxJump(rp), rtol=1e-12,
                                       atol=1e-13, err_msg=f'Roe fluctuations of {rp}')

    def test_single_shock(self):
        # h_l = 2 is connected to h_r = 1 at rest by a right going shock of speed sqrt(3)
        data = roe(swe((2, math.sqrt(3) / 2), (1, 0)))

        self.assertAlmostEqual(math.sqrt(3), data.speeds[2], places=12)
        np.testing.assert_allclose(data.waves[0], 0, atol=1e-14)
        np.testing.assert_allclose(data.amdq, 0, atol=1e-14)

    def test_mirror_symmetry(self):
        data = roe(swe((2, 0), (1, 0)))
        mirrored = roe(swe((1, 0), (2, 0)))
        flip = np.array([1, -1, 1])

        np.testing.assert_allclose(np.array(mirrored.amdq), flip * np.array(data.apdq), rtol=1e-12, atol=1e-14)
        np.testing.assert_allclose(np.array(mirrored.apdq), flip * np.array(data.amdq), rtol=1e-12, atol=1e-14)

    def test_entropy_fix_transonic_rarefaction(self):
        rp = euler((1, 0.75, 1), (0.125, 0, 0.1))
        data = roe(rp)
        standard_minus, _ = kernels.fluctuationsFromWaves(np.array(data.waves).T.reshape(3, 3, 1),
                                                          np.array(data.speeds).reshape(3, 1))

        self.assertLess(data.speeds[0], 0)
        self.assertFalse(np.allclose(standard_minus[:, 0], data.amdq), msg='The 1-rarefaction is transonic')


class TestAdaptive(unittest.TestCase):

    def test_swe_two_rarefactions(self):
        estimate = adaptiveSwe(swe((1, -1), (1, 1)))

        self.assertIs(AdaptiveBranch.TWO_RAREFACTIONS, estimate.branch)
        self.assertTrue(estimate.is_exact)
        self.assertAlmostEqual(0.25, estimate.value, places=15)
        self.assertEqual(1, estimate.phi_evals)

    def test_swe_two_shocks(self):
        rp = swe((1, 5), (1, -5))
        estimate = adaptiveSwe(rp)

        self.assertIs(AdaptiveBranch.TWO_SHOCKS, estimate.branch)
        self.assertFalse(estimate.is_exact)
        self.assertEqual(rp.guess(GuessKind.QA).value, estimate.value)

    def test_swe_mixed(self):
        rp = swe((2, 0), (1, 0))
        estimate = adaptiveSwe(rp)

        self.assertIs(AdaptiveBranch.MIXED, estimate.branch)
        self.assertTrue(1 <= estimate.value <= 2)
        self.assertLessEqual(estimate.phi_evals, 3)
        self.assertLess(abs(estimate.value - oracleRoot(rp)), 0.1)

    def test_swe_dry(self):
        with self.assertRaises(DryStateError):
            adaptiveSwe(swe((1, -3), (1, 3)))

    def test_euler_two_shocks(self):
        rp = euler((5.99924, 19.5975, 460.894), (5.99242, -6.19633, 46.0950))
        estimate = adaptiveEuler(rp)
        star, _ = rp.solveStar()

        self.assertIs(AdaptiveBranch.TWO_SHOCKS, estimate.branch)
        self.assertTrue(estimate.report.converged)
        self.assertAlmostEqual(star.p_star, estimate.value, delta=1e-9 * star.p_star)
        self.assertAlmostEqual(star.u_star, estimate.u_star, delta=1e-9)

    def test_euler_mixed_and_rarefactions(self):
        estimate = adaptiveEuler(euler((1, 0, 1), (0.125, 0, 0.1)))
        self.assertIs(AdaptiveBranch.MIXED, estimate.branch)
        self.assertTrue(0.1 <= estimate.value <= 1)

        estimate = adaptiveEuler(euler((1, -2, 0.4), (1, 2, 0.4)))
        self.assertIs(AdaptiveBranch.TWO_RAREFACTIONS, estimate.branch)
        self.assertIsNone(estimate.report)

    def test_euler_vacuum(self):
        with self.assertRaises(VacuumError):
            adaptiveEuler(euler((1, -10, 1), (1, 10, 1)))
