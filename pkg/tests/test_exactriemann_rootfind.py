import math
import unittest
from decimal import Decimal, localcontext

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from exactriemann.base.objective import ScalarObjective
from exactriemann.ensemble import hasShock, oracleRoot
from exactriemann.euler import EulerParams, EulerPrimitive, EulerRiemannProblem
from exactriemann.exceptions import DomainError, NonConvergenceError, PreconditionError
from exactriemann.rootfind import (TerminationMode, ToleranceSpec, boundingPolynomials, checkTermination,
                                   estimateOrder, ostrowski, ostrowskiNewton, positiveNewton, twoStepNewton)
from exactriemann.swe import SweParams, SwePrimitive, SweRiemannProblem


def squareRoot():
    # increasing and concave, root at 4
    return ScalarObjective(lambda x: (math.sqrt(x) - 2, 0.5 / math.sqrt(x)), 'sqrt')


def logarithm():
    return ScalarObjective(lambda x: (math.log(x) - 1, 1 / x), 'log')


def linear():
    return ScalarObjective(lambda x: (x - 3, 1.0), 'linear')


class TestTermination(unittest.TestCase):

    def test_residual(self):
        tol = ToleranceSpec(eps_r=1e-6)
        self.assertTrue(checkTermination(tol, [(1.0, 1e-7)]))
        self.assertFalse(checkTermination(tol, [(1.0, -1e-5)]))

    def test_scaled_residual(self):
        tol = ToleranceSpec(TerminationMode.SCALED_RESIDUAL, eps_r1=1e-3, eps_r2=1e-12)
        self.assertTrue(checkTermination(tol, [(1.0, 10.0), (2.0, 1e-3)]))
        self.assertFalse(checkTermination(tol, [(1.0, 10.0), (2.0, 1e-1)]))

    def test_stagnation(self):
        tol = ToleranceSpec(TerminationMode.STAGNATION, eps_s=1e-6)
        self.assertTrue(checkTermination(tol, [(1.0, 5.0), (1.0 + 1e-9, 4.0)]))
        self.assertTrue(checkTermination(tol, [(2.0, 5.0), (2.0, 4.0)]), msg='Equal iterates have stagnated')
        self.assertFalse(checkTermination(tol, [(1.0, 5.0), (1.1, 4.0)]))
        with self.assertRaises(PreconditionError):
            checkTermination(tol, [(1.0, 5.0)])

    def test_empty_history(self):
        with self.assertRaises(PreconditionError):
            checkTermination(ToleranceSpec(), [])

    def test_invalid_tolerance(self):
        with self.assertRaises(DomainError):
            ToleranceSpec(eps_r=0)
        with self.assertRaises(DomainError):
            ToleranceSpec(max_iter=0)
        self.assertIs(TerminationMode.STAGNATION, ToleranceSpec('stagnation').mode)


class TestSchemes(unittest.TestCase):

    def test_positive_newton_monotone(self):
        report = positiveNewton(squareRoot(), 1.0, 1.0)

        self.assertTrue(report.converged)
        self.assertAlmostEqual(4.0, report.root, places=12)
        self.assertEqual(report.function_evals, len(report.iterates))
        for previous, current in zip(report.iterates, report.iterates[1:]):
            self.assertLessEqual(previous, current, msg='Positive Newton iterates must not decrease')
            self.assertLessEqual(current, 4.0 + 1e-12)

    def test_positive_newton_corrects_guess(self):
        # the Newton step from 16 lands at 4*4 - 16 = 0
        report = positiveNewton(squareRoot(), 16.0, 1.0)

        self.assertTrue(report.converged)
        self.assertEqual(1.0, report.iterates[1], msg='A non-positive Newton step is clamped to the lower bound')

    def test_positive_newton_rejects_bad_bound(self):
        with self.assertRaises(DomainError):
            positiveNewton(squareRoot(), 1.0, 0.0)

    def test_quadratic_order(self):
        report = positiveNewton(squareRoot(), 1.0, 1.0)
        errors = [abs(x - 4.0) for x in report.iterates[:5]]
        orders = estimateOrder(errors)

        self.assertAlmostEqual(2.0, orders[-1], delta=0.1)
        with self.assertRaises(PreconditionError):
            estimateOrder([1.0, 0.0, 0.1])

    def test_two_step_newton_order(self):
        report = twoStepNewton(logarithm(), 0.5)
        errors = [abs(x - math.e) for x in report.iterates if abs(x - math.e) > 1e-14]
        orders = estimateOrder(errors)

        self.assertTrue(2.2 <= orders[-1] <= 2.7, msg=f'Two-step Newton orders {orders}')

    def test_ostrowski_order(self):
        with localcontext() as context:
            context.prec = 50
            objective = ScalarObjective(lambda x: (x.ln() - 1, 1 / x), 'decimal log')
            report = ostrowski(objective, Decimal('1.5'), ToleranceSpec(eps_r=1e-45))
            root = Decimal(1).exp()
            # full iterates only, the half-steps sit in between
            errors = [abs(x - root) for x in report.iterates[0::2]]

        self.assertTrue(report.converged)
        self.assertGreaterEqual(estimateOrder(errors)[-1], 3.0)

    def test_non_convergence(self):
        with self.assertRaises(NonConvergenceError) as context:
            positiveNewton(squareRoot(), 1e-8, 1e-8, ToleranceSpec(max_iter=3))
        report = context.exception.report

        self.assertFalse(report.converged)
        self.assertEqual(3, report.iterations)
        self.assertEqual(max(report.iterates), report.root, msg='The best iterate is the one closest to the root')

    def test_ostrowski_linear(self):
        report = ostrowski(linear(), 1.0)

        self.assertTrue(report.converged)
        self.assertEqual(3.0, report.root)
        self.assertEqual(0.5, report.iterations, msg='An exact half-step counts half an iteration')

    def test_ostrowski(self):
        report = ostrowski(logarithm(), 1.0)

        self.assertTrue(report.converged)
        self.assertAlmostEqual(math.e, report.root, places=12)
        self.assertLessEqual(report.iterations, 4)

    def test_ostrowski_newton(self):
        report = ostrowskiNewton(squareRoot(), 1.0, 1.0)
        self.assertTrue(report.converged)
        self.assertAlmostEqual(4.0, report.root, places=12)

        report = ostrowskiNewton(squareRoot(), -1.0, 1.0)
        self.assertTrue(report.converged)
        self.assertEqual(1.0, report.iterates[0], msg='A non-positive guess starts from the lower bound')

    def test_two_step_newton_linear(self):
        report = twoStepNewton(linear(), 10.0)

        self.assertTrue(report.converged)
        self.assertEqual(1, report.iterations)
        self.assertEqual(3.0, report.root)

    def test_two_step_newton(self):
        report = twoStepNewton(logarithm(), 2.0)

        self.assertTrue(report.converged)
        self.assertAlmostEqual(math.e, report.root, places=12)

    def test_two_step_newton_evaluations(self):
        report = twoStepNewton(logarithm(), 0.5)

        self.assertGreaterEqual(report.iterations, 2)
        self.assertEqual(report.iterations + 1, report.function_evals, msg='One psi per iteration after the start')
        self.assertEqual(report.iterations - 1, report.derivative_evals,
                         msg='One midpoint derivative per iteration after the first')

    def test_bounding_polynomials(self):
        report = boundingPolynomials(squareRoot(), 1.0, 9.0)

        self.assertTrue(report.converged)
        self.assertAlmostEqual(4.0, report.root, places=12)
        self.assertLess(abs(report.final_residual), 1e-12)
        with self.assertRaises(PreconditionError):
            boundingPolynomials(squareRoot(), 9.0, 1.0)

    def test_bounding_polynomials_closed_bracket(self):
        # the residual tolerance is out of reach at this scale, so the solve ends on the bracket width
        for index in range(200):
            target = 0.01 + index * 0.0195
            objective = ScalarObjective(lambda x, c=target: (1e12 * (math.log(x) - c), 1e12 / x), 'steep log')
            report = boundingPolynomials(objective, 1.0, 50.0, ToleranceSpec(eps_r=1e-12))

            self.assertTrue(report.converged, msg=f'log x = {target}')
            self.assertAlmostEqual(math.exp(target), report.root, delta=2e-12 * math.exp(target))
            if report.final_residual != 0:
                x_minus, x_plus = report.brackets[-1]
                self.assertLess(x_plus - x_minus, 1e-12 * x_plus)

    def test_bounding_polynomials_invalid_bracket(self):
        with self.assertRaises(NonConvergenceError):
            boundingPolynomials(squareRoot(), 5.0, 9.0)

    def assertBracketsShrink(self, rp):
        root = oracleRoot(rp)
        # the oracle bisects down to 1e-14 max(1, root)
        slack = 1e-12 * root + 2e-14
        report = boundingPolynomials(rp.objective(), rp.minState(), rp.twoRarefactionValue(),
                                     ToleranceSpec(eps_r=1e-8))

        self.assertTrue(report.converged)
        for (previous_minus, previous_plus), (x_minus, x_plus) in zip(report.brackets, report.brackets[1:]):
            self.assertGreaterEqual(x_minus, previous_minus, msg='The lower end must not decrease')
            self.assertLessEqual(x_plus, previous_plus, msg='The upper end must not increase')
        for x_minus, x_plus in report.brackets:
            self.assertLessEqual(x_minus, root + slack, msg=f'Bracket [{x_minus}, {x_plus}] misses {root}')
            self.assertGreaterEqual(x_plus, root - slack, msg=f'Bracket [{x_minus}, {x_plus}] misses {root}')

    @settings(max_examples=200, deadline=None)
    @given(st.floats(1e-3, 1e3), st.floats(-10, 10), st.floats(1e-3, 1e3), st.floats(-10, 10))
    def test_swe_brackets_contain_root(self, h_l, u_l, h_r, u_r):
        rp = SweRiemannProblem(SwePrimitive(h_l, u_l), SwePrimitive(h_r, u_r), SweParams())
        assume(rp.checkDepthPositivity() and rp.depthFunction(rp.minState()) < 0)
        self.assertBracketsShrink(rp)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(0.01, 10), st.floats(-5, 5), st.floats(1e-3, 1e3),
           st.floats(0.01, 10), st.floats(-5, 5), st.floats(1e-3, 1e3))
    def test_euler_brackets_contain_root(self, rho_l, u_l, p_l, rho_r, u_r, p_r):
        rp = EulerRiemannProblem(EulerPrimitive(rho_l, u_l, p_l), EulerPrimitive(rho_r, u_r, p_r), EulerParams())
        assume(rp.checkPressurePositivity() and hasShock(rp))
        self.assertBracketsShrink(rp)

    def test_left_domain(self):
        objective = ScalarObjective(lambda x: (x - 3, 1e-3), 'flat')
        with self.assertRaises(NonConvergenceError):
            ostrowski(objective, 1.0)

    def test_decimal_objective(self):
        with localcontext() as context:
            context.prec = 50
            objective = ScalarObjective(lambda x: (x.sqrt() - 2, 1 / (2 * x.sqrt())), 'decimal')
            report = positiveNewton(objective, Decimal(1), Decimal(1), ToleranceSpec(eps_r=1e-30))

            self.assertTrue(report.converged)
            self.assertLess(abs(report.root - 4), Decimal('1e-29'))
