class RiemannError(Exception):
    """
    Base class of every error raised by this package.
    """


class DomainError(RiemannError, ValueError):
    """
    An argument lies outside the domain of a function, or a state or parameter is not physical.
    """


class DryStateError(RiemannError):
    """
    The shallow water Riemann problem creates a dry middle state.

    :param problem: The offending Riemann problem
    """

    def __init__(self, problem):
        super().__init__(f'Depth positivity condition fails for {problem}: the middle state is dry')
        self.problem = problem


class VacuumError(RiemannError):
    """
    The Euler Riemann problem creates a vacuum in the star region.

    :param problem: The offending Riemann problem
    """

    def __init__(self, problem):
        super().__init__(f'Pressure positivity condition fails for {problem}: a vacuum is generated')
        self.problem = problem


class NonConvergenceError(RiemannError):
    """
    An iterative scheme stopped without meeting its termination criterion.

    :param reason: Why the iteration stopped
    :param report: The SolveReport of the best iterate reached
    """

    def __init__(self, reason, report=None):
        message = reason
        if report is not None:
            message = f'{reason} (best iterate {report.root!r} after {report.iterations} iterations)'
        super().__init__(message)
        self.reason = reason
        self.report = report


class PreconditionError(RiemannError):
    """
    An operation was called outside of its precondition.
    """


class ConsistencyError(RiemannError):
    """
    Internal inconsistency, such as wave speeds that are not ordered.
    """


class ConfigurationError(RiemannError, ValueError):
    """
    Unknown or unsupported combination of options.
    """


class PositivityError(RiemannError):
    """
    A finite volume step produced a non-physical cell average.
    """


class OracleError(RiemannError):
    """
    The bisection oracle could not bracket the root.
    """
