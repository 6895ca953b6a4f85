class ScalarObjective(object):
    """
    A scalar function handed to the root finding schemes. Every call returns the value and the
    derivative together and counts as one function evaluation; derivative() is counted apart.

    :param evaluator: Callable returning (psi(x), psi'(x))
    :param name: Name used in error messages
    """

    def __init__(self, evaluator, name='psi'):
        self._evaluator = evaluator
        self.name = name
        self.evaluations = 0
        self.derivative_evaluations = 0

    def __call__(self, x):
        self.evaluations += 1
        return self._evaluator(x)

    def value(self, x):
        """
        Evaluate only the function value. Still counts as one evaluation.

        :param x: Argument
        :return: psi(x)
        """
        return self(x)[0]

    def derivative(self, x):
        """
        Evaluate only the derivative, counted in derivative_evaluations.

        :param x: Argument
        :return: psi'(x)
        """
        self.derivative_evaluations += 1
        return self._evaluator(x)[1]

    def __repr__(self):
        return f'ScalarObjective {self.name} ({self.evaluations} evaluations)'

    def __str__(self):
        return f'ScalarObjective {self.name} ({self.evaluations} evaluations)'
