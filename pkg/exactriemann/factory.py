from abc import ABC, abstractmethod

from .exceptions import ConfigurationError


class Creator(ABC):

    @abstractmethod
    def createProblem(self, left, right, **params):
        pass


creator_list = {}


def addCreator(system, creator):
    creator_list[system] = creator


def createProblem(system, left, right, **params):
    """
    Create a Riemann problem of a registered system from plain primitive values.

    :param system: Registered system name, 'swe' or 'euler'
    :param left: Left primitive values, (h, u[, v]) or (rho, u, p)
    :param right: Right primitive values
    :param params: System parameters, g or gamma
    """
    if system in creator_list:
        creator = creator_list[system]()
        return creator.createProblem(left, right, **params)
    else:
        raise ConfigurationError(f'system {system} not supported')


def systems():
    return sorted(creator_list)
