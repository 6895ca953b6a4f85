from .swe import SweCreator
from .euler import EulerCreator
from .factory import addCreator, createProblem

addCreator('swe', SweCreator)
addCreator('euler', EulerCreator)
