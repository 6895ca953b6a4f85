import unittest

from mock import patch

import exactriemann
from exactriemann import factory
from exactriemann.euler import EulerRiemannProblem
from exactriemann.exceptions import ConfigurationError, DomainError
from exactriemann.swe import SweRiemannProblem


class TestFactory(unittest.TestCase):

    def test_registered_systems(self):
        self.assertEqual(['euler', 'swe'], factory.systems())

    def test_create_swe(self):
        rp = exactriemann.createProblem('swe', (2, 0), (1, 0, 0.5), g=9.81)

        self.assertIsInstance(rp, SweRiemannProblem)
        self.assertEqual(9.81, rp.params.g)
        self.assertEqual(0.5, rp.right.v)

    def test_create_euler(self):
        rp = factory.createProblem('euler', (1, 0, 1), (0.125, 0, 0.1), gamma=5 / 3)

        self.assertIsInstance(rp, EulerRiemannProblem)
        self.assertEqual(5 / 3, rp.params.gamma)

    def test_unknown_system(self):
        with self.assertRaises(ConfigurationError):
            factory.createProblem('mhd', (1, 0), (1, 0))

    def test_invalid_state(self):
        with self.assertRaises(DomainError):
            factory.createProblem('euler', (1, 0, -1), (1, 0, 1))

    def test_abstract_creator(self):
        with self.assertRaises(TypeError):
            factory.Creator()

    @patch.dict(factory.creator_list)
    def test_add_creator(self):
        class MirroredSweCreator(factory.Creator):
            def createProblem(self, left, right, **params):
                return factory.creator_list['swe']().createProblem(right, left, **params)

        factory.addCreator('swe-mirrored', MirroredSweCreator)
        rp = factory.createProblem('swe-mirrored', (2, 0), (1, 0))

        self.assertEqual(1, rp.left.h)
        self.assertIn('swe-mirrored', factory.systems())
