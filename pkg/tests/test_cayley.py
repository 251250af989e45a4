import unittest
import sys
import os

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

import networkx as nx

from src.errors import UnsupportedPresentationError
from src.group.cayley import cayley_ball
from src.group.presentation import Presentation, free_group, surface_group, zxz_group
from src.group.words import GroupWord


class TestCayleyBall(unittest.TestCase):
    def test_radius_zero(self):
        ball = cayley_ball(zxz_group(), 0)
        self.assertEqual(len(ball.vertices), 1)
        self.assertEqual(ball.edges, ())
        self.assertEqual(ball.cells, ())

    def test_free_group_growth(self):
        """Free group of rank 2: 1 + 4 * (3^r - 1) / 2 vertices"""
        expected = [1, 5, 17, 53, 161, 485]
        for radius, count in enumerate(expected):
            ball = cayley_ball(free_group(2), radius)
            self.assertEqual(len(ball.vertices), count)
        ball = cayley_ball(free_group(2), 2)
        self.assertEqual(len(ball.edges), 16)
        self.assertEqual(ball.cells, ())

    def test_free_ball_is_a_tree(self):
        graph = cayley_ball(free_group(2), 3).to_networkx()
        self.assertTrue(nx.is_tree(nx.Graph(graph)))

    def test_zxz_growth(self):
        """Z x Z: the L1 ball has 2r^2 + 2r + 1 points"""
        for radius in range(11):
            ball = cayley_ball(zxz_group(), radius)
            self.assertEqual(len(ball.vertices), 2 * radius * radius + 2 * radius + 1)
            self.assertTrue(all(len(cycle) == 4 for _, _, cycle in ball.cells))

    def test_zxz_cells(self):
        ball = cayley_ball(zxz_group(), 2)
        self.assertEqual(len(ball.cells), 4)
        for base, relator, cycle in ball.cells:
            self.assertEqual(relator, 0)
            self.assertEqual(cycle[0], base)
            self.assertEqual(len(cycle), 4)

    def test_surface_group_radius_one(self):
        ball = cayley_ball(surface_group(2), 1)
        self.assertEqual(len(ball.vertices), 9)
        self.assertEqual(len(ball.edges), 8)

    def test_trivial_group(self):
        ball = cayley_ball(surface_group(0), 3)
        self.assertEqual(len(ball.vertices), 1)

    def test_neighbours(self):
        ball = cayley_ball(zxz_group(), 1)
        moves = ball.neighbours(0)
        self.assertEqual(len(moves), 4)
        self.assertEqual({(label, sign) for label, sign, _ in moves},
                         {("a", 1), ("a", -1), ("b", 1), ("b", -1)})

    def test_edges_are_consistent(self):
        """u * a = v for every recorded edge"""
        ball = cayley_ball(zxz_group(), 2)
        for source, label, target in ball.edges:
            product = ball.vertices[source] * GroupWord(((label, 1),))
            difference = product * ball.vertices[target].inverse()
            sums = difference.exponent_sums(("a", "b"))
            self.assertFalse(sums.any())

    def test_to_networkx(self):
        ball = cayley_ball(zxz_group(), 2)
        graph = ball.to_networkx()
        self.assertEqual(graph.number_of_nodes(), len(ball.vertices))
        self.assertEqual(graph.number_of_edges(), len(ball.edges))
        self.assertEqual(graph.graph["radius"], 2)
        self.assertEqual(len(graph.graph["cells"]), 4)

    def test_bad_radius(self):
        with self.assertRaises(ValueError):
            cayley_ball(zxz_group(), -1)

    def test_unsupported_presentation(self):
        presentation = Presentation(("a", "b"), (GroupWord.parse("aab"), GroupWord.parse("abb")))
        with self.assertRaises(UnsupportedPresentationError):
            cayley_ball(presentation, 1)


if __name__ == '__main__':
    unittest.main()
