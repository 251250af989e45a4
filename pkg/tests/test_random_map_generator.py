import unittest
import random
import sys
import os

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from hypothesis import given, settings
from hypothesis import strategies as st

from src.ribbon.ribbon_map import from_rotation_lists, is_connected, sphere
from src.ribbon.surface import euler_characteristic, genus, num_faces, petal
from src.utils.random_map_generator import insert_edge, random_filling_map, split_vertex


class TestInverseMoves(unittest.TestCase):
    def test_insert_edge_adds_a_face(self):
        """Inserting an edge inside a face splits it in two"""
        rng = random.Random(7)
        current = petal(1)
        labels, rotations = insert_edge(current, rng)
        result = from_rotation_lists(labels, rotations)
        self.assertEqual(result.num_edges, current.num_edges + 1)
        self.assertEqual(num_faces(result), num_faces(current) + 1)
        self.assertEqual(result.num_vertices, current.num_vertices)

    def test_split_vertex_adds_a_vertex(self):
        rng = random.Random(7)
        current = petal(2)
        labels, rotations = split_vertex(current, rng)
        result = from_rotation_lists(labels, rotations)
        self.assertEqual(result.num_vertices, current.num_vertices + 1)
        self.assertEqual(num_faces(result), num_faces(current))
        self.assertEqual(genus(result), 2)

    def test_moves_on_sphere(self):
        rng = random.Random(0)
        loop = from_rotation_lists(*insert_edge(sphere(), rng))
        self.assertEqual((loop.num_vertices, loop.num_edges, num_faces(loop)), (1, 1, 2))
        segment = from_rotation_lists(*split_vertex(sphere(), rng))
        self.assertEqual((segment.num_vertices, segment.num_edges, num_faces(segment)), (2, 1, 1))

    def test_new_labels_are_fresh(self):
        rng = random.Random(1)
        labels, _ = insert_edge(petal(1), rng)
        self.assertEqual(labels, ["a", "b", "x1"])


class TestRandomFillingMap(unittest.TestCase):
    def test_zero_moves_is_petal(self):
        self.assertEqual(random_filling_map(2, 0, seed=5), petal(2))

    def test_seed_is_deterministic(self):
        self.assertEqual(random_filling_map(2, 15, seed=42), random_filling_map(2, 15, seed=42))

    @given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=30),
           st.integers(min_value=0, max_value=2 ** 31))
    @settings(max_examples=100, deadline=None)
    def test_genus_is_preserved(self, g, moves, seed):
        """Every inverse move keeps the Euler characteristic and connectivity"""
        ribbon_map = random_filling_map(g, moves, seed)
        self.assertEqual(genus(ribbon_map), g)
        self.assertEqual(euler_characteristic(ribbon_map), 2 - 2 * g)
        self.assertTrue(is_connected(ribbon_map))
        self.assertEqual(ribbon_map.num_edges, 2 * g + moves)


if __name__ == '__main__':
    unittest.main()
