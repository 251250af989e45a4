import unittest
import random
import sys
import os

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import EmptyMapError
from src.ribbon.isomorphism import DartBijection, are_isomorphic, canonical_encoding
from src.ribbon.ribbon_map import from_rotation_lists, rotation_tokens, sphere
from src.ribbon.surface import petal
from src.utils.random_map_generator import random_filling_map


def theta_map():
    return from_rotation_lists(["e1", "e2", "e3"], [["e1+", "e2+", "e3+"], ["e1-", "e3-", "e2-"]])


def relabelled(ribbon_map, prefix="r"):
    """Same map with new labels, flipped edge directions and reversed vertex order"""
    names = {label: f"{prefix}{k}" for k, label in enumerate(ribbon_map.edge_labels)}
    flip = {"+": "-", "-": "+"}
    rotations = []
    for rotation in reversed(rotation_tokens(ribbon_map)):
        rotations.append([names[token[:-1]] + flip[token[-1]] for token in rotation])
    return from_rotation_lists(list(reversed(list(names.values()))), rotations)


def random_relabelling(ribbon_map, rng):
    """Random label names, edge order, edge directions, vertex order and rotation starts"""
    names = dict(zip(ribbon_map.edge_labels,
                     (f"x{n}" for n in rng.sample(range(1000), ribbon_map.num_edges))))
    flipped = {label for label in ribbon_map.edge_labels if rng.random() < 0.5}
    rotations = []
    for rotation in rotation_tokens(ribbon_map):
        tokens = []
        for token in rotation:
            label, sign = token[:-1], token[-1]
            if label in flipped:
                sign = "-" if sign == "+" else "+"
            tokens.append(names[label] + sign)
        shift = rng.randrange(len(tokens)) if tokens else 0
        rotations.append(tokens[shift:] + tokens[:shift])
    rng.shuffle(rotations)
    labels = list(names.values())
    rng.shuffle(labels)
    return from_rotation_lists(labels, rotations)


class TestIsomorphism(unittest.TestCase):
    def test_relabelled_theta(self):
        first = theta_map()
        second = relabelled(first)
        bijection = are_isomorphic(first, second)
        self.assertIsNotNone(bijection)
        self.assertTrue(bijection.verify(first, second))

    def test_wedges_differ(self):
        """Same underlying graph, different cyclic orders"""
        three_faces = from_rotation_lists(["a", "b"], [["a+", "a-", "b+", "b-"]])
        one_face = from_rotation_lists(["a", "b"], [["a+", "b+", "a-", "b-"]])
        self.assertIsNone(are_isomorphic(three_faces, one_face))

    def test_different_sizes(self):
        self.assertIsNone(are_isomorphic(petal(1), petal(2)))
        self.assertIsNone(are_isomorphic(theta_map(), sphere()))

    def test_spheres(self):
        self.assertIsNotNone(are_isomorphic(sphere(), sphere()))

    def test_verify_rejects_wrong_bijection(self):
        ribbon_map = theta_map()
        identity = DartBijection(tuple(range(ribbon_map.num_darts)))
        self.assertTrue(identity.verify(ribbon_map, ribbon_map))
        swapped = DartBijection((1, 0) + tuple(range(2, ribbon_map.num_darts)))
        self.assertFalse(swapped.verify(ribbon_map, ribbon_map))

    @given(st.integers(min_value=0, max_value=3), st.integers(min_value=1, max_value=12),
           st.integers(min_value=0, max_value=10000))
    @settings(max_examples=100, deadline=None)
    def test_random_map_isomorphic_to_relabelling(self, g, moves, seed):
        ribbon_map = random_filling_map(g, moves, seed)
        other = relabelled(ribbon_map)
        bijection = are_isomorphic(ribbon_map, other)
        self.assertIsNotNone(bijection)
        self.assertTrue(bijection.verify(ribbon_map, other))


class TestCanonicalEncoding(unittest.TestCase):
    def test_invariant_under_random_relabellings(self):
        """200 random relabellings per map keep the encoding and verify as isomorphic"""
        rng = random.Random(9)
        maps = [theta_map(), petal(2)]
        maps += [random_filling_map(g, moves, seed) for seed, (g, moves) in enumerate(
            [(0, 6), (1, 5), (1, 9), (2, 4), (2, 8), (3, 3)])]
        for ribbon_map in maps:
            expected = canonical_encoding(ribbon_map)
            for _ in range(200):
                other = random_relabelling(ribbon_map, rng)
                self.assertEqual(canonical_encoding(other), expected)
                bijection = are_isomorphic(ribbon_map, other)
                self.assertIsNotNone(bijection)
                self.assertTrue(bijection.verify(ribbon_map, other))

    def test_equal_for_isomorphic_maps(self):
        ribbon_map = theta_map()
        self.assertEqual(canonical_encoding(ribbon_map), canonical_encoding(relabelled(ribbon_map)))

    def test_differs_for_different_maps(self):
        three_faces = from_rotation_lists(["a", "b"], [["a+", "a-", "b+", "b-"]])
        self.assertNotEqual(canonical_encoding(three_faces), canonical_encoding(petal(1)))

    def test_sphere_has_no_encoding(self):
        with self.assertRaises(EmptyMapError):
            canonical_encoding(sphere())


if __name__ == '__main__':
    unittest.main()
