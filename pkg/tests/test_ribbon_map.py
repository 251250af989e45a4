import unittest
import sys
import os

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import (
    DisconnectedError,
    DuplicateDartError,
    DuplicateLabelError,
    IndexOutOfRangeError,
    InvalidTokenError,
    IsolatedVertexError,
    MissingDartError,
    UnknownLabelError,
)
from src.ribbon.ribbon_map import (
    DartRef,
    degree,
    from_rotation_lists,
    refine,
    rotation_tokens,
    sphere,
    underlying_graph,
    validate_rotation_lists,
)
from src.ribbon.surface import genus, petal
from src.utils.random_map_generator import random_filling_map


def theta_map():
    return from_rotation_lists(["e1", "e2", "e3"], [["e1+", "e2+", "e3+"], ["e1-", "e3-", "e2-"]])


class TestConstruction(unittest.TestCase):
    def test_petal_counts(self):
        """petal(1) has one vertex and two edges"""
        ribbon_map = petal(1)
        self.assertEqual(ribbon_map.num_vertices, 1)
        self.assertEqual(ribbon_map.num_edges, 2)
        self.assertEqual(ribbon_map.num_darts, 4)

    def test_theta_endpoints(self):
        """Every edge of the theta graph joins vertex 0 to vertex 1"""
        ribbon_map = theta_map()
        self.assertEqual(ribbon_map.num_vertices, 2)
        for label in ribbon_map.edge_labels:
            dart = ribbon_map.dart_of(DartRef(label, 1))
            self.assertEqual(ribbon_map.tail(dart), 0)
            self.assertEqual(ribbon_map.head(dart), 1)
            self.assertFalse(ribbon_map.is_loop(label))

    def test_rotation_tokens_round_trip(self):
        """Canonical rotation tokens rebuild the same map"""
        ribbon_map = theta_map()
        rebuilt = from_rotation_lists(ribbon_map.edge_labels, rotation_tokens(ribbon_map))
        self.assertEqual(rebuilt, ribbon_map)

    def test_rotation_tokens_start_at_minimal_dart(self):
        """Rotations are rotated so that they start at their smallest dart"""
        ribbon_map = from_rotation_lists(["a", "b"], [["b-", "a+", "a-", "b+"]])
        self.assertEqual(rotation_tokens(ribbon_map), [["a+", "a-", "b+", "b-"]])

    def test_sphere_representative(self):
        """The sphere is one isolated vertex without edges"""
        ribbon_map = sphere()
        self.assertEqual(ribbon_map.num_vertices, 1)
        self.assertEqual(ribbon_map.num_edges, 0)
        self.assertTrue(ribbon_map.is_sphere_representative)
        self.assertEqual(from_rotation_lists([], [[]]), ribbon_map)

    def test_unicode_minus_token(self):
        """The unicode minus sign is accepted in dart tokens"""
        ribbon_map = from_rotation_lists(["a"], [["a+", "a−"]])
        self.assertEqual(ribbon_map.num_edges, 1)


class TestValidation(unittest.TestCase):
    def test_missing_dart(self):
        with self.assertRaises(MissingDartError):
            from_rotation_lists(["a", "b"], [["a+", "b+", "a-"]])

    def test_duplicate_dart(self):
        with self.assertRaises(DuplicateDartError):
            from_rotation_lists(["a"], [["a+", "a+", "a-"]])

    def test_unknown_label(self):
        with self.assertRaises(UnknownLabelError):
            from_rotation_lists(["a"], [["a+", "a-", "z+"]])

    def test_duplicate_label(self):
        with self.assertRaises(DuplicateLabelError):
            from_rotation_lists(["a", "a"], [["a+", "a-"]])

    def test_invalid_token(self):
        with self.assertRaises(InvalidTokenError):
            from_rotation_lists(["a"], [["a*", "a-"]])

    def test_isolated_vertex(self):
        with self.assertRaises(IsolatedVertexError):
            from_rotation_lists(["a"], [["a+", "a-"], []])

    def test_disconnected(self):
        with self.assertRaises(DisconnectedError):
            from_rotation_lists(["a", "b"], [["a+", "a-"], ["b+", "b-"]])

    def test_validation_error_is_value_error(self):
        with self.assertRaises(ValueError):
            from_rotation_lists(["a"], [["a+"]])

    def test_report_collects_every_issue(self):
        """validate_rotation_lists does not stop at the first problem"""
        report = validate_rotation_lists(["a", "b"], [["a+", "a+"]])
        self.assertFalse(report.ok)
        codes = [code for code, _ in report.issues]
        self.assertIn("DuplicateDart", codes)
        self.assertIn("MissingDart", codes)
        self.assertGreaterEqual(len(codes), 3)

    def test_report_for_valid_map(self):
        report = validate_rotation_lists(["a", "b"], [["a+", "b-", "a-", "b+"]])
        self.assertTrue(report.ok)

    def test_report_detects_disconnection(self):
        report = validate_rotation_lists(["a", "b"], [["a+", "a-"], ["b+", "b-"]])
        self.assertEqual([code for code, _ in report.issues], ["Disconnected"])


class TestOperations(unittest.TestCase):
    def test_star_out_of_range(self):
        with self.assertRaises(IndexOutOfRangeError):
            petal(1).star(5)

    def test_degree(self):
        """Loops count twice towards the degree"""
        self.assertEqual(degree(theta_map(), 0), 3)
        self.assertEqual(degree(petal(1), 0), 4)

    def test_underlying_graph(self):
        graph = underlying_graph(theta_map())
        self.assertEqual(graph.number_of_nodes(), 2)
        self.assertEqual(graph.number_of_edges(), 3)

    def test_refine_adds_midpoints(self):
        """Refinement adds one degree-2 vertex per edge and keeps the genus"""
        refined = refine(petal(1))
        self.assertEqual(refined.num_vertices, 3)
        self.assertEqual(refined.num_edges, 4)
        self.assertEqual(genus(refined), 1)
        for v in range(1, 3):
            self.assertEqual(degree(refined, v), 2)

    def test_refine_labels(self):
        refined = refine(theta_map())
        self.assertIn("e1_0", refined.edge_labels)
        self.assertIn("e1_1", refined.edge_labels)
        self.assertEqual(genus(refined), 0)

    def test_refine_sphere(self):
        self.assertEqual(refine(sphere()), sphere())

    def test_refine_theta(self):
        refined = refine(theta_map())
        self.assertEqual((refined.num_vertices, refined.num_edges), (5, 6))

    def test_sphere_degree(self):
        self.assertEqual(degree(sphere(), 0), 0)

    @given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=30),
           st.integers(min_value=0, max_value=10000))
    @settings(max_examples=100, deadline=None)
    def test_handshake_and_refine(self, g, moves, seed):
        """Degrees sum to 2m and refinement keeps the genus"""
        ribbon_map = random_filling_map(g, moves, seed)
        total = sum(degree(ribbon_map, v) for v in range(ribbon_map.num_vertices))
        self.assertEqual(total, 2 * ribbon_map.num_edges)
        for dart in range(ribbon_map.num_darts):
            self.assertEqual(ribbon_map.tail(ribbon_map.sigma(dart)), ribbon_map.tail(dart))
        self.assertEqual(genus(refine(ribbon_map)), g)


if __name__ == '__main__':
    unittest.main()
