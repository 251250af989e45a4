import unittest
import json
import os
import shutil
import sys
import tempfile

# Add project root to sys.path
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.cli.commands import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_USAGE_ERROR, dispatch, parse_group_spec
from src.errors import UsageError
from src.formats.graph_loader import parse_graph
from src.ribbon.surface import genus

MAPS_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'maps'))


def map_path(name):
    return os.path.join(MAPS_DIR, f"{name}.json")


class TestCommands(unittest.TestCase):
    def test_genus(self):
        result = dispatch(["genus", map_path("petal2")])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.payload, "genus: 2")

    def test_genus_json(self):
        result = dispatch(["genus", map_path("genus3_split"), "--json"])
        self.assertEqual(json.loads(result.payload), {"genus": 3})

    def test_global_json_flag(self):
        result = dispatch(["--json", "genus", map_path("theta")])
        self.assertEqual(json.loads(result.payload), {"genus": 0})

    def test_report(self):
        result = dispatch(["report", map_path("theta"), "--json"])
        data = json.loads(result.payload)
        self.assertEqual((data["V"], data["m"], data["F"], data["chi"]), (2, 3, 3, 2))

    def test_faces(self):
        result = dispatch(["faces", map_path("petal1")])
        self.assertEqual(result.payload, "face 0: a+ b+ a- b-")

    def test_classify(self):
        result = dispatch(["classify", map_path("petal2"), "--json"])
        data = json.loads(result.payload)
        self.assertEqual(data["genus"], 2)
        self.assertEqual(data["canonical_word"], "a b A B c d C D")
        self.assertEqual(data["trace"], [])

    def test_classify_sphere_text(self):
        result = dispatch(["classify", map_path("sphere")])
        self.assertEqual(result.payload.splitlines(), ["genus: 0", "word: S0", "moves: 0"])

    def test_validate(self):
        self.assertEqual(dispatch(["validate", map_path("wedge")]).payload, "ok")

    def test_validate_reports_all_issues(self):
        directory = tempfile.mkdtemp()
        try:
            path = os.path.join(directory, "bad.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"edges": ["a", "b"], "vertices": [{"rotation": ["a+", "a+"]}]}, f)
            result = dispatch(["validate", path, "--json"])
            self.assertEqual(result.exit_code, EXIT_DOMAIN_ERROR)
            data = json.loads(result.payload)
            self.assertFalse(data["ok"])
            self.assertGreaterEqual(len(data["issues"]), 3)
        finally:
            shutil.rmtree(directory)

    def test_iso(self):
        result = dispatch(["iso", map_path("petal1"), map_path("wedge"), "--json"])
        self.assertEqual(json.loads(result.payload), {"isomorphic": False, "bijection": None})
        result = dispatch(["iso", map_path("theta"), map_path("theta")])
        self.assertEqual(result.payload.splitlines()[0], "isomorphic")

    def test_pi1(self):
        result = dispatch(["pi1", map_path("petal1")])
        self.assertEqual(result.payload, "<a, b | a b A B>")

    def test_trivial(self):
        self.assertEqual(dispatch(["trivial", "--group", "zxz", "abAB"]).payload, "true")
        self.assertEqual(dispatch(["trivial", "--group", "free:2", "abAB"]).payload, "false")
        self.assertEqual(dispatch(["trivial", "--group", "surface:2", "a b A B c d C D"]).payload, "true")

    def test_homotopic(self):
        result = dispatch(["homotopic", map_path("petal1"), "a b", "b a"])
        self.assertEqual(result.payload, "true")
        result = dispatch(["homotopic", map_path("petal2"), "a b", "b a", "--json"])
        self.assertEqual(json.loads(result.payload), {"homotopic": False})

    def test_homotopic_single_letter_paths(self):
        """Paths of one multi-character label parse without spaces"""
        result = dispatch(["homotopic", map_path("theta"), "e1", "e2 e3' e2"])
        self.assertEqual(result.exit_code, EXIT_OK)
        self.assertEqual(result.payload, "true")
        result = dispatch(["homotopic", map_path("theta"), "e1 e2'", "1"])
        self.assertEqual(result.payload, "true")

    def test_cayley(self):
        result = dispatch(["cayley", "--group", "free:2", "--radius", "2"])
        self.assertEqual(result.payload.splitlines(), ["vertices: 17", "edges: 16", "cells: 0"])
        result = dispatch(["cayley", "--group", "zxz", "--radius", "2", "--json"])
        data = json.loads(result.payload)
        self.assertEqual(len(data["vertices"]), 13)
        self.assertEqual(len(data["cells"]), 4)

    def test_cayley_dot(self):
        result = dispatch(["cayley", "--group", "surface:2", "--radius", "1", "--dot"])
        self.assertTrue(result.payload.startswith("digraph"))
        nodes = [line for line in result.payload.splitlines() if "[label=" in line and "->" not in line]
        self.assertEqual(len(nodes), 9)

    def test_petal(self):
        result = dispatch(["petal", "1"])
        with open(map_path("petal1"), encoding="utf-8") as f:
            self.assertEqual(result.payload, f.read())

    def test_random(self):
        result = dispatch(["random", "--genus", "2", "--moves", "6", "--seed", "3"])
        self.assertEqual(result.exit_code, EXIT_OK)
        ribbon_map = parse_graph(result.payload)
        self.assertEqual(genus(ribbon_map), 2)
        self.assertEqual(ribbon_map.num_edges, 10)

    def test_refine(self):
        ribbon_map = parse_graph(dispatch(["refine", map_path("theta")]).payload)
        self.assertEqual(ribbon_map.num_vertices, 5)
        self.assertEqual(genus(ribbon_map), 0)

    def test_emit_dot(self):
        self.assertTrue(dispatch(["emit-dot", map_path("wedge")]).payload.startswith("graph"))


class TestExitCodes(unittest.TestCase):
    def test_missing_subcommand(self):
        self.assertEqual(dispatch([]).exit_code, EXIT_USAGE_ERROR)

    def test_unknown_option(self):
        result = dispatch(["genus", map_path("theta"), "--bogus"])
        self.assertEqual(result.exit_code, EXIT_USAGE_ERROR)
        self.assertTrue(result.payload.startswith("UsageError"))

    def test_bad_group(self):
        self.assertEqual(dispatch(["trivial", "--group", "bogus", "a"]).exit_code, EXIT_USAGE_ERROR)
        self.assertEqual(dispatch(["trivial", "--group", "free:x", "a"]).exit_code, EXIT_USAGE_ERROR)

    def test_missing_file(self):
        result = dispatch(["genus", map_path("does_not_exist")])
        self.assertEqual(result.exit_code, EXIT_DOMAIN_ERROR)
        self.assertTrue(result.payload.startswith("IOError"))

    def test_unknown_generator(self):
        result = dispatch(["trivial", "--group", "zxz", "abc"])
        self.assertEqual(result.exit_code, EXIT_DOMAIN_ERROR)
        self.assertTrue(result.payload.startswith("UnknownGenerator"))

    def test_broken_path(self):
        result = dispatch(["homotopic", map_path("theta"), "e1 e1", "1"])
        self.assertEqual(result.exit_code, EXIT_DOMAIN_ERROR)
        self.assertTrue(result.payload.startswith("EndpointMismatch"))

    def test_negative_radius(self):
        self.assertEqual(dispatch(["cayley", "--group", "zxz", "--radius", "-1"]).exit_code,
                         EXIT_USAGE_ERROR)

    def test_help(self):
        self.assertEqual(dispatch(["--help"]).exit_code, EXIT_OK)


class TestGroupSpec(unittest.TestCase):
    def test_specs(self):
        self.assertEqual(parse_group_spec("free:3").generators, ("a", "b", "c"))
        self.assertEqual(parse_group_spec("surface:1").genus_hint, 1)
        self.assertEqual(parse_group_spec("zxz").name, "zxz")

    def test_bad_specs(self):
        for text in ("zxz:1", "surface:-1", "torus", "free:"):
            with self.assertRaises(UsageError):
                parse_group_spec(text)


if __name__ == '__main__':
    unittest.main()
