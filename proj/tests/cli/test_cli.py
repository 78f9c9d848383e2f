"""End-to-end checks of the fatpoint3 command line."""

import json
import pathlib
import subprocess
import sys
import unittest

import jsonschema
import referencing

CLI = None
SCHEMAS = None


def run(*args, check_code=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)
    if check_code is not None and proc.returncode != check_code:
        raise AssertionError(
            f"{args}: exit {proc.returncode}, expected {check_code}\n{proc.stdout}\n{proc.stderr}"
        )
    return proc


def validator(name):
    registry = referencing.Registry()
    for path in SCHEMAS.glob("*.json"):
        schema = json.loads(path.read_text())
        registry = registry.with_resource(schema["$id"], referencing.Resource.from_contents(schema))
    schema = json.loads((SCHEMAS / name).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema, registry=registry)


def cremona(system, quad):
    d, mults = system["degree"], list(system["mults"])
    mults += [0] * (max(quad) - len(mults))
    k = 2 * d - sum(mults[i - 1] for i in quad)
    for i in quad:
        mults[i - 1] += k
    return {"degree": d + k, "mults": mults}


def replay(trace):
    current = None
    for step in trace:
        if current is not None:
            assert step["before"] == current, (step, current)
        before = step["before"]
        if step["kind"] == "cremona":
            image = cremona(before, step["indices"])
            image["mults"] = sorted((m for m in image["mults"] if m != 0), reverse=True)
        elif step["kind"] == "remove_component":
            (i,) = step["indices"]
            assert before["mults"][i - 1] == -step["alpha"]
            image = {"degree": before["degree"],
                     "mults": before["mults"][: i - 1] + before["mults"][i:]}
        else:
            mults = list(before["mults"])
            for i in step["indices"]:
                mults[i - 1] -= 1
            image = {"degree": before["degree"] - 2,
                     "mults": sorted((m for m in mults if m != 0), reverse=True)}
        assert image == step["after"], (step, image)
        current = image
    return current


class Dim(unittest.TestCase):
    def test_trace_of_six_sevenfold_points(self):
        out = run("dim", "12 7^6", "--trace").stdout
        self.assertIn("dimension: 0", out)
        arrows = [line.strip() for line in out.splitlines() if "->" in line]
        self.assertEqual(arrows, [
            "12 7^6 ->(i) 8 7^2 3^4",
            "8 7^2 3^4 ->(i) 4 3^4 -1^2",
            "4 3^4 -1^2 ->(ii) 4 3^4",
            "4 3^4 ->(i) 0 -1^4",
            "0 -1^4 ->(ii) 0",
        ])

    def test_special_example(self):
        out = run("dim", "10 6^5").stdout
        self.assertIn("dimension: 15", out)
        self.assertIn("special: yes", out)

    def test_trivial(self):
        self.assertIn("dimension: 0", run("dim", "0").stdout)

    def test_json_validates_and_replays(self):
        check = validator("dim.schema.json")
        for literal in ["7 4^6", "12 7^6", "10 6^5", "16 11 7^8", "3 3^3", "8 4^9", "5 3^8",
                        "0", "22 10^9", "9 5^7 2^3", "30 17^5 4^6"]:
            doc = json.loads(run("dim", literal, "--json").stdout)
            check.validate(doc)
            if doc["trace"]:
                self.assertEqual(replay(doc["trace"]), doc["final"], literal)

    def test_parse_error_names_token(self):
        proc = run("dim", "7 4^x", check_code=1)
        self.assertIn("4^x", proc.stderr)

    def test_literal_round_trip(self):
        for expanded, compact in [("7 4 4 4 4 4 4", "7 4^6"), ("5 4 4 2 2 2 2", "5 4^2 2^4"),
                                  ("16 11 7 7 7 7 7 7 7 7", "16 11 7^8")]:
            a = run("dim", expanded).stdout.splitlines()[0]
            b = run("dim", compact).stdout.splitlines()[0]
            self.assertEqual(a, b)
            self.assertEqual(a, f"system: {compact}")


class Oracle(unittest.TestCase):
    def test_examples(self):
        for literal, dim in [("16 11 7^8", 19), ("2 1^9", 0), ("3 3^3", 0)]:
            out = run("oracle", literal).stdout
            self.assertIn(f"dimension: {dim}", out)

    def test_json(self):
        check = validator("oracle.schema.json")
        doc = json.loads(run("oracle", "7 4^6", "--json", "--seeds", "5,6").stdout)
        check.validate(doc)
        self.assertEqual(doc["dimension"], 3)
        self.assertEqual(doc["h1"], 4)
        self.assertEqual(doc["seeds"], [5, 6])
        self.assertEqual(doc["cols"], 120)

    def test_prime_from_environment(self):
        import os
        env = dict(os.environ, FATPOINT3_PRIME="1000003")
        proc = subprocess.run([CLI, "oracle", "6 3^4", "--json"], capture_output=True, text=True,
                              env=env, check=True)
        self.assertEqual(json.loads(proc.stdout)["prime"], 1000003)

    def test_column_cap(self):
        run("oracle", "40 1", check_code=1)
        run("oracle", "40 1", "--max-cols", "20000")


class Verify(unittest.TestCase):
    def test_grid_has_no_mismatches(self):
        check = validator("verify.schema.json")
        doc = json.loads(run("verify", "--dmax", "10", "--mmax", "4", "--rmax", "10", "--json").stdout)
        check.validate(doc)
        self.assertEqual(doc["cells"], 440)
        self.assertEqual(doc["mismatches"], [])

    def test_empty_grid(self):
        proc = run("verify", "--dmax", "-1", "--json")
        doc = json.loads(proc.stdout)
        self.assertEqual(doc["cells"], 0)

    def test_mismatch_exit_code(self):
        proc = run("verify", "--dmax", "4", "--mmax", "2", "--rmax", "9", "--prime", "3",
                   "--seeds", "1", check_code=None)
        self.assertEqual(proc.returncode, 1)
        self.assertIn("prime", proc.stderr)
        proc = run("verify", "--dmax", "8", "--mmax", "4", "--r", "9", "--prime", "11",
                   "--seeds", "1", check_code=2)
        self.assertIn("no", proc.stdout)

    def test_homogeneous_nine_points(self):
        out = run("verify", "--homogeneous", "--r", "9", "--mmax", "6").stdout.splitlines()
        self.assertEqual(out[0].split("\t"),
                         ["d", "m", "r", "verdict", "conjectured_dim", "expected_dim", "oracle", "match"])
        seen = 0
        for line in out[1:]:
            d, m, r, verdict, conj, expected, oracle, match = line.split("\t")
            d, m = int(d), int(m)
            triple = 2 * (d - 2) * (d + 4) - 9 * (m - 1) * (m + 2)
            if d >= 2 * m:
                seen += 1
                self.assertEqual(verdict == "special", triple < 0, line)
            else:
                self.assertEqual(verdict, "empty", line)
            self.assertEqual(match, "yes", line)
        self.assertGreater(seen, 0)

    def test_homogeneous_json(self):
        check = validator("verify_homogeneous.schema.json")
        doc = json.loads(run("verify", "--homogeneous", "--rmax", "10", "--mmax", "3", "--json").stdout)
        check.validate(doc)
        self.assertEqual(doc["mismatches"], [])


class Transform(unittest.TestCase):
    def test_system(self):
        self.assertEqual(run("transform", "7 4^6", "1", "2", "3", "4").stdout.strip(),
                         "5 4 4 2 2 2 2")

    def test_zero_shift(self):
        self.assertEqual(run("transform", "2 1^4", "1", "2", "3", "4").stdout.strip(), "2 1 1 1 1")

    def test_line_to_twisted_cubic(self):
        out = run("transform", "--curve", "1 1 1 0 0 0 0", "3", "4", "5", "6").stdout.strip()
        self.assertEqual(out, "curve 3 1 1 1 1 1 1")

    def test_bad_indices(self):
        run("transform", "7 4^6", "1", "2", "3", "3", check_code=1)
        run("transform", "7 4^6", "1", "2", "3", check_code=1)
        run("transform", "7 4^6", "0", "1", "2", "3", check_code=1)

    def test_output_reparses(self):
        first = run("transform", "7 4^6", "1", "2", "3", "4").stdout.strip()
        # Normalization moved the four transformed points to positions 3..6.
        back = run("transform", first, "3", "4", "5", "6").stdout.strip()
        self.assertEqual(back, "7 4 4 4 4 4 4")


class Orbit(unittest.TestCase):
    def orbit(self, points, degree):
        check = validator("orbit.schema.json")
        doc = json.loads(run("orbit", "--points", str(points), "--max-degree", str(degree),
                             "--json").stdout)
        check.validate(doc)
        return {(c["degree"], tuple(c["mults"])): c for c in doc}

    def test_twisted_cubic(self):
        self.assertIn((3, (1,) * 6), self.orbit(6, 3))

    def test_no_quartic_on_eight_points(self):
        self.assertNotIn((4, (1,) * 8), self.orbit(8, 4))

    def test_lines_only(self):
        self.assertEqual(list(self.orbit(5, 1)), [(1, (1, 1))])

    def test_invariants_vanish(self):
        for entry in self.orbit(9, 12).values():
            self.assertEqual(entry["invariants"], [0, 0])

    def test_degree_cap_required(self):
        run("orbit", "--points", "6", check_code=1)


class Usage(unittest.TestCase):
    def test_missing_subcommand(self):
        run(check_code=1)

    def test_help(self):
        run("--help")


if __name__ == "__main__":
    CLI = sys.argv[1]
    SCHEMAS = pathlib.Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
