"""Exit codes, text output and JSON schema conformance of the peirce-lab CLI.

Usage: cli_test.py PATH_TO_PEIRCE_LAB PATH_TO_DOCS_DIR
"""

import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
import referencing

BINARY = None
DOCS = None


def load_registry():
    resources = []
    for name in ("report", "identity", "algebra"):
        schema = json.loads((DOCS / f"{name}.schema.json").read_text())
        resources.append((f"{name}.schema.json", referencing.Resource.from_contents(schema)))
    return referencing.Registry().with_resources(resources)


def run(*args, env=None, stdin=None):
    full_env = dict(os.environ)
    full_env.pop("PEIRCE_LAB_MAX_DEGREE", None)
    full_env.update(env or {})
    return subprocess.run([str(BINARY), *args], capture_output=True, text=True,
                          env=full_env, input=stdin, timeout=120)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.registry = load_registry()
        cls.validators = {
            name: jsonschema.Draft202012Validator(
                {"$ref": f"{name}.schema.json"}, registry=cls.registry)
            for name in ("report", "identity", "algebra")
        }
        cls.tmp = tempfile.TemporaryDirectory()

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def write(self, name, payload):
        path = pathlib.Path(self.tmp.name) / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload))
        return str(path)

    def expect(self, args, code, env=None, stdin=None):
        result = run(*args, env=env, stdin=stdin)
        self.assertEqual(result.returncode, code,
                         f"{args}: stdout={result.stdout!r} stderr={result.stderr!r}")
        return result

    def report(self, args, code=0, env=None):
        result = self.expect([*args, "--json"], code, env=env)
        data = json.loads(result.stdout)
        self.validators["report"].validate(data)
        # Re-serializing and re-parsing reproduces the document.
        self.assertEqual(json.loads(json.dumps(data)), data)
        if code != 0 and "error" in data:
            self.assertEqual(data["exit_code"], code)
        return data

    def test_poly(self):
        self.assertEqual(self.expect(["poly", "z^[4]"], 0).stdout.strip(), "8*t^3")
        data = self.report(["poly", "z^[4]"])
        self.assertEqual(data["results"]["peirce_poly"]["text"], "8*t^3")
        data = self.report(["poly", "--catalog", "jordan_power_assoc"])
        self.assertEqual(data["results"]["peirce_poly"]["text"], "2*t^3 - 3*t^2 + t")

    def test_spectrum(self):
        out = self.expect(["spectrum", "--catalog", "hsiang"], 0).stdout
        self.assertIn("roots: -1 (simple), -1/2 (simple), 1/2 (simple)", out)
        self.assertIn("degenerate: true",
                      self.expect(["spectrum", "--catalog", "elduque_labra"], 0).stdout)
        data = self.report(["spectrum", "--catalog", "hsiang"])
        roots = [(r["root"], r["multiplicity"]) for r in data["results"]["roots"]]
        self.assertEqual(roots, [("-1", 1), ("-1/2", 1), ("1/2", 1)])

    def test_symbol(self):
        self.assertEqual(self.expect(["symbol", "z^2*z^2"], 0).stdout.strip(), "4*p + 8*a*b")
        self.assertEqual(self.expect(["symbol", "z"], 0).stdout.strip(), "0")
        data = self.report(["symbol", "--catalog", "hsiang"])
        terms = {(t["a"], t["b"], t["p"]): t["coeff"] for t in data["results"]["symbol"]["terms"]}
        expected = {(2, 0, 0): "8", (0, 2, 0): "8", (0, 0, 2): "8", (1, 1, 0): "8",
                    (1, 0, 1): "8", (0, 1, 1): "8", (1, 0, 0): "4", (0, 1, 0): "4",
                    (0, 0, 1): "4", (0, 0, 0): "-6"}
        self.assertEqual(terms, expected)

    def test_fusion(self):
        data = self.report(["fusion", "--catalog", "hsiang", "--mode", "metrized"])
        table = {(e["lambda"], e["mu"]): set(e["allowed"]) for e in data["results"]["entries"]}
        expected = {
            ("-1", "-1"): {"1"}, ("-1", "-1/2"): {"1/2"}, ("-1", "1/2"): {"-1/2", "1/2"},
            ("-1/2", "-1/2"): {"1", "-1/2"}, ("-1/2", "1/2"): {"-1", "1/2"},
            ("1/2", "1/2"): {"1", "-1", "-1/2"},
        }
        for (lam, mu), allowed in expected.items():
            self.assertEqual(table[(lam, mu)], allowed)
            self.assertEqual(table[(mu, lam)], allowed)
        out = self.expect(["fusion", "--catalog", "hsiang", "--mode", "metrized"], 0).stdout
        self.assertIn("assumes:", out)
        data = self.report(["fusion", "--catalog", "jordan_power_assoc"])
        table = {(e["lambda"], e["mu"]): set(e["allowed"]) for e in data["results"]["entries"]}
        self.assertEqual(table[("0", "1/2")], {"1/2", "1"})
        self.report(["fusion", "--catalog", "elduque_labra"], code=3)
        self.report(["fusion", "--catalog", "principal_train", "--params", "gamma=1:0:0:-1"],
                    code=3)
        self.report(["fusion", "--catalog", "hsiang", "--mode", "bogus"], code=2)

    def test_enumerate(self):
        data = self.report(["enumerate", "8"])
        self.assertEqual(data["results"]["count"], 23)
        self.report(["enumerate", "15"], code=2)
        self.report(["enumerate", "0"], code=2)
        data = self.report(["enumerate", "15"], env={"PEIRCE_LAB_MAX_DEGREE": "15"})
        self.assertEqual(data["results"]["count"], 4850)

    def test_catalog(self):
        data = self.report(["catalog", "list"])
        names = {e["name"] for e in data["results"]["identities"]}
        self.assertEqual(names, {"jordan_power_assoc", "bernstein", "pseudo_composition",
                                 "walcher", "hsiang", "principal_train", "plenary_train",
                                 "nourigat_varro", "elduque_labra"})
        for name in sorted(names):
            data = self.report(["poly", "--catalog", name])
            self.validators["identity"].validate(data["input"]["identity"])
        self.report(["poly", "--catalog", "nonexistent"], code=2)
        self.report(["poly", "--catalog", "walcher", "--params", "a=1,b=1"], code=3)
        self.report(["poly", "--catalog", "hsiang", "--params", "q=1"], code=3)

    def test_verify(self):
        data = self.report(["verify", "--builder", "hsiang_sym3", "--catalog", "hsiang",
                            "--idempotent", "0"])
        self.assertTrue(data["results"]["passed"])
        statuses = {c["name"]: c["status"] for c in data["results"]["checks"]}
        self.assertTrue(all(s == "pass" for s in statuses.values()), statuses)
        self.assertIn("dimension_constraints", statuses)
        data = self.report(["verify", "--builder", "hsiang_sym3", "--catalog", "hsiang",
                            "--mode", "metrized"])
        self.assertTrue(data["results"]["passed"])
        data = self.report(["verify", "--builder", "jordan_sym2", "--catalog", "hsiang"], code=1)
        statuses = {c["name"]: c["status"] for c in data["results"]["checks"]}
        self.assertEqual(statuses["identity"], "fail")
        self.report(["verify", "--builder", "jordan_sym2", "--catalog", "jordan_power_assoc"])
        self.report(["verify", "--builder", "jordan_sym2", "--catalog", "bernstein"], code=2)
        self.report(["verify", "--builder", "jordan_sym2", "--catalog", "hsiang",
                     "--idempotent", "9"], code=2)
        self.report(["verify", "--builder", "nonexistent", "--catalog", "hsiang"], code=2)

    def test_verify_algebra_file(self):
        # Sym(2) Jordan algebra on E11, E22, E12 + E21.
        algebra = {
            "name": "sym2_file",
            "dim": 3,
            "structure": [
                [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "1/2"]],
                [["0", "0", "0"], ["0", "1", "0"], ["0", "0", "1/2"]],
                [["0", "0", "1/2"], ["0", "0", "1/2"], ["1", "1", "0"]],
            ],
            "idempotents": [["1", "0", "0"]],
        }
        self.validators["algebra"].validate(algebra)
        path = self.write("sym2.json", algebra)
        data = self.report(["verify", "--algebra", path, "--catalog", "jordan_power_assoc"])
        self.assertTrue(data["results"]["passed"])
        eigen = [e["eigenvalue"] for e in data["results"]["decomposition"]["eigenspaces"]]
        self.assertEqual(eigen, ["0", "1/2", "1"])

        self.report(["verify", "--algebra", self.write("bad.json", "{not json"),
                     "--catalog", "hsiang"], code=2)
        self.report(["verify", "--algebra", self.write("shape.json", {"dim": 2, "structure": []}),
                     "--catalog", "hsiang"], code=2)
        noncommutative = dict(algebra)
        noncommutative["structure"] = [row[:] for row in algebra["structure"]]
        noncommutative["structure"][0][1] = ["1", "0", "0"]
        self.report(["verify", "--algebra", self.write("nc.json", noncommutative),
                     "--catalog", "hsiang"], code=2)

    def test_identity_file_round_trip(self):
        for name in ("hsiang", "bernstein", "walcher", "elduque_labra"):
            first = self.report(["spectrum", "--catalog", name])
            identity = first["input"]["identity"]
            path = self.write(f"{name}.json", identity)
            second = self.report(["spectrum", "--identity", path])
            self.assertEqual(second["results"], first["results"])
            self.assertEqual(second["input"]["digest"], first["input"]["digest"])
            self.assertEqual(second["input"]["identity"], identity)
        piped = self.expect(["poly", "--identity", "-", "--json"], 0,
                            stdin=json.dumps(identity))
        self.validators["report"].validate(json.loads(piped.stdout))

    def test_input_errors(self):
        self.report(["poly", "z^"], code=2)
        self.report(["poly", "z^0"], code=2)
        self.report(["symbol", "(z"], code=2)
        zero_sum = {"terms": [{"coeff": "1", "monomial": "z^2"}, {"coeff": "-2", "monomial": "z"}]}
        self.validators["identity"].validate(zero_sum)
        self.report(["spectrum", "--identity", self.write("zs.json", zero_sum)], code=3)
        self.report(["spectrum", "--identity", self.write("bad_id.json", {"terms": 1})], code=2)
        self.report(["spectrum", "--identity", "/nonexistent/file.json"], code=2)
        self.expect(["spectrum"], 2)
        self.expect(["frobnicate"], 2)
        self.expect([], 2)


def main():
    global BINARY, DOCS
    if len(sys.argv) < 3:
        print(__doc__, file=sys.stderr)
        return 2
    BINARY = pathlib.Path(sys.argv[1]).resolve()
    DOCS = pathlib.Path(sys.argv[2]).resolve()
    program = unittest.main(argv=[sys.argv[0], "-v"], exit=False)
    return 0 if program.result.wasSuccessful() else 1


if __name__ == "__main__":
    sys.exit(main())
