import json
import subprocess
import sys

import pytest

from linkhomotopy.cli import run
from linkhomotopy.schemas import validate


def j(argv):
    status, out = run(argv + ["--json"])
    return status, json.loads(out)


class TestVerbs:
    def test_mu_table(self):
        status, out = run(["mu", "-n", "3", "[t1,t2]"])
        assert status == 0
        assert "mu(1,2;3) = 1" in out.splitlines()

    def test_mu_degree_cap(self):
        status, doc = j(["mu", "-n", "4", "--degree", "1", "t1 t2"])
        validate("mu_table", doc)
        assert [e["I"] for e in doc["mu"]] == [[1], [2], [3]]

    def test_brunnian_false(self):
        status, out = run(["brunnian", "-n", "4", "t1"])
        assert status == 1 and out == "false (witness j=2)"
        status, doc = j(["brunnian", "-n", "4", "t1"])
        validate("brunnian", doc)
        assert doc["brunnian"] is False and doc["witness"] == 2

    def test_brunnian_true(self):
        status, doc = j(["brunnian", "-n", "4", "[t1,t3,t2]"])
        assert status == 0 and doc["witness"] is None

    def test_nf(self):
        status, doc = j(["nf", "-n", "3", "t1 t2 t1' t2'"])
        validate("normal_form", doc)
        assert doc["terms"] == [{"I": [1, 2], "sigma": [2], "e": "1"}]

    def test_kappa(self):
        status, doc = j(["kappa", "-n", "4", "[t1,t2,t3]^2 [t1,t3,t2]^-1"])
        assert status == 0
        validate("kappa", doc)
        assert [e["value"] for e in doc["kappa"]] == ["2", "-1"]

    def test_kappa_non_brunnian(self):
        status, out = run(["kappa", "-n", "4", "t1"])
        assert status == 1 and out.startswith("error:")

    def test_dims(self):
        status, doc = j(["dims", "-n", "5"])
        validate("dims", doc)
        assert status == 0
        assert [r["rank"] for r in doc["quotient_rank"]] == ["4", "6", "8", "6"]
        assert doc["btf_kernel_rank"] == doc["multilinear_dim"] == "6"

    def test_fourT(self):
        status, doc = j(["fourT", "-n", "4"])
        validate("fourT", doc)
        assert status == 0 and doc["holds"] and doc["instances"] == 48

    def test_verify(self):
        status, doc = j(["verify", "-n", "4", "--trials", "50", "--seed", "7"])
        validate("verify", doc)
        assert status == 0
        assert doc["failures"] == [] and doc["ok"]
        assert "elapsed_ms" not in doc

    def test_verify_timing_flag(self):
        status, doc = j(["verify", "-n", "3", "--trials", "2", "--timing"])
        assert status == 0 and doc["elapsed_ms"] >= 0

    def test_file_input(self, tmp_path):
        p = tmp_path / "w.txt"
        p.write_text("[t1,t2]\n")
        assert run(["mu", "-n", "3", "--file", str(p)]) == run(["mu", "-n", "3", "[t1,t2]"])


class TestErrors:
    def test_parse_error_position(self):
        status, out = run(["mu", "-n", "4", "[t1,t2 t3"])
        assert status == 2
        assert "position 9" in out
        assert out.splitlines()[-1] == "  " + " " * 9 + "^"

    def test_generator_out_of_range(self):
        status, out = run(["nf", "-n", "3", "t3"])
        assert status == 2 and "out of range" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ["mu", "-n", "1", "t1"],
            ["mu", "-n", "3", "--degree", "0", "t1"],
            ["mu", "-n", "3"],
            ["verify", "-n", "7"],
            ["dims", "-n", "3", "t1"],
            ["bogus", "-n", "3"],
            ["mu", "t1"],
            ["mu", "-n", "3", "--file", "/nonexistent/word.txt"],
        ],
    )
    def test_usage_errors(self, argv):
        assert run(argv)[0] == 2


class TestDeterminism:
    def test_verify_byte_identical(self):
        argv = ["verify", "-n", "3", "--trials", "10", "--seed", "11", "--json"]
        assert run(argv) == run(argv)

    def test_process_entry_point(self):
        cmd = [sys.executable, "-m", "linkhomotopy", "kappa", "-n", "4", "--json", "[t1,t3,t2]"]
        a = subprocess.run(cmd, capture_output=True, text=True)
        b = subprocess.run(cmd, capture_output=True, text=True)
        assert a.returncode == 0 and a.stdout == b.stdout
        validate("kappa", json.loads(a.stdout))
