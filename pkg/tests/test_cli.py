import io
import json
import subprocess
import sys

import jsonschema
import pytest

from riemann_homology.cli import dispatch, load_schema


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(command, *argv):
    code, out, err = run(command, *argv, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, load_schema(command))
    return code, data


def test_check_signature_text():
    assert run("check-signature", "2", "5", "10") == (
        0, "homology signature; group Z_10; genus 2\n", "")
    code, out, _ = run("check-signature", "2", "3", "4")
    assert code == 1 and out == "Maclachlan fails at j=2 (order 3)\n"


def test_check_signature_json():
    code, data = run_json("check-signature", "7", "7", "7")
    assert code == 0
    assert data["invariant_factors"] == [7, 7] and data["genus"] == 15 and data["order"] == 49
    code, data = run_json("check-signature", "2", "3", "4")
    assert code == 1 and data["genus"] is None and data["failing_index"] == 2


def test_homology_group_text_and_json_agree():
    code, out, _ = run("homology-group", "2", "5", "10")
    assert code == 0 and out == "group Z_10; invariant factors [10]; order 10; genus 2\n"
    code, data = run_json("homology-group", "2", "5", "10")
    assert data == {"signature": [2, 5, 10], "invariant_factors": [10], "order": 10, "genus": 2}


def test_reordering_is_noted_on_stderr():
    code, out, err = run("genus", "10", "2", "5")
    assert code == 0 and out == "2\n" and "reordered" in err


def test_genus_errors():
    code, _, err = run("genus", "2", "3", "7")
    assert code == 1 and "non-integral" in err
    code, _, err = run("genus", "2", "2", "2", "2")
    assert code == 1 and "Euclidean" in err


def test_genus_json():
    assert run_json("genus", "2", "8", "8") == (0, {"signature": [2, 8, 8], "genus": 3})


def test_orbifold():
    code, out, _ = run("orbifold", "2", "8", "8")
    assert code == 0 and out == "genus 3; 8 points of order 4\n"
    code, data = run_json("orbifold", "2", "2", "3", "3")
    assert data["cone_classes"] == [{"points": 4, "order": 2}, {"points": 6, "order": 3}]


def test_cover():
    code, out, _ = run("cover", "2", "5", "10")
    assert code == 0 and "H_A/K_A = Z_10" in out
    code, data = run_json("cover", "7", "7", "7")
    assert data["invariant_factors"] == [7, 7] and data["mu"] == 7
    code, _, err = run("cover", "2", "3", "4")
    assert code == 1 and "Maclachlan" in err


def test_fermat():
    code, out, _ = run("fermat", "--k", "5", "--n", "3", "--emit-curve", "--lambdas", "-1")
    assert code == 0
    assert "genus 76" in out and "-x_1^5 + x_2^5 + x_4^5 = 0" in out
    code, data = run_json("fermat", "--k", "7", "--n", "2")
    assert data["genus"] == 15 and data["group_order"] == 49 and "curve" not in data
    code, data = run_json("fermat", "--k", "3", "--n", "4", "--emit-curve", "--lambdas", "2", "t")
    assert data["curve"]["branch_values"] == ["inf", "0", "1", "2", "t"]


def test_fermat_usage_errors():
    assert run("fermat", "--k", "2", "--n", "2")[0] == 2
    assert run("fermat", "--k", "5", "--n", "3", "--emit-curve")[0] == 2
    assert run("fermat", "--k", "5", "--n", "3", "--emit-curve", "--lambdas", "1")[0] == 2


def test_uniqueness():
    code, out, _ = run("uniqueness", "--k-max", "12", "--n-max", "4")
    assert code == 0 and out.endswith("2 same-genus pairs, 0 feasible\n")
    code, data = run_json("uniqueness", "--k-max", "6", "--n-max", "3")
    assert code == 0 and len(data) == 1 and data[0]["genus"] == 10
    assert run("uniqueness", "--k-max", "2", "--n-max", "3")[0] == 2


def test_diophantine():
    code, data = run_json("diophantine", "--p-max", "50")
    assert code == 0 and data["ok"]
    assert [e["crossover"] for e in data["equations"]] == [2, 10]
    code, out, _ = run("diophantine", "--p-max", "50")
    assert "left side larger from p=10" in out
    assert run("diophantine", "--p-max", "5")[0] == 1
    assert run("diophantine", "--p-max", "0")[0] == 2


def test_enumerate_formats():
    code, data = run_json("enumerate", "--genus-min", "2", "--genus-max", "2")
    assert code == 0 and sorted(d["signature"] for d in data) == [[2, 2, 3, 3], [2, 5, 10],
                                                                  [2, 6, 6]]
    code, out, _ = run("enumerate", "--genus-min", "2", "--genus-max", "2", "--format", "csv")
    assert out.splitlines()[0].startswith("genus,signature")
    assert len(out.splitlines()) == 4
    code, out, _ = run("enumerate", "--genus-min", "3", "--genus-max", "3")
    assert "genus 3: (0;4,4,4) -> Z_4 x Z_4 (order 16) [Fermat]" in out
    assert run("enumerate", "--genus-min", "3", "--genus-max", "2")[0] == 2


def test_fixtures():
    code, data = run_json("fixtures")
    assert code == 0 and len(data) == 12 and all(d["ok"] for d in data)
    code, out, _ = run("fixtures")
    assert out.count("ok  ") == 12


@pytest.mark.parametrize("argv", [[], ["nonsense"], ["genus"], ["genus", "2", "x", "3"],
                                  ["genus", "2", "3"], ["genus", "1", "3", "3"],
                                  ["enumerate", "--genus-min", "2"],
                                  ["genus", "2", "5", "10", "--format", "xml"]])
def test_usage_errors_exit_two(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err


def test_help_exits_zero(capsys):
    assert dispatch(["--help"]) == 0


def test_every_command_has_a_schema():
    for name in ["check-signature", "homology-group", "genus", "orbifold", "cover", "fermat",
                 "uniqueness", "diophantine", "enumerate", "fixtures"]:
        jsonschema.Draft202012Validator.check_schema(load_schema(name))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "riemann_homology", "homology-group",
                           "2", "5", "10"], capture_output=True, text=True)
    assert proc.returncode == 0 and "Z_10" in proc.stdout
