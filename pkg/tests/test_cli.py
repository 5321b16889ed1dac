import io
import json

import pytest

from binedge.cli import FullReport, main
from binedge import closed_form as cf


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    return code, json.loads(out), err


@pytest.mark.parametrize("m,n,expected", [
    (3, 2, dict(dim=6, depth=4, reg=2, multiplicity=6, pd=6, minimal_primes=3)),
    (3, 1, dict(dim=6, depth=5, reg=2, multiplicity=1, pd=3, minimal_primes=2)),
    (1, 1, dict(dim=3, depth=3, reg=1, multiplicity=2, pd=1, minimal_primes=1)),
])
def test_invariants(m, n, expected):
    code, d, err = run_json("invariants", "--m", str(m), "--n", str(n))
    assert code == 0 and err == ""
    for k, v in expected.items():
        assert d[k] == v


def test_invariants_schema_and_round_trip():
    code, d, _ = run_json("invariants", "--m", "2", "--n", "2")
    assert {"m", "n", "dim", "depth", "reg", "multiplicity", "pd", "minimal_primes",
            "hilbert_numerator", "denom_power", "betti", "deficiency"} <= d.keys()
    assert {"case", "indices", "rows"} <= d["deficiency"].keys()
    rep = FullReport.from_dict(d)
    assert rep == FullReport.build(2, 2)
    assert rep.to_dict() == d


def test_invariants_text():
    code, out, _ = run("invariants", "--m", "3", "--n", "2")
    assert code == 0
    assert "dim           6" in out


def test_swapped_input_is_reported():
    code, d, _ = run_json("invariants", "--m", "2", "--n", "3")
    assert (d["m"], d["n"], d["swapped"]) == (3, 2, True)
    code, out, _ = run("invariants", "--m", "2", "--n", "3")
    assert "swapped" in out


@pytest.mark.parametrize("m,n,dims", [(2, 2, [5, 4, 4]), (3, 1, [5, 6]), (1, 1, [3])])
def test_primes(m, n, dims):
    code, d, _ = run_json("primes", "--m", str(m), "--n", str(n))
    assert code == 0
    assert [p["dim"] for p in d["primes"]] == dims
    assert d["minimal_primes"] == len(dims)


@pytest.mark.parametrize("m,n,coeffs", [(2, 1, [1, 6, 19]), (1, 1, [1, 4, 9]), (2, 2, [1, 8, 32])])
def test_hilbert(m, n, coeffs):
    code, d, _ = run_json("hilbert", "--m", str(m), "--n", str(n), "--max-degree", "2", "--oracle")
    assert code == 0
    assert d["coefficients"] == coeffs
    assert d["oracle"] == coeffs and d["match"]


def test_hilbert_over_rationals():
    code, d, _ = run_json("hilbert", "--m", "2", "--n", "2", "--max-degree", "4", "--oracle", "--field", "0")
    assert code == 0 and d["match"] and d["field"] == 0


def test_betti_diagram():
    code, out, _ = run("betti", "--m", "2", "--n", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].split() == ["2:", ".", ".", "9", "8", "2"]
    code, out, _ = run("betti", "--m", "3", "--n", "1")
    assert out.splitlines()[-1].split() == ["2:", ".", ".", "4", "2"]
    code, d, _ = run_json("betti", "--m", "1", "--n", "1")
    assert d["betti"] == [[0, 0, 1], [1, 1, 1]]


def test_betti_oracle():
    code, d, _ = run_json("betti", "--m", "2", "--n", "2", "--oracle")
    assert code == 0 and d["match"] and d["diff"] == []
    assert d["oracle_betti"] == d["betti"]


@pytest.mark.parametrize("m,n,case,indices", [
    (7, 4, "generic(4.2)", [6, 8, 9, 12, 14]),
    (5, 4, "m=n+1(4.3)", [6, 7, 8, 10]),
    (2, 2, "small-special", None),
])
def test_deficiency(m, n, case, indices):
    code, d, _ = run_json("deficiency", "--m", str(m), "--n", str(n))
    assert code == 0
    assert (d["deficiency"]["case"], d["deficiency"]["indices"]) == (case, indices)
    assert cf.DeficiencyReport.from_dict(m, n, d["deficiency"]) == cf.deficiency_classification(m, n)


def test_deficiency_flags():
    code, d, _ = run_json("deficiency", "--m", "2", "--n", "2")
    assert (d["deficiency"]["cohen_macaulay"], d["deficiency"]["sequentially_cm"]) == (False, True)


def test_verify_passes():
    code, out, err = run("verify", "--max-size", "4", "--max-degree", "6")
    assert code == 0, err
    assert err == ""
    assert out.strip().endswith("all checks passed")
    assert out.count("[PASS]") == 10


def test_verify_json():
    code, d, _ = run_json("verify", "--max-size", "3", "--max-degree", "4")
    assert code == 0 and d["passed"]
    assert all(c["passed"] for c in d["checks"])


def test_verify_catches_wrong_betti():
    code, out, err = run("verify", "--max-size", "4", "--perturb-betti", "2", "2", "1")
    assert code == 1
    assert "VERIFICATION FAILED" in out
    assert "(2, 2)" in err


def test_verify_catches_wrong_coefficient():
    code, out, err = run("verify", "--max-size", "4", "--perturb-series", "3", "-1")
    assert code == 1
    assert "hilbert" in err


def test_verify_refuses_huge_sizes():
    code, out, err = run("verify", "--max-size", "40")
    assert code == 3
    assert out == ""
    assert "refused" in err
    code, d, _ = run_json("verify", "--max-size", "40")
    assert code == 3 and d["error"] == "too-large" and d["rows"] > d["bound"]


def test_oracle_respects_row_bound():
    code, out, err = run("hilbert", "--m", "3", "--n", "3", "--oracle", "--strand-row-bound", "50")
    assert code == 3 and "refused" in err


@pytest.mark.parametrize("argv", [
    ["invariants", "--m", "0", "--n", "1"],
    ["invariants", "--m", "2"],
    ["hilbert", "--m", "2", "--n", "1", "--field", "4", "--oracle"],
    ["verify", "--max-size", "1"],
    ["hilbert", "--m", "2", "--n", "1", "--max-degree", "-1"],
    ["nonsense"],
])
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert err
