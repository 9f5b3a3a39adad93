import json

import pytest

from ineqmeans.cli import dispatch


def run(*argv):
    return dispatch(list(argv))


def payload(result):
    assert result.exit_code in (0, 1), result.stderr
    return json.loads(result.stdout)


def test_means_eval():
    result = run("means", "eval", "--spec", "power:0", "--x", "4", "--y", "9")
    assert result.exit_code == 0
    assert payload(result)["value"] == 6.0


def test_means_eval_iterated_spec():
    result = run("means", "eval", "--spec", "iter:warith:0.5,0.5|power:0",
                 "--x", "1", "--y", "2")
    assert payload(result)["value"] == pytest.approx(1.4567910310469068, rel=1e-12)


def test_means_axioms_pass_and_fail_exit_codes():
    ok = run("means", "axioms", "--spec", "power:2", "--samples", "200", "--seed", "1")
    assert ok.exit_code == 0
    asym = run("means", "axioms", "--spec", "wgeom:0.7,0.3", "--samples", "200",
               "--seed", "1")
    assert asym.exit_code == 1
    assert json.loads(asym.stdout)["symmetry"]["status"] == "fail"


def test_means_h_check():
    ok = run("means", "h-check", "--spec", "power:0", "--grid", "0,0.5,1,2")
    assert ok.exit_code == 0
    bad = run("means", "h-check", "--spec", "wgeom:0.7,0.3", "--grid", "0,1,2")
    assert bad.exit_code == 1


def test_young_classify():
    result = run("young", "classify", "--x", "5", "--y", "130", "--p", "4")
    data = payload(result)
    assert data["winner"] == "standard"
    assert data["case"] == "both-above-one"


def test_young_critical_paper_value():
    result = run("young", "critical", "--x", "0.5", "--p", "4")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["y_critical"] == pytest.approx(1.35485, abs=1e-5)


def test_young_integral_gap():
    result = run("young", "integral-gap", "--f", "pow:3", "--a", "1", "--b", "0.5")
    data = payload(result)
    assert data["gap"] == pytest.approx(0.25 + 0.75 * 0.5 ** (4.0 / 3.0) - 0.5, rel=1e-8)


def test_cbs_discrete_from_csv(tmp_path):
    path = tmp_path / "vectors.csv"
    path.write_text("1,2\n2,1\n")
    result = run("cbs", "discrete", "--mean", "power:2", "--input", str(path))
    data = payload(result)
    assert result.exit_code == 0
    assert data["left"] == 16.0
    assert data["right"] == 25.0


def test_cbs_integral():
    result = run("cbs", "integral", "--mean", "power:inf", "--f", "pow:1",
                 "--g", "affine:1,-1", "--a", "0", "--b", "1")
    data = payload(result)
    assert result.exit_code == 0
    assert data["middle"] == pytest.approx(7.0 / 144.0, rel=1e-9)


def test_cbs_q():
    result = run("cbs", "q", "--mean", "power:2", "--f", "poly:1", "--g", "pow:1",
                 "--q", "0.5")
    data = payload(result)
    assert result.exit_code == 0
    assert data["ordered"] is True


def test_compare_verdict():
    result = run("compare", "--a", "power:0", "--b", "power:2", "--trials", "60",
                 "--seed", "5", "--kind", "mean")
    data = payload(result)
    assert data["relation"] == "a-prec-b"
    assert len(data["witnesses"]) == 1


def test_elliptic_bounds_single_point_json():
    result = run("elliptic", "bounds", "--x", "0.5")
    data = payload(result)
    assert result.exit_code == 0
    assert data["chain_ok"] is True
    assert data["K"] == pytest.approx(1.685750354812596, rel=1e-13)


def test_elliptic_bounds_grid_csv():
    result = run("elliptic", "bounds", "--grid", "0.1:0.9:0.1", "--format", "csv")
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "x,L0,L1,L2,K,G2,G1,G0,chain_ok"
    assert len(lines) == 10
    for line in lines[1:]:
        fields = line.split(",")
        assert fields[-1] == "true"
        # 17 significant digits requested of every numeric
        assert all(len(f.split(".")[-1]) >= 10 for f in fields[1:3])


def test_dft_uncertainty_from_csv(tmp_path):
    path = tmp_path / "vec.csv"
    path.write_text("1,0\n0,0\n0,0\n0,0\n")
    result = run("dft", "uncertainty", "--input", str(path))
    data = payload(result)
    assert result.exit_code == 0
    assert data["input_support"] == 1
    assert data["dft_support"] == 4
    assert data["equality"] is True


def test_lorentz_chain_command():
    result = run("lorentz", "chain", "--x0", "2", "--x", "1,1", "--y0", "3",
                 "--y", "1,2", "--mean", "power:2")
    data = payload(result)
    assert result.exit_code == 0
    assert data["left"] >= data["middle"] >= data["right"]


def test_usage_error_exits_two():
    assert run("means", "eval", "--spec", "power:2", "--x", "1").exit_code == 2
    assert run("nonsense").exit_code == 2


def test_parse_error_exits_two():
    result = run("means", "eval", "--spec", "power:abc", "--x", "1", "--y", "2")
    assert result.exit_code == 2
    assert "power:abc" in result.stderr


def test_domain_error_exits_three():
    result = run("means", "eval", "--spec", "log", "--x", "0", "--y", "2")
    assert result.exit_code == 3
    result = run("elliptic", "bounds", "--x", "1.5")
    assert result.exit_code == 3


def test_missing_file_is_usage_error():
    result = run("cbs", "discrete", "--mean", "power:2", "--input", "/nonexistent.csv")
    assert result.exit_code == 2


def test_byte_identical_output():
    argv = ["compare", "--a", "power:0.5", "--b", "power:2", "--trials", "40",
            "--seed", "9", "--kind", "logderiv"]
    first = dispatch(argv)
    second = dispatch(argv)
    assert first == second
    grid = ["elliptic", "bounds", "--grid", "0.05:0.95:0.05", "--format", "csv"]
    assert dispatch(grid).stdout == dispatch(grid).stdout
