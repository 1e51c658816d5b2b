import pytest


def test_parse_prints_an_algebra_file(run_cli):
    code, out = run_cli("parse", "(0,0,12)", "--dim", "3")
    assert code == 0
    assert out["dim"] == 3
    assert out["brackets"] == [{"i": 1, "j": 2, "coeffs": ["0", "0", "1"]}]


@pytest.mark.parametrize("text", ["(0,0,12", "(0,0,33)", "(0,0,14)"])
def test_parse_errors_exit_with_2(run_cli, text):
    code, out = run_cli("parse", text, "--dim", "3")
    assert code == 2
    assert out is None


def test_construct_heisenberg(run_cli):
    code, out = run_cli("construct", "heisenberg", "2")
    assert code == 0
    assert out["dim"] == 5
    assert out["J"] is None


def test_construct_table_row_carries_j(run_cli):
    code, out = run_cli("construct", "catalog", "1")
    assert code == 0
    assert out["dim"] == 6
    assert len(out["J"]) == 6


def test_construct_example_data_then_build(run_cli, write_json):
    code, data = run_cli("construct", "example-2step", "mixed", "--data")
    assert code == 0
    assert "psi" in data
    code, built = run_cli("construct", "from-2step-data", write_json("data.json", data))
    assert code == 0
    _, direct = run_cli("construct", "example-2step", "mixed")
    assert built["brackets"] == direct["brackets"]
    assert built["J"] == direct["J"]


def test_construct_example_3step_parameters(run_cli):
    code, out = run_cli("construct", "example-3step", "--n", "4", "--a", "1,0", "--b", "0,1", "--c1", "1")
    assert code == 0
    assert out["dim"] == 8


def test_construct_bad_parameters_exit_with_3(run_cli):
    code, _ = run_cli("construct", "natred", "su2-adjoint", "--structure", "complex")
    assert code == 3
    code, _ = run_cli("construct", "symmetric-pair", "su2+su2", "--hermitian")
    assert code == 3


def test_construct_hypercomplex_natred(run_cli):
    code, out = run_cli("construct", "natred", "su2-quaternionic", "--structure", "hyper")
    assert code == 0
    assert out["dim"] == 8
    assert len(out["hypercomplex"]) == 3


def test_analyze_standard_abelian(run_cli, write_json):
    _, doc = run_cli("construct", "standard-abelian", "0", "1")
    code, out = run_cli("analyze", write_json("kt.json", doc), "--seed", "3", "--samples", "20")
    assert code == 0
    assert out["algebra"]["dim"] == 4
    assert out["complex_structure"]["abelian"] is True
    assert out["complex_structure"]["nilpotent_step"] == "Step(2)"
    assert out["metric"]["pluriclosed"] is True
    assert out["metric"]["criterion_2step"] is True
    assert out["metric"]["center_sampling"]["seed"] == 3
    assert out["provenance"]["samples"] == 20


def test_analyze_without_structure(run_cli, write_json):
    _, doc = run_cli("parse", "(0,0,0,12,13,23)", "--dim", "6")
    code, out = run_cli("analyze", write_json("f3.json", doc))
    assert code == 0
    assert out["algebra"]["dim_center"] == 3
    assert out["complex_structure"] is None
    assert out["metric"] is None


def test_check_verdicts(run_cli, write_json):
    _, good = run_cli("construct", "standard-abelian", "0", "1")
    _, bad = run_cli("construct", "standard-abelian", "0", "2")
    code, out = run_cli("check", "abelian", write_json("good.json", good))
    assert code == 0
    assert out == {"check": "abelian", "value": True, "witness": None, "detail": None}
    code, out = run_cli("check", "pluriclosed", write_json("bad.json", bad))
    assert code == 0
    assert out["value"] is False
    assert len(out["witness"]["indices"]) == 4
    assert all(1 <= i <= 6 for i in out["witness"]["indices"])


def test_check_step_reports_the_step(run_cli, write_json):
    _, doc = run_cli("construct", "catalog", "1")
    code, out = run_cli("check", "step", write_json("f3.json", doc))
    assert code == 0
    assert out["detail"] == "Step(3)"


def test_check_with_metric_file(run_cli, write_json):
    _, doc = run_cli("construct", "standard-abelian", "0", "1")
    metric = [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 2]]
    code, out = run_cli("check", "pluriclosed", write_json("kt.json", doc), "--metric", write_json("g.json", metric))
    assert code == 0
    assert out["value"] is True


def test_check_hkt(run_cli, write_json):
    _, doc = run_cli("construct", "natred", "su2-quaternionic", "--structure", "hyper")
    code, out = run_cli("check", "hkt", write_json("hkt.json", doc))
    assert code == 0
    assert out["value"] is True


def test_check_without_j_exits_with_3(run_cli, write_json):
    _, doc = run_cli("construct", "heisenberg", "1")
    code, out = run_cli("check", "integrable", write_json("h3.json", doc))
    assert code == 3
    assert out is None


def test_unreadable_file_exits_with_2(run_cli, tmp_path):
    code, _ = run_cli("analyze", str(tmp_path / "missing.json"))
    assert code == 2


def test_verify_subset(run_cli):
    code, out = run_cli("verify", "--only", "catalog-dimensions", "hermitian-symmetric")
    assert code == 0
    assert out["passed"] is True
    assert [e["name"] for e in out["entries"]] == ["catalog-dimensions", "hermitian-symmetric"]


def test_construct_table1_then_analyze(run_cli, write_json):
    code, doc = run_cli("construct", "table1", "1")
    assert code == 0
    code, out = run_cli("analyze", write_json("f3.json", doc))
    assert code == 0
    a = out["algebra"]
    assert (a["dim"], a["dim_commutator"], a["dim_center"], a["nilpotency_step"]) == (6, 3, 3, 2)
    assert out["complex_structure"]["nilpotent_step"] == "Step(3)"


def test_catalog_alias_builds_the_same_file(run_cli):
    _, by_alias = run_cli("construct", "catalog", "4")
    _, by_name = run_cli("construct", "table1", "4")
    assert by_alias == by_name


def test_hand_written_file_with_coeffs_key(run_cli, write_json):
    doc = {"dim": 3, "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "0", "1"]}], "name": "h3"}
    code, out = run_cli("analyze", write_json("h3.json", doc))
    assert code == 0
    assert out["algebra"]["dim_center"] == 1


def test_verify_paper_target(run_cli):
    code, out = run_cli("verify", "paper", "--only", "catalog-dimensions")
    assert code == 0
    assert [e["name"] for e in out["entries"]] == ["catalog-dimensions"]


def test_analyze_non_pluriclosed_has_no_center_sampling(run_cli, write_json):
    _, doc = run_cli("construct", "standard-abelian", "1", "2")
    code, out = run_cli("analyze", write_json("r3h5.json", doc))
    assert code == 0
    assert out["metric"]["hermitian"] is True
    assert out["metric"]["pluriclosed"] is False
    assert out["metric"]["center_sampling"] is None
