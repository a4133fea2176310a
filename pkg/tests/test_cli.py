import csv
import json

from thetagraph import build_theta, cyclic, validate_cycle
from thetagraph.cli import main, parse_selector
from thetagraph.properties import components_after_removal


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def test_analyze_cyclic_6(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--cyclic", "6", "--no-timestamp")
    assert code == 0
    report = json.loads(out)
    assert report["report_version"] == 1
    props = report["properties"]
    assert props["hamiltonian"]["status"] == "yes"
    assert props["diameter"]["value"] == 2
    # kappa agrees with |S(Z_6)| = |{0,2,3,4}| = 4, per the composite-order rule
    assert props["vertex_connectivity"]["value"] == 4
    assert props["prime_order_set"]["size"] == 4
    assert props["open_problem_class"] == "kappa_equals_S"
    assert report["spectrum"]["match"] is True


def test_analyze_witnesses_revalidate_against_fresh_graph(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--cyclic", "15", "--no-timestamp")
    assert code == 0
    report = json.loads(out)
    t = build_theta(cyclic(15))
    ham = report["properties"]["hamiltonian"]
    assert ham["status"] == "no" and ham["method"] == "toughness_refuted"
    cut = set(ham["witness_cut"])
    assert components_after_removal(t, cut) > len(cut)
    kappa_cut = set(report["properties"]["vertex_connectivity"]["witness_cut"])
    assert components_after_removal(t, kappa_cut) >= 2


def test_analyze_dicyclic_3(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--dicyclic", "3", "--no-timestamp")
    report = json.loads(out)
    assert code == 0
    assert report["properties"]["open_problem_class"] == "kappa_exceeds_S"
    assert report["properties"]["vertex_connectivity"]["value"] == 6
    assert report["properties"]["prime_order_set"]["size"] == 4


def test_analyze_cyclic_1_warns(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--cyclic", "1", "--no-timestamp")
    assert code == 0
    report = json.loads(out)
    assert any(w["code"] == "small_group" for w in report["warnings"])


def test_analyze_deterministic_without_timestamp(capsys):
    _, out1, _ = run_cli(capsys, "analyze", "--dihedral", "6", "--no-timestamp")
    _, out2, _ = run_cli(capsys, "analyze", "--dihedral", "6", "--no-timestamp")
    assert out1 == out2


def test_analyze_timestamp_present_by_default(capsys):
    _, out, _ = run_cli(capsys, "analyze", "--cyclic", "3")
    assert "generated_at" in json.loads(out)


def test_analyze_requires_exactly_one_selector(capsys):
    code, _, err = run_cli(capsys, "analyze")
    assert code == 1 and "selector" in err
    code, _, err = run_cli(capsys, "analyze", "--cyclic", "3", "--dihedral", "4")
    assert code == 1


def test_analyze_hamiltonian_cycle_revalidates(capsys):
    _, out, _ = run_cli(capsys, "analyze", "--cyclic", "10", "--no-timestamp")
    report = json.loads(out)
    cycle = report["properties"]["hamiltonian"]["cycle"]
    assert validate_cycle(build_theta(cyclic(10)), tuple(cycle))


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


def test_spectrum_cyclic_9(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--cyclic", "9")
    assert code == 0
    section = json.loads(out)
    assert section["match"] is True
    closed = {e["value_display"]: e["multiplicity"] for e in section["closed_form"]}
    assert closed == {"12": 1, "7": 2, "3": 5, "1": 1}


def test_spectrum_dihedral_6(capsys):
    _, out, _ = run_cli(capsys, "spectrum", "--dihedral", "6")
    section = json.loads(out)
    assert section["match"] is True
    displays = [e["value_display"] for e in section["closed_form"]]
    assert displays == ["15+3*sqrt(5)", "10", "15-3*sqrt(5)"]
    assert section["closed_form"][1]["multiplicity"] == 10


def test_spectrum_cyclic_30_unsupported(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--cyclic", "30")
    assert code == 0
    section = json.loads(out)
    assert section["closed_form_supported"] is False
    assert section["closed_form"] is None
    assert section["match"] is None
    assert len(section["numeric"]) > 0


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def test_export_dot_triangle(capsys):
    code, out, _ = run_cli(capsys, "export", "--cyclic", "3", "--format", "dot")
    assert code == 0
    assert out.startswith("graph theta {")
    assert out.count(" -- ") == 3


def test_export_json_z6(capsys):
    _, out, _ = run_cli(capsys, "export", "--cyclic", "6", "--format", "json")
    assert len(json.loads(out)["edges"]) == 14


def test_export_custom_roundtrips_labels(tmp_path, capsys):
    path = tmp_path / "group.json"
    path.write_text(json.dumps({"labels": ["e", "g1", "g2"], "orders": [1, 3, 3]}))
    code, out, _ = run_cli(capsys, "export", "--custom", str(path), "--format", "dot")
    assert code == 0
    for label in ("e", "g1", "g2"):
        assert f'"{label}"' in out


def test_export_rejects_bad_custom_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"labels": ["a"]}')
    code, _, err = run_cli(capsys, "export", "--custom", str(path), "--format", "dot")
    assert code == 1 and "custom" in err


def test_analyze_non_realizable_profile_fails_cross_check(tmp_path, capsys):
    # Lagrange-consistent yet not a group: one order-9 element
    path = tmp_path / "fake.json"
    path.write_text(
        json.dumps({"labels": list("exabcdfgh"), "orders": [1, 9, 3, 3, 3, 3, 3, 3, 3]})
    )
    code, _, err = run_cli(capsys, "analyze", "--custom", str(path), "--no-timestamp")
    assert code == 2
    assert "not the order profile" in err


# ---------------------------------------------------------------------------
# selectors
# ---------------------------------------------------------------------------


def test_parse_selector_families():
    assert parse_selector("cyclic:6").size == 6
    assert parse_selector("dihedral:5").size == 10
    assert parse_selector("dicyclic:3").size == 12
    assert parse_selector("elem-abelian:3:2").size == 9
    assert parse_selector("heisenberg:3").size == 27


def test_parse_selector_nested_product():
    g = parse_selector("product(cyclic:2,product(cyclic:3,cyclic:5))")
    assert g.size == 30


def test_product_flag(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--product", "cyclic:3", "cyclic:3", "--no-timestamp"
    )
    assert code == 0
    report = json.loads(out)
    assert report["group"]["order"] == 9
    assert report["properties"]["complete"]["value"] is True


def test_bad_selector_exit_code(capsys):
    code, _, err = run_cli(capsys, "analyze", "--product", "cyclic:3", "nonsense:1")
    assert code == 1 and "selector" in err


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_spectra_suite_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "spectra")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_corrupt_negative_control(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "spectra", "--corrupt")
    assert code == 2
    assert "FAIL" in out
    assert "closed form differs" in out or "cross-check" in out


def test_verify_connectivity_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "connectivity")
    assert code == 0
    assert "kappa formulas" in out


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def test_search_cyclic_to_20(capsys):
    code, out, err = run_cli(capsys, "search", "--max-order", "20", "--families", "cyclic")
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert [r["params"] for r in rows] == [f"n={n}" for n in range(3, 21)]
    for r in rows:
        n = int(r["order"])
        if r["complete"] == "False":
            assert r["class"] == "kappa_equals_S"
            assert r["kappa"] == r["s_size"]
    assert "summary" in err


def test_search_dicyclic_flags_dic3(capsys):
    code, out, _ = run_cli(capsys, "search", "--max-order", "12", "--families", "dicyclic")
    rows = list(csv.DictReader(out.splitlines()))
    flagged = [r for r in rows if r["class"] == "kappa_exceeds_S"]
    assert [r["params"] for r in flagged] == ["n=3"]


def test_search_elementary_abelian_complete(capsys):
    code, out, _ = run_cli(capsys, "search", "--max-order", "9", "--families", "elementary_abelian")
    rows = list(csv.DictReader(out.splitlines()))
    by_params = {r["params"]: r for r in rows}
    assert by_params["p=3,m=2"]["class"] == "complete"


def test_search_writes_csv_and_jsonl(tmp_path, capsys):
    out_path = tmp_path / "scan.csv"
    code, _, _ = run_cli(
        capsys, "search", "--max-order", "16", "--families", "cyclic", "--out", str(out_path)
    )
    assert code == 0
    rows = list(csv.DictReader(out_path.read_text().splitlines()))
    assert len(rows) == 14
    jsonl = (tmp_path / "scan.jsonl").read_text().splitlines()
    assert len(jsonl) == 14
    assert json.loads(jsonl[0])["family"] == "cyclic"


def test_search_skip_completed_appends_only_new(tmp_path, capsys):
    out_path = tmp_path / "scan.csv"
    run_cli(capsys, "search", "--max-order", "10", "--families", "cyclic", "--out", str(out_path))
    first = out_path.read_text()
    code, _, _ = run_cli(
        capsys,
        "search", "--max-order", "12", "--families", "cyclic",
        "--out", str(out_path), "--skip-completed",
    )
    assert code == 0
    rows = list(csv.DictReader(out_path.read_text().splitlines()))
    assert [r["params"] for r in rows] == [f"n={n}" for n in range(3, 13)]
    assert out_path.read_text().startswith(first)


def test_search_rejects_bad_family(capsys):
    code, _, err = run_cli(capsys, "search", "--max-order", "10", "--families", "sporadic")
    assert code == 1 and "sporadic" in err


def test_search_rejects_tiny_max_order(capsys):
    code, _, _ = run_cli(capsys, "search", "--max-order", "2")
    assert code == 1


# ---------------------------------------------------------------------------
# misc
# ---------------------------------------------------------------------------


def test_bad_log_level_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("THETA_LOG", "blah")
    code, _, err = run_cli(capsys, "analyze", "--cyclic", "3")
    assert code == 1 and "THETA_LOG" in err


def test_unknown_export_format_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "export", "--cyclic", "3", "--format", "pdf")
    assert code == 1
