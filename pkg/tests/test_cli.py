import pytest

from qkneser.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def parse(out):
    pairs = {}
    for line in out.splitlines():
        if "=" in line and not line.startswith(("#", "FAIL")):
            key, _, value = line.partition("=")
            pairs[key] = value
    return pairs


# ---------------------------------------------------------------------------
# params
# ---------------------------------------------------------------------------

def test_params_in_formula_range(capsys):
    code, out = run(capsys, "params", "-q", "2", "-n", "7", "-k", "2", "-t", "1")
    got = parse(out)
    assert code == 0
    assert got["vertices"] == "2667"
    assert got["delta"] == "2480"
    assert got["alpha"] == "63"
    assert got["tw"] == "2603"


def test_params_reports_window_for_open_case(capsys):
    code, out = run(capsys, "params", "-q", "2", "-n", "4", "-k", "2", "-t", "1")
    got = parse(out)
    assert code == 0
    assert got["tw_formula_applies"] == "false"
    assert (got["tw_lower"], got["tw_upper"]) == ("19", "27")


def test_params_usage_error_when_t_not_below_k():
    with pytest.raises(SystemExit) as exc:
        main(["params", "-q", "2", "-n", "4", "-k", "2", "-t", "3"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# build / decompose
# ---------------------------------------------------------------------------

def test_build_writes_deterministic_gr(tmp_path, capsys):
    out1 = tmp_path / "a.gr"
    out2 = tmp_path / "b.gr"
    code, out = run(capsys, "build", "-q", "2", "-n", "4", "-k", "2", "-t", "1",
                    "--out", str(out1))
    assert code == 0
    assert parse(out)["edges"] == "280"
    run(capsys, "build", "-q", "2", "-n", "4", "-k", "2", "-t", "1", "--out", str(out2))
    assert out1.read_bytes() == out2.read_bytes()


def test_build_resource_limit_exit_code(tmp_path, capsys):
    code = main(["build", "-q", "2", "-n", "9", "-k", "2", "-t", "1",
                 "--out", str(tmp_path / "x.gr")])
    assert code == 3


def test_decompose_reports_width(tmp_path, capsys):
    out = tmp_path / "d.td"
    code, text = run(capsys, "decompose", "-q", "2", "-n", "5", "-k", "2", "-t", "1",
                     "--out", str(out))
    got = parse(text)
    assert code == 0
    assert got["width"] == "139"
    assert got["valid"] == "true"
    # n=5 is below the q-Kneser range, but t = k-1 makes this the complement
    # Grassmann graph, whose formula value the star construction achieves
    assert got["width_matches_formula"] == "true"
    assert out.exists()


def test_decompose_open_window_case(tmp_path, capsys):
    code, text = run(capsys, "decompose", "-q", "2", "-n", "4", "-k", "2", "-t", "1",
                     "--out", str(tmp_path / "w.td"))
    got = parse(text)
    assert code == 0
    assert got["width"] == "27"
    assert got["width_matches_formula"] == "within_window"


def test_default_output_dir_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QKNESER_OUT_DIR", str(tmp_path))
    code, text = run(capsys, "build", "-q", "2", "-n", "4", "-k", "2", "-t", "1")
    assert code == 0
    assert (tmp_path / "kq2_n4_k2_t1.gr").exists()


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_identities(capsys):
    code, out = run(capsys, "verify", "identities", "--qmax", "4")
    assert code == 0
    assert parse(out)["ok"] == "true"


def test_verify_claims_reports_known_counterexamples(tmp_path, capsys):
    records = tmp_path / "records.csv"
    code, out = run(capsys, "verify", "claims", "--qmax", "2", "--nmax", "14",
                    "--out", str(records))
    # the q=2, t=1, n=3k+1 boundary counterexamples make this suite red
    assert code == 1
    assert "pigeonhole" in out
    lines = records.read_text().splitlines()
    assert lines[0].count(",") == 8
    assert any(line.startswith("2,13,4,1,true,false") for line in lines)


def test_verify_unknown_suite_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

def test_solve_tw_petersen_from_gr(tmp_path, capsys):
    from qkneser.families import petersen_graph
    from qkneser.graph import write_gr

    gr = tmp_path / "petersen.gr"
    write_gr(petersen_graph(), gr)
    cert = tmp_path / "petersen.td"
    code, out = run(capsys, "solve", "--gr", str(gr), "--task", "tw",
                    "--out", str(cert))
    got = parse(out)
    assert code == 0
    assert got["value"] == "4" and got["status"] == "exact"
    from qkneser.td import read_td, width

    assert width(read_td(cert)) == 4


def test_solve_mis_from_params(capsys):
    code, out = run(capsys, "solve", "-q", "2", "-n", "4", "-k", "2", "-t", "1",
                    "--task", "mis")
    got = parse(out)
    assert code == 0
    assert got["value"] == "7" and got["status"] == "exact"


def test_solve_budget_zero_gives_bracket(capsys):
    code, out = run(capsys, "solve", "-q", "2", "-n", "4", "-k", "2", "-t", "1",
                    "--task", "tw", "--budget-ms", "0")
    got = parse(out)
    assert code == 0
    assert got["status"] == "upper_bound_only"
    assert int(got["lower"]) <= int(got["upper"])


def test_solve_needs_input():
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--task", "tw"])
    assert exc.value.code == 2


def test_threads_flag_validated():
    with pytest.raises(SystemExit) as exc:
        main(["--threads", "0", "params", "-q", "2", "-n", "7", "-k", "2", "-t", "1"])
    assert exc.value.code == 2
