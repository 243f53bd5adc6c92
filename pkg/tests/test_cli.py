import json

import pytest

from biserial.cli import main


@pytest.fixture()
def z3_file(tmp_path):
    path = tmp_path / "Z3.mod"
    path.write_text(
        "module Z3 over lambda_r1_m3\n"
        "string a3 [ be_a3_b2^+1 al_b3_b2^-1 be_b3_c2^+1 al_a2_c2^-1 ]\n")
    return str(path)


@pytest.fixture()
def u_file(tmp_path):
    path = tmp_path / "u.mod"
    path.write_text("module u over lambda_r1_m0\nraw\ndim u 1\n")
    return str(path)


def test_build_emit_has_ten_vertices(capsys):
    assert main(["algebra", "build", "--family", "lambda",
                 "--r", "1", "--m", "0", "--emit"]) == 0
    out = capsys.readouterr().out
    assert out.count("vertex ") == 10
    assert out.splitlines()[0] == "algebra lambda_r1_m0"


def test_build_summary(capsys):
    assert main(["algebra", "build", "--family", "lambda",
                 "--r", "1", "--m", "5"]) == 0
    assert "dimension 78" in capsys.readouterr().out


def test_parse_bad_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra A\nvertex x\nrel zero ghost\n")
    assert main(["algebra", "parse", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_round_trip_through_files(tmp_path, capsys):
    out = tmp_path / "alg.alg"
    assert main(["algebra", "emit", "--family", "lambda1prime",
                 "--r", "1", "-o", str(out)]) == 0
    assert main(["algebra", "parse", str(out)]) == 0
    assert "14 vertices" in capsys.readouterr().out


def test_projectives_table(capsys):
    assert main(["algebra", "projectives", "--family", "lambda",
                 "--r", "1", "--m", "5"]) == 0
    out = capsys.readouterr().out
    assert "P(a1): dim  4" in out
    assert "P(c1): dim  6" in out


def test_module_pd_finite(z3_file, capsys):
    assert main(["module", "pd", z3_file, "--algebra", "lambda:r=1,m=3"]) == 0
    assert "Finite(4)" in capsys.readouterr().out


def test_module_pd_infinite(u_file, capsys):
    assert main(["module", "pd", u_file, "--algebra", "lambda:r=1,m=0"]) == 0
    out = capsys.readouterr().out
    assert "Infinite (cycle 0≅1)" in out


def test_module_pd_structured(z3_file, capsys):
    assert main(["module", "pd", z3_file, "--algebra", "lambda:r=1,m=3",
                 "--structured", "--seed", "9"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["verdict"] == "finite" and rec["pd"] == 4
    assert rec["module"] == "Z3" and rec["field"] == "q"
    assert rec["seed"] == 9
    assert rec["chain"][-1] == []


def test_module_pd_strict_inconclusive(tmp_path, capsys):
    path = tmp_path / "d0.mod"
    path.write_text("module d0 over lambda_r2_m0\nraw\ndim d0 1\n")
    # Chain d0 -> d1 -> d2 -> 0 cannot finish within one step.
    assert main(["module", "pd", str(path), "--algebra", "lambda:r=2,m=0",
                 "--cutoff", "1", "--strict"]) == 3


def test_module_iso_identical_files(z3_file, capsys):
    assert main(["module", "iso", z3_file, z3_file,
                 "--algebra", "lambda:r=1,m=3"]) == 0
    assert "certified isomorphism" in capsys.readouterr().out


def test_module_iso_failure_exits_1(tmp_path, capsys):
    a = tmp_path / "a.mod"
    a.write_text("module a over lambda_r1_m0\nraw\ndim u 1\n")
    b = tmp_path / "b.mod"
    b.write_text("module b over lambda_r1_m0\nraw\ndim v 1\n")
    assert main(["module", "iso", str(a), str(b),
                 "--algebra", "lambda:r=1,m=0"]) == 1


def test_module_split(tmp_path, capsys):
    path = tmp_path / "pc2.mod"
    path.write_text("module pc2 over lambda1prime_r1\nproj c2\n")
    assert main(["module", "split", str(path),
                 "--algebra", "lambda1prime:r=1", "--structured"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["pc2_copies"] == 1
    assert rec["x_multiplicities"] == [0] * 10


def test_module_syzygy_writes_raw_file(z3_file, tmp_path, capsys):
    out = tmp_path / "omega.mod"
    assert main(["module", "syzygy", z3_file, "--algebra", "lambda:r=1,m=3",
                 "-o", str(out)]) == 0
    assert out.read_text().startswith("module syzygy_of_Z3 over lambda_r1_m3")
    capsys.readouterr()
    # The written file parses and has the next witness's dimension.
    assert main(["module", "pd", str(out), "--algebra", "lambda:r=1,m=3"]) == 0
    assert "Finite(3)" in capsys.readouterr().out


def test_module_hom(z3_file, capsys):
    assert main(["module", "hom", z3_file, z3_file,
                 "--algebra", "lambda:r=1,m=3"]) == 0
    assert "= 1" in capsys.readouterr().out


def test_module_dot(z3_file, capsys):
    assert main(["module", "dot", z3_file,
                 "--algebra", "lambda:r=1,m=3"]) == 0
    assert "digraph" in capsys.readouterr().out


def test_verify_single_claim(capsys):
    assert main(["verify", "prop-2", "--r", "1", "--m-max", "1"]) == 0
    out = capsys.readouterr().out
    assert "claim prop-2: PASS" in out
    assert "summary: 1 pass" in out


def test_verify_structured_deterministic(capsys):
    args = ["verify", "simples-pd", "appendix-projectives",
            "--r", "1", "--m-max", "1", "--seed", "42", "--structured"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    records = [json.loads(line) for line in first.splitlines()]
    assert records[0]["claim"] == "simples-pd"
    assert records[-1]["summary"]["pass"] == 2


def test_verify_unknown_claim_exits_2(capsys):
    assert main(["verify", "nope"]) == 2


def test_verify_inconclusive_exits_3(capsys):
    # A one-step cutoff cannot finish any witness chain.
    assert main(["verify", "prop-2", "--r", "1", "--m-max", "0",
                 "--cutoff", "1"]) == 3
    assert "INCONCLUSIVE" in capsys.readouterr().out


def test_custom_presentation_end_to_end(tmp_path, capsys):
    # A user-supplied non-family algebra: the three-vertex line with the
    # composite killed; the leftmost simple has projective dimension two.
    alg = tmp_path / "nak.alg"
    alg.write_text(
        "algebra nak\nvertex x1\nvertex x2\nvertex x3\n"
        "arrow f : alpha x1 -> x2\narrow g : beta x2 -> x3\n"
        "rel zero g f\n")
    mod = tmp_path / "s1.mod"
    mod.write_text("module s1 over nak\nraw\ndim x1 1\n")
    assert main(["algebra", "parse", str(alg)]) == 0
    capsys.readouterr()
    assert main(["module", "pd", str(mod), "--algebra", str(alg)]) == 0
    assert "Finite(2)" in capsys.readouterr().out


def test_verify_records_field(capsys):
    assert main(["verify", "appendix-projectives", "--field", "fp:101",
                 "--structured"]) == 0
    rec = json.loads(capsys.readouterr().out.splitlines()[0])
    assert rec["config"]["field"] == "fp:101"


def test_missing_file_exits_2(capsys):
    assert main(["module", "pd", "/nonexistent.mod",
                 "--algebra", "lambda:r=1,m=0"]) == 2
