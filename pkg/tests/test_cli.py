import io
import json
import subprocess
import sys

import pytest

from phaselab import formats
from phaselab.cli import main
from phaselab.frames import Frame
from phaselab.linalg import EXACT, FLOAT
from phaselab.subspaces import Arrangement, Subspace


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def reports(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


FRAME_3 = json.dumps({"dim": 2, "vectors": [["1", "0"], ["0", "1"], ["1", "1"]]})


def test_frame_round_trip():
    f = Frame([["1/2", 0, 3], [1, "-2/3", 1]], EXACT)
    g = formats.load_frame(formats.dumps(formats.frame_to_dict(f)))
    assert g.backend == EXACT
    assert g.vectors.tolist() == f.vectors.tolist()


def test_float_frame_round_trip():
    f = Frame([[0.1, 2.0], [1.0, -3.5]], FLOAT)
    doc = formats.frame_to_dict(f)
    assert doc["scalars"] == "float"
    assert formats.load_frame(formats.dumps(doc)).vectors.tolist() == f.vectors.tolist()


def test_arrangement_round_trip():
    arr = Arrangement((Subspace(normal=[1, -1, 0], backend=EXACT), Subspace(basis=[[0, 1, 0], [0, 0, 1]], backend=EXACT)))
    back = formats.load_arrangement(formats.dumps(formats.arrangement_to_dict(arr)))
    assert all((p == q).all() for p, q in zip(arr.projectors, back.projectors))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("{", "line 1"),
        ('{"dim": 2, "vectors": [["1", "x"]]}', "vectors[0][1]"),
        ('{"dim": 2, "vectors": [["1", "0", "1"]]}', "vectors[0]: expected 2 entries"),
        ('{"dim": 2, "vectors": [[0.5, 1]]}', "vectors[0][0]"),
        ('{"dim": 0, "vectors": []}', "dim"),
        ('{"dim": 2, "scalars": "complex", "vectors": [[1, 0]]}', "scalars"),
        ('{"dim": 2, "vectors": [[0, 0]]}', "vectors"),
    ],
)
def test_frame_format_errors_name_the_field(text, fragment):
    with pytest.raises(formats.FormatError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        formats.load_frame(text)


def test_arrangement_format_errors():
    with pytest.raises(formats.FormatError, match="exactly one"):
        formats.load_arrangement('{"dim": 2, "subspaces": [{"normal": [1, 0], "basis": [[0, 1]]}]}')
    with pytest.raises(formats.FormatError, match=r"subspaces\[0\]"):
        formats.load_arrangement('{"dim": 2, "subspaces": [{"basis": [[1, 0], [2, 0]]}]}')


def test_check_frame_reports(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["check", "frame"], FRAME_3)
    assert code == 0
    by_check = {r["check"]: r for r in reports(out)}
    assert by_check["phase_retrieval"]["verdict"] is True
    assert by_check["phase_retrieval"]["certainty"] == "PROOF"
    assert by_check["tight"]["verdict"] is False
    assert by_check["scalable"]["verdict"] is True
    assert "phase_retrieval: True [PROOF]" in err


def test_failing_verdict_still_exits_zero(capsys, monkeypatch):
    text = json.dumps({"dim": 2, "vectors": [["1", "0"], ["0", "1"], ["2", "0"]]})
    code, out, _ = run(capsys, monkeypatch, ["check", "frame", "--cp"], text)
    assert code == 0
    (rep,) = reports(out)
    assert rep["verdict"] is False and rep["payload"]["witness"] == [0, 2]


def test_input_error_exit_code(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["check", "frame"], '{"dim": 2, "vectors": [["1", "q"]]}')
    assert code == 2
    assert out == ""
    assert "vectors[0][1]" in err


def test_missing_file_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["check", "frame", "/nonexistent/frame.json"])
    assert code == 2 and "nonexistent" in err


def test_guard_exit_code(capsys, monkeypatch):
    text = json.dumps({"dim": 2, "vectors": [["1", str(i)] for i in range(31)]})
    code, _, err = run(capsys, monkeypatch, ["check", "frame", "--cp"], text)
    assert code == 3 and "guard" in err


def test_reruns_are_byte_identical(capsys, monkeypatch):
    text = json.dumps({"dim": 3, "subspaces": [{"normal": ["1", "0", "0"]}, {"normal": ["0", "1", "0"]}, {"normal": ["0", "0", "1"]}, {"normal": ["1", "1", "1"]}, {"normal": ["1", "2", "3"]}]})
    argv = ["check", "arrangement", "--edidin-search", "--restarts", "10", "--seed", "5"]
    _, first, _ = run(capsys, monkeypatch, argv, text)
    _, second, _ = run(capsys, monkeypatch, argv, text)
    assert first == second
    (rep,) = reports(first)
    assert rep["wall_time"] is None and rep["seed"] == 5


def test_timing_flag_records_wall_time(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["--timing", "check", "frame", "--tight"], FRAME_3)
    assert reports(out)[0]["wall_time"] is not None


def test_edidin_witness_and_min_count(capsys, monkeypatch):
    text = json.dumps({"dim": 3, "subspaces": [{"normal": ["1", "0", "0"]}, {"normal": ["0", "1", "0"]}, {"normal": ["1", "1", "1"]}]})
    code, out, _ = run(capsys, monkeypatch, ["check", "arrangement", "--edidin-witness", "0", "0", "1", "--min-count"], text)
    assert code == 0
    wit, mc = reports(out)
    assert wit["verdict"] == "deficient" and wit["certainty"] == "PROOF"
    assert mc["verdict"] is False


def test_weighted_tight_and_fusion(capsys, monkeypatch):
    text = json.dumps({"dim": 3, "subspaces": [{"normal": ["1", "0", "0"]}, {"normal": ["0", "1", "0"]}, {"normal": ["0", "0", "1"]}]})
    code, out, _ = run(capsys, monkeypatch, ["check", "arrangement", "--weighted-tight", "--weights", "1", "1", "1", "--fusion-scalable"], text)
    assert code == 0
    wt, fu = reports(out)
    assert wt["payload"] == {"bound": "2", "complement_bound": "1"}
    assert fu["payload"]["weights"] == ["1/2", "1/2", "1/2"]


def test_perp_of_frame(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["perp"], FRAME_3)
    assert code == 0
    doc = json.loads(out)
    assert doc["subspaces"][0] == {"normal": ["1", "0"]}


def test_gen_then_reconstruct(capsys, monkeypatch, tmp_path):
    code, out, _ = run(capsys, monkeypatch, ["gen", "rd-family", "--d", "3"])
    assert code == 0
    path = tmp_path / "frame.json"
    path.write_text(out)
    code, out, _ = run(capsys, monkeypatch, ["reconstruct", str(path), "--signal", "1", "-2", "1/2"])
    (rep,) = reports(out)
    assert rep["verdict"] == "unique"
    assert rep["payload"]["classes"] == [["1", "-2", "1/2"]]


def test_reconstruct_signal_length_error(capsys, monkeypatch, tmp_path):
    path = tmp_path / "frame.json"
    path.write_text(FRAME_3)
    code, _, err = run(capsys, monkeypatch, ["reconstruct", str(path), "--signal", "1"])
    assert code == 2 and "signal" in err


def test_sturm_on_polynomial_file(capsys, monkeypatch, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("2 0 -2\n0 2 1\n")  # t² - 2 at x34 = 1
    code, out, _ = run(capsys, monkeypatch, ["sturm", str(path)])
    (rep,) = reports(out)
    assert rep["payload"]["real_roots"] == 2
    code, out, _ = run(capsys, monkeypatch, ["sturm", str(path), "--interval", "0", "2"])
    assert reports(out)[0]["payload"]["real_roots"] == 1
    code, _, err = run(capsys, monkeypatch, ["sturm", str(path), "--interval", "2", "0"])
    assert code == 2


def test_sturm_f0(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["sturm", "--f0"])
    (rep,) = reports(out)
    assert rep["verdict"] == "real roots: 0"
    assert rep["certainty"] == "PROOF"
    assert rep["payload"]["homogeneous_degree_10"] is True
    assert rep["payload"]["reversed_real_roots"] == 0
    assert rep["payload"]["data_file_matches"] is True


def test_zprobe_finds_members_for_small_arrangement(capsys, monkeypatch):
    text = json.dumps({"dim": 4, "subspaces": [{"normal": ["1", "0", "0", "0"]}, {"normal": ["0", "1", "0", "0"]}, {"normal": ["1", "1", "1", "1"]}]})
    code, out, _ = run(capsys, monkeypatch, ["zprobe", "--trials", "5", "--seed", "1"], text)
    (rep,) = reports(out)
    assert rep["certainty"] == "PROOF" and rep["payload"]["exact_members"] > 0


def test_backend_override(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["--backend", "float", "check", "frame", "--pr"], FRAME_3)
    (rep,) = reports(out)
    assert rep["backend"] == "float" and rep["certainty"] == "EVIDENCE"


def test_console_pipe():
    gen = subprocess.run([sys.executable, "-m", "phaselab", "gen", "rd-family", "--d", "3", "--xs", "2", "3"], capture_output=True, text=True, check=True)
    chk = subprocess.run([sys.executable, "-m", "phaselab", "check", "frame", "--pr"], input=gen.stdout, capture_output=True, text=True)
    assert chk.returncode == 0
    rep = json.loads(chk.stdout)
    assert rep["verdict"] is True and rep["certainty"] == "PROOF"
