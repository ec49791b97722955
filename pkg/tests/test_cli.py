import json
import subprocess
import sys

import pytest

from udlax.cli import main, parse_config
from udlax.lax import Potential
from udlax.samples import binary_block, one_soliton_table, two_soliton_table


@pytest.fixture
def write(tmp_path):
    def _write(U, name="u.json"):
        path = tmp_path / name
        path.write_text(json.dumps(U.to_json() if isinstance(U, Potential) else U))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_config():
    cfg = parse_config(["verify", "x.json", "--soliton", "1", "--mu", "3/2"])
    assert cfg.subcommand == "verify" and cfg.soliton == 1 and str(cfg.mu) == "3/2"


def test_classify_one_soliton(capsys, write):
    code, out, _ = run(capsys, "classify", write(one_soliton_table()))
    assert code == 0
    assert json.loads(out) == {"case": "C2", "v_sup": "17/10", "k": "1", "solitons": [{"l": 1, "s": 3}]}


def test_classify_zero_and_two(capsys, write):
    _, out, _ = run(capsys, "classify", write(Potential.zero()))
    assert json.loads(out) == {"case": "C1", "v_sup": "0", "k": "0", "solitons": []}
    _, out, _ = run(capsys, "classify", write(two_soliton_table()))
    assert json.loads(out)["solitons"] == [{"l": 1, "s": 1}, {"l": 5, "s": 1}]


def test_spectrum(capsys, write):
    path = write(one_soliton_table())
    _, out, _ = run(capsys, "spectrum", path, "--matrix", "gamma")
    data = json.loads(out)
    assert data["lambda"] == "0" and data["components"] == [[1, 2]]
    assert data["eigenvectors"][0]["values"][-1] == "0"
    _, out, _ = run(capsys, "spectrum", path, "--matrix", "delta")
    assert json.loads(out)["components"] == [[4, 5]]
    _, out, _ = run(capsys, "spectrum", write(Potential.zero(), "z.json"))
    data = json.loads(out)
    assert data["lambda"] == "0" and data["k"] == "0" and data["components"] == [[-1, 0, 1]]


def test_undress_round_trips(capsys, write):
    path = write(one_soliton_table())
    code, out, _ = run(capsys, "undress", path, "--soliton", "0")
    assert code == 0
    plain = Potential.from_json(out)
    assert plain == Potential(2, ("3/10", "1/5"))
    _, out, _ = run(capsys, "undress", path, "--soliton", "0", "--report")
    rep = json.loads(out)
    assert rep["crosscheck"] is True
    assert Potential.from_json(rep["potential"]) == plain
    assert rep["solitons_after"] == [{"l": 2, "s": 1}]


def test_verify_exit_codes(capsys, write):
    code, out, _ = run(capsys, "verify", write(Potential(0, ("1/4", "1/2", "1/4"))), "--soliton", "0")
    assert code == 0 and json.loads(out)["ok"] is True
    two = write(two_soliton_table(), "two.json")
    for idx in ("0", "1"):
        code, out, _ = run(capsys, "verify", two, "--soliton", idx)
        data = json.loads(out)
        assert code == 1 and data["ok"] is False and data["first_violation"] is not None
    code, out, _ = run(capsys, "verify", write(one_soliton_table(), "one.json"), "--soliton", "0", "--mu", "5/2")
    assert code == 1 and json.loads(out)["mu"] == "5/2"


def test_simulate(capsys, write):
    path = write(binary_block(3))
    code, out, _ = run(capsys, "simulate", path, "--steps", "5", "--format", "ascii")
    assert code == 0 and len(out.splitlines()) == 6
    _, out, _ = run(capsys, "simulate", path, "--steps", "2")
    states = [Potential.from_json(s) for s in json.loads(out)["states"]]
    assert states[2] == binary_block(3, 6)


def test_input_errors_exit_2(capsys, write, tmp_path):
    assert run(capsys, "classify", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "classify", write({"support_lo": 0, "values": ["1/0"]}))[0] == 2
    assert run(capsys, "classify", write({"values": "nope"}, "b.json"))[0] == 2
    code, _, err = run(capsys, "undress", write(one_soliton_table(), "o.json"), "--soliton", "4")
    assert code == 2 and "out of range" in err
    assert run(capsys, "simulate", write(binary_block(1), "s.json"), "--steps", "-1")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_range_warning_goes_to_stderr(capsys, write):
    code, out, err = run(capsys, "classify", write({"support_lo": 0, "values": ["3/2"]}))
    assert code == 0 and "warning" in err and "warning" not in out


def test_output_is_deterministic(capsys, write):
    path = write(two_soliton_table())
    outs = {run(capsys, "verify", path, "--soliton", "0")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point(write):
    proc = subprocess.run(
        [sys.executable, "-m", "udlax", "classify", write(two_soliton_table())],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["case"] == "C2"
