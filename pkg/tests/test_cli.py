import json
import subprocess
import sys

import pytest

from convcodes import specfile
from convcodes.cli import SplitMix64, main, seeded_messages
from convcodes.mds_convert import mds_convert


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.fixture
def ex1_spec(tmp_path, capsys):
    path = tmp_path / "ex1.json"
    status, out, _ = run(capsys, "build", "--kind", "mds", "--zeta", "2", "--k", "4", "--li", "2", "--lf", "2",
                         "--field", "19", "--out", str(path))
    assert status == 0 and "F_19" in out
    return path


@pytest.fixture
def ex2_spec(tmp_path, capsys):
    path = tmp_path / "ex2.json"
    status, _, _ = run(capsys, "build", "--kind", "lrc", "--zeta", "2", "--k", "2", "--r", "2", "--li", "1",
                       "--lf", "1", "--field", "19", "-o", str(path))
    assert status == 0
    return path


def test_splitmix64_reference_stream():
    g = SplitMix64(1234567)
    assert [g.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_seeded_messages_are_reduced():
    msgs = seeded_messages(1234567, 1, 3, 19)
    assert msgs == [[6457827717110365317 % 19, 3203168211198807973 % 19, 9817491932198370423 % 19]]


def test_spec_file_round_trip(ex1_spec, ex2_spec):
    for path in (ex1_spec, ex2_spec):
        text = path.read_text()
        data = json.loads(text)
        assert data["schema_version"] == 1
        assert specfile.dumps(specfile.load(path)) == text


def test_build_to_stdout(capsys):
    status, out, _ = run(capsys, "build", "--kind", "mds", "--zeta", "2", "--k", "2", "--li", "3", "--lf", "3")
    assert status == 0
    assert json.loads(out)["strategy"] == "default-reencode"


def test_convert_matches_library(ex1_spec, capsys):
    status, out, _ = run(capsys, "convert", str(ex1_spec), "--seed", "3")
    assert status == 0
    code = specfile.load(ex1_spec)
    msgs = seeded_messages(3, 2, 4, 19)
    word, _ = mds_convert(code, [code.initial.encode(m) for m in msgs])
    assert f"final {' '.join(map(str, word))}" in out
    assert out.rstrip().endswith("read=4 write=2 total=6")
    # frozen after the library check above
    assert "final 0 17 15 3 14 12 3 17 14 18" in out


def test_convert_json_records(ex2_spec, capsys):
    status, out, _ = run(capsys, "convert", str(ex2_spec), "--messages", "1,2,3,4;5,6,7,8", "--json")
    assert status == 0
    data = json.loads(out)
    assert (data["read"], data["write"], data["total"]) == (4, 3, 7)
    roles = {rec["coord"]: rec["role"] for rec in data["records"]}
    assert roles["c1@4"] == "accessed" and roles["c2@9"] == "accessed"
    assert roles["c1@6"] == "untouched"
    assert roles["d@6"] == "new"
    assert roles["c1@1"] == "remaining"


def test_convert_explicit_codewords(ex1_spec, capsys):
    code = specfile.load(ex1_spec)
    words = [list(code.initial.encode(m)) for m in ([1, 0, 0, 0], [0, 1, 0, 0])]
    arg = ";".join(",".join(map(str, w)) for w in words)
    status, out, _ = run(capsys, "convert", str(ex1_spec), "--codewords", arg)
    assert status == 0 and "read=4 write=2" in out
    bad = arg.replace(str(words[0][0]), str((words[0][0] + 1) % 19), 1)
    status, _, err = run(capsys, "convert", str(ex1_spec), "--codewords", bad)
    assert status == 3 and "NotACodeword" in err


def test_convert_rejects_malformed_vectors(ex1_spec, capsys):
    status, _, err = run(capsys, "convert", str(ex1_spec), "--messages", "1,2;3")
    assert status == 2 and "error:" in err


def test_verify_quick_and_full(ex1_spec, ex2_spec, capsys):
    status, out, _ = run(capsys, "verify", str(ex1_spec))
    assert status == 0 and "7/7 checks passed" in out
    status, out, _ = run(capsys, "verify", str(ex2_spec), "--level", "full", "--trials", "10")
    assert status == 0
    assert "FAIL" not in out and "PASS conversion-trials" in out


def test_verify_reports_tampered_matrix(ex1_spec, capsys):
    data = json.loads(ex1_spec.read_text())
    data["M"][1][0][0] = (data["M"][1][0][0] + 1) % 19
    ex1_spec.write_text(json.dumps(data))
    status, out, _ = run(capsys, "verify", str(ex1_spec))
    assert status == 3
    line = next(ln for ln in out.splitlines() if ln.startswith("FAIL conditions"))
    assert "witness (2," in line


def test_exit_codes(tmp_path, capsys):
    status, _, err = run(capsys, "build", "--kind", "mds", "--zeta", "2", "--k", "4", "--li", "2", "--lf", "2",
                         "--field", "23")
    assert status == 2 and err.startswith("error:")
    status, _, _ = run(capsys, "build", "--kind", "lrc", "--zeta", "2", "--k", "2", "--li", "1", "--lf", "1")
    assert status == 2
    status, _, err = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert status == 4 and "SpecFile" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify", str(bad))[0] == 4
    bad.write_text(json.dumps({"schema_version": 99}))
    assert run(capsys, "verify", str(bad))[0] == 4


def test_bounds_command(capsys):
    status, out, _ = run(capsys, "bounds", "--kind", "lrc", "--ni", "9", "--k", "4", "--nf", "15", "--zeta", "2",
                         "--r", "2", "--d", "5")
    assert status == 0 and out.startswith("read>=4 write>=3 total>=7")
    status, out, _ = run(capsys, "bounds", "--kind", "mds", "--ni", "6", "--k", "4", "--nf", "10", "--zeta", "2")
    assert out.startswith("read>=4 write>=2 total>=6")
    assert run(capsys, "bounds", "--kind", "lrc", "--ni", "9", "--k", "4", "--nf", "15", "--zeta", "2")[0] == 2


@pytest.mark.parametrize("cmd", ["repro-example1", "repro-example2"])
def test_repro_commands(cmd, capsys):
    status, out, _ = run(capsys, cmd, "--seed", "1")
    assert status == 0
    assert out.count("PASS") == len(out.splitlines())


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "convcodes.cli", "bounds", "--kind", "mds", "--ni", "6", "--k", "4",
                           "--nf", "10", "--zeta", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("read>=4")
