import io
import json

import pytest

from kadjust.cli import main, parse_measure, parse_schedule
from kadjust.simulate import GeneratorSpec

from conftest import WORD35_STR

GOLDEN_ANALYZE = {
    "n": 35,
    "w": 9,
    "H": 0.822404,
    "baseline": 28.7841,
    "k_eff": 31.2432,
    "KA": 37.9901,
    "R": 1.08543,
    "deficiency": -2.45909,
    "coder": "shell",
}

GOLDEN_TEST = {
    "decision": "accept",
    "R": 1.08543,
    "deficiency": -2.45909,
    "threshold": 0.826293,
    "m": 5,
    "coder": "shell",
    "n": 35,
    "w": 9,
}


@pytest.fixture
def word_file(tmp_path):
    path = tmp_path / "word35.txt"
    path.write_text(WORD35_STR + "\n")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParseHelpers:
    def test_measures(self):
        spec = parse_measure("bernoulli:0.3", seed=7, length=100)
        assert spec == GeneratorSpec.bernoulli(0.3, 7, 100)
        spec = parse_measure("mixture:0.25:0.1,0.75:0.9", seed=1, length=10)
        assert spec.components == ((0.25, 0.1), (0.75, 0.9))
        assert parse_measure("block", seed=1, length=10).kind == "block"
        for bad in ("block:x", "gauss:1", "mixture:0.5", "bernoulli:"):
            with pytest.raises(ValueError):
                parse_measure(bad, seed=1, length=10)

    def test_schedule(self):
        assert parse_schedule("16,64,256", 1000) == [16, 64, 256]
        assert parse_schedule(None, 64)[-1] == 64
        with pytest.raises(ValueError):
            parse_schedule(",", 64)


class TestAnalyze:
    def test_golden_json(self, capsys, word_file):
        code, out, _ = run_cli(capsys, "analyze", word_file, "--coder", "shell", "--format", "json")
        assert code == 0
        assert json.loads(out.strip()) == GOLDEN_ANALYZE

    def test_constant_word_reports_nulls(self, capsys, tmp_path):
        path = tmp_path / "const.txt"
        path.write_text("0000000000")
        code, out, _ = run_cli(capsys, "analyze", str(path), "--format", "json")
        assert code == 0
        rec = json.loads(out.strip())
        assert rec["H"] == 0.0 and rec["R"] is None and rec["KA"] is None
        assert list(rec) == list(GOLDEN_ANALYZE)

    def test_multiple_inputs_in_order(self, capsys, tmp_path):
        a = tmp_path / "a.txt"
        a.write_text("0101")
        b = tmp_path / "b.txt"
        b.write_text("0011")
        code, out, _ = run_cli(capsys, "analyze", str(a), str(b), "--format", "json")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert [rec["w"] for rec in lines] == [2, 2]

    def test_table_format(self, capsys, word_file):
        code, out, _ = run_cli(capsys, "analyze", word_file)
        assert code == 0
        assert "R" in out and "1.08543" in out

    def test_hex_input(self, capsys, tmp_path):
        path = tmp_path / "w.hex"
        path.write_text("ff00")
        code, out, _ = run_cli(capsys, "analyze", str(path), "--input-format", "hex", "--format", "json")
        assert code == 0
        assert json.loads(out.strip())["n"] == 16

    def test_bad_characters_usage_error(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("01021")
        code, _, err = run_cli(capsys, "analyze", str(path))
        assert code == 2
        assert "error" in err


class TestTestCommand:
    def test_accept_exit_zero_golden(self, capsys, word_file):
        code, out, _ = run_cli(
            capsys, "test", word_file, "--coder", "shell", "--m", "5", "--format", "json"
        )
        assert code == 0
        assert json.loads(out.strip()) == GOLDEN_TEST

    def test_reject_exit_one(self, capsys, tmp_path):
        path = tmp_path / "alt.txt"
        path.write_text("01" * 500)
        code, out, _ = run_cli(
            capsys, "test", str(path), "--coder", "model_class", "--m", "5", "--format", "json"
        )
        assert code == 1
        assert json.loads(out.strip())["decision"] == "reject"

    def test_constant_word_not_a_rejection(self, capsys, tmp_path):
        path = tmp_path / "c.txt"
        path.write_text("1111")
        code, out, _ = run_cli(capsys, "test", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out.strip())["decision"] == "constant-word"


class TestPairCommands:
    def test_cond(self, capsys, tmp_path):
        x = tmp_path / "x.txt"
        x.write_text("0" * 19 + "0" * 7 + "1" * 6 + "1" * 3)
        y = tmp_path / "y.txt"
        y.write_text("0" * 19 + "1" * 7 + "0" * 6 + "1" * 3)
        code, out, _ = run_cli(capsys, "cond", str(x), str(y), "--format", "json")
        assert code == 0
        rec = json.loads(out.strip())
        assert rec["H_cond"] == pytest.approx(0.819685, abs=1e-4)
        assert rec["R_cond"] == pytest.approx(1.13288, abs=1e-3)

    def test_mutual(self, capsys, tmp_path):
        x = tmp_path / "x.txt"
        x.write_text("01" * 32)
        code, out, _ = run_cli(capsys, "mutual", str(x), str(x), "--format", "json")
        assert code == 0
        rec = json.loads(out.strip())
        assert rec["I_emp"] == 1.0
        assert 0.8 <= rec["R_mutual"] <= 1.2

    def test_pair_requires_two_inputs(self, capsys, tmp_path):
        x = tmp_path / "x.txt"
        x.write_text("0101")
        code, _, err = run_cli(capsys, "cond", str(x))
        assert code == 2

    def test_mutual_zero_baseline_usage_error(self, capsys, tmp_path):
        x = tmp_path / "x.txt"
        x.write_text("0011" * 4)
        y = tmp_path / "y.txt"
        y.write_text("0101" * 4)
        code, _, err = run_cli(capsys, "mutual", str(x), str(y))
        assert code == 2
        assert "mutual" in err


class TestSimulateCommand:
    def test_csv_trace(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "simulate",
            "--measure", "bernoulli:0.3",
            "--length", "4096",
            "--seed", "9",
            "--coder", "shell",
            "--schedule", "16,256,4096",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "m,p_hat,H,K_eff,R,coder"
        assert len(lines) == 4
        final = lines[-1].split(",")
        assert final[0] == "4096" and final[-1] == "shell"
        assert float(final[4]) == pytest.approx(1.0, abs=0.05)

    def test_block_measure(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "simulate",
            "--measure", "block",
            "--length", "8192",
            "--seed", "7",
            "--coder", "pair_shell",
            "--schedule", "8192",
        )
        assert code == 0
        final = out.strip().splitlines()[-1].split(",")
        assert float(final[4]) == pytest.approx(0.7925, abs=0.02)

    def test_block_measure_long_run(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "simulate",
            "--measure", "block",
            "--coder", "pair_shell",
            "--length", "131072",
            "--seed", "7",
        )
        assert code == 0
        final = out.strip().splitlines()[-1].split(",")
        assert final[0] == "131072"
        assert float(final[4]) == pytest.approx(0.7925, abs=0.01)

    def test_bad_measure_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "simulate", "--measure", "gauss:1", "--length", "64")
        assert code == 2


class TestCalibrateCommand:
    def test_csv_output(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "calibrate",
            "--measure", "bernoulli:0.5",
            "--length", "64",
            "--trials", "200",
            "--seed", "3",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "m,trials,rejections,rate,bound"
        assert len(lines) == 9
        first = lines[1].split(",")
        assert first[0] == "1" and first[1] == "200"

    def test_requires_bernoulli(self, capsys):
        code, _, _ = run_cli(capsys, "calibrate", "--measure", "block", "--length", "64")
        assert code == 2


class TestAuditCommand:
    def test_audit_runs_clean(self, capsys):
        code, out, _ = run_cli(capsys, "audit", "--length", "8", "--coder", "run_length")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,t,count,bound,ok"
        assert lines[-1] == "# violations: 0"

    def test_audit_rejects_ideal_coder(self, capsys):
        code, _, err = run_cli(capsys, "audit", "--length", "8", "--coder", "pair_shell")
        assert code == 2


class TestUsageErrors:
    def test_unknown_coder_exits_two(self, capsys, word_file):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", word_file, "--coder", "zip"])
        assert exc.value.code == 2

    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "/nonexistent/path.txt")
        assert code == 2


class TestStdin:
    def test_reads_stdin_by_default(self, capsys, monkeypatch):
        stdin = io.TextIOWrapper(io.BytesIO(WORD35_STR.encode()), encoding="utf-8")
        monkeypatch.setattr("sys.stdin", stdin)
        code, out, _ = run_cli(capsys, "analyze", "--format", "json")
        assert code == 0
        assert json.loads(out.strip())["w"] == 9
