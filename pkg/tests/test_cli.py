import json

import pytest

from syncprim import cli, harness
from syncprim.automaton import cerny_automaton
from syncprim.perm import format_image


@pytest.fixture
def c5_grp(tmp_path):
    path = tmp_path / "c5.grp"
    path.write_text("# rotation\ndegree 5\n(0 1 2 3 4)\n")
    return str(path)


@pytest.fixture
def cerny4_aut(tmp_path):
    A = cerny_automaton(4)
    lines = ["degree 4"] + [format_image(f) for f in A.letters]
    path = tmp_path / "cerny4.aut"
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassifyCommand:
    def test_basic(self, capsys, c5_grp):
        code, out, _ = run(capsys, "classify", c5_grp)
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == "syncprim-report/1"
        assert doc["predicates"]["primitive"]["value"] is True
        assert doc["predicates"]["sync_maximal"]["value"] is True

    def test_all_mode(self, capsys, c5_grp):
        code, out, _ = run(capsys, "classify", c5_grp, "--mode", "all")
        assert code == 0
        assert json.loads(out)["predicates"]["sync_maximal"]["scanned"] == 1200

    def test_out_file(self, capsys, c5_grp, tmp_path):
        dest = tmp_path / "report.json"
        code, out, _ = run(capsys, "classify", c5_grp, "--out", str(dest))
        assert code == 0
        assert out == ""
        assert json.loads(dest.read_text())["group"]["degree"] == 5

    def test_timings_off_by_default(self, capsys, c5_grp):
        _, out, _ = run(capsys, "classify", c5_grp)
        assert "millis" not in out
        _, out, _ = run(capsys, "classify", c5_grp, "--timings")
        assert "millis" in out

    def test_thread_count_invariant_bytes(self, capsys, c5_grp):
        _, single, _ = run(capsys, "classify", c5_grp, "--threads", "1")
        _, multi, _ = run(capsys, "classify", c5_grp, "--threads", "8")
        assert single == multi

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.grp"
        bad.write_text("degree 3\n(0 9)\n")
        code, _, err = run(capsys, "classify", str(bad))
        assert code == 2
        assert "line 2" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "classify", str(tmp_path / "nope.grp"))
        assert code == 2
        assert "error:" in err


class TestVerifyCommand:
    def test_degree_4_exit_0(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-degree", "4")
        assert code == 0
        doc = json.loads(out)
        assert doc["ok"] is True
        assert any(d["group"] == "fix3_C3" for d in doc["expected_divergences"])

    def test_violation_exits_1(self, capsys, monkeypatch):
        summary = harness.VerifySummary("idempotents_only", 3)
        summary.violations.append({"group": "x", "check": "fake"})
        monkeypatch.setattr(harness, "verify_theorems", lambda *a, **k: summary)
        code, out, _ = run(capsys, "verify", "--max-degree", "3")
        assert code == 1
        assert json.loads(out)["ok"] is False

    def test_over_cap_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "--max-degree", "9")
        assert code == 2
        assert "error:" in err


class TestSearchCommand:
    def test_writes_records(self, capsys, tmp_path):
        dest = tmp_path / "records.jsonl"
        code, out, _ = run(capsys, "search", "--degrees", "4", "--out", str(dest))
        assert code == 0
        names = [json.loads(line)["name"] for line in dest.read_text().splitlines()]
        assert "S4" in names and "C4" in names

    def test_resume_skips_done(self, capsys, tmp_path):
        dest = tmp_path / "records.jsonl"
        run(capsys, "search", "--degrees", "4", "--out", str(dest))
        first = len(dest.read_text().splitlines())
        code, out, _ = run(capsys, "search", "--degrees", "4", "--out", str(dest), "--resume")
        assert code == 0
        assert "wrote 0 records" in out
        assert len(dest.read_text().splitlines()) == first

    def test_stdout_without_out(self, capsys):
        code, out, _ = run(capsys, "search", "--degrees", "3..3")
        assert code == 0
        for line in out.splitlines():
            assert json.loads(line)["schema"] == "syncprim-record/1"

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "search", "--degrees", "3..x")
        assert code == 2
        assert "degree range" in err


class TestSynDfaCommand:
    def test_cerny4(self, capsys, cerny4_aut):
        code, out, _ = run(capsys, "syn-dfa", cerny4_aut)
        assert code == 0
        doc = json.loads(out)
        assert doc["state_count"] == 2 ** 4 - 4
        assert doc["synchronizing"] is True
        assert doc["reset_word_length"] == 9

    def test_non_synchronizing(self, capsys, tmp_path):
        path = tmp_path / "rot.aut"
        path.write_text("degree 3\n1 2 0\n")
        code, out, _ = run(capsys, "syn-dfa", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["synchronizing"] is False
        assert "reset_word" not in doc
        assert doc["state_count"] == 1  # empty language


class TestWitnessCommand:
    def test_distinguishable(self, capsys, cerny4_aut):
        code, out, _ = run(capsys, "witness", cerny4_aut, "{0,1}", "{1,2}")
        assert code == 0
        doc = json.loads(out)
        assert doc["distinguishable"] is True
        imgs = {doc["image_S"], doc["image_T"]}
        assert sum(1 for s in imgs if "," not in s) >= 1

    def test_rejects_singletons(self, capsys, cerny4_aut):
        code, _, err = run(capsys, "witness", cerny4_aut, "{0}", "{1,2}")
        assert code == 2
        assert "at least 2" in err

    def test_bad_set_syntax(self, capsys, cerny4_aut):
        code, _, err = run(capsys, "witness", cerny4_aut, "0,1", "{1,2}")
        assert code == 2
