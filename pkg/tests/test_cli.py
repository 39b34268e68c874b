"""CLI behavior: flag validation, exit codes, report plumbing, output text."""

import os
import subprocess
import sys

import numpy as np
import pytest

from halfsib.cli import main
from halfsib.embeddings import load_embeddings
from halfsib.published import fixture_report_path
from halfsib.reports import load_report


@pytest.fixture
def corpus_files(tmp_path):
    """Small embedding file plus stop/ranking lists and task datasets."""
    rng = np.random.default_rng(2718)
    stop = ["the", "of", "and", "to", "a", "in"]
    content = [f"word{i}" for i in range(24)]
    emb = tmp_path / "emb.txt"
    common = rng.normal(size=6)
    with emb.open("w") as fh:
        for w in stop + content:
            vec = rng.normal(size=6) + common * rng.normal() * 1.5
            fh.write(w + " " + " ".join(f"{v:.6f}" for v in vec) + "\n")
    stopfile = tmp_path / "stop.txt"
    stopfile.write_text("\n".join(stop) + "\n")
    rankfile = tmp_path / "rank.txt"
    rankfile.write_text("\n".join(content) + "\n")
    pairs = tmp_path / "pairs.tsv"
    lines = [f"word{i}\tword{i + 1}\t{(i * 7) % 10}.5" for i in range(0, 20, 2)]
    pairs.write_text("\n".join(lines) + "\n")
    return {
        "emb": str(emb),
        "stop": str(stopfile),
        "rank": str(rankfile),
        "pairs": str(pairs),
        "dir": tmp_path,
    }


class TestPostprocess:
    def test_hsr_runs_and_writes(self, corpus_files, capsys):
        out = corpus_files["dir"] / "out.txt"
        code = main(
            [
                "postprocess",
                "--input", corpus_files["emb"],
                "--output", str(out),
                "--method", "hsr-rr",
                "--stopwords", corpus_files["stop"],
                "--freq-ranking", corpus_files["rank"],
            ]
        )
        assert code == 0
        stdout = capsys.readouterr().out
        assert "method     : hsr-rr" in stdout
        assert "function   : 6" in stdout
        table = load_embeddings(str(out))
        assert len(table) == 30
        assert table.dim == 6

    def test_abtt_runs(self, corpus_files, capsys):
        out = corpus_files["dir"] / "out.txt"
        code = main(
            ["postprocess", "--input", corpus_files["emb"], "--output", str(out),
             "--method", "abtt", "--d", "2"]
        )
        assert code == 0
        assert "removed    : 2 component(s)" in capsys.readouterr().out

    def test_abtt_requires_d(self, corpus_files):
        with pytest.raises(SystemExit) as exc:
            main(["postprocess", "--input", corpus_files["emb"], "--output", "x",
                  "--method", "abtt"])
        assert exc.value.code == 2

    def test_d_rejected_for_hsr(self, corpus_files):
        with pytest.raises(SystemExit) as exc:
            main(["postprocess", "--input", corpus_files["emb"], "--output", "x",
                  "--method", "hsr-rr", "--d", "3"])
        assert exc.value.code == 2

    def test_hsr_flags_rejected_for_abtt(self, corpus_files):
        with pytest.raises(SystemExit) as exc:
            main(["postprocess", "--input", corpus_files["emb"], "--output", "x",
                  "--method", "abtt", "--d", "1", "--alpha1", "10"])
        assert exc.value.code == 2

    def test_nonpositive_alpha_rejected(self, corpus_files):
        with pytest.raises(SystemExit) as exc:
            main(["postprocess", "--input", corpus_files["emb"], "--output", "x",
                  "--method", "hsr-rr", "--alpha1", "0"])
        assert exc.value.code == 2

    def test_missing_input_is_runtime_error(self, tmp_path, capsys):
        code = main(["postprocess", "--input", str(tmp_path / "none.txt"),
                     "--output", str(tmp_path / "o.txt"), "--method", "abtt", "--d", "1"])
        assert code == 1
        assert "IoFailure" in capsys.readouterr().err

    def test_oversized_d_is_runtime_error(self, corpus_files, capsys):
        code = main(["postprocess", "--input", corpus_files["emb"],
                     "--output", str(corpus_files["dir"] / "o.txt"),
                     "--method", "abtt", "--d", "999"])
        assert code == 1
        assert "ShapeMismatch" in capsys.readouterr().err

    def test_write_header_and_precision(self, corpus_files):
        out = corpus_files["dir"] / "out.txt"
        code = main(
            ["postprocess", "--input", corpus_files["emb"], "--output", str(out),
             "--method", "abtt", "--d", "1", "--write-header", "--precision", "3"]
        )
        assert code == 0
        first, second = out.read_text().splitlines()[:2]
        assert first == "30 6"
        mantissas = second.split()[1:]
        assert all(len(tok.split(".")[1]) == 3 for tok in mantissas)


class TestEvaluate:
    def test_wordsim_report_on_stdout_and_file(self, corpus_files, capsys):
        report_path = corpus_files["dir"] / "rep.tsv"
        code = main(
            ["evaluate", "--embeddings", corpus_files["emb"], "--task", "wordsim",
             "--data", corpus_files["pairs"], "--label", "orig",
             "--output", str(report_path)]
        )
        assert code == 0
        captured = capsys.readouterr()
        assert captured.out.startswith("# method: orig\n")
        assert "pairs\t" in captured.out
        assert "# aggregate:" in captured.out
        rep = load_report(str(report_path))
        assert rep.method == "orig"
        assert rep.per_task[0][0] == "pairs"
        assert -1.0 <= rep.per_task[0][1] <= 1.0

    def test_default_label_is_file_stem(self, corpus_files, capsys):
        code = main(["evaluate", "--embeddings", corpus_files["emb"], "--task",
                     "wordsim", "--data", corpus_files["pairs"]])
        assert code == 0
        assert "# method: emb\n" in capsys.readouterr().out

    def test_failed_task_gives_exit_1(self, corpus_files, capsys):
        missing = str(corpus_files["dir"] / "absent.tsv")
        code = main(["evaluate", "--embeddings", corpus_files["emb"], "--task",
                     "wordsim", "--data", corpus_files["pairs"], missing])
        assert code == 1
        captured = capsys.readouterr()
        assert "FAILED absent" in captured.err
        assert "pairs\t" in captured.out  # good rows still reported

    def test_human_table_on_stderr(self, corpus_files, capsys):
        main(["evaluate", "--embeddings", corpus_files["emb"], "--task", "wordsim",
              "--data", corpus_files["pairs"]])
        err = capsys.readouterr().err
        assert "task type: wordsim" in err
        assert "aggregate" in err


class TestSignificance:
    def test_bundled_fixture_reports_reproduce_known_p(self, capsys):
        code = main(
            ["significance",
             "--baseline", fixture_report_path("wordsim_word2vec_orig"),
             "--treatment", fixture_report_path("wordsim_word2vec_hsr-rr")]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "t = 2.445" in out
        assert "df = 6" in out
        assert "p = 2.51e-02" in out
        assert "alternative: treatment > baseline" in out

    def test_mismatched_reports_fail(self, corpus_files, capsys):
        code = main(
            ["significance",
             "--baseline", fixture_report_path("wordsim_word2vec_orig"),
             "--treatment", fixture_report_path("sts_glove_orig")]
        )
        assert code == 1
        assert "TaskMismatch" in capsys.readouterr().err

    def test_missing_report_file(self, tmp_path, capsys):
        code = main(["significance", "--baseline", str(tmp_path / "a.tsv"),
                     "--treatment", str(tmp_path / "b.tsv")])
        assert code == 1
        assert "IoFailure" in capsys.readouterr().err


class TestParserBasics:
    def test_no_command_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_task_rejected(self, corpus_files):
        with pytest.raises(SystemExit) as exc:
            main(["evaluate", "--embeddings", corpus_files["emb"], "--task",
                  "parsing", "--data", "x"])
        assert exc.value.code == 2

    def test_module_entrypoint(self):
        proc = subprocess.run(
            [sys.executable, "-m", "halfsib", "--help"],
            capture_output=True,
            text=True,
            timeout=60,
        )
        assert proc.returncode == 0
        assert "postprocess" in proc.stdout
        assert "significance" in proc.stdout


class TestServerClientMode:
    def test_relative_paths_pinned_before_shipping(self, corpus_files, tmp_path, monkeypatch):
        # a server has its own cwd, so the client must send absolute paths
        import halfsib.cli as cli_mod

        sent = {}

        def fake_post(server, endpoint, payload):
            sent["endpoint"] = endpoint
            sent["payload"] = payload
            return {
                "method": "abtt", "vocab_size": 30, "dim": 6,
                "components_removed": 1, "wall_seconds": 0.0,
                "output_path": payload["output_path"], "warnings": [],
            }

        monkeypatch.setattr(cli_mod, "_post", fake_post)
        monkeypatch.chdir(os.path.dirname(corpus_files["emb"]))
        code = main(["postprocess", "--input", os.path.basename(corpus_files["emb"]),
                     "--output", "out.txt", "--method", "abtt", "--d", "1",
                     "--server", "http://example.invalid:1"])
        assert code == 0
        assert sent["endpoint"] == "/postprocess"
        assert os.path.isabs(sent["payload"]["input_path"])
        assert sent["payload"]["input_path"] == corpus_files["emb"]
        assert os.path.isabs(sent["payload"]["output_path"])

    def test_evaluate_data_paths_pinned(self, corpus_files, monkeypatch):
        import halfsib.cli as cli_mod

        sent = {}

        def fake_post(server, endpoint, payload):
            sent["payload"] = payload
            return {
                "method": "orig", "task_type": "wordsim",
                "rows": [{"task": "pairs", "score": 0.5,
                          "pairs_used": 10, "pairs_skipped": 0}],
                "aggregate": 0.5, "failures": [],
            }

        monkeypatch.setattr(cli_mod, "_post", fake_post)
        monkeypatch.chdir(os.path.dirname(corpus_files["pairs"]))
        code = main(["evaluate", "--embeddings", corpus_files["emb"], "--task",
                     "wordsim", "--data", os.path.basename(corpus_files["pairs"]),
                     "--server", "http://example.invalid:1"])
        assert code == 0
        assert sent["payload"]["data_paths"] == [corpus_files["pairs"]]
