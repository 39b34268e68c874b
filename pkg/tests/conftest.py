"""Shared fixtures: small deterministic embedding tables and dataset files.

Also owns the acceptance-summary hook: test_acceptance.py records one
PASS/FAIL line per criterion and the hook reprints them after the run so
the verdicts are visible in plain `pytest -v` output.
"""

from __future__ import annotations

import numpy as np
import pytest

from halfsib.embeddings import EmbeddingTable

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


def make_table(words, matrix):
    arr = np.asarray(matrix, dtype=np.float64)
    return EmbeddingTable(tuple(words), arr.copy(), arr.shape[0])


@pytest.fixture
def tiny_table():
    """4 words, dim 3, hand-pickable numbers."""
    return make_table(
        ["alpha", "beta", "gamma", "delta"],
        [
            [1.0, 0.0, 2.0, 1.0],
            [0.0, 1.0, 0.0, 1.0],
            [2.0, 1.0, 1.0, 0.5],
        ],
    )


@pytest.fixture
def random_table():
    """40 words, dim 12, fixed seed; columns share a planted common
    direction so denoising has something to remove."""
    rng = np.random.default_rng(9001)
    dim, v = 12, 40
    common = rng.normal(size=(dim, 1))
    mat = rng.normal(size=(dim, v)) + common * rng.normal(size=(1, v)) * 1.5
    words = [f"w{j:02d}" for j in range(v)]
    return make_table(words, mat)


@pytest.fixture
def write_lines(tmp_path):
    def _write(name, lines):
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return str(path)

    return _write
