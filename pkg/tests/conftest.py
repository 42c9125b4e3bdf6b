from pathlib import Path

import pytest

from sentence_entropy import load_counts

COUNTS_DIR = Path(__file__).resolve().parents[1] / "data" / "counts"

# criterion -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def record(criterion, passed, detail=""):
    ACCEPTANCE_RESULTS.setdefault(criterion, []).append((bool(passed), detail))
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE_RESULTS):
        checks = ACCEPTANCE_RESULTS[criterion]
        ok = all(p for p, _ in checks)
        failed = [d for p, d in checks if not p]
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion} ({len(checks)} checks)"
        if failed:
            line += ": " + "; ".join(failed[:3])
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def counts_dir():
    return COUNTS_DIR


@pytest.fixture(scope="session")
def published():
    """Profiles for every published sample, keyed by (family, label)."""
    out = {}
    for path in sorted(COUNTS_DIR.glob("*.json")):
        family, label = path.stem.rsplit("_", 1)
        out[family, label] = load_counts(path)
    return out
