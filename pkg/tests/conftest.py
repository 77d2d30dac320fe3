import re
import subprocess
import sys

import pytest

from critset.datasets import demo_graph


@pytest.fixture(scope="session")
def demo():
    return demo_graph()


@pytest.fixture
def demo_graph_file(tmp_path):
    from critset.datasets import DEMO_GRAPH_TEXT

    path = tmp_path / "demo.graph"
    path.write_text(DEMO_GRAPH_TEXT, encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def run_cli():
    def run(*argv, expect=0):
        proc = subprocess.run(
            [sys.executable, "-m", "critset", *map(str, argv)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == expect, proc.stderr
        return proc

    return run


_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # One pass/fail line per acceptance criterion, in criterion order.
    rows = []
    for status, word in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(status, []):
            if "test_acceptance" not in report.nodeid:
                continue
            match = _CRITERION.search(report.nodeid)
            if match:
                rows.append((int(match.group(1)), report.nodeid.split("::")[-1], word))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for _, name, word in sorted(rows):
            terminalreporter.write_line(f"{word}  {name}")
