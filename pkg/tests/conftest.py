import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
ROOT = TESTS.parent
MINI_CORPUS = ROOT / "fixtures" / "mini_corpus"
EVAL_SAMPLE = ROOT / "fixtures" / "eval_sample"
LEXER_DATA = TESTS / "data" / "lexer"

sys.path.insert(0, str(TESTS))  # naive oracles live next to the tests

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    failed = rep.failed or (rep.when == "call" and rep.skipped)
    prev = _criteria.get(num, (title, "PASS"))[1]
    _criteria[num] = (title, "FAIL" if failed or prev == "FAIL" else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria, key=int):
        title, status = _criteria[num]
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")
