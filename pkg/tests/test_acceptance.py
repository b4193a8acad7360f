"""One line per acceptance criterion; run with ``pytest -s`` to see them."""
import pytest

from fraisse.acceptance import CRITERIA, run_suite


@pytest.mark.parametrize("num, title, check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, check):
    ok, detail = check()
    print(f"{'PASS' if ok else 'FAIL'}  {num:>2}. {title}: {detail}")
    assert ok, detail


def test_run_suite_reports_every_criterion():
    lines = []
    assert run_suite("core", out=lines.append)
    assert len(lines) == len(CRITERIA) == 10
    assert all(line.startswith("PASS") for line in lines)
    with pytest.raises(ValueError):
        run_suite("full")
