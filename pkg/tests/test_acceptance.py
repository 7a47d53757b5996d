"""Acceptance suite: one pass/fail line per criterion."""

from __future__ import annotations

import pytest

from gentle_cm.acceptance import CRITERIA

SLOW = {2, 6, 7, 8}


@pytest.mark.parametrize(
    "number",
    [pytest.param(n, marks=pytest.mark.slow) if n in SLOW else n for n in sorted(CRITERIA)],
    ids=lambda n: f"criterion_{n}",
)
def test_criterion(number, capsys):
    result = CRITERIA[number]()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()
