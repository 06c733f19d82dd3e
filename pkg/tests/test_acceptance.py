"""Acceptance criteria 1-11, exact.

Each report line becomes one test.  Lines whose literal claim is
mathematically unattainable are strict xfails: they must keep failing, and the
computed witness is printed in the report.
"""

import pytest

from artifact.report import CRITERIA, run_criterion

UNATTAINABLE = {
    (3, "y_range_literal"): "H^3(Y, O(-j)) is nonzero for j = 3..8; vanishing holds only for j = -2..2",
    (4, "Tilt_-2"): "Ext^1(O, S(-2)) = C on Y, because H^1(LGr, Sym^2 S) = C",
    (4, "Tilt_T"): "same summands as Tilt_-2",
    (4, "Tilt_1"): "Ext^1(S(1), O(-2)) = C on Y",
    (9, "certs_abuaf9"): "steps through Tilt_-2 and Tilt_1 cannot have tilting certificates",
    (9, "certs_abuaf10"): "steps through Tilt_-2 and Tilt_1 cannot have tilting certificates",
}


def _cases():
    for n in sorted(CRITERIA):
        for line in run_criterion(n).lines:
            marks = []
            reason = UNATTAINABLE.get((n, line.key))
            if reason:
                marks.append(pytest.mark.xfail(strict=True, reason=reason))
            yield pytest.param(n, line.key, id=f"c{n}-{line.key}", marks=marks)


@pytest.mark.parametrize("n,key", list(_cases()))
def test_criterion_line(n, key):
    line = run_criterion(n).line(key)
    assert line.verdict == "Pass", f"{line.claim}: computed {line.computed}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion_has_no_inconclusive_line(n):
    assert all(l.verdict != "Inconclusive" for l in run_criterion(n).lines)


def test_unattainable_lines_are_still_reported():
    for (n, key) in UNATTAINABLE:
        line = run_criterion(n).line(key)
        assert line.literal
        assert line.verdict == "Fail"
        assert line.computed
