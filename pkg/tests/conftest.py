import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_terminal_summary(terminalreporter):
    if not any(r.nodeid.startswith("tests/test_acceptance.py") or "test_acceptance.py" in r.nodeid
               for rs in terminalreporter.stats.values() for r in rs if hasattr(r, "nodeid")):
        return
    from artifact.report import CRITERIA, run_criterion
    from test_acceptance import UNATTAINABLE

    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        r = run_criterion(n)
        failing = [l.key for l in r.lines if l.literal and l.verdict != "Pass"]
        if not failing:
            tr.write_line(f"criterion {n:2d}: PASS  {r.title}")
            continue
        known = all((n, k) in UNATTAINABLE for k in failing)
        tag = "xfail: literal clause unattainable" if known else "unexpected"
        tr.write_line(f"criterion {n:2d}: FAIL  {r.title} ({tag}: {', '.join(failing)})")
