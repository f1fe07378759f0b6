"""The fourteen acceptance criteria, one test each.

Each test records a PASS/FAIL line; the lines are printed together in the
terminal summary (see conftest.py) and by running this file directly.
"""

import pytest

from f4grad.verify import CHECKS, run_check

RESULTS: dict[str, object] = {}


@pytest.mark.parametrize("name", list(CHECKS), ids=[f"{n:02d}-{k}" for k, (n, _) in CHECKS.items()])
def test_criterion(name):
    res = run_check(name)
    RESULTS[name] = res
    print(res.line())
    print("\n".join(res.rows))
    assert res.ok, "\n".join(r for r in res.rows if "BAD" in r)


if __name__ == "__main__":
    import sys

    ok = True
    for name, (num, _) in CHECKS.items():
        r = run_check(name)
        ok &= r.ok
        print(f"{num:2d} {r.line()}", flush=True)
    sys.exit(0 if ok else 1)
