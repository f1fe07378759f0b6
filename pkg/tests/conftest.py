import os

import pytest


def pytest_collection_modifyitems(config, items):
    # the acceptance sweep shares cached objects with the unit tests; run it last
    items.sort(key=lambda it: "test_acceptance" in it.nodeid)


@pytest.fixture(scope="session")
def f4():
    from f4grad.f4lie import f4_algebra

    return f4_algebra()


@pytest.fixture(scope="session")
def albert():
    from f4grad.jordan import build_albert

    return build_albert()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
        from f4grad.verify import CHECKS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, (num, _) in CHECKS.items():
        res = RESULTS.get(name)
        if res is not None:
            terminalreporter.write_line(f"{num:2d} {res.line()}")
            for row in res.rows:
                if "BAD" in row:
                    terminalreporter.write_line(f"   {row.strip()}")
