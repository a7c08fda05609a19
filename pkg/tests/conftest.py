import pytest

from eisenpq.p1 import Level

LEVELS = [Level(3, 5), Level(3, 7), Level(3, 11), Level(5, 7)]

# criterion number -> (passed, summary); filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture(params=LEVELS, ids=lambda L: f"pq{L.pq}")
def level(request):
    return request.param


@pytest.fixture
def level15():
    return Level(3, 5)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, summary = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {summary}")
