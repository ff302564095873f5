import pytest

from thickreps.rootsystem import CartanType, build_root_system

SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "C4", "D4", "D5", "G2", "F4", "E6"]


@pytest.fixture(params=SMALL_TYPES)
def small_rs(request):
    return build_root_system(request.param)


def all_types(max_rank):
    out = []
    for fam, lo in [("A", 1), ("B", 2), ("C", 2), ("D", 3)]:
        out += [CartanType(fam, r) for r in range(lo, max_rank + 1)]
    out += [CartanType("E", r) for r in (6, 7, 8) if r <= max_rank]
    if max_rank >= 4:
        out.append(CartanType("F", 4))
    out.append(CartanType("G", 2))
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        ok, detail = results[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
