from pathlib import Path

import pytest

from grhpsi import fields
from grhpsi.zeros import find_zeros, read_zeros, write_zeros

ROOT = Path(__file__).resolve().parent.parent
FIELDS = ROOT / "fields"
ZERO_CACHE = Path(__file__).resolve().parent / "data" / "zeros_100000.txt"

# filled by the acceptance tests, printed at the end of the run
ACCEPTANCE: list[tuple[str, bool, str]] = []


def record(name: str, ok: bool, detail: str = ""):
    ACCEPTANCE.append((name, ok, detail))


@pytest.fixture(scope="session")
def zeros_1e5():
    if ZERO_CACHE.exists():
        z = read_zeros(ZERO_CACHE)
        if len(z) >= 100000:
            return z
    z = find_zeros(100000)
    ZERO_CACHE.parent.mkdir(exist_ok=True)
    write_zeros(ZERO_CACHE, z)
    return read_zeros(ZERO_CACHE)


@pytest.fixture(scope="session")
def small_fields():
    return {
        "Q": fields.rational_field(),
        "Q(i)": fields.quadratic_field(-4),
        "Q(sqrt5)": fields.quadratic_field(5),
        "Q(sqrt-3)": fields.quadratic_field(-3),
        "Q(sqrt2)": fields.load_field_file(FIELDS / "qsqrt2.field"),
    }


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
