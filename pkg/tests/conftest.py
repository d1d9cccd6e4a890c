import numpy as np
import pytest

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None and report.when == "call":
        _CRITERIA.append((mark.args[0], mark.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    merged = {}
    for number, title, outcome in _CRITERIA:
        ok = merged.get(number, (title, True))[1] and outcome == "passed"
        merged[number] = (title, ok)
    for number in sorted(merged):
        title, ok = merged[number]
        terminalreporter.write_line(f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def literal_wigner_angle(v1, v2, theta):
    """Half-tangent formula written with Lorentz factors, independent of the
    library's tanh(xi/2) rewrite."""
    g1 = 1.0 / np.sqrt(1.0 - v1 * v1)
    g2 = 1.0 / np.sqrt(1.0 - v2 * v2)
    D = np.sqrt((g1 + 1.0) / (g1 - 1.0) * (g2 + 1.0) / (g2 - 1.0))
    return 2.0 * np.arctan2(np.sin(theta), np.cos(theta) + D)


def binary_entropy_oracle(x):
    x = float(x)
    return -sum(q * np.log2(q) for q in (x, 1.0 - x) if q > 0)
