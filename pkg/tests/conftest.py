import pytest

from ring_ob import CavityConfig, MediumParams, eta_closed_form

# Reference medium: lengths in micrometres, 0.24 um^-3 = 2.4e17 m^-3.
REF_C6 = 2.0e4
REF_DENSITY = 0.24


def figure_medium(**changes):
    """Shared parameters of the figure scenarios: omega_c = 3, delta_p = 5, alpha = 70."""
    base = dict(omega_c=3.0, delta_p=5.0, c6=REF_C6, density=REF_DENSITY, alpha=70.0)
    base.update(changes)
    return MediumParams(**base)


@pytest.fixture
def medium():
    return figure_medium()


@pytest.fixture
def cavity():
    return CavityConfig(t_mirror=0.5, cavity_detuning=0.0)


@pytest.fixture
def eta(medium):
    return eta_closed_form(medium)


_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _ACCEPTANCE.append((marker.args[0], marker.args[1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {number:>2}. {title}")
