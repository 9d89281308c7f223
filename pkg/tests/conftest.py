import pytest
from hypothesis import settings

from rmiwm import GrayImage, RmiKey
from rmiwm import golden

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def golden_host():
    return GrayImage(golden.HOST)


@pytest.fixture
def golden_key():
    return RmiKey(golden.KEY)


@pytest.fixture
def golden_marked():
    return GrayImage(golden.WATERMARKED)


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _acceptance.append((marker.args[0], "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _acceptance:
        terminalreporter.write_line(f"{status}  {name}")
