import pytest

from spnet.corpus import EXAMPLES

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _ACCEPTANCE.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}")


@pytest.fixture(params=sorted(EXAMPLES))
def example(request):
    return EXAMPLES[request.param]


def load(example_id):
    return EXAMPLES[example_id].load()


@pytest.fixture
def fig1a():
    return load("fig1a")


@pytest.fixture
def fig1b():
    return load("fig1b")


@pytest.fixture
def bees():
    return load("bees")


@pytest.fixture
def decision():
    return load("product-decision")


@pytest.fixture
def producer_consumer():
    return load("producer-consumer")


@pytest.fixture
def plagiarism():
    return load("plagiarism-k5")
