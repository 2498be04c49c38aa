import pytest

ACCEPTANCE: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(item.function, "criterion", None)
    if label and rep.when == "call":
        ACCEPTANCE[label] = "PASS" if rep.passed else "FAIL"
    elif label and rep.when == "setup" and rep.failed:
        ACCEPTANCE[label] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{ACCEPTANCE[label]} {label}")
