import _acceptance_log


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance_log.RESULTS):
        terminalreporter.write_line(_acceptance_log.RESULTS[num])
