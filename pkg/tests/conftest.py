import support


def pytest_terminal_summary(terminalreporter):
    if support.ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in support.ACCEPTANCE:
            terminalreporter.write_line(line)
