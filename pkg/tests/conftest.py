"""Shared test plumbing: the acceptance module registers one PASS/FAIL line
per criterion here, and the terminal summary prints them even when pytest's
capture swallows in-test output."""

ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
