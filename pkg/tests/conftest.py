ACCEPTANCE_LINES: list[str] = []


def record_acceptance(index: int, description: str, ok: bool) -> None:
    """Log one acceptance criterion outcome, then assert it.

    The line is recorded before the assert so failures still show up in
    the terminal summary.
    """
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {index:02d}: {description}")
    assert ok, f"acceptance criterion {index:02d} failed: {description}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
