"""Shared pytest wiring: one-line verdicts for the headline behavior checks."""

import contextlib

_VERDICTS: list[tuple[str, str, bool]] = []


@contextlib.contextmanager
def acceptance(tag: str, summary: str):
    """Record a pass or fail line for the terminal summary, then re-raise."""
    try:
        yield
    except BaseException:
        _VERDICTS.append((tag, summary, False))
        raise
    else:
        _VERDICTS.append((tag, summary, True))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance checks")
    for tag, summary, ok in _VERDICTS:
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{verdict}  {tag}  {summary}")
