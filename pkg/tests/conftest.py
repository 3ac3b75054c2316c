"""Shared test scaffolding: an acceptance-result registry whose entries
are echoed as one line per criterion at the end of the run."""

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record_acceptance(number: int, label: str, passed: bool, detail: str = "") -> None:
    _ACCEPTANCE[number] = (label, passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        label, passed, detail = _ACCEPTANCE[number]
        line = f"ACCEPTANCE {number} ({label}): {'PASS' if passed else 'FAIL'}"
        if detail and not passed:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
