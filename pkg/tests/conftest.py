import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Repeat the verification checklist lines after the run."""
    mod = sys.modules.get("test_acceptance")
    checklist = getattr(mod, "CHECKLIST", None) if mod else None
    if not checklist:
        return
    terminalreporter.write_sep("-", "verification checklist")
    for num, ok, text in sorted(checklist):
        terminalreporter.write_line(f"[{num:02d}] {'PASS' if ok else 'FAIL'} {text}")
