import pytest
from hypothesis import settings

settings.register_profile("repo", deadline=None, print_blob=True)
settings.load_profile("repo")

# (number, description, passed) for each acceptance criterion that ran
ACCEPTANCE_RESULTS = []


@pytest.fixture
def criterion():
    """Record an acceptance criterion as passed unless its body raises."""
    class _Recorder:
        def __call__(self, number, description):
            self.entry = [number, description, False]
            ACCEPTANCE_RESULTS.append(self.entry)
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            self.entry[2] = exc_type is None
            status = "PASS" if self.entry[2] else "FAIL"
            print(f"[{status}] criterion {self.entry[0]}: {self.entry[1]}")
            return False

    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        terminalreporter.write_line(
            f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {description}"
        )
