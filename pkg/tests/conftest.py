import pytest

_LINES = pytest.StashKey[list]()


class Criterion:
    """Collects the outcome of one acceptance criterion.

    Use as a context manager; an exception inside the block is reported as
    FAIL and then re-raised.
    """

    def __init__(self, lines: list, number: int, title: str):
        self.lines = lines
        self.number = number
        self.title = title
        self.ok = False
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc_type is not None and not self.detail:
            self.detail = f"{exc_type.__name__}: {exc}"
        status = "PASS" if self.ok and exc_type is None else "FAIL"
        line = f"[{status}] criterion {self.number:>2} {self.title}: {self.detail}"
        self.lines.append(line)
        print(line)
        return False


@pytest.fixture
def criterion(request):
    lines = request.config.stash.setdefault(_LINES, [])

    def make(number: int, title: str) -> Criterion:
        return Criterion(lines, number, title)
    return make


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion")[1].split()[0])):
            terminalreporter.write_line(line)
