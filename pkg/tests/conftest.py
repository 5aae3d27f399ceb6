from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


def reference_bases(n):
    """Literal transcription of the base recursion, kept apart from the package."""
    if n == 1:
        return [1]
    out = []
    for i in range(n):
        if i in (0, 1):
            out.append(i + 2)
        else:
            out.append(2 ** (i + 1) - 1 - sum(out[j] for j in range(i) if j % 2 == 1))
    return out


def reference_decode(text):
    """Decode a '0'/'1' string straight from the representation formula."""
    n = len(text)
    d = [int(c) for c in reversed(text)]
    B = reference_bases(n)
    total = 0
    for i in range(n):
        eps = 1 if (i % 2 == 0 and i <= n - 2 and d[i] == 1 and d[i + 1] == 1) else 0
        total += (-1) ** eps * d[i] * B[i]
    return total


def reference_inverse(n):
    """value -> bit string by enumerating every pattern with reference_decode."""
    table = {}
    for p in range(2**n):
        text = format(p, f"0{n}b")
        v = reference_decode(text)
        assert v not in table, (n, v)
        table[v] = text
    return table


@pytest.fixture
def golden_dir():
    return GOLDEN


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
