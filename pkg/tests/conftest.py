import random

import pytest

FIXTURE_1 = b"AAAABBCCCDB"
FIXTURE_2 = b"AAABBBAACDAAAABDB"


def random_input(rng: random.Random, max_len: int = 4096, alphabet: int | None = None) -> bytes:
    """Either uniform symbols or geometric runs over a random alphabet size."""
    n = rng.randrange(max_len + 1)
    k = alphabet or rng.choice((1, 2, 4, 16, 256))
    symbols = rng.sample(range(256), k)
    if rng.random() < 0.5:
        return bytes(rng.choice(symbols) for _ in range(n))
    out = bytearray()
    p = rng.choice((0.05, 0.2, 0.5, 0.9))
    while len(out) < n:
        length = 1
        while rng.random() > p:
            length += 1
        out += bytes([rng.choice(symbols)]) * length
    return bytes(out[:n])


def random_bits(rng: random.Random, max_len: int = 20_000) -> bytes:
    """0/1 bytes with geometric or heavy-tailed (Pareto) run lengths."""
    n = rng.randrange(max_len + 1)
    heavy = rng.random() < 0.5
    p = rng.choice((0.02, 0.1, 0.5))
    v = rng.randrange(2)
    out = bytearray()
    while len(out) < n:
        if heavy:
            length = int(rng.paretovariate(rng.choice((0.7, 1.2, 2.0))))
        else:
            length = 1
            while rng.random() > p:
                length += 1
        out += bytes([v]) * length
        v ^= 1
    return bytes(out[:n])


@pytest.fixture
def rng():
    return random.Random(20150120)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
