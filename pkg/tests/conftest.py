import sys

import pytest

from cyclo2adic import build_partition, generate, make_params
from cyclo2adic.numtheory import is_prime

TABLE = {
    (5, 3): (15, 6),
    (5, 7): (35, 22),
    (5, 11): (55, 38),
    (13, 11): (143, 118),
    (13, 23): (299, 262),
    (17, 11): (187, 158),
    (17, 19): (323, 286),
    (17, 23): (391, 350),
    (17, 31): (527, 478),
    (17, 43): (731, 670),
}


def strict_pairs(max_n):
    """All (p, q) with p = 1, q = 3 (mod 4), gcd(p-1, q-1) = 2 and pq <= max_n."""
    from math import gcd

    out = []
    for p in range(5, max_n // 3 + 1, 4):
        if not is_prime(p):
            continue
        for q in range(3, max_n // p + 1, 4):
            if is_prime(q) and gcd(p - 1, q - 1) == 2:
                out.append((p, q))
    return out


@pytest.fixture(scope="session")
def instance():
    cache = {}

    def get(p, q, **kw):
        key = (p, q, tuple(sorted(kw.items())))
        if key not in cache:
            params = make_params(p, q, **kw)
            part = build_partition(params)
            cache[key] = (params, part, generate(part))
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
