import itertools
import os

import hypothesis
import pytest

from mgrr.digraph import Digraph

hypothesis.settings.register_profile("default", deadline=None, max_examples=50)
hypothesis.settings.load_profile("default")


def brute_automorphism_order(g: Digraph) -> int:
    """Factorial-time oracle: count arc-preserving permutations."""
    n = g.n
    count = 0
    for p in itertools.permutations(range(n)):
        ok = True
        for u in range(n):
            row = g.rows[u]
            mapped = 0
            while row:
                low = row & -row
                mapped |= 1 << p[low.bit_length() - 1]
                row ^= low
            if mapped != g.rows[p[u]]:
                ok = False
                break
        if ok:
            count += 1
    return count


def extended_enabled() -> bool:
    return os.environ.get("MGRR_EXTENDED", "") not in ("", "0")


requires_extended = pytest.mark.skipif(
    not extended_enabled(),
    reason="extended sweep; enable with MGRR_EXTENDED=1",
)
