"""Independent floating-point oracles used by the exact-arithmetic tests.

These deliberately avoid the library's surd pipeline: tails are evaluated
by truncating the periodic continued fraction at a fixed depth in floats.
"""
from __future__ import annotations


def tail_float(period, depth: int = 60) -> float:
    """[0; period, period, ...] truncated at ``depth`` partial quotients."""
    reps = depth // len(period) + 2
    entries = (list(period) * reps)[:depth]
    t = 0.0
    for a in reversed(entries):
        t = 1.0 / (a + t)
    return t


def perron_float(period, depth: int = 60) -> tuple[float, int]:
    """Largest Perron sum over cyclic positions, ties to the smallest index."""
    n = len(period)
    best, arg = None, 0
    for i in range(n):
        fwd_period = tuple(period[(i + 1 + k) % n] for k in range(n))
        bwd_period = tuple(period[(i - 1 - k) % n] for k in range(n))
        v = period[i] + tail_float(fwd_period, depth) + tail_float(bwd_period, depth)
        if best is None or v > best + 1e-13:
            best, arg = v, i
    return best, arg
