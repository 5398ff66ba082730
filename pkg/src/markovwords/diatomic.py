"""Stern's diatomic sequence and the odd-part index sequence a(j).

Both sequences drive the index recursion for ordered Markov words:
``d`` supplies the palindromic shift amounts, ``a``/``a*`` the indices of
the flanking words in the concatenation graph.
"""
from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def stern(n: int) -> int:
    """Stern's diatomic sequence: d(0)=0, d(1)=1, d(2n)=d(n), d(2n-1)=d(n)+d(n-1)."""
    if n < 0:
        raise ValueError("stern is defined for n >= 0")
    if n <= 1:
        return n
    if n % 2 == 0:
        return stern(n // 2)
    return stern((n + 1) // 2) + stern((n - 1) // 2)


def a_of(j: int) -> int:
    """OEIS A003602: a(1)=a(2)=1, a(2j)=a(j), a(2j-1)=j for j>1.

    Equivalently (k+1)/2 for the odd part k of j; computed that way.
    """
    if j < 1:
        raise ValueError("a_of is defined for j >= 1")
    while j % 2 == 0:
        j //= 2
    return (j + 1) // 2 if j > 1 else 1


def a_star(x: int) -> int:
    """a(x) with every power of two (including 1) sent to 0.

    Index 0 addresses the first seed word, so this is the left-flank index
    of the vertex centred at the word with index 2x+1. Zeroing all powers
    of two -- not just x=1 -- is what makes the index recursion agree with
    the graph construction at every index (first witness: index 5).
    """
    if x < 1:
        raise ValueError("a_star is defined for x >= 1")
    return 0 if x & (x - 1) == 0 else a_of(x)


def stern_row(n: int) -> list[int]:
    """The row (d(2^n), ..., d(2^(n+1))) of the diatomic array; palindromic."""
    if n < 0:
        raise ValueError("stern_row is defined for n >= 0")
    return [stern(k) for k in range(2 ** n, 2 ** (n + 1) + 1)]
