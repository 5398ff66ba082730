"""The concatenation graph and the ordered family S(n) it generates.

Vertices are triples (left, centre, right) with centre = left + right.
From the root (A, A+B, B) the moves L and R produce an infinite binary
tree; levels are ordered so that the centre of the i-th vertex of level n
is the word with index 2^(n-1)+i. The same family is produced by an index
recursion over ``a``/``a*``; both builders are exposed so each can serve
as an oracle for the other.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, NamedTuple, Optional, Sequence

from .diatomic import a_of, a_star
from .words import Word, word


class Vertex(NamedTuple):
    left: Word
    center: Word
    right: Word


Path = tuple[int, ...]

LABEL_A = "A"
LABEL_B = "B"


@dataclass(frozen=True)
class BlockWord:
    """A word over the labels {A, B} plus the seed words the labels stand for."""

    labels: tuple[str, ...]
    registry: Mapping[str, Word]

    def flatten(self) -> Word:
        out: list[int] = []
        for lab in self.labels:
            out.extend(self.registry[lab])
        return tuple(out)

    def __len__(self) -> int:
        return len(self.labels)


def root(a: Sequence[int], b: Sequence[int]) -> Vertex:
    """The root vertex (A, A+B, B)."""
    wa, wb = word(a), word(b)
    if not wa or not wb:
        raise ValueError("seed words must be nonempty")
    return Vertex(wa, wa + wb, wb)


def step_left(v: Vertex) -> Vertex:
    return Vertex(v.left, v.left + v.center, v.center)


def step_right(v: Vertex) -> Vertex:
    return Vertex(v.center, v.center + v.right, v.right)


def apply_path(v: Vertex, exponents: Sequence[int]) -> Vertex:
    """Apply the move word R^a1, L^a2, R^a3, ... (first factor applied first).

    Odd positions of ``exponents`` (1-based) are R-runs, even positions
    L-runs; zero runs are permitted anywhere.
    """
    for pos, count in enumerate(exponents):
        if count < 0:
            raise ValueError("path exponents must be nonnegative")
        step = step_right if pos % 2 == 0 else step_left
        for _ in range(count):
            v = step(v)
    return v


def path_precedes(p: Sequence[int], q: Sequence[int]) -> bool:
    """Strict order on equal-level paths.

    At the first differing run, a smaller R-exponent (odd position) or a
    larger L-exponent (even position) comes first; this is the in-order
    traversal of the tree. Shorter tuples are padded with zero runs.
    """
    if sum(p) != sum(q):
        raise ValueError("paths lie on different levels")
    for idx in range(max(len(p), len(q))):
        a = p[idx] if idx < len(p) else 0
        b = q[idx] if idx < len(q) else 0
        if a == b:
            continue
        return a < b if idx % 2 == 0 else a > b
    return False


def _move_string(exponents: Sequence[int]) -> str:
    return "".join(("R" if pos % 2 == 0 else "L") * c for pos, c in enumerate(exponents))


def _exponents_from_moves(moves: str) -> Path:
    """Run-length exponents of an L/R move string, starting with the R-run."""
    runs: list[int] = []
    expect = "R"
    i = 0
    while i < len(moves):
        if moves[i] == expect:
            j = i
            while j < len(moves) and moves[j] == expect:
                j += 1
            runs.append(j - i)
            i = j
        else:
            runs.append(0)
        expect = "L" if expect == "R" else "R"
    if len(runs) % 2:
        runs.append(0)
    return tuple(runs)


def _level_entries(a: Sequence[int], b: Sequence[int], n: int) -> list[tuple[Path, Vertex]]:
    """(path, vertex) pairs of level n in order; the root is level 1."""
    if n < 1:
        raise ValueError("levels are numbered from 1")
    entries = [("", root(a, b))]
    for _ in range(n - 1):
        entries = [
            child
            for moves, v in entries
            for child in ((moves + "L", step_left(v)), (moves + "R", step_right(v)))
        ]
    return [(_exponents_from_moves(moves), v) for moves, v in entries]


def level(a: Sequence[int], b: Sequence[int], n: int) -> list[Vertex]:
    """The 2^(n-1) vertices of level n, sorted by the path order."""
    return [v for _, v in _level_entries(a, b, n)]


def s_graph(a: Sequence[int], b: Sequence[int], n: int) -> Word:
    """The word with index n, read off the ordered graph (the slow oracle).

    Index 2^(m-1)+i is the centre of the i-th vertex of level m, reached by
    walking the binary digits of i-1 from the root (0 = L, 1 = R).
    """
    wa, wb = word(a), word(b)
    if not wa or not wb:
        raise ValueError("seed words must be nonempty")
    if n < 0:
        raise ValueError("indices start at 0")
    if n == 0:
        return wa
    if n == 1:
        return wb
    if n == 2:
        return wa + wb
    m = (n - 1).bit_length()
    i = n - 2 ** (m - 1)
    v = Vertex(wa, wa + wb, wb)
    for bit in format(i - 1, "b").zfill(m - 1):
        v = step_right(v) if bit == "1" else step_left(v)
    return v.center


def s_rec(
    a: Sequence[int],
    b: Sequence[int],
    n: int,
    *,
    a_star_fn: Optional[Callable[[int], int]] = None,
) -> Word:
    """The word with index n by the index recursion.

    S(2j) = S(j) + S(a(j)) and S(2j-1) = S(a*(j-1)) + S(j); agrees with
    :func:`s_graph` at every index. ``a_star_fn`` swaps in an alternative
    left-flank rule; the regression tests use it to pin the first index at
    which a wrong rule diverges.
    """
    if n < 0:
        raise ValueError("indices start at 0")
    wa, wb = word(a), word(b)
    if not wa or not wb:
        raise ValueError("seed words must be nonempty")
    return _s_rec_cached(wa, wb, n, a_star_fn or a_star)


@lru_cache(maxsize=4096)
def _s_rec_cached(a: Word, b: Word, n: int, fn: Callable[[int], int]) -> Word:
    if n == 0:
        return a
    if n == 1:
        return b
    if n == 2:
        return a + b
    if n % 2 == 0:
        j = n // 2
        return _s_rec_cached(a, b, j, fn) + _s_rec_cached(a, b, a_of(j), fn)
    j = (n + 1) // 2
    return _s_rec_cached(a, b, fn(j - 1), fn) + _s_rec_cached(a, b, j, fn)


@lru_cache(maxsize=None)
def block_labels(n: int) -> tuple[str, ...]:
    """The label word of index n: the index recursion carried out over {A, B}."""
    if n < 0:
        raise ValueError("indices start at 0")
    if n == 0:
        return (LABEL_A,)
    if n == 1:
        return (LABEL_B,)
    if n == 2:
        return (LABEL_A, LABEL_B)
    if n % 2 == 0:
        j = n // 2
        return block_labels(j) + block_labels(a_of(j))
    j = (n + 1) // 2
    return block_labels(a_star(j - 1)) + block_labels(j)


def block_word(a: Sequence[int], b: Sequence[int], n: int) -> BlockWord:
    """The word with index n as a word over its two seed blocks."""
    wa, wb = word(a), word(b)
    if not wa or not wb:
        raise ValueError("seed words must be nonempty")
    return BlockWord(block_labels(n), {LABEL_A: wa, LABEL_B: wb})


@lru_cache(maxsize=None)
def block_counts(n: int) -> tuple[int, int]:
    """(#A-blocks, #B-blocks) in the label word of index n.

    The total is d(2n-1) for n >= 1; the individual counts follow the
    index recursion and admit no comparable closed form.
    """
    if n < 0:
        raise ValueError("indices start at 0")
    if n == 0:
        return (1, 0)
    if n == 1:
        return (0, 1)
    if n == 2:
        return (1, 1)
    if n % 2 == 0:
        j = n // 2
        xa, xb = block_counts(j)
        ya, yb = block_counts(a_of(j))
    else:
        j = (n + 1) // 2
        xa, xb = block_counts(a_star(j - 1))
        ya, yb = block_counts(j)
    return (xa + ya, xb + yb)


@lru_cache(maxsize=None)
def flank_indices(j: int) -> tuple[int, int]:
    """Indices of the left and right words flanking the word with index j.

    The vertex centred at S(j) is (S(l), S(j), S(r)) with l, r given by
    l(2)=0, l(2j)=j, l(2j-1)=l(j) and r(2)=1, r(2j)=r(j), r(2j-1)=j; these
    coincide with a*(j-1) and a(j).
    """
    if j < 2:
        raise ValueError("flank indices are defined for j >= 2")
    if j == 2:
        return (0, 1)
    if j % 2 == 0:
        return (j // 2, flank_indices(j // 2)[1])
    return (flank_indices((j + 1) // 2)[0], (j + 1) // 2)
