"""The concatenation graph and its index recursion.

Starting from two seed words A and B, the triple (A, A+B, B) generates an
infinite binary tree under the moves

    L(x, y, z) = (x, x+y, y)      R(x, y, z) = (y, y+z, z).

Ordering each level left-to-right and reading off the centre entries gives
the family S(0)=A, S(1)=B, S(2)=A+B, S(2^(n-1)+i) = centre of the i-th
vertex of level n. The same family satisfies an index recursion driven by
the odd-part sequence a(j); this script shows both builders and the
divergence that pins down the left-flank rule.

Run: python demos/02_tree_and_recursion.py
"""
from markovwords import (
    a_of,
    block_labels,
    flank_indices,
    level,
    root,
    s_graph,
    s_rec,
    step_left,
    step_right,
    stern,
)

A, B = (1, 1), (2, 2)

# The root and its two children.
v = root(A, B)
print("root:", v)
print("L(root) centre:", step_left(v).center, " R(root) centre:", step_right(v).center)

# Level 3 holds four vertices; their centres are S(5)..S(8).
for i, vert in enumerate(level(A, B, 3), start=1):
    n = 4 + i
    print(f"level 3, vertex {i}: centre = S({n}) =", vert.center,
          "blocks:", "".join(block_labels(n)))

# The index recursion builds the same words without touching the graph:
#   S(2j) = S(j) + S(a(j)),  S(2j-1) = S(a*(j-1)) + S(j).
print("\nindex 14 via graph:    ", s_graph(A, B, 14))
print("index 14 via recursion:", s_rec(A, B, 14))
assert all(s_graph(A, B, n) == s_rec(A, B, n) for n in range(257))
print("builders agree for every index up to 256")

# The left-flank rule a* must send EVERY power of two to 0, not just 1.
# Zeroing only 1 looks plausible but diverges from the graph at index 5:
literal = lambda x: 0 if x == 1 else a_of(x)
for n in range(3, 8):
    lhs, rhs = s_rec(A, B, n, a_star_fn=literal), s_graph(A, B, n)
    marker = "  <-- diverges" if lhs != rhs else ""
    print(f"n={n}: literal rule gives {lhs}{marker}")

# Every vertex is (S(l), S(j), S(r)) for flank indices l, r of j.
for j in (3, 4, 8, 14):
    l, r = flank_indices(j)
    print(f"vertex of S({j}): left=S({l}), right=S({r})")

# Word lengths follow the diatomic sequence: |S(n)| = 2*d(2n-1) for these
# length-2 seeds.
print("lengths:", [len(s_rec(A, B, n)) for n in range(1, 9)],
      "= 2*d(2n-1):", [2 * stern(2 * n - 1) for n in range(1, 9)])
