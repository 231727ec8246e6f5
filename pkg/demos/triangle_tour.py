"""A walking tour of the five counting triangles.

Prints the small rows of each family, shows that the two partition
triangles and the tree triangle are one structure seen three ways, and
checks the singleton split of the Bell numbers along the way.
"""

from phylocount import (
    bell,
    bell_star,
    bell_star_alternating,
    stirling2_star,
    tree_count_T,
    triangle_row,
)

print("Partitions of [n] by class count (row sums are Bell numbers)")
for n in range(1, 8):
    _, row = triangle_row("s", n)
    print(f"  n={n}: {list(row)}  B_{n}={bell(n)}")

print("\nSame, but no singleton classes allowed")
for n in range(2, 10):
    _, row = triangle_row("sstar", n)
    print(f"  n={n}: {list(row)}  B*_{n}={bell_star(n)}")

print("\nPhylogenetic trees with n leaves by internal vertex count")
for n in range(2, 8):
    _, row = triangle_row("t", n)
    print(f"  n={n}: {list(row)}  t_{n}={sum(row)}")

print("\nEvery tree count is a singleton-free partition count:")
for n, m in ((5, 3), (8, 4), (12, 7), (20, 11)):
    t = tree_count_T(n, m)
    s = stirling2_star(n + m - 1, m)
    print(f"  T({n},{m}) = {t} = S*({n + m - 1},{m}) = {s}")
    assert t == s

print("\nBell numbers split by whether a singleton class occurs:")
for n in range(1, 9):
    print(f"  B_{n} = B*_{n + 1} + B*_{n}: {bell(n)} = {bell_star(n + 1)} + {bell_star(n)}")
    assert bell(n) == bell_star(n + 1) + bell_star(n)

n = 12
print(f"\nAlternating-sum route to B*_{n}: {bell_star_alternating(n)} "
      f"(direct: {bell_star(n)})")
