"""Small certificates: why the all-zero argument fails for half graphs.

For matchings, any learner's all-0 answer path must be n(n-1)/2 long.  For
half graphs that argument collapses: 2n - 3 well-chosen 0-cells -- the first
two superdiagonals -- already pin the lower-triangular matrix uniquely within
the whole row/column-permutation family.  Brute force over all (n!)^2
members confirms uniqueness, and dropping even the single cell (n-1, n)
breaks it.  A 1-polarity analogue (diagonal plus first subdiagonal, 2n - 1
cells) works too.
"""

from edgeprobe import Certificate, one_certificate, verify_unique, zero_certificate
from edgeprobe.bounds_lab import count_consistent

n = 6
cert = zero_certificate(n)
print(f"zero-certificate for n={n}: {len(cert.cells)} cells = 2n-3")
grid = [["." for _ in range(n)] for _ in range(n)]
for i, j in cert.cells:
    grid[i - 1][j - 1] = "0"
print("\n".join(" ".join(row) for row in grid))

print(f"\nconsistent members of the (6!)^2 = {720 * 720} half graphs: "
      f"{count_consistent(cert)}  -> unique={verify_unique(cert, n)}")

weakened = Certificate(n, cert.cells - {(n - 1, n)}, 0)
print(f"after dropping cell ({n - 1}, {n}): {count_consistent(weakened)} consistent "
      f"-> unique={verify_unique(weakened, n)}")

ones = one_certificate(n)
print(f"\n1-polarity analogue: {len(ones.cells)} cells, unique={verify_unique(ones, n)}")
