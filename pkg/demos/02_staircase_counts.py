# # F(m, p): three ways to the same integer
#
# `F(m, p)` is `upsilon` of the identity on m points followed by the longest
# permutation on p points. It also counts plane partitions of a staircase.

from schubmax.perm import shifted, w0
from schubmax.proctor import F, F_superfactorial, antidiagonal, log2_exact, plane_partition_count
from schubmax.upsilon import upsilon

for m in range(4):
    print([F(m, p) for p in range(1, 7)])

# The three routes agree. Plane partitions are counted row by row, so keep
# them small.

for m, p in [(1, 3), (2, 4), (3, 5)]:
    print((m, p), F(m, p), F_superfactorial(m, p), plane_partition_count(m, p), upsilon(shifted(m, w0(p))))

# Walking an anti-diagonal needs one multiply and one exact divide per step.

n = 200
row = list(antidiagonal(n))
p_best, best = max(row, key=lambda t: t[1])
print(f"largest F(n-p, p) on n={n}: p={p_best}, {best.bit_length()} bits, log2={float(log2_exact(best)):.3f}")
