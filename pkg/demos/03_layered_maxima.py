# # The best layered permutation of each size
#
# A layered permutation is a run of decreasing blocks. Peeling its last
# block turns the maximum over layered permutations into a one-dimensional
# dynamic program over exact integers.

from schubmax.layered import build, diff_against_appendix, format_f6, load_appendix
from schubmax.perm import layered
from schubmax.upsilon import sweep

table = build(300)

for n in (4, 12, 50, 100, 300):
    print(n, table.composition(n), format_f6(table.f_ratio(n)))

# For small n the DP answer is also the maximum over the whole group.

for n in range(1, 9):
    print(n, table.v[n] == sweep(n).u, layered(table.composition(n)))

# Compare with the tabulated values shipped in the package.

diff = diff_against_appendix(table, load_appendix())
print("real mismatches:", [d for d in diff if d.kind != "last-digit"])
print("printed as truncations:", [(d.n, d.ours, d.theirs) for d in diff if d.kind == "last-digit"])

# The last block takes a steady share of what is left.

comp = table.composition(300)
rest = 300
for b in reversed(comp[-5:]):
    print(f"block {b:3d} of {rest:3d}: {b / rest:.3f}")
    rest -= b
