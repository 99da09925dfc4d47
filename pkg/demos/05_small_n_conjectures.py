# # Exhaustive checks on small symmetric groups
#
# Each check sweeps every permutation up to a size and reports witnesses
# or violations.

from schubmax.conjectures import (
    check_cauchy, check_kron, check_merzon_smirnov, check_weigandt, u_prime_table,
)

print(check_merzon_smirnov(8).status)
print(check_cauchy(8).details["sums"])

# The product of `upsilon` at `w` and at its partner under the longest
# element, maximized.

for row in u_prime_table(8).witnesses:
    print(row["n"], row["u_prime"], row["witness"])

rep = check_kron(4)
print(rep.status, rep.witnesses[-1], rep.details)

rep = check_weigandt(7)
print(rep.status, rep.details["counts"][7])
