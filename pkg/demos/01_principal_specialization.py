# # Counting pipe dreams without drawing them
#
# `upsilon(w)` is the value of the Schubert polynomial of `w` with every
# variable set to 1. We compute it from reduced words, never expanding a
# polynomial.

import numpy as np

from schubmax import Permutation, upsilon, upsilon_oracle, sweep
from schubmax.perm import descents, length, reduced_words

# A small permutation first. Its reduced words and their letters are all the
# brute-force oracle needs.

w = Permutation.parse("1432")
print(w, "length", length(w), "descents", sorted(descents(w)))
print(sorted(reduced_words(w)))
print("upsilon:", upsilon(w), " oracle:", upsilon_oracle(w))

# The fast route peels one descent at a time, so it scales to sizes where
# listing reduced words is hopeless.

big = Permutation.parse("1,4,3,2,12,11,10,9,8,7,6,5")
print(big, upsilon(big))

# ## The whole group at once
#
# `sweep(n)` fills a table indexed by lexicographic rank. From it we read
# the maximum `u(n)`, the sum `a(n)`, and who attains the maximum.

for n in range(1, 9):
    sw = sweep(n)
    print(n, sw.u, sw.a, [str(p) for p in sw.argmax_set])

# The distribution is heavy tailed: most permutations have tiny values.

sw = sweep(7)
counts = np.bincount(np.minimum(sw.values, 20))
print("values 1..19 and 20+:", counts[1:].tolist())
