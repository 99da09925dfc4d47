# # The growth constant
#
# `f(x)` measures how fast `F(m, p)` grows along the ray `m / (m + p) = x`.
# The root alpha of `q` fixes both the block ratio and the growth rate gamma.

import numpy as np

from schubmax.constants import (
    bound_scan, f_array, integral_identity_check, limit_gap_scan,
    solve_constants, verify_max_lemma,
)
from schubmax.layered import build, format_fixed

bundle = solve_constants()
for name, value in bundle.as_dict(15).items():
    print(name, value)
print("alpha to 10 places:", format_fixed(bundle.alpha, 10))

# `f + gamma x^2` peaks exactly at alpha with height gamma.

x = np.linspace(0, 1, 11)
print(np.round(f_array(x) + float(bundle.gamma) * x * x, 5))
rep = verify_max_lemma(bundle)
print("peak", rep.grid_max, "at", rep.grid_argmax)

# `f` is also a double integral; quadrature agrees with the closed form.

for m, p in [(1, 1), (5, 12), (20, 20)]:
    r = integral_identity_check(m, p)
    print((m, p), r.quadrature, r.closed_form, f"{r.rel_error:.1e}")

# Exact integers against the asymptotic form, up to n = 150.

bounds = bound_scan(150)
print("pairs", bounds.pairs_checked, "violations", len(bounds.failures))
gaps = limit_gap_scan(build(150), bundle)
print("log v(n) - gamma n^2 per n at 150:", float(gaps.gap_over_n(150)))
