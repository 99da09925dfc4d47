"""Exact principal specializations of Schubert polynomials.

The main entry points:

- :func:`upsilon` / :func:`sweep` -- ``Y_w = S_w(1, ..., 1)`` for one permutation or all of ``S_n``
- :func:`F` -- ``Y`` of ``1^m x w0(p)`` by the product formula
- :func:`build` -- the DP for the layered maximum ``v(n)``
- :func:`solve_constants` -- the limit constants ``alpha`` and ``gamma``
"""

from .perm import (
    Composition, Permutation, identity, w0, length, descents,
    apply_transposition, direct_sum, shifted, layered, kronecker,
    is_dominant, count_132, reduced_words,
)
from .upsilon import GroupSweep, sweep, upsilon, upsilon_oracle
from .proctor import F, F_superfactorial, plane_partition_count, log2_exact
from .layered import DpTable, build, composition_of, f_ratio, upsilon_layered
from .constants import ConstantsBundle, f, f_prime, f_second, q, solve_constants
from .conjectures import (
    ConjectureReport, check_cauchy, check_kron, check_merzon_smirnov,
    check_weigandt, u_prime_table,
)

__version__ = "0.1.0"
