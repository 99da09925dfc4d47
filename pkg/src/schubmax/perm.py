"""
Permutations in one-line notation, with 1-based positions and values.

A permutation ``w`` of ``{1, ..., n}`` is stored as the tuple
``(w_1, ..., w_n)``. Everything here is pure; ``Permutation`` is an
immutable tuple subclass, so it hashes and compares like a tuple.

>>> w = Permutation.parse("15243")
>>> length(w), sorted(descents(w))
(4, [2, 4])
>>> layered((1, 3, 8))
Permutation('1,4,3,2,12,11,10,9,8,7,6,5')
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "Composition",
    "identity", "w0", "length", "descents", "apply_transposition",
    "direct_sum", "shifted", "layered", "is_layered", "layers_of",
    "kronecker", "permutation_matrix", "inverse", "compose", "reverse", "complement",
    "is_dominant", "count_132", "reduced_words", "word_to_permutation",
    "compositions", "format_composition", "parse_composition",
    "REDUCED_WORD_MAX_LENGTH",
]

# reduced-word enumeration is an oracle, not an engine
REDUCED_WORD_MAX_LENGTH = 12


class Permutation(tuple):
    """A permutation of ``{1, ..., n}`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, image: Iterable[int] = ()):
        self = super().__new__(cls, image)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self)}: {tuple(self)}")
        return self

    @classmethod
    def _trusted(cls, image: Iterable[int]) -> "Permutation":
        # skips validation; internal callers only
        return tuple.__new__(cls, image)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"15243"`` (n <= 9) or ``"1,4,3,2,12,..."``."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            try:
                image = [int(tok) for tok in text.split(",")]
            except ValueError:
                raise ValueError(f"bad permutation string: {text!r}") from None
        else:
            if not text.isdigit():
                raise ValueError(f"bad permutation string: {text!r}")
            image = [int(ch) for ch in text]
        return cls(image)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


class Composition(tuple):
    """Layer sizes ``(b_k, ..., b_2, b_1)`` of a layered permutation; ``b_1`` is last."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any((not isinstance(b, int)) or b < 1 for b in self):
            raise ValueError(f"composition parts must be positive integers: {tuple(self)}")
        return self

    @property
    def total(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        return format_composition(self)


def format_composition(parts: Sequence[int]) -> str:
    """Appendix formatting: ``(1, 3, 8)``."""
    return "(" + ", ".join(str(b) for b in parts) + ")"


def parse_composition(text: str) -> Composition:
    inner = text.strip().lstrip("(").rstrip(")").strip()
    if not inner:
        return Composition(())
    return Composition(int(tok) for tok in inner.split(","))


def identity(n: int) -> Permutation:
    return Permutation._trusted(range(1, n + 1))


def w0(n: int) -> Permutation:
    """The longest element ``n (n-1) ... 1``."""
    return Permutation._trusted(range(n, 0, -1))


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descents(w: Sequence[int]) -> set[int]:
    """Right descent positions ``a`` (1-based) with ``w_a > w_{a+1}``."""
    return {a + 1 for a in range(len(w) - 1) if w[a] > w[a + 1]}


def apply_transposition(w: Sequence[int], a: int) -> Permutation:
    """``w * s_a``: swap the entries in positions ``a`` and ``a + 1``."""
    if not 1 <= a <= len(w) - 1:
        raise ValueError(f"position {a} out of range for size {len(w)}")
    image = list(w)
    image[a - 1], image[a] = image[a], image[a - 1]
    return Permutation._trusted(image)


def direct_sum(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """``u x v``: ``u`` on the first block, ``v`` shifted onto the second."""
    m = len(u)
    return Permutation._trusted([*u, *(m + x for x in v)])


def shifted(m: int, w: Sequence[int]) -> Permutation:
    """``1^m x w``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return direct_sum(identity(m), w)


def layered(parts: Sequence[int]) -> Permutation:
    """The layered permutation ``w(b_k, ..., b_1)``: decreasing blocks with ascending values."""
    parts = Composition(parts)
    image: list[int] = []
    top = 0
    for b in parts:
        image.extend(range(top + b, top, -1))
        top += b
    return Permutation._trusted(image)


def layers_of(w: Sequence[int]) -> Composition | None:
    """Block sizes if ``w`` is layered, else ``None``."""
    parts = []
    i, n = 0, len(w)
    while i < n:
        # a layer starting at i ends where its minimum i+1 sits
        j = w[i]
        if j <= i or j > n:
            return None
        b = j - i
        if tuple(w[i:i + b]) != tuple(range(j, i, -1)):
            return None
        parts.append(b)
        i += b
    return Composition(parts)


def is_layered(w: Sequence[int]) -> bool:
    return layers_of(w) is not None


def kronecker(w: Sequence[int], c: int) -> Permutation:
    """``w (x) 1^c``: position ``(i-1)c + r`` maps to ``(w_i - 1)c + r``.

    With the matrix convention ``P[i][w_i] = 1`` this is exactly ``P_w (x) I_c``.
    """
    if c < 1:
        raise ValueError("Kronecker factor must be >= 1")
    return Permutation._trusted(
        (wi - 1) * c + r for wi in w for r in range(1, c + 1)
    )


def permutation_matrix(w: Sequence[int]) -> list[list[int]]:
    """0/1 matrix with a 1 in row ``i``, column ``w_i`` (0-based rows/cols)."""
    n = len(w)
    return [[1 if w[i] == j + 1 else 0 for j in range(n)] for i in range(n)]


def inverse(w: Sequence[int]) -> Permutation:
    image = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        image[wi - 1] = i
    return Permutation._trusted(image)


def compose(u: Sequence[int], v: Sequence[int]) -> Permutation:
    """``u v`` as functions: ``(u v)(i) = u(v(i))``."""
    if len(u) != len(v):
        raise ValueError("size mismatch")
    return Permutation._trusted(u[x - 1] for x in v)


def reverse(w: Sequence[int]) -> Permutation:
    """``w w0``, i.e. the one-line word read backwards (``w0`` is an involution)."""
    return Permutation._trusted(reversed(w))


def complement(w: Sequence[int]) -> Permutation:
    """``w0 w`` as functions: ``w_i -> n + 1 - w_i``."""
    n = len(w)
    return Permutation._trusted(n + 1 - x for x in w)


def count_132(w: Sequence[int]) -> int:
    """Number of triples ``i < j < k`` with ``w_i < w_k < w_j``."""
    n = len(w)
    total = 0
    # for each middle-high j, pair each smaller-left i with each between-right k
    for j in range(n):
        wj = w[j]
        lefts = [w[i] for i in range(j) if w[i] < wj]
        if not lefts:
            continue
        for k in range(j + 1, n):
            wk = w[k]
            if wk < wj:
                total += sum(1 for x in lefts if x < wk)
    return total


def is_dominant(w: Sequence[int]) -> bool:
    """132-avoiding."""
    return not any(w[i] < w[k] < w[j] for i, j, k in combinations(range(len(w)), 3))


def reduced_words(w: Sequence[int], max_length: int = REDUCED_WORD_MAX_LENGTH) -> set[tuple[int, ...]]:
    """All reduced words ``(a_1, ..., a_l)`` with ``s_{a_1} ... s_{a_l} = w``.

    Brute force by peeling right descents; only meant as an oracle.
    """
    ell = length(w)
    if ell > max_length:
        raise ValueError(f"length {ell} exceeds reduced-word guard {max_length}")
    return set(_words(tuple(w)))


def _words(w: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    des = descents(w)
    if not des:
        yield ()
        return
    for a in sorted(des):
        for word in _words(apply_transposition(w, a)):
            yield word + (a,)


def word_to_permutation(word: Sequence[int], n: int) -> Permutation:
    """Evaluate ``s_{a_1} ... s_{a_l}`` acting on the right of the identity."""
    image = list(range(1, n + 1))
    for a in word:
        image[a - 1], image[a] = image[a], image[a - 1]
    return Permutation._trusted(image)


def compositions(n: int) -> Iterator[Composition]:
    """All ``2^(n-1)`` compositions of ``n`` (none for ``n = 0`` except the empty one)."""
    if n == 0:
        yield Composition(())
        return
    for mask in range(1 << (n - 1)):
        parts, run = [], 1
        for bit in range(n - 1):
            if mask >> bit & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(parts)
