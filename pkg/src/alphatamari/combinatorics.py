"""Compositions, alpha-permutations, inversion sets and the weak order.

Every position exposed by this module is 1-based. Internally words are
stored as tuples, so ``word[i - 1]`` is the value at position ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .config import require_within_cap
from .errors import (
    CompositionMismatch,
    EmptyComposition,
    IndexOutOfRange,
    NonPositivePart,
    NotAnAlphaPermutation,
)
from .report import Report


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]
    n: int = field(init=False, compare=False)
    prefix: Tuple[int, ...] = field(init=False, compare=False, repr=False)
    _regions: Tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise EmptyComposition("a composition needs at least one part")
        for a, p in enumerate(parts, start=1):
            if not isinstance(p, int) or p <= 0:
                raise NonPositivePart(f"part {a} is {p!r}; parts must be positive integers")
        prefix = [0]
        for p in parts:
            prefix.append(prefix[-1] + p)
        # _regions[i] is the region of position i; slot 0 is unused
        regions = [0]
        for a, p in enumerate(parts, start=1):
            regions.extend([a] * p)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", prefix[-1])
        object.__setattr__(self, "prefix", tuple(prefix))
        object.__setattr__(self, "_regions", tuple(regions))

    @property
    def r(self) -> int:
        return len(self.parts)

    def s(self, a: int) -> int:
        """Prefix sum alpha_1 + ... + alpha_a (``s(0) == 0``)."""
        return self.prefix[a]

    def region_of(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"position {i} is outside 1..{self.n}")
        return self._regions[i]

    def region(self, a: int) -> range:
        """Positions of the a-th region, as a range of 1-based indices."""
        return range(self.prefix[a - 1] + 1, self.prefix[a] + 1)

    def __str__(self) -> str:
        return format_composition(self)


def make_composition(parts: Iterable[int]) -> Composition:
    return Composition(tuple(parts))


def region_of(alpha: Composition, i: int) -> int:
    return alpha.region_of(i)


def compositions(n: int) -> Iterator[Composition]:
    """All 2**(n-1) compositions of n, in lexicographic order of their parts."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    def rec(remaining):
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in rec(remaining - first):
                yield (first,) + rest

    for parts in rec(n):
        yield Composition(parts)


@dataclass(frozen=True)
class AlphaPermutation:
    alpha: Composition
    word: Tuple[int, ...]

    def __len__(self):
        return len(self.word)

    def __getitem__(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= len(self.word):
            raise IndexOutOfRange(f"position {i} is outside 1..{len(self.word)}")
        return self.word[i - 1]

    def position_of(self, value: int) -> int:
        return self.word.index(value) + 1

    def __str__(self) -> str:
        return format_word(self.word)


def is_alpha_permutation(alpha: Composition, word: Sequence[int]) -> Report:
    """Truthy iff ``word`` permutes 1..n and increases inside every region.

    The returned :class:`Report` carries the diagnostic when it is falsy.
    """
    n = alpha.n
    if len(word) != n:
        return Report.fail("length", f"expected {n} entries, got {len(word)}", length=len(word))
    if sorted(word) != list(range(1, n + 1)):
        return Report.fail("permutation", f"entries must be exactly 1..{n}")
    for i in range(1, n):
        if alpha.region_of(i) == alpha.region_of(i + 1) and word[i - 1] > word[i]:
            return Report.fail(
                "region-increasing",
                f"region {alpha.region_of(i)} holds {word[i - 1]},{word[i]} decreasing",
                i=i,
            )
    return Report.ok()


def alpha_permutation(alpha: Composition, word: Iterable[int]) -> AlphaPermutation:
    word = tuple(word)
    report = is_alpha_permutation(alpha, word)
    if not report:
        raise NotAnAlphaPermutation(
            f"{format_word(word)} is not a ({alpha})-permutation: {report.message}"
        )
    return AlphaPermutation(alpha, word)


def identity(alpha: Composition) -> AlphaPermutation:
    return AlphaPermutation(alpha, tuple(range(1, alpha.n + 1)))


def enumerate_alpha_permutations(alpha: Composition, cap: Optional[int] = None) -> Iterator[AlphaPermutation]:
    """Yield S_alpha in lexicographic order of one-line notation."""
    require_within_cap(alpha.n, cap)
    n = alpha.n
    regions = alpha._regions
    # remaining[i]: positions after i that belong to the same region as i
    remaining = [0] * (n + 1)
    for i in range(1, n + 1):
        remaining[i] = alpha.prefix[regions[i]] - i
    word = [0] * n
    used = [False] * (n + 2)

    def rec(i):
        if i > n:
            yield AlphaPermutation(alpha, tuple(word))
            return
        lo = 1
        if i > 1 and regions[i - 1] == regions[i]:
            lo = word[i - 2] + 1
        # leave room for the rest of the region, which must increase
        hi = n - remaining[i]
        for v in range(lo, hi + 1):
            if used[v]:
                continue
            used[v] = True
            word[i - 1] = v
            yield from rec(i + 1)
            used[v] = False

    yield from rec(1)


def inversion_set(w: AlphaPermutation) -> frozenset:
    """Right inversions ``(i, j)`` with ``i < j`` and ``w_i > w_j``."""
    word = w.word
    n = len(word)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if word[i] > word[j]
    )


def inversion_mask(w: AlphaPermutation) -> int:
    """Inversion set packed into an int; bit ``(i-1)*n + (j-1)`` marks (i, j)."""
    word = w.word
    n = len(word)
    mask = 0
    for i in range(n):
        wi = word[i]
        for j in range(i + 1, n):
            if wi > word[j]:
                mask |= 1 << (i * n + j)
    return mask


def _same_alpha(u, v):
    if u.alpha != v.alpha:
        raise CompositionMismatch(f"compositions differ: ({u.alpha}) vs ({v.alpha})")


def weak_leq(u: AlphaPermutation, v: AlphaPermutation) -> bool:
    _same_alpha(u, v)
    return inversion_set(u) <= inversion_set(v)


def covers(u: AlphaPermutation) -> Iterator[AlphaPermutation]:
    """Upper covers of ``u`` in the left weak order.

    Swap the values ``m`` and ``m + 1`` whenever ``m`` sits to the left of
    ``m + 1`` in a different region. Yielded in increasing order of ``m``.
    """
    alpha = u.alpha
    word = u.word
    pos = [0] * (len(word) + 1)
    for idx, v in enumerate(word, start=1):
        pos[v] = idx
    for m in range(1, len(word)):
        i, j = pos[m], pos[m + 1]
        if i < j and alpha.region_of(i) != alpha.region_of(j):
            new = list(word)
            new[i - 1], new[j - 1] = m + 1, m
            yield AlphaPermutation(alpha, tuple(new))


def has_alpha_231_pattern(w: AlphaPermutation) -> Optional[Tuple[int, int, int]]:
    """Lexicographically smallest (alpha,231)-pattern ``(i, j, k)``, or None.

    A pattern has ``i < j < k`` in three distinct regions with
    ``w_i < w_j`` and ``w_i = w_k + 1``. For fixed ``i`` the index ``k`` is
    forced (the position of ``w_i - 1``), so the scan is quadratic.
    """
    alpha = w.alpha
    word = w.word
    n = len(word)
    pos = [0] * (n + 1)
    for idx, v in enumerate(word, start=1):
        pos[v] = idx
    for i in range(1, n + 1):
        wi = word[i - 1]
        if wi == 1:
            continue
        k = pos[wi - 1]
        ri, rk = alpha.region_of(i), alpha.region_of(k)
        if k <= i or rk == ri:
            continue
        for j in range(i + 1, k):
            rj = alpha.region_of(j)
            if rj != ri and rj != rk and word[j - 1] > wi:
                return (i, j, k)
    return None


def is_avoider(w: AlphaPermutation) -> bool:
    return has_alpha_231_pattern(w) is None


def enumerate_avoiders(alpha: Composition, cap: Optional[int] = None) -> Iterator[AlphaPermutation]:
    """Yield S_alpha(231) in lexicographic order."""
    for w in enumerate_alpha_permutations(alpha, cap):
        if has_alpha_231_pattern(w) is None:
            yield w


# canonical text encodings

def format_composition(alpha: Composition) -> str:
    return ",".join(str(p) for p in alpha.parts)


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if not text:
        raise EmptyComposition("a composition needs at least one part")
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise NonPositivePart(f"cannot parse composition {text!r}; expected e.g. 1,2,1") from None
    return make_composition(parts)


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(v) for v in word)


def parse_permutation(alpha: Composition, text: str) -> AlphaPermutation:
    """Parse space-separated one-line notation, e.g. ``"3 1 4 2"``.

    A single multi-digit token such as ``"3142"`` is rejected rather than
    split, since the split is ambiguous once n > 9.
    """
    tokens = text.split()
    if len(tokens) == 1 and alpha.n > 1:
        raise NotAnAlphaPermutation(
            f"permutation {text!r} must be space-separated, e.g. \"3 1 4 2\""
        )
    try:
        word = [int(tok) for tok in tokens]
    except ValueError:
        raise NotAnAlphaPermutation(f"cannot parse permutation {text!r}") from None
    return alpha_permutation(alpha, word)
