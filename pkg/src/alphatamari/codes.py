"""Alpha-codes: a parabolic version of the Bjorner-Wachs consecutive Lehmer code.

For ``w`` in S_alpha, entry ``c_i`` counts how many consecutive entries,
starting at the first position of the region right after ``i``'s region,
are smaller than ``w_i``. The valid codes are the integer tuples obeying
the three conditions checked by :func:`check_code`; ordered componentwise
they form a lattice isomorphic to the alpha-Tamari lattice.
"""
from __future__ import annotations

from typing import Iterator, List, Optional, Sequence, Tuple

from .combinatorics import AlphaPermutation, Composition
from .config import require_within_cap
from .errors import CompositionMismatch, IndexOutOfRange, InvalidCode
from .report import Report
from .vectors import IntVector, componentwise_leq, format_vector  # noqa: F401

__all__ = [
    "AlphaCode",
    "check_code",
    "componentwise_leq",
    "decode",
    "decode_trace",
    "encode",
    "enumerate_codes",
    "leftmost_zero",
    "sees",
]


class AlphaCode(IntVector):
    pass


def _code_values(alpha: Composition, c) -> Tuple[int, ...]:
    if isinstance(c, IntVector):
        if c.alpha != alpha:
            raise CompositionMismatch(f"code belongs to ({c.alpha}), not ({alpha})")
        return c.values
    return tuple(c)


def check_code(alpha: Composition, c: Sequence[int]) -> Report:
    """First violated condition among length, C1, C2, C3 (or a valid report).

    C1  ``0 <= c_i <= n - s_rho(i)``
    C2  ``c_i <= c_{i+1}`` inside a region
    C3  for ``i <= s_{r-2}`` and ``rho(i) < a <= r-1``: if
        ``c_i >= s_a - s_rho(i)`` then ``c_{s_a} <= c_i - s_a + s_rho(i)``
    """
    c = _code_values(alpha, c)
    n, s, r = alpha.n, alpha.prefix, alpha.r
    if len(c) != n:
        return Report.fail("length", f"expected {n} entries, got {len(c)}", length=len(c))
    for i in range(1, n + 1):
        bound = n - s[alpha.region_of(i)]
        if not 0 <= c[i - 1] <= bound:
            return Report.fail("C1", f"c_{i}={c[i - 1]} not in 0..{bound}", i=i)
    for i in range(1, n):
        if alpha.region_of(i) == alpha.region_of(i + 1) and c[i - 1] > c[i]:
            return Report.fail("C2", f"c_{i}={c[i - 1]} > c_{i + 1}={c[i]}", i=i)
    if r >= 2:
        for i in range(1, s[r - 2] + 1):
            ri = alpha.region_of(i)
            ci = c[i - 1]
            for a in range(ri + 1, r):
                reach = s[a] - s[ri]
                if ci >= reach and c[s[a] - 1] > ci - reach:
                    return Report.fail(
                        "C3",
                        f"c_{i}={ci} reaches position {s[a]} but c_{s[a]}={c[s[a] - 1]} > {ci - reach}",
                        i=i,
                        a=a,
                    )
    return Report.ok()


def validate_code(alpha: Composition, c) -> AlphaCode:
    values = _code_values(alpha, c)
    report = check_code(alpha, values)
    if not report:
        raise InvalidCode(report)
    return AlphaCode(alpha, values)


def encode(w: AlphaPermutation) -> AlphaCode:
    """The alpha-code of any alpha-permutation (avoiding or not)."""
    alpha, word = w.alpha, w.word
    n = alpha.n
    out = []
    for i in range(1, n + 1):
        start = alpha.prefix[alpha.region_of(i)]
        wi = word[i - 1]
        k = 0
        while start + k < n and word[start + k] < wi:
            k += 1
        out.append(k)
    return AlphaCode(alpha, tuple(out))


def sees(w: AlphaPermutation, i: int, k: int) -> bool:
    """Whether ``w_i`` sees ``w_k``: ``0 < k - s_rho(i) <= c_i``."""
    n = w.alpha.n
    for idx in (i, k):
        if not 1 <= idx <= n:
            raise IndexOutOfRange(f"position {idx} is outside 1..{n}")
    offset = k - w.alpha.prefix[w.alpha.region_of(i)]
    return 0 < offset <= encode(w)[i]


def leftmost_zero(code: AlphaCode) -> int:
    """1-based position of the first zero entry of a valid code."""
    values = validate_code(code.alpha, code).values
    return values.index(0) + 1


def _decode(parts: Tuple[int, ...], c: Tuple[int, ...]) -> List[int]:
    n = len(c)
    if n == 0:
        return []
    prefix = [0]
    for p in parts:
        prefix.append(prefix[-1] + p)
    region = [0]
    for a, p in enumerate(parts, start=1):
        region.extend([a] * p)

    j0 = c.index(0) + 1
    a = region[j0]
    cut = prefix[a - 1]  # j0 is the first position of region a, so j0 == cut + 1

    sub = []
    for i in range(1, j0):
        ci = c[i - 1]
        sub.append(ci - 1 if ci >= cut - prefix[region[i]] else ci)
    sub.extend(c[j0:])

    sub_parts = list(parts)
    sub_parts[a - 1] -= 1
    if sub_parts[a - 1] == 0:
        del sub_parts[a - 1]

    inner = _decode(tuple(sub_parts), tuple(sub))
    shifted = [v + 1 for v in inner]
    return shifted[: j0 - 1] + [1] + shifted[j0 - 1 :]


def decode(code: AlphaCode) -> AlphaPermutation:
    """The unique (alpha,231)-avoiding permutation with the given code.

    Peel off the leftmost zero (always the first slot of some region and
    the position of value 1), shrink that region by one, adjust the earlier
    entries that could see across the removed slot, decode the smaller
    code, then re-insert 1 and shift every other value up.

    Raises :class:`InvalidCode` when the tuple fails :func:`check_code`.
    """
    values = validate_code(code.alpha, code).values
    return AlphaPermutation(code.alpha, tuple(_decode(code.alpha.parts, values)))


def decode_trace(code: AlphaCode) -> List[Tuple[Tuple[Optional[int], ...], int]]:
    """Intermediate states of :func:`decode`, in original coordinates.

    Step ``t`` is ``(entries, position)``: the shrunken code laid out on the
    original positions (``None`` where a slot is already filled) and the
    position that receives value ``t + 1``.
    """
    values = list(validate_code(code.alpha, code).values)
    parts = list(code.alpha.parts)
    positions = list(range(1, len(values) + 1))
    n = len(values)
    steps = []
    while values:
        snapshot: List[Optional[int]] = [None] * n
        for p, v in zip(positions, values):
            snapshot[p - 1] = v
        j0 = values.index(0)
        region = []
        for a, size in enumerate(parts, start=1):
            region.extend([a] * size)
        prefix = [0]
        for size in parts:
            prefix.append(prefix[-1] + size)
        a = region[j0]
        cut = prefix[a - 1]
        steps.append((tuple(snapshot), positions[j0]))
        for i in range(j0):
            if values[i] >= cut - prefix[region[i]]:
                values[i] -= 1
        del values[j0], positions[j0]
        parts[a - 1] -= 1
        if parts[a - 1] == 0:
            del parts[a - 1]
    return steps


def enumerate_codes(alpha: Composition, cap: Optional[int] = None) -> Iterator[AlphaCode]:
    """All valid alpha-codes in lexicographic order.

    Depth-first over the C1 ranges; C2 is enforced when a position is
    placed, and C3 whenever the placed position ends a region.
    """
    require_within_cap(alpha.n, cap)
    n, s, r = alpha.n, alpha.prefix, alpha.r
    region = alpha._regions
    # region_end[p] = a if p == s_a for some a <= r-1, else 0
    region_end = [0] * (n + 1)
    for a in range(1, r):
        region_end[s[a]] = a
    c = [0] * n

    def c3_ok(p):
        a = region_end[p]
        if not a or r < 2:
            return True
        for i in range(1, min(p - 1, s[r - 2]) + 1):
            ri = region[i]
            if ri >= a:
                break
            reach = s[a] - s[ri]
            if c[i - 1] >= reach and c[p - 1] > c[i - 1] - reach:
                return False
        return True

    def rec(p):
        if p > n:
            yield AlphaCode(alpha, tuple(c))
            return
        lo = c[p - 2] if p > 1 and region[p - 1] == region[p] else 0
        for v in range(lo, n - s[region[p]] + 1):
            c[p - 1] = v
            if c3_ok(p):
                yield from rec(p + 1)

    yield from rec(1)
