"""Bracket vectors and reduced vectors for the alpha bounce path.

The bounce path of ``alpha`` is ``N^a1 E^a1 N^a2 E^a2 ...``. Its bracket
vectors have length ``2n + 1``; ``n + 1`` of the positions carry forced
values, and dropping them leaves a reduced vector of length ``n``.
Reversing each region of a reduced vector and subtracting the region's
prefix sum gives an alpha-code.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .codes import AlphaCode, validate_code
from .combinatorics import Composition
from .config import require_within_cap
from .errors import CompositionMismatch, InvalidBracketVector, InvalidReducedVector
from .report import Report
from .vectors import IntVector


@dataclass(frozen=True)
class BouncePath:
    alpha: Composition
    steps: str

    def __str__(self):
        return self.steps


class BracketVector(IntVector):
    pass


class ReducedVector(IntVector):
    pass


def bounce_path(alpha: Composition) -> BouncePath:
    return BouncePath(alpha, "".join("N" * p + "E" * p for p in alpha.parts))


def _min_bracket(alpha: Composition) -> List[int]:
    n, s = alpha.n, alpha.prefix
    b = [0] * (2 * n + 1)
    for a, size in enumerate(alpha.parts, start=1):
        for i in range(1, size + 1):
            b[2 * s[a - 1] + i - 1] = i + s[a - 1] - 1
            b[2 * s[a - 1] + size + i - 1] = s[a]
    b[2 * n] = n
    return b


def min_bracket_vector(alpha: Composition) -> BracketVector:
    return BracketVector(alpha, tuple(_min_bracket(alpha)))


def fixed_positions(alpha: Composition) -> Tuple[int, ...]:
    """``(f_0, ..., f_n)``: the last position of each value k in the minimal vector."""
    n, s = alpha.n, alpha.prefix
    f = [k + 1 + s[alpha.region_of(k + 1) - 1] for k in range(n)]
    f.append(2 * n + 1)
    return tuple(f)


def _values(alpha, v):
    if isinstance(v, IntVector):
        if v.alpha != alpha:
            raise CompositionMismatch(f"vector belongs to ({v.alpha}), not ({alpha})")
        return v.values
    return tuple(v)


def is_bracket_vector(alpha: Composition, b: Sequence[int]) -> Report:
    b = _values(alpha, b)
    n = alpha.n
    if len(b) != 2 * n + 1:
        return Report.fail("length", f"expected {2 * n + 1} entries, got {len(b)}", length=len(b))
    f = fixed_positions(alpha)
    for k, fk in enumerate(f):
        if b[fk - 1] != k:
            return Report.fail("B1", f"b({fk})={b[fk - 1]} but must be {k}", k=k, i=fk)
    low = _min_bracket(alpha)
    for i in range(1, 2 * n + 2):
        if not low[i - 1] <= b[i - 1] <= n:
            return Report.fail("B2", f"b({i})={b[i - 1]} not in {low[i - 1]}..{n}", i=i)
    for i in range(1, 2 * n + 2):
        k = b[i - 1]
        for j in range(i + 1, f[k]):
            if b[j - 1] > k:
                return Report.fail(
                    "B3", f"b({i})={k} but b({j})={b[j - 1]} > {k} before f_{k}={f[k]}", i=i, j=j
                )
    return Report.ok()


def _r2_bound(alpha: Composition, value: int) -> int:
    # s_{rho(value + 1) - 1}; rho(n + 1) is read as r + 1, giving n
    if value >= alpha.n:
        return alpha.n
    return alpha.prefix[alpha.region_of(value + 1) - 1]


def is_reduced_vector(alpha: Composition, r: Sequence[int]) -> Report:
    r = _values(alpha, r)
    n, s = alpha.n, alpha.prefix
    if len(r) != n:
        return Report.fail("length", f"expected {n} entries, got {len(r)}", length=len(r))
    for i in range(1, n + 1):
        low = s[alpha.region_of(i)]
        if not low <= r[i - 1] <= n:
            return Report.fail("R1", f"r({i})={r[i - 1]} not in {low}..{n}", i=i)
    for i in range(1, n + 1):
        ri = r[i - 1]
        for j in range(i + 1, _r2_bound(alpha, ri) + 1):
            if r[j - 1] > ri:
                return Report.fail("R2", f"r({i})={ri} but r({j})={r[j - 1]} > {ri}", i=i, j=j)
    return Report.ok()


def validate_bracket(alpha: Composition, b) -> BracketVector:
    values = _values(alpha, b)
    report = is_bracket_vector(alpha, values)
    if not report:
        raise InvalidBracketVector(report)
    return BracketVector(alpha, values)


def validate_reduced(alpha: Composition, r) -> ReducedVector:
    values = _values(alpha, r)
    report = is_reduced_vector(alpha, values)
    if not report:
        raise InvalidReducedVector(report)
    return ReducedVector(alpha, values)


def reduce(b: BracketVector) -> ReducedVector:
    """Drop the fixed positions of a bracket vector."""
    alpha = b.alpha
    values = validate_bracket(alpha, b).values
    s = alpha.prefix
    out = []
    for a, size in enumerate(alpha.parts, start=1):
        base = 2 * s[a - 1] + size
        out.extend(values[base : base + size])
    return ReducedVector(alpha, tuple(out))


def extend(r: ReducedVector) -> BracketVector:
    """Re-insert value k at fixed position f_k."""
    alpha = r.alpha
    values = validate_reduced(alpha, r).values
    s = alpha.prefix
    out = []
    for a, size in enumerate(alpha.parts, start=1):
        out.extend(range(s[a - 1], s[a]))
        out.extend(values[s[a - 1] : s[a]])
    out.append(alpha.n)
    return BracketVector(alpha, tuple(out))


def to_code(r: ReducedVector) -> AlphaCode:
    """Reverse each region and subtract its prefix sum."""
    alpha = r.alpha
    values = validate_reduced(alpha, r).values
    s = alpha.prefix
    out = []
    for a in range(1, alpha.r + 1):
        block = values[s[a - 1] : s[a]]
        out.extend(v - s[a] for v in reversed(block))
    return AlphaCode(alpha, tuple(out))


def from_code(c: AlphaCode) -> ReducedVector:
    alpha = c.alpha
    values = validate_code(alpha, c).values
    s = alpha.prefix
    out = []
    for a in range(1, alpha.r + 1):
        block = values[s[a - 1] : s[a]]
        out.extend(v + s[a] for v in reversed(block))
    return ReducedVector(alpha, tuple(out))


def enumerate_reduced(alpha: Composition, cap: Optional[int] = None) -> Iterator[ReducedVector]:
    """All reduced vectors in lexicographic order.

    R2 is checked incrementally: placing position j only needs the earlier
    entries whose window reaches j.
    """
    require_within_cap(alpha.n, cap)
    n, s = alpha.n, alpha.prefix
    region = alpha._regions
    r = [0] * n
    reach = [0] * n

    def rec(j):
        if j > n:
            yield ReducedVector(alpha, tuple(r))
            return
        for v in range(s[region[j]], n + 1):
            if any(reach[i] >= j and v > r[i] for i in range(j - 1)):
                continue
            r[j - 1] = v
            reach[j - 1] = _r2_bound(alpha, v)
            yield from rec(j + 1)

    yield from rec(1)


def enumerate_brackets(alpha: Composition, cap: Optional[int] = None) -> Iterator[BracketVector]:
    for r in enumerate_reduced(alpha, cap):
        yield extend(r)


def bracket_annotations(b: BracketVector) -> List[dict]:
    """``{index, value, fixed}`` records for JSON output."""
    fixed = set(fixed_positions(b.alpha))
    return [
        {"index": i, "value": v, "fixed": i in fixed}
        for i, v in enumerate(b.values, start=1)
    ]
