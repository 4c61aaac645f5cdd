"""Brute-force reference computations.

Each function here recomputes a quantity straight from its definition
(all triples, all pairs, literal maxima, exhaustive boxes) without going
through the faster routines it is used to check.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import comb
from typing import Dict, List, Optional, Tuple

from .combinatorics import AlphaPermutation, Composition


def naive_231_witness(w: AlphaPermutation) -> Optional[Tuple[int, int, int]]:
    """Lexicographically first (alpha,231)-pattern from a scan of all triples."""
    alpha, word = w.alpha, w.word
    n = len(word)
    reg = [alpha.region_of(i) for i in range(1, n + 1)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if len({reg[i], reg[j], reg[k]}) == 3 and word[i] < word[j] and word[i] == word[k] + 1:
                    return (i + 1, j + 1, k + 1)
    return None


def all_alpha_permutations(alpha: Composition) -> List[AlphaPermutation]:
    """S_alpha filtered out of all of S_n (lexicographic order)."""
    n = alpha.n
    out = []
    for word in permutations(range(1, n + 1)):
        if all(
            word[i] < word[i + 1]
            for i in range(n - 1)
            if alpha.region_of(i + 1) == alpha.region_of(i + 2)
        ):
            out.append(AlphaPermutation(alpha, word))
    return out


def inversions(word) -> frozenset:
    n = len(word)
    return frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if word[i - 1] > word[j - 1])


def weak_relation(perms: List[AlphaPermutation]) -> List[int]:
    """Bitset rows of inversion-set containment."""
    invs = [inversions(w.word) for w in perms]
    rows = []
    for a in invs:
        mask = 0
        for j, b in enumerate(invs):
            if a <= b:
                mask |= 1 << j
        rows.append(mask)
    return rows


def order_covers(rows: List[int]) -> List[Tuple[int, int]]:
    """Pairs x < y with nothing strictly between, straight from the relation."""
    size = len(rows)
    below = [0] * size
    for i, mask in enumerate(rows):
        for j in range(size):
            if mask >> j & 1:
                below[j] |= 1 << i
    out = []
    for i, mask in enumerate(rows):
        strictly_above = mask & ~(1 << i)
        for j in range(size):
            if strictly_above >> j & 1 and not strictly_above & below[j] & ~(1 << j):
                out.append((i, j))
    return out


class ProjectionError(Exception):
    pass


def greatest_avoider_below(w: AlphaPermutation, avoiders: List[AlphaPermutation], avoider_invs=None) -> AlphaPermutation:
    """Literal maximum of ``{w' avoider : Inv(w') ⊆ Inv(w)}``."""
    if avoider_invs is None:
        avoider_invs = [inversions(u.word) for u in avoiders]
    inv_w = inversions(w.word)
    below = [(inv, u) for inv, u in zip(avoider_invs, avoiders) if inv <= inv_w]
    tops = [u for inv, u in below if all(other <= inv for other, _ in below)]
    if len(tops) != 1:
        raise ProjectionError(f"{w}: {len(tops)} greatest avoiders below")
    return tops[0]


@lru_cache(maxsize=64)
def composition_data(alpha: Composition) -> "CompositionData":
    return CompositionData(alpha)


class CompositionData:
    """Oracle-side view of one composition, computed once and cached."""

    def __init__(self, alpha: Composition):
        self.alpha = alpha
        self.perms = all_alpha_permutations(alpha)
        self.index = {w.word: i for i, w in enumerate(self.perms)}
        self.avoiders = [w for w in self.perms if naive_231_witness(w) is None]
        self.rows = weak_relation(self.perms)
        self._covers = None
        self._projection = None

    @property
    def covers(self) -> List[Tuple[int, int]]:
        if self._covers is None:
            self._covers = order_covers(self.rows)
        return self._covers

    @property
    def projection(self) -> Dict[tuple, AlphaPermutation]:
        if self._projection is None:
            invs = [inversions(u.word) for u in self.avoiders]
            self._projection = {
                w.word: greatest_avoider_below(w, self.avoiders, invs) for w in self.perms
            }
        return self._projection

    def leq(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)


def code_box(alpha: Composition):
    """Every tuple inside the C1 bounds."""
    ranges = [range(alpha.n - alpha.prefix[alpha.region_of(i)] + 1) for i in range(1, alpha.n + 1)]
    return product(*ranges)


def reduced_box(alpha: Composition):
    """Every tuple inside the R1 bounds."""
    ranges = [range(alpha.prefix[alpha.region_of(i)], alpha.n + 1) for i in range(1, alpha.n + 1)]
    return product(*ranges)


def brute_bracket_vectors(alpha: Composition) -> List[Tuple[int, ...]]:
    """Bracket vectors found by searching length-(2n+1) vectors directly.

    Positions holding the last occurrence of each value in the minimal
    vector are pinned; the rest range over ``[min, n]``; B3 is then
    tested literally.
    """
    n, s = alpha.n, alpha.prefix
    low = []
    for a, size in enumerate(alpha.parts, start=1):
        low.extend(s[a - 1] + i - 1 for i in range(1, size + 1))
        low.extend([s[a]] * size)
    low.append(n)
    last = {v: i for i, v in enumerate(low, start=1)}
    fixed = {last[k]: k for k in range(n + 1)}
    ranges = [range(fixed[i], fixed[i] + 1) if i in fixed else range(low[i - 1], n + 1) for i in range(1, 2 * n + 2)]
    out = []
    for b in product(*ranges):
        ok = True
        for i in range(1, 2 * n + 2):
            k = b[i - 1]
            if any(b[j - 1] > k for j in range(i + 1, last[k])):
                ok = False
                break
        if ok:
            out.append(b)
    return out


def new_inversion_has_blocker(u: AlphaPermutation, v: AlphaPermutation) -> bool:
    """For a cover u < v: is there j strictly between (by region) with v_i < v_j?

    ``(i, k)`` is the single inversion of ``v`` missing from ``u``.
    """
    (i, k), = inversions(v.word) - inversions(u.word)
    alpha, word = v.alpha, v.word
    ri, rk = alpha.region_of(i), alpha.region_of(k)
    return any(
        ri < alpha.region_of(j) < rk and word[i - 1] < word[j - 1]
        for j in range(i + 1, k)
    )


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
