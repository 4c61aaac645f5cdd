"""Materialized finite posets: weak order, alpha-Tamari, and the vector orders.

A :class:`Poset` stores its Hasse diagram; order queries go through
reachability bitsets (Python ints) computed once at construction.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .codes import AlphaCode, decode, encode, enumerate_codes
from .combinatorics import (
    AlphaPermutation,
    Composition,
    covers as weak_covers,
    enumerate_alpha_permutations,
    enumerate_avoiders,
    format_composition,
    inversion_mask,
    parse_composition,
    parse_permutation,
)
from .config import require_within_cap
from .errors import NotALattice, PosetConstructionError, UnsupportedFormat
from .nu import BracketVector, ReducedVector, enumerate_brackets, enumerate_reduced, reduce, to_code
from .vectors import parse_vector

KINDS = ("weak-order", "alpha-tamari", "code", "reduced", "bracket")
PERMUTATION_KINDS = ("weak-order", "alpha-tamari")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(eq=False)
class Poset:
    kind: str
    alpha: Composition
    elements: Tuple[str, ...]
    cover_edges: Tuple[Tuple[int, int], ...]
    # up[i] has bit j set iff elements[i] <= elements[j]
    up: List[int] = field(init=False, repr=False)
    down: List[int] = field(init=False, repr=False)
    _index: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown poset kind {self.kind!r}; expected one of {KINDS}")
        self.elements = tuple(self.elements)
        self.cover_edges = tuple(sorted({(int(a), int(b)) for a, b in self.cover_edges}))
        self._index = {key: i for i, key in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("poset elements must be distinct")
        self.up = _reachability(len(self.elements), self.cover_edges)
        down = [0] * len(self.elements)
        for i, mask in enumerate(self.up):
            for j in _bits(mask):
                down[j] |= 1 << i
        self.down = down

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.alpha == other.alpha
            and self.elements == other.elements
            and self.cover_edges == other.cover_edges
        )

    def __len__(self):
        return len(self.elements)

    def index(self, x) -> int:
        key = x if isinstance(x, str) else str(x)
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"{key!r} is not an element of this {self.kind} poset") from None

    def item(self, i: int):
        """Domain object (permutation or vector) for element index ``i``."""
        return parse_element(self.kind, self.alpha, self.elements[i])

    def leq(self, x, y) -> bool:
        return bool(self.up[self.index(x)] >> self.index(y) & 1)

    def upper_covers(self, x) -> List[str]:
        i = self.index(x)
        return [self.elements[b] for a, b in self.cover_edges if a == i]

    def heights(self) -> List[int]:
        """Length of the longest chain from a minimal element to each element."""
        order = _topological_order(len(self.elements), self.cover_edges)
        succ = defaultdict(list)
        for a, b in self.cover_edges:
            succ[a].append(b)
        height = [0] * len(self.elements)
        for a in order:
            for b in succ[a]:
                height[b] = max(height[b], height[a] + 1)
        return height


def _topological_order(size, edges):
    indeg = [0] * size
    succ = defaultdict(list)
    for a, b in edges:
        if not (0 <= a < size and 0 <= b < size):
            raise ValueError(f"cover edge {(a, b)} refers to a missing element")
        succ[a].append(b)
        indeg[b] += 1
    ready = [i for i in range(size) if indeg[i] == 0]
    order = []
    while ready:
        a = ready.pop()
        order.append(a)
        for b in succ[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    if len(order) != size:
        raise ValueError("cover edges contain a cycle")
    return order


def _reachability(size, edges):
    order = _topological_order(size, edges)
    succ = defaultdict(list)
    for a, b in edges:
        succ[a].append(b)
    up = [1 << i for i in range(size)]
    for a in reversed(order):
        for b in succ[a]:
            up[a] |= up[b]
    return up


def transitive_reduction(up: Sequence[int]) -> List[Tuple[int, int]]:
    """Cover pairs of a reflexive, transitive relation given as bitsets."""
    edges = []
    for i, mask in enumerate(up):
        strict = mask & ~(1 << i)
        implied = 0
        for j in _bits(strict):
            implied |= up[j] & ~(1 << j)
        edges.extend((i, j) for j in _bits(strict & ~implied))
    return edges


def _relation(items, leq) -> List[int]:
    up = []
    for x in items:
        mask = 0
        for j, y in enumerate(items):
            if leq(x, y):
                mask |= 1 << j
        up.append(mask)
    return up


def _componentwise(x, y):
    return all(a <= b for a, b in zip(x, y))


def build_poset(alpha: Composition, kind: str, cap: Optional[int] = None) -> Poset:
    """Materialize one of the five orders on a composition.

    Elements come in lexicographic order and are keyed by their canonical
    text encoding. Cover edges are the transitive reduction of the defining
    order predicate; the result is checked against that predicate, and for
    the weak order against the swap-based cover moves as well.
    """
    if kind not in KINDS:
        raise UnsupportedFormat(f"unknown poset kind {kind!r}; expected one of {', '.join(KINDS)}")
    require_within_cap(alpha.n, cap)
    if kind in PERMUTATION_KINDS:
        source = enumerate_alpha_permutations if kind == "weak-order" else enumerate_avoiders
        items = list(source(alpha, cap))
        masks = [inversion_mask(w) for w in items]
        up = _relation(masks, lambda x, y: x & ~y == 0)
    else:
        source = {"code": enumerate_codes, "reduced": enumerate_reduced, "bracket": enumerate_brackets}[kind]
        items = list(source(alpha, cap))
        up = _relation([v.values for v in items], _componentwise)
    keys = tuple(str(x) for x in items)
    edges = transitive_reduction(up)
    poset = Poset(kind, alpha, keys, edges)
    if poset.up != up:
        raise PosetConstructionError(f"{kind} poset for ({alpha}): covers do not regenerate the order")
    if kind == "weak-order":
        index = {w.word: i for i, w in enumerate(items)}
        swaps = sorted((i, index[v.word]) for i, w in enumerate(items) for v in weak_covers(w))
        if swaps != list(poset.cover_edges):
            raise PosetConstructionError(f"weak order on ({alpha}): swap covers disagree with the order")
    return poset


def parse_element(kind: str, alpha: Composition, key: str):
    if kind in PERMUTATION_KINDS:
        return parse_permutation(alpha, key)
    cls = {"code": AlphaCode, "reduced": ReducedVector, "bracket": BracketVector}[kind]
    return cls(alpha, parse_vector(key))


def _greatest(p: Poset, mask: int, toward_top: bool) -> Optional[int]:
    """Index of the element whose down-set (or up-set) equals ``mask``."""
    sets = p.down if toward_top else p.up
    for i in _bits(mask):
        if sets[i] == mask:
            return i
    return None


def _extremal_candidates(p: Poset, mask: int, toward_top: bool) -> List[str]:
    sets = p.up if toward_top else p.down
    return [p.elements[i] for i in _bits(mask) if sets[i] & mask == 1 << i]


def meet(p: Poset, x, y):
    """Greatest lower bound by brute force; raises :class:`NotALattice`."""
    i, j = p.index(x), p.index(y)
    lower = p.down[i] & p.down[j]
    m = _greatest(p, lower, toward_top=True)
    if m is None:
        raise NotALattice("meet", p.elements[i], p.elements[j], _extremal_candidates(p, lower, True))
    return p.item(m)


def join(p: Poset, x, y):
    """Least upper bound by brute force; raises :class:`NotALattice`."""
    i, j = p.index(x), p.index(y)
    upper = p.up[i] & p.up[j]
    m = _greatest(p, upper, toward_top=False)
    if m is None:
        raise NotALattice("join", p.elements[i], p.elements[j], _extremal_candidates(p, upper, False))
    return p.item(m)


def lattice_violation(p: Poset) -> Optional[NotALattice]:
    """First pair lacking a unique meet or join, as an unraised exception."""
    down_index = {mask: i for i, mask in enumerate(p.down)}
    up_index = {mask: i for i, mask in enumerate(p.up)}
    size = len(p.elements)
    for i in range(size):
        for j in range(i + 1, size):
            lower = p.down[i] & p.down[j]
            if lower not in down_index:
                return NotALattice("meet", p.elements[i], p.elements[j], _extremal_candidates(p, lower, True))
            upper = p.up[i] & p.up[j]
            if upper not in up_index:
                return NotALattice("join", p.elements[i], p.elements[j], _extremal_candidates(p, upper, False))
    return None


def is_lattice(p: Poset) -> bool:
    return lattice_violation(p) is None


def projection(w: AlphaPermutation) -> AlphaPermutation:
    """Greatest (alpha,231)-avoider weakly below ``w``, via decode(encode(w))."""
    return decode(encode(w))


def fibers(alpha: Composition, cap: Optional[int] = None) -> Dict[AlphaPermutation, Tuple[AlphaPermutation, ...]]:
    """Partition S_alpha by projection.

    Keys are the avoiders (each the weak-order minimum of its block) in
    lexicographic order; values list the whole block lexicographically.
    """
    blocks = defaultdict(list)
    for w in enumerate_alpha_permutations(alpha, cap):
        blocks[projection(w)].append(w)
    return {k: tuple(blocks[k]) for k in sorted(blocks, key=lambda w: w.word)}


# export

FORMATS = ("dot", "json")
LABELINGS = ("element", "code", "both")


def _code_of(kind, item) -> AlphaCode:
    if kind in PERMUTATION_KINDS:
        return encode(item)
    if kind == "code":
        return item
    if kind == "reduced":
        return to_code(item)
    return to_code(reduce(item))


def _element_label(kind, item) -> str:
    if kind in PERMUTATION_KINDS and len(item.word) <= 9:
        return "".join(str(v) for v in item.word)
    return str(item)


def element_label(p: Poset, i: int, labeling: str = "both") -> str:
    item = p.item(i)
    lines = []
    if labeling in ("element", "both"):
        lines.append(_element_label(p.kind, item))
    if labeling == "code" or (labeling == "both" and p.kind != "code"):
        lines.append(f"({_code_of(p.kind, item)})")
    return "\n".join(lines)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def to_dot(p: Poset, labeling: str = "both") -> str:
    heights = p.heights()
    lines = [f'digraph "{p.kind} ({format_composition(p.alpha)})" {{', "  rankdir=BT;", "  node [shape=box];"]
    for i in range(len(p.elements)):
        lines.append(f'  n{i} [label="{_dot_escape(element_label(p, i, labeling))}"];')
    by_height = defaultdict(list)
    for i, h in enumerate(heights):
        by_height[h].append(i)
    for h in sorted(by_height):
        members = " ".join(f"n{i};" for i in by_height[h])
        lines.append(f"  {{ rank=same; {members} }}")
    for a, b in p.cover_edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(p: Poset) -> dict:
    return {
        "kind": p.kind,
        "alpha": format_composition(p.alpha),
        "elements": list(p.elements),
        "covers": [[p.elements[a], p.elements[b]] for a, b in p.cover_edges],
    }


def export(p: Poset, format: str = "dot", labeling: str = "both") -> str:
    """Serialize ``p`` as Graphviz DOT or JSON (labeling only affects DOT)."""
    if labeling not in LABELINGS:
        raise UnsupportedFormat(f"unknown labeling {labeling!r}; expected one of {', '.join(LABELINGS)}")
    if format == "dot":
        return to_dot(p, labeling)
    if format == "json":
        return json.dumps(to_dict(p), indent=2) + "\n"
    raise UnsupportedFormat(f"unknown export format {format!r}; expected dot or json")


def from_dict(data: dict) -> Poset:
    if "result" in data and "kind" not in data:
        data = data["result"]
    alpha = parse_composition(data["alpha"])
    elements = tuple(data["elements"])
    index = {key: i for i, key in enumerate(elements)}
    edges = [(index[a], index[b]) for a, b in data["covers"]]
    return Poset(data["kind"], alpha, elements, edges)


def read_json(text: str) -> Poset:
    return from_dict(json.loads(text))


def remove_edge(p: Poset, lower, upper) -> Poset:
    """Copy of ``p`` without one cover edge (used to build negative controls)."""
    edge = (p.index(lower), p.index(upper))
    if edge not in p.cover_edges:
        raise KeyError(f"{lower!r} -> {upper!r} is not a cover edge")
    return Poset(p.kind, p.alpha, p.elements, [e for e in p.cover_edges if e != edge])


def poset_items(p: Poset) -> Iterable:
    return (p.item(i) for i in range(len(p.elements)))
