"""Exhaustive checks of the code/lattice correspondences on small compositions.

Every check compares the library's fast path with an oracle from
:mod:`alphatamari.oracles` and returns a :class:`CheckReport`; failures are
reported, never raised.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Callable, List, Optional

from . import oracles
from .codes import AlphaCode, check_code, decode, encode, enumerate_codes, leftmost_zero
from .combinatorics import (
    Composition,
    compositions,
    covers,
    enumerate_alpha_permutations,
    enumerate_avoiders,
    has_alpha_231_pattern,
)
from .nu import (
    enumerate_brackets,
    enumerate_reduced,
    extend,
    from_code,
    is_bracket_vector,
    is_reduced_vector,
    reduce,
    to_code,
)
from .poset import build_poset, lattice_violation, projection


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    alpha: Optional[Composition]
    passed: bool
    counterexample: Optional[str] = None
    elapsed: float = 0.0  # milliseconds

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a counterexample must be present exactly when the check failed")

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "check": self.check_name,
            "alpha": None if self.alpha is None else str(self.alpha),
            "passed": self.passed,
            "counterexample": self.counterexample,
        }
        if timings:
            out["elapsed_ms"] = round(self.elapsed, 3)
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), sort_keys=True)

    def line(self, timings: bool = False) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = f" [{self.alpha}]" if self.alpha is not None else ""
        text = f"{status} {self.check_name}{where}"
        if timings:
            text += f" ({self.elapsed:.1f} ms)"
        if not self.passed:
            text += f": {self.counterexample}"
        return text


class Counterexample(Exception):
    pass


def _run(name: str, alpha: Optional[Composition], body: Callable[[], None]) -> CheckReport:
    start = time.perf_counter()
    try:
        body()
        witness = None
    except Counterexample as exc:
        witness = str(exc)
    except Exception as exc:  # the implementation under test blew up
        witness = f"{type(exc).__name__}: {exc}"
    elapsed = (time.perf_counter() - start) * 1000
    return CheckReport(name, alpha, witness is None, witness, elapsed)


def _leq(x, y):
    return all(a <= b for a, b in zip(x, y))


def check_theorem_code_iso(alpha: Composition, encode=encode, decode=decode) -> CheckReport:
    """Encoding is an order isomorphism from the alpha-Tamari lattice onto the codes."""

    def body():
        data = oracles.composition_data(alpha)
        avoiders = data.avoiders
        fast = [w.word for w in enumerate_avoiders(alpha)]
        if fast != [w.word for w in avoiders]:
            raise Counterexample("enumerate_avoiders disagrees with the all-triples filter")
        codes = [c.values for c in enumerate_codes(alpha)]
        boxed = [c for c in oracles.code_box(alpha) if check_code(alpha, c)]
        if codes != boxed:
            raise Counterexample("enumerate_codes disagrees with filtering the C1 box")
        images = {}
        for w in avoiders:
            c = encode(w).values
            if c in images:
                raise Counterexample(f"{images[c]} and {w} share code {c}")
            images[c] = w
        if set(images) != set(codes):
            missing = sorted(set(codes) - set(images))
            extra = sorted(set(images) - set(codes))
            raise Counterexample(f"code image mismatch: missing {missing[:3]}, extra {extra[:3]}")
        for c, w in images.items():
            got = decode(AlphaCode(alpha, c))
            if got.word != w.word:
                raise Counterexample(f"decode({c}) = {got}, expected {w}")
        idx = [data.index[w.word] for w in avoiders]
        encoded = [encode(w).values for w in avoiders]
        for a, u in enumerate(avoiders):
            for b, v in enumerate(avoiders):
                weak = data.leq(idx[a], idx[b])
                comp = _leq(encoded[a], encoded[b])
                if weak != comp:
                    raise Counterexample(
                        f"u={u}, v={v}: weak order says {weak}, codes say {comp}"
                    )

    return _run("theorem_code_iso", alpha, body)


def check_theorem_nu_iso(alpha: Composition) -> CheckReport:
    """Codes, reduced vectors and bracket vectors are isomorphic componentwise orders."""

    def body():
        codes = [c for c in enumerate_codes(alpha)]
        reduced = list(enumerate_reduced(alpha))
        boxed = [r for r in oracles.reduced_box(alpha) if is_reduced_vector(alpha, r)]
        if [r.values for r in reduced] != boxed:
            raise Counterexample("enumerate_reduced disagrees with filtering the R1 box")
        brackets = list(enumerate_brackets(alpha))
        brute = oracles.brute_bracket_vectors(alpha)
        if sorted(b.values for b in brackets) != sorted(brute):
            raise Counterexample("bracket vectors from extend() differ from direct search")
        for b in brute:
            report = is_bracket_vector(alpha, b)
            if not report:
                raise Counterexample(f"direct search found {b} but is_bracket_vector says {report.message}")
        for c in codes:
            r = from_code(c)
            if not is_reduced_vector(alpha, r.values):
                raise Counterexample(f"from_code({c}) = {r} is not a reduced vector")
            if to_code(r) != c:
                raise Counterexample(f"to_code(from_code({c})) = {to_code(r)}")
        for r in reduced:
            c = to_code(r)
            if not check_code(alpha, c.values):
                raise Counterexample(f"to_code({r}) = {c} is not a valid code")
            if from_code(c) != r:
                raise Counterexample(f"from_code(to_code({r})) = {from_code(c)}")
            b = extend(r)
            if reduce(b) != r:
                raise Counterexample(f"reduce(extend({r})) = {reduce(b)}")
        for b in brackets:
            if extend(reduce(b)) != b:
                raise Counterexample(f"extend(reduce({b})) = {extend(reduce(b))}")
        if len({to_code(r).values for r in reduced}) != len(codes) or len(reduced) != len(codes):
            raise Counterexample(f"|R|={len(reduced)} but |C|={len(codes)}")
        rc = [(r.values, to_code(r).values) for r in reduced]
        for r1, c1 in rc:
            for r2, c2 in rc:
                if _leq(r1, r2) != _leq(c1, c2):
                    raise Counterexample(f"order differs between reduced {r1} vs {r2} and codes {c1} vs {c2}")
        br = [(b.values, reduce(b).values) for b in brackets]
        for b1, r1 in br:
            for b2, r2 in br:
                if _leq(b1, b2) != _leq(r1, r2):
                    raise Counterexample(f"order differs between brackets {b1} vs {b2}")

    return _run("theorem_nu_iso", alpha, body)


def _check_alpha_code_is_code(alpha, encode):
    def body():
        for w in oracles.composition_data(alpha).perms:
            c = encode(w).values
            report = check_code(alpha, c)
            if not report:
                raise Counterexample(f"code of {w} is {c}: {report.message}")

    return _run("alpha_code_is_code", alpha, body)


def _check_code_steps(alpha, encode):
    def body():
        data = oracles.composition_data(alpha)
        proj = data.projection
        for i, j in data.covers:
            u, v = data.perms[i], data.perms[j]
            a, b = encode(u).values, encode(v).values
            diff = [(x, y) for x, y in zip(a, b) if x != y]
            if not _leq(a, b) or len(diff) > 1:
                raise Counterexample(f"cover {u} < {v}: codes {a} -> {b}")
            if (a == b) != (proj[u.word] == proj[v.word]):
                raise Counterexample(
                    f"cover {u} < {v}: codes equal is {a == b}, projections equal is {proj[u.word] == proj[v.word]}"
                )

    return _run("code_steps", alpha, body)


def _check_code_left_zero(alpha, encode):
    def body():
        for w in oracles.composition_data(alpha).avoiders:
            c = encode(w)
            z = leftmost_zero(c)
            if w[z] != 1:
                raise Counterexample(f"{w}: leftmost zero of {c} at {z}, but 1 sits at {w.position_of(1)}")

    return _run("code_left_zero", alpha, body)


def _check_code_congruence(alpha, encode):
    def body():
        data = oracles.composition_data(alpha)
        proj = data.projection
        by_code, by_proj = {}, {}
        for i, w in enumerate(data.perms):
            by_code.setdefault(encode(w).values, set()).add(i)
            by_proj.setdefault(proj[w.word].word, set()).add(i)
        code_blocks = sorted(sorted(b) for b in by_code.values())
        proj_blocks = sorted(sorted(b) for b in by_proj.values())
        if code_blocks != proj_blocks:
            for block in code_blocks:
                if block not in proj_blocks:
                    members = [str(data.perms[i]) for i in block]
                    raise Counterexample(f"code fiber {members} is not a projection fiber")
            raise Counterexample("code fibers and projection fibers differ")
        for block in code_blocks:
            bottoms = [m for m in block if all(data.leq(m, x) for x in block)]
            tops = [m for m in block if all(data.leq(x, m) for x in block)]
            if len(bottoms) != 1 or len(tops) != 1:
                raise Counterexample(f"fiber {[str(data.perms[i]) for i in block]} has no min/max")
            lo, hi = bottoms[0], tops[0]
            interval = [x for x in range(len(data.perms)) if data.leq(lo, x) and data.leq(x, hi)]
            if interval != block:
                raise Counterexample(f"fiber {[str(data.perms[i]) for i in block]} is not an interval")

    return _run("code_congruence", alpha, body)


def _check_reduced_decrease(alpha):
    def body():
        for r in enumerate_reduced(alpha):
            for i in range(1, alpha.n):
                if alpha.region_of(i) == alpha.region_of(i + 1) and r[i] < r[i + 1]:
                    raise Counterexample(f"{r}: r({i})={r[i]} < r({i + 1})={r[i + 1]}")

    return _run("reduced_decrease", alpha, body)


def check_lemma_suite(alpha: Composition, encode=encode) -> List[CheckReport]:
    """One report per lemma: code validity, cover steps, leftmost zero,
    congruence of code fibers, and decrease of reduced vectors.

    ``encode`` can be swapped for a deliberately broken one to exercise
    the failure path.
    """
    return [
        _check_alpha_code_is_code(alpha, encode),
        _check_code_steps(alpha, encode),
        _check_code_left_zero(alpha, encode),
        _check_code_congruence(alpha, encode),
        _check_reduced_decrease(alpha),
    ]


def check_projection(alpha: Composition) -> CheckReport:
    """decode(encode(w)) is the greatest avoider below w, and it is monotone."""

    def body():
        data = oracles.composition_data(alpha)
        proj = data.projection
        fast = {}
        for w in data.perms:
            p = projection(w)
            if p.word != proj[w.word].word:
                raise Counterexample(f"projection({w}) = {p}, brute force gives {proj[w.word]}")
            fast[w.word] = data.index[p.word]
        for i, u in enumerate(data.perms):
            for j, v in enumerate(data.perms):
                if data.leq(i, j) and not data.leq(fast[u.word], fast[v.word]):
                    raise Counterexample(f"{u} <= {v} but their projections are not ordered")

    return _run("projection", alpha, body)


def check_cover_congruence(alpha: Composition) -> CheckReport:
    """A cover collapses under projection iff its new inversion has a blocker."""

    def body():
        data = oracles.composition_data(alpha)
        proj = data.projection
        for i, j in data.covers:
            u, v = data.perms[i], data.perms[j]
            same = proj[u.word] == proj[v.word]
            if same != oracles.new_inversion_has_blocker(u, v):
                raise Counterexample(f"cover {u} < {v}: projections equal is {same}")

    return _run("cover_congruence", alpha, body)


def check_code_comparison(alpha: Composition, encode=encode) -> CheckReport:
    """Weak order implies componentwise order of codes on all of S_alpha."""

    def body():
        data = oracles.composition_data(alpha)
        codes = [encode(w).values for w in data.perms]
        for i in range(len(data.perms)):
            for j in range(len(data.perms)):
                if data.leq(i, j) and not _leq(codes[i], codes[j]):
                    raise Counterexample(f"{data.perms[i]} <= {data.perms[j]} but codes {codes[i]}, {codes[j]}")

    return _run("code_comparison_necessary", alpha, body)


def check_covers(alpha: Composition) -> CheckReport:
    """Swap-based covers and the quadratic pattern scan match their oracles."""

    def body():
        data = oracles.composition_data(alpha)
        fast = sorted(
            (data.index[w.word], data.index[v.word]) for w in enumerate_alpha_permutations(alpha) for v in covers(w)
        )
        if fast != sorted(data.covers):
            extra = sorted(set(fast) - set(data.covers))
            missing = sorted(set(data.covers) - set(fast))
            raise Counterexample(f"swap covers: extra {extra[:3]}, missing {missing[:3]}")
        for w in data.perms:
            got = oracles.naive_231_witness(w)
            if has_alpha_231_pattern(w) != got:
                raise Counterexample(f"pattern witness for {w}: fast {has_alpha_231_pattern(w)}, naive {got}")

    return _run("covers_and_patterns", alpha, body)


def check_lattices(alpha: Composition) -> CheckReport:
    """Weak order, alpha-Tamari order and code order are all lattices."""

    def body():
        for kind in ("weak-order", "alpha-tamari", "code"):
            bad = lattice_violation(build_poset(alpha, kind))
            if bad is not None:
                raise Counterexample(f"{kind}: {bad}")

    return _run("lattices", alpha, body)


def catalan_crosscheck(max_n: int) -> CheckReport:
    """Avoider counts for alpha = (1, ..., 1) follow the Catalan numbers."""

    def body():
        for n in range(1, max_n + 1):
            got = sum(1 for _ in enumerate_avoiders(Composition((1,) * n)))
            if got != oracles.catalan(n):
                raise Counterexample(f"n={n}: {got} avoiders, Catalan number is {oracles.catalan(n)}")

    return _run("catalan", None, body)


def checks_for(alpha: Composition) -> List[CheckReport]:
    reports = [
        check_theorem_code_iso(alpha),
        check_theorem_nu_iso(alpha),
        *check_lemma_suite(alpha),
        check_projection(alpha),
        check_cover_congruence(alpha),
        check_code_comparison(alpha),
        check_covers(alpha),
        check_lattices(alpha),
    ]
    oracles.composition_data.cache_clear()
    return reports


def sweep(max_n: int, alpha: Optional[Composition] = None) -> List[CheckReport]:
    """Run every check on every composition of n <= max_n (or on one ``alpha``)."""
    if alpha is not None:
        return checks_for(alpha)
    reports = []
    for n in range(1, max_n + 1):
        for comp in compositions(n):
            reports.extend(checks_for(comp))
    reports.append(catalan_crosscheck(max_n))
    return reports
