import json

import pytest
from hypothesis import given

from alphatamari import errors
from alphatamari.codes import (
    AlphaCode,
    check_code,
    componentwise_leq,
    decode,
    decode_trace,
    encode,
    enumerate_codes,
    leftmost_zero,
    sees,
)
from alphatamari.combinatorics import (
    compositions,
    enumerate_alpha_permutations,
    enumerate_avoiders,
    has_alpha_231_pattern,
    identity,
    make_composition,
    parse_permutation,
    weak_leq,
)
from alphatamari.oracles import code_box

from test_combinatorics import alpha_perms

A121 = make_composition((1, 2, 1))
A2321 = make_composition((2, 3, 2, 1))
W2321 = parse_permutation(A2321, "5 8 1 4 7 3 6 2")


def code(alpha, *values):
    return AlphaCode(alpha, tuple(values))


def lehmer(word):
    return tuple(sum(1 for y in word[i + 1 :] if y < x) for i, x in enumerate(word))


class TestCheckCode:
    @pytest.mark.parametrize("values", [(2, 0, 1, 0), (2, 1, 1, 0)])
    def test_c3_rejections(self, values):
        report = check_code(A121, values)
        assert not report
        assert report.condition == "C3" and report.indices == {"i": 1, "a": 2}
        assert report.message.startswith("C3 violated at i=1, a=2")

    def test_zero_tuple_is_valid(self):
        assert check_code(A121, (0, 0, 0, 0))

    def test_violation_order(self):
        assert check_code(A121, (0, 0, 0)).condition == "length"
        assert check_code(A121, (4, 0, 0, 0)).to_dict() == {"valid": False, "condition": "C1", "indices": {"i": 1}}
        assert check_code(A121, (0, 1, 0, 0)).condition == "C2"
        # C1 is reported before a later C2 problem
        assert check_code(A121, (0, 1, 0, 1)).condition == "C1"

    def test_report_json(self):
        assert json.loads(check_code(A121, (2, 0, 1, 0)).to_json()) == {
            "valid": False,
            "condition": "C3",
            "indices": {"a": 2, "i": 1},
        }

    def test_worked_relations_for_121(self):
        # 0<=c1<=3, 0<=c2<=c3<=1, c4=0 gives twelve tuples; C3 removes two
        pre = [
            (c1, c2, c3, 0)
            for c1 in range(4)
            for c2 in range(2)
            for c3 in range(2)
            if c2 <= c3
        ]
        assert len(pre) == 12
        kept = [c for c in pre if check_code(A121, c)]
        assert len(kept) == 10
        assert sorted(set(pre) - set(kept)) == [(2, 0, 1, 0), (2, 1, 1, 0)]


class TestEncode:
    def test_examples(self):
        assert encode(W2321).values == (2, 6, 0, 1, 3, 1, 1, 0)
        assert encode(parse_permutation(A121, "3 1 4 2")).values == (1, 0, 1, 0)
        assert encode(identity(make_composition((5,)))).values == (0,) * 5

    def test_codes_of_every_alpha_permutation_are_valid(self):
        for n in range(1, 7):
            for a in compositions(n):
                for w in enumerate_alpha_permutations(a):
                    assert check_code(a, encode(w).values)

    def test_classical_case_refines_lehmer_code(self):
        # each entry is at most the Lehmer entry and equals it on 132-free suffixes
        a = make_composition((1,) * 5)
        for w in enumerate_alpha_permutations(a):
            c, lc = encode(w).values, lehmer(w.word)
            assert all(x <= y for x, y in zip(c, lc))

    def test_sees(self):
        assert sees(W2321, 1, 4)
        assert not sees(W2321, 1, 5)
        assert not any(sees(W2321, 8, k) for k in range(1, 9))
        with pytest.raises(errors.IndexOutOfRange):
            sees(W2321, 1, 9)

    def test_seeing_implies_inversion(self):
        for a in compositions(5):
            for w in enumerate_alpha_permutations(a):
                c = encode(w)
                for i in range(1, 6):
                    seen = [k for k in range(1, 6) if sees(w, i, k)]
                    assert len(seen) == c[i]
                    assert all(w[i] > w[k] for k in seen)


class TestComponentwise:
    def test_examples(self):
        assert componentwise_leq(code(A121, 0, 0, 0, 0), code(A121, 3, 1, 1, 0))
        x, y = code(A121, 1, 0, 1, 0), code(A121, 0, 1, 1, 0)
        assert not componentwise_leq(x, y) and not componentwise_leq(y, x)
        assert componentwise_leq(x, x)

    def test_mismatch(self):
        with pytest.raises(errors.CompositionMismatch):
            componentwise_leq(code(A121, 0, 0, 0, 0), code(make_composition((2, 2)), 0, 0, 0, 0))


class TestDecode:
    def test_figure_example(self):
        assert str(decode(code(A2321, 2, 6, 0, 1, 3, 1, 1, 0))) == "5 8 1 4 7 3 6 2"

    def test_121_fiber_bottom(self):
        # 1342 and 2341 share this code; only 1342 avoids the pattern
        c = code(A121, 0, 1, 1, 0)
        assert str(decode(c)) == "1 3 4 2"
        other = parse_permutation(A121, "2 3 4 1")
        assert encode(other) == c and has_alpha_231_pattern(other) == (1, 2, 4)

    def test_zero_code_is_identity(self):
        for a in compositions(5):
            assert decode(AlphaCode(a, (0,) * 5)) == identity(a)

    def test_invalid_code(self):
        with pytest.raises(errors.InvalidCode) as exc:
            decode(code(A121, 2, 0, 1, 0))
        assert exc.value.report.condition == "C3"

    def test_trace_rows(self):
        steps = decode_trace(code(A2321, 2, 6, 0, 1, 3, 1, 1, 0))
        _ = None
        assert steps == [
            ((2, 6, 0, 1, 3, 1, 1, 0), 3),
            ((1, 5, _, 1, 3, 1, 1, 0), 8),
            ((1, 4, _, 1, 2, 0, 0, _), 6),
            ((1, 3, _, 0, 1, _, 0, _), 4),
            ((0, 2, _, _, 1, _, 0, _), 1),
            ((_, 2, _, _, 1, _, 0, _), 7),
            ((_, 1, _, _, 0, _, _, _), 5),
            ((_, 0, _, _, _, _, _, _), 2),
        ]

    def test_trace_agrees_with_recursive_decoder(self):
        for n in range(1, 8):
            for a in compositions(n):
                for c in enumerate_codes(a):
                    word = [0] * n
                    for value, (_, pos) in enumerate(decode_trace(c), start=1):
                        word[pos - 1] = value
                    assert tuple(word) == decode(c).word

    def test_round_trips(self):
        for n in range(1, 7):
            for a in compositions(n):
                for c in enumerate_codes(a):
                    w = decode(c)
                    assert has_alpha_231_pattern(w) is None
                    assert encode(w) == c
                for w in enumerate_avoiders(a):
                    assert decode(encode(w)) == w


class TestEnumerateCodes:
    def test_small_sets(self):
        vals = lambda a: [c.values for c in enumerate_codes(make_composition(a))]  # noqa: E731
        assert vals((2, 1)) == [(0, 0, 0), (0, 1, 0), (1, 1, 0)]
        assert vals((1, 2)) == [(0, 0, 0), (1, 0, 0), (2, 0, 0)]
        assert len(vals((1, 2, 1))) == 10

    def test_matches_filtered_box(self):
        for n in range(1, 7):
            for a in compositions(n):
                got = [c.values for c in enumerate_codes(a)]
                assert got == [c for c in code_box(a) if check_code(a, c)]

    def test_bijective_count(self):
        for n in range(1, 8):
            for a in compositions(n):
                assert sum(1 for _ in enumerate_codes(a)) == sum(1 for _ in enumerate_avoiders(a))


class TestLeftmostZero:
    def test_examples(self):
        c = code(A2321, 2, 6, 0, 1, 3, 1, 1, 0)
        assert leftmost_zero(c) == 3 and decode(c)[3] == 1
        c = code(A121, 1, 0, 1, 0)
        assert leftmost_zero(c) == 2 and str(decode(c)) == "2 1 4 3"
        assert leftmost_zero(code(A121, 0, 0, 0, 0)) == 1

    def test_last_entry_always_zero(self):
        for a in compositions(6):
            for c in enumerate_codes(a):
                assert c[6] == 0

    def test_invalid(self):
        with pytest.raises(errors.InvalidCode):
            leftmost_zero(code(A121, 0, 0, 0, 1))


def test_order_relations_between_codes_and_weak_order():
    for n in range(1, 6):
        for a in compositions(n):
            ws = list(enumerate_alpha_permutations(a))
            cs = [encode(w) for w in ws]
            avoid = [has_alpha_231_pattern(w) is None for w in ws]
            for i, u in enumerate(ws):
                for j, v in enumerate(ws):
                    le = weak_leq(u, v)
                    if le:
                        assert componentwise_leq(cs[i], cs[j])
                    if avoid[i] and avoid[j] and componentwise_leq(cs[i], cs[j]):
                        assert le


@given(alpha_perms(max_n=10))
def test_random_codes_are_valid_and_project(w):
    c = encode(w)
    assert check_code(w.alpha, c.values)
    p = decode(c)
    assert has_alpha_231_pattern(p) is None
    assert weak_leq(p, w)
    assert encode(p) == c
