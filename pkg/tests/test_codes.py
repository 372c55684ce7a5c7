from itertools import combinations

import pytest

from adinkra.codes import (
    BinaryWord,
    LinearCode,
    ParityClass,
    classify_code,
    contains,
    coset_representatives,
    enumerate_doubly_even_codes,
    parse_code_text,
    span_members,
    words_of_length,
)
from helpers import all_codes, code_of


def test_weight_counts():
    assert BinaryWord.from_text("0000").weight() == 0
    assert BinaryWord.from_text("1111").weight() == 4
    assert BinaryWord.from_text("11110").weight() == 4


def test_classify_doubly_even_cases():
    assert classify_code(code_of("1111")) is ParityClass.DOUBLY_EVEN
    assert classify_code(LinearCode(4, ())) is ParityClass.DOUBLY_EVEN


def test_classify_even_not_doubly_even():
    parity = classify_code(code_of("1100"))
    assert parity is ParityClass.EVEN
    assert parity.is_even


def test_classify_odd():
    assert classify_code(code_of("100")) is ParityClass.ODD
    assert not ParityClass.ODD.is_even


def test_classify_detects_even_sum_of_doubly_even_generators():
    # weight-4 generators overlapping in an odd number of places span a
    # weight-2-mod-4 word
    code = code_of("111100", "011110")
    assert classify_code(code) is ParityClass.EVEN


def test_span_of_all_ones():
    members = {str(w) for w in span_members(code_of("1111"))}
    assert members == {"0000", "1111"}


def test_span_of_trivial_code():
    assert {str(w) for w in span_members(LinearCode(5, ()))} == {"00000"}


def test_span_of_two_block_generators():
    code = code_of("11110000", "00001111")
    # oracle: xor every subset of the generators
    gens = [w.as_int for w in code.generators]
    expected = set()
    for r in range(len(gens) + 1):
        for combo in combinations(gens, r):
            value = 0
            for g in combo:
                value ^= g
            expected.add(value)
    assert {w.as_int for w in span_members(code)} == expected
    assert len(expected) == 4


def test_contains_known_cases():
    assert contains(code_of("1111"), BinaryWord.from_text("1111"))
    assert not contains(code_of("11110"), BinaryWord.from_text("11111"))
    assert contains(code_of("1111"), BinaryWord.zero(4))
    assert contains(LinearCode(6, ()), BinaryWord.zero(6))


def test_contains_length_mismatch():
    with pytest.raises(ValueError):
        contains(code_of("1111"), BinaryWord.from_text("111"))


def test_contains_agrees_with_span_scan():
    for n in range(2, 7):
        for code in all_codes(n):
            members = span_members(code)
            for word in words_of_length(n):
                assert contains(code, word) == (word in members)


def test_span_dimension_guard():
    length = 21
    gens = tuple(BinaryWord.unit(length, i + 1) for i in range(21))
    with pytest.raises(ValueError):
        span_members(LinearCode(length, gens))


def _subspaces_by_brute_force(length: int) -> set[frozenset[int]]:
    # spans of all generator subsets of size <= length: every subspace shows up
    vectors = list(range(1, 1 << length))
    spaces = {frozenset({0})}
    for r in range(1, length + 1):
        for combo in combinations(vectors, r):
            span = {0}
            for g in combo:
                span |= {s ^ g for s in span}
            spaces.add(frozenset(span))
    return spaces


def test_enumerate_matches_brute_force_subspace_scan_n4():
    doubly_even = {
        space
        for space in _subspaces_by_brute_force(4)
        if all(v.bit_count() % 4 == 0 for v in space)
    }
    found = all_codes(4)
    assert {frozenset(w.as_int for w in span_members(c)) for c in found} == doubly_even
    assert len(found) == 2


def test_enumerate_small_counts():
    assert len(enumerate_doubly_even_codes(4, 1)) == 2
    assert len(enumerate_doubly_even_codes(3, 3)) == 1
    # dimension <= 1 at length 8: the trivial code plus one code per word of
    # weight 4 or 8; the oracle recounts the words
    nonzero = [v for v in range(1, 256) if v.bit_count() % 4 == 0]
    assert len(nonzero) == 71
    assert len(enumerate_doubly_even_codes(8, 1)) == 1 + len(nonzero)


def test_enumerate_results_are_doubly_even_by_full_span_scan():
    for n in range(2, 7):
        for code in all_codes(n):
            assert all(w.weight() % 4 == 0 for w in span_members(code))


def test_enumerate_spans_are_pairwise_distinct():
    for n in range(2, 7):
        spans = [frozenset(str(w) for w in span_members(c)) for c in all_codes(n)]
        assert len(spans) == len(set(spans))


def test_enumerate_guards():
    with pytest.raises(ValueError):
        enumerate_doubly_even_codes(9, 1)
    with pytest.raises(ValueError):
        enumerate_doubly_even_codes(4, 5)


def test_coset_representatives_all_ones():
    reps = [str(w) for w in coset_representatives(code_of("1111"))]
    assert reps == ["0000", "0001", "0010", "0011", "0100", "0101", "0110", "0111"]


def test_coset_representatives_trivial_code():
    reps = [str(w) for w in coset_representatives(LinearCode(2, ()))]
    assert reps == ["00", "01", "10", "11"]


def test_coset_representatives_minimality_and_count():
    code = code_of("11110")
    reps = coset_representatives(code)
    assert len(reps) == 2 ** (5 - 1)
    span = span_members(code)
    for rep in reps:
        coset = {(rep + c).as_int for c in span}
        assert rep.as_int == min(coset)
    assert reps == sorted(reps)


def test_coset_representative_sums_leave_the_code():
    for n in range(2, 6):
        for code in all_codes(n):
            reps = coset_representatives(code)
            for a in reps:
                for b in reps:
                    if a != b:
                        assert not contains(code, a + b)


def test_coset_representatives_require_even_code():
    with pytest.raises(ValueError):
        coset_representatives(code_of("100"))


def test_even_codes_have_parity_constant_cosets():
    for n in range(2, 6):
        for code in all_codes(n):
            span = span_members(code)
            for rep in coset_representatives(code):
                parities = {(rep + c).weight() % 2 for c in span}
                assert len(parities) == 1


def test_odd_code_mixes_parity_inside_a_coset():
    code = code_of("100")
    span = span_members(code)
    mixed = any(
        len({(w + c).weight() % 2 for c in span}) > 1 for w in words_of_length(3)
    )
    assert mixed


def test_parse_code_text():
    code = parse_code_text("# comment\n\n1111\n")
    assert code == code_of("1111")
    with pytest.raises(ValueError):
        parse_code_text("1111\n111\n")
    with pytest.raises(ValueError):
        parse_code_text("11a1\n")
    with pytest.raises(ValueError):
        parse_code_text("# nothing here\n")


def test_code_equality_is_span_equality():
    assert code_of("1100", "0011") == code_of("1111", "0011")
    assert hash(code_of("1100", "0011")) == hash(code_of("1111", "0011"))
    assert code_of("1111") != code_of("1100")
    assert code_of("1111", "0000") == code_of("1111")


def test_dimension_is_rank_not_generator_count():
    assert code_of("1111", "1111", "0000").dimension == 1
    assert LinearCode(4, ()).dimension == 0
