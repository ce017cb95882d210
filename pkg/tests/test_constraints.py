import itertools
import math

import pytest

from constrcodes import (cardinality, char_sum_brute, char_sum_int,
                         enumerate_members, even_strict, fixed_weight, member,
                         member_int, member_ints, odd_relaxed, odd_strict,
                         orbit_char_sum, orbit_structure, parse_constraint,
                         rll, subblock, two_charge, two_charge_basis, wht)
from constrcodes.gf2 import BitWord, iterate_span


def all_constraints(n):
    out = [two_charge(), rll(1), rll(2), even_strict(), fixed_weight(n // 2)]
    out.append(odd_relaxed() if n % 2 == 0 else odd_strict())
    for p in (2, 3):
        if n % p == 0:
            out.append(subblock(p, min(2, n // p)))
    return out


# -- independent membership oracles on coordinate tuples ---------------------


def bits_to_tuple(bits, n):
    return tuple((bits >> i) & 1 for i in range(n))


def oracle_member(c, x):
    """Reference membership predicate, written against the definitions."""
    n = len(x)
    if c.kind == "two_charge":
        charge = 0
        for xi in x:
            charge += 1 if xi == 0 else -1
            if charge < 0 or charge > 2:
                return False
        return True
    if c.kind == "subblock":
        width = n // c.p
        return all(sum(x[l * width:(l + 1) * width]) == c.z for l in range(c.p))
    if c.kind == "rll":
        ones = [i for i, xi in enumerate(x) if xi]
        return all(b - a >= c.d + 1 for a, b in zip(ones, ones[1:]))
    runs = []
    current = 0
    for xi in x:
        if xi:
            runs.append(current)
            current = 0
        else:
            current += 1
    runs.append(current)
    if c.kind == "even_strict":
        return sum(x) == 0 or all(r % 2 == 0 for r in runs)
    if c.kind == "odd_strict":
        return sum(x) == 0 or all(r % 2 == 1 for r in runs)
    if c.kind == "odd_relaxed":
        return sum(x) == 0 or all(r % 2 == 1 for r in runs[1:-1])
    return sum(x) == c.i


def test_membership_matches_oracle():
    for n in range(3, 10):
        for c in all_constraints(n):
            for bits in range(1 << n):
                assert member_int(c, n, bits) == \
                    oracle_member(c, bits_to_tuple(bits, n)), (str(c), n, bits)


def test_member_bitword_wrapper():
    c = rll(1)
    assert member(c, BitWord.from_string("10101"))
    assert not member(c, BitWord.from_string("11000"))


def test_enumeration_and_cardinality_agree():
    for n in range(3, 11):
        for c in all_constraints(n):
            members = member_ints(c, n)
            assert len(members) == cardinality(c, n)
            assert members == sorted(members)
            listed = list(enumerate_members(c, n))
            assert {w.bits for w in listed} == set(members)


def test_rll_cardinality_is_fibonacci_like():
    # for d=1, |A| follows the Fibonacci recurrence with |A(1)|=2, |A(2)|=3
    values = [cardinality(rll(1), n) for n in range(1, 12)]
    assert values[0] == 2 and values[1] == 3
    for i in range(2, len(values)):
        assert values[i] == values[i - 1] + values[i - 2]


def test_parse_constraint_roundtrip():
    texts = ["2charge", "subblock:p=2,z=1", "rll:d=2", "odd-strict", "odd",
             "even-strict", "weight:i=3"]
    for text in texts:
        assert str(parse_constraint(text)) == text


def test_parse_constraint_rejects_garbage():
    for text in ["", "blah", "subblock:p=2", "rll:d=x", "subblock:p=,z=1",
                 "weight", "rll:d=0"]:
        with pytest.raises(ValueError):
            parse_constraint(text)


def test_check_length_errors():
    with pytest.raises(ValueError):
        subblock(3, 1).check_length(10)
    with pytest.raises(ValueError):
        subblock(2, 6).check_length(10)
    with pytest.raises(ValueError):
        odd_relaxed().check_length(9)
    with pytest.raises(ValueError):
        fixed_weight(9).check_length(8)


def test_char_sums_match_brute_all_s():
    for n in range(3, 9):
        for c in all_constraints(n):
            for s in range(1 << n):
                assert char_sum_int(c, n, s) == char_sum_brute(c, n, s), \
                    (str(c), n, s)


def test_char_sums_match_wht_larger_n():
    for n in (10, 11):
        for c in all_constraints(n):
            indicator = [1 if member_int(c, n, x) else 0 for x in range(1 << n)]
            spectrum = wht(indicator)
            for s in range(1 << n):
                assert char_sum_int(c, n, s) == spectrum[s]


def test_char_sum_at_zero_is_cardinality():
    for n in (6, 9, 12, 15):
        for c in all_constraints(n):
            assert char_sum_int(c, n, 0) == cardinality(c, n)


def test_two_charge_spectrum_support():
    # the character sum is supported exactly on the span of the pair basis,
    # where its magnitude is 2^floor(n/2)
    for n in (7, 8):
        span = set(iterate_span(two_charge_basis(n)))
        for s in range(1 << n):
            value = char_sum_int(two_charge(), n, s)
            if s in span:
                assert abs(value) == 1 << (n // 2)
            else:
                assert value == 0


def test_orbit_structure_partitions_space():
    for c, n in [(two_charge(), 7), (two_charge(), 8),
                 (subblock(2, 1), 8), (subblock(3, 2), 9)]:
        struct = orbit_structure(c, n)
        assert sum(struct.sizes.values()) == 1 << n
        buckets = struct.buckets()
        for label in struct.labels:
            assert len(buckets[label]) == struct.sizes[label]
            assert struct.label_of(struct.reps[label]) == label
            # labels are constant on orbits by construction of label_of
            assert all(struct.label_of(x) == label for x in buckets[label])


def test_orbit_members_share_membership_and_weight_profile():
    for c, n in [(two_charge(), 9), (subblock(2, 2), 8)]:
        struct = orbit_structure(c, n)
        for label, xs in struct.buckets().items():
            flags = {member_int(c, n, x) for x in xs}
            assert len(flags) == 1


def test_orbit_char_sum_matches_brute():
    for c, n in [(two_charge(), 7), (two_charge(), 8), (subblock(2, 1), 8),
                 (subblock(3, 2), 9)]:
        struct = orbit_structure(c, n)
        buckets = struct.buckets()
        for label in struct.labels:
            s_rep = struct.reps[label]
            for other in struct.labels:
                brute = sum(1 if (x & s_rep).bit_count() % 2 == 0 else -1
                            for x in buckets[other])
                assert orbit_char_sum(struct, other, s_rep) == brute
