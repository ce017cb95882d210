import math
import random

import pytest

from constrcodes import (IntSpectrum, krawtchouk, krawtchouk_table,
                         self_convolution_counts, weight_class_sums, wht)
from constrcodes.constraints import char_sum_int, member_int, rll


def brute_wht(vals, n):
    out = []
    for s in range(1 << n):
        out.append(sum(v if (x & s).bit_count() % 2 == 0 else -v
                       for x, v in enumerate(vals)))
    return out


def test_wht_matches_brute_force():
    rng = random.Random(3)
    for n in range(1, 9):
        vals = [rng.randint(-9, 9) for _ in range(1 << n)]
        assert wht(vals).values == brute_wht(vals, n)


def test_wht_involution_and_parseval():
    rng = random.Random(5)
    for n in (3, 6, 10):
        size = 1 << n
        vals = [rng.randint(-9, 9) for _ in range(size)]
        spec = wht(vals)
        assert wht(spec).values == [size * v for v in vals]
        assert sum(v * v for v in spec.values) == size * sum(v * v for v in vals)


def test_wht_rejects_bad_lengths():
    with pytest.raises(ValueError):
        wht([1, 2, 3])


def test_int_spectrum_validates_length():
    with pytest.raises(ValueError):
        IntSpectrum(2, [1, 2, 3])


def brute_krawtchouk(n, i, j):
    return sum((-1) ** t * math.comb(j, t) * math.comb(n - j, i - t)
               for t in range(i + 1))


def test_krawtchouk_values():
    for n in range(0, 12):
        table = krawtchouk_table(n)
        for i in range(n + 1):
            for j in range(n + 1):
                assert table.value(i, j) == brute_krawtchouk(n, i, j)
                assert krawtchouk(n, i, j) == table.value(i, j)


def test_krawtchouk_orthogonality():
    for n in range(1, 11):
        table = krawtchouk_table(n)
        for i in range(n + 1):
            for k in range(n + 1):
                total = sum(math.comb(n, j) * table.value(i, j) * table.value(k, j)
                            for j in range(n + 1))
                expected = (1 << n) * math.comb(n, i) if i == k else 0
                assert total == expected


def test_krawtchouk_reciprocity():
    # binomial-weighted symmetry: C(n,j) K_i(j) = C(n,i) K_j(i)
    n = 9
    table = krawtchouk_table(n)
    for i in range(n + 1):
        for j in range(n + 1):
            assert math.comb(n, j) * table.value(i, j) == \
                math.comb(n, i) * table.value(j, i)


def test_weight_class_sums_against_direct():
    n = 8
    c = rll(1)
    sums = weight_class_sums(lambda s: char_sum_int(c, n, s), n)
    direct = [0] * (n + 1)
    for s in range(1 << n):
        direct[s.bit_count()] += char_sum_int(c, n, s)
    assert sums == direct
    # the weight-0 class sum is the cardinality of the set
    assert sums[0] == sum(1 for x in range(1 << n) if member_int(c, n, x))


def test_self_convolution_counts_against_brute():
    n = 7
    c = rll(2)
    members = [x for x in range(1 << n) if member_int(c, n, x)]
    conv = self_convolution_counts(lambda x: member_int(c, n, x), n)
    member_set = set(members)
    for x in range(1 << n):
        assert conv[x] == sum(1 for z in members if (x ^ z) in member_set)


def test_caps_are_enforced():
    with pytest.raises(ValueError):
        weight_class_sums(lambda s: 0, 99)
    with pytest.raises(ValueError):
        self_convolution_counts(lambda x: True, 99)
