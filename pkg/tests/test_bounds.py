import math

import pytest

from gpsieve.bounds import (
    EXPECTED_COARSE_PAIRS,
    EXPECTED_EXACT_PAIRS,
    coarse_pair_holds,
    coarse_pairs,
    exact_pair_holds,
    exact_pairs,
    lemma107_holds,
    maroti_threshold,
    mathieu_check,
    smallprim_report,
    twelfth_power_filter,
)
from gpsieve.catalog import GroupSpec, default_catalog
from gpsieve.factored import factor, factored_factorial


def _threshold_plain(n):
    return n ** (12 + 12 * int(math.floor(math.log2(n)))) <= math.factorial(n) // 2


@pytest.mark.parametrize("n, expected", [(106, False), (107, True), (209, True), (2, False)])
def test_lemma107_examples(n, expected):
    assert lemma107_holds(n) is expected


def test_lemma107_range_against_plain_integers():
    for n in range(90, 301):
        assert lemma107_holds(n) == _threshold_plain(n), n
        assert lemma107_holds(n) == (n >= 107)


def test_coarse_pairs_expected_set():
    assert coarse_pairs(100, 10) == EXPECTED_COARSE_PAIRS
    assert len(EXPECTED_COARSE_PAIRS) == 48


def test_coarse_boundaries():
    assert coarse_pair_holds(48, 2) and not coarse_pair_holds(49, 2)
    assert coarse_pair_holds(8, 3) and not coarse_pair_holds(9, 3)


def test_coarse_search_box_is_sound():
    # l = 2: k^2 - 48k - 48 is increasing for k >= 24, so failure at 49 persists
    assert all(not coarse_pair_holds(k, 2) for k in range(49, 5000))
    # for fixed l >= 3, failure at k0 implies failure for all larger k
    for l in range(3, 12):
        failed = False
        for k in range(5, 400):
            if failed:
                assert not coarse_pair_holds(k, l)
            failed = failed or not coarse_pair_holds(k, l)
    # l >= 6: k = 5 fails and so does every larger l
    assert all(not coarse_pair_holds(5, l) for l in range(6, 60))
    assert coarse_pairs(200, 30) == EXPECTED_COARSE_PAIRS


def test_coarse_rejects_small_box():
    with pytest.raises(ValueError):
        coarse_pairs(40, 10)


def test_exact_pairs_expected_set():
    assert exact_pairs(coarse_pairs(100, 10)) == EXPECTED_EXACT_PAIRS


@pytest.mark.parametrize("k, l", [(10, 2), (11, 2), (5, 2), (5, 3), (8, 3), (48, 2)])
def test_exact_pair_against_plain_integers(k, l):
    plain = math.factorial(k) ** (12 * l) * math.factorial(l) ** 12 >= math.factorial(k**l) // 2
    assert exact_pair_holds(k, l) == plain


def test_exact_pair_examples():
    assert exact_pair_holds(10, 2)
    assert not exact_pair_holds(11, 2)


def test_exact_subset_of_coarse():
    cand = coarse_pairs(100, 10)
    assert exact_pairs(cand) <= cand
    assert exact_pairs({(5, 2), (11, 2)}) == {(5, 2)}


@pytest.mark.parametrize("n", [11, 12, 23, 24])
def test_mathieu_check(n):
    assert mathieu_check(n)


def test_mathieu_24_plain():
    assert 244823040**12 >= math.factorial(24) // 2


@pytest.mark.parametrize("n", [13, 22, 10])
def test_mathieu_check_rejects(n):
    with pytest.raises(ValueError):
        mathieu_check(n)


def test_maroti_examples():
    assert maroti_threshold(17, factor(136))
    # 5^(1+2) = 125 > 60
    assert maroti_threshold(5, factored_factorial(5) / factor(2))
    assert maroti_threshold(31, factor(1))
    assert not maroti_threshold(5, factor(125))
    with pytest.raises(ValueError):
        maroti_threshold(4, factor(1))


def test_twelfth_power_filter_shipped_catalog():
    results = twelfth_power_filter(default_catalog())
    assert len(results) == 115
    assert all(ok for _, ok in results), [g.label for g, ok in results if not ok]
    labels = {g.key: ok for g, ok in results}
    assert labels[("PSL(2,13)", 14, "A")]
    assert labels[("Sym(10) wreath Sym(2)", 100, "S")]


def test_twelfth_power_filter_synthetic():
    [(_, ok)] = twelfth_power_filter([GroupSpec("C(2)", 14, "A", "2")])
    assert not ok


def test_report_is_order_independent():
    a = smallprim_report(100, 110)
    b = smallprim_report(100, 110)
    assert a == b and a.ok
