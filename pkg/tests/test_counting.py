"""Kostka numbers three ways, the dispatcher, and the box-count identity."""

import pytest

from conftest import (
    WORKED_CONTENT,
    WORKED_COUNT,
    WORKED_SHAPE,
    count_fillings_with_entries_up_to,
    shapes_in_box,
)
from kostka.core import contents, partitions
from kostka.counting import (
    METHODS,
    KostkaResult,
    gordon_product,
    gordon_sum,
    kostka,
    kostka_det,
    kostka_rec,
)
from kostka.errors import (
    InvalidShapeError,
    NegativeEntryError,
    SizeLimitError,
    WeightMismatchError,
)
from kostka.tableaux import count_ssyt


def test_kostka_goldens_both_algorithms():
    cases = [
        ((), (), 1),
        ((3,), (3,), 1),
        ((2, 1), (1, 1, 1), 2),
        ((1, 1), (2,), 0),
        ((2, 2), (1, 1, 1, 1), 2),
        (WORKED_SHAPE, WORKED_CONTENT, WORKED_COUNT),
    ]
    for a, b, want in cases:
        assert kostka_det(a, b) == want, (a, b)
        assert kostka_rec(a, b) == want, (a, b)


def test_inner_algorithms_are_strict_about_input():
    with pytest.raises(WeightMismatchError):
        kostka_det((2, 1), (2, 2))
    with pytest.raises(WeightMismatchError):
        kostka_rec((2, 1), (2, 2))
    with pytest.raises(InvalidShapeError):
        kostka_det((1, 2), (2, 1))
    with pytest.raises(ValueError):
        kostka_rec((2, 1), (2, 0, 1))
    with pytest.raises(SizeLimitError):
        kostka_det((1,) * 11, (1,) * 11)
    assert kostka_det((1,) * 11, (1,) * 11, perm_cap=11) == 1


def test_three_way_agreement_to_weight_6():
    for n in range(7):
        for b in contents(n):
            cache = {}
            memo = {}
            for a in partitions(n):
                det = kostka_det(a, b, mu_cache=cache)
                rec = kostka_rec(a, b, memo=memo)
                cnt = count_ssyt(a, b)
                assert det == rec == cnt, (a, b)
                assert det >= 0


def test_shared_caches_leave_values_unchanged():
    pairs = [(a, b) for n in range(6) for a in partitions(n) for b in contents(n)]
    fresh = [kostka_det(a, b) for a, b in pairs]
    cache = {}
    assert [kostka_det(a, b, mu_cache=cache) for a, b in pairs] == fresh
    memo = {}
    rec_fresh = [kostka_rec(a, b) for a, b in pairs]
    # One memo is only safe per content; regroup accordingly.
    by_content = {}
    for (a, b), want in zip(pairs, rec_fresh):
        got = kostka_rec(a, b, memo=by_content.setdefault(b, {}))
        assert got == want, (a, b)


def test_dispatcher_normalizes_and_reports():
    r = kostka((2, 1), (0, 2, 0, 1))
    assert isinstance(r, KostkaResult)
    assert (r.value, r.method, r.alpha, r.beta) == (1, "det_formula", (2, 1), (2, 1))
    assert kostka((2, 1, 0), (1, 1, 1)).alpha == (2, 1)
    assert kostka((2, 1), (1, 1, 1), method="rec").method == "recursion"
    assert kostka((2, 1), (1, 1, 1), method="recursion").value == 2
    oracle = kostka((2, 1), (1, 1, 1), method="oracle")
    assert oracle.value == oracle.terms_evaluated == 2
    det = kostka((2, 1), (1, 1, 1), method="det")
    assert det.terms_evaluated == 2  # both permutations stay nonnegative
    assert set(METHODS) == {"det_formula", "recursion", "oracle"}


def test_dispatcher_boundaries():
    mismatch = kostka((2, 1), (2, 2))
    assert (mismatch.value, mismatch.terms_evaluated) == (0, 0)
    with pytest.raises(ValueError):
        kostka((2, 1), (1, 1, 1), method="guess")
    with pytest.raises(InvalidShapeError):
        kostka((1, 2), (2, 1))
    with pytest.raises(NegativeEntryError):
        kostka((2, 1), (4, -1))


def test_gordon_product_goldens():
    assert gordon_product(1, 1) == 2
    assert gordon_product(1, 3) == 4
    assert gordon_product(3, 1) == 8
    assert gordon_product(2, 2) == 10
    with pytest.raises(ValueError):
        gordon_product(0, 3)
    with pytest.raises(ValueError):
        gordon_sum(2, 0)


def test_gordon_product_counts_bounded_fillings():
    # Independent meaning check: total semistandard fillings with entries
    # at most p and at most q columns, empty shape included.
    for p in range(1, 5):
        for q in range(1, 5):
            if p * q > 8:
                continue
            brute = sum(
                count_fillings_with_entries_up_to(shape, p) for shape in shapes_in_box(p, q)
            )
            assert gordon_product(p, q) == brute, (p, q)


def test_gordon_sum_matches_product_small():
    for p in range(1, 5):
        for q in range(1, 5):
            if p * q <= 9:
                assert gordon_sum(p, q) == gordon_product(p, q), (p, q)


def test_gordon_sum_cap():
    with pytest.raises(SizeLimitError):
        gordon_sum(5, 4)
    with pytest.raises(SizeLimitError):
        gordon_sum(3, 3, limit=8)
    assert gordon_sum(2, 2, limit=4) == 10
