from collections import Counter
from itertools import permutations
from math import factorial

import numpy as np
import pytest

from signed_mahonian import perm_core as pc
from signed_mahonian.perm_core import (
    Perm, append_digit, descent_set, inv, iterate_sn, last, maj, sign_perm,
)

from . import laws

W = Perm


def test_perm_validation():
    with pytest.raises(ValueError):
        Perm(())
    with pytest.raises(ValueError):
        Perm((1, 1, 2))
    assert W((2, 4, 1, 3))(2) == 4


class TestIterate:
    def test_small(self):
        assert list(iterate_sn(1)) == [W((1,))]
        s3 = list(iterate_sn(3))
        assert len(s3) == 6
        assert s3[0] == W((1, 2, 3)) and s3[-1] == W((3, 2, 1))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_lexicographic_and_complete(self, n):
        got = [p.window for p in iterate_sn(n)]
        assert got == list(permutations(range(1, n + 1)))

    def test_rank_ranges_partition(self):
        whole = list(iterate_sn(5))
        parts = [list(iterate_sn(5, a, a + 17)) for a in range(0, 120, 17)]
        assert [p for part in parts for p in part] == whole

    def test_n10_count(self):
        assert sum(1 for _ in iterate_sn(10)) == factorial(10)

    def test_domain_errors(self, monkeypatch):
        with pytest.raises(ValueError):
            iterate_sn(0)
        monkeypatch.setenv(pc.SN_CAP_ENV, "4")
        with pytest.raises(ValueError):
            iterate_sn(5)
        assert len(list(iterate_sn(4))) == 24


class TestStatistics:
    @pytest.mark.parametrize("w, i, d, m, l, s", [
        ((1, 2, 3), 0, set(), 0, 2, 1),
        ((3, 2, 1), 3, {1, 2}, 3, 0, -1),
        ((2, 4, 1, 3), 3, {2}, 2, 2, -1),
        ((2, 1, 3), 1, {1}, 1, 2, -1),
    ])
    def test_examples(self, w, i, d, m, l, s):
        p = W(w)
        assert inv(p) == i
        assert descent_set(p) == d
        assert maj(p) == m
        assert last(p) == l
        assert sign_perm(p) == s

    @pytest.mark.parametrize("n", range(1, 10))
    def test_macmahon_equidistribution(self, n):
        st = pc.sn_stats(n)
        assert Counter(st["inv"].tolist()) == Counter(st["maj"].tolist())

    @pytest.mark.parametrize("n", range(1, 7))
    def test_vectorised_matches_scalar(self, n):
        st = pc.sn_stats(n)
        perms = list(iterate_sn(n))
        assert np.array_equal(st["window"], np.array([p.window for p in perms]))
        assert st["inv"].tolist() == [inv(p) for p in perms]
        assert st["maj"].tolist() == [maj(p) for p in perms]
        assert st["last"].tolist() == [last(p) for p in perms]
        assert all(maj(p) == sum(descent_set(p)) for p in perms)


class TestAppendDigit:
    def test_examples(self):
        assert append_digit(W((1,)), 1) == W((2, 1))
        assert append_digit(W((2, 1)), 2) == W((3, 1, 2))
        assert append_digit(W((1, 2)), 3) == W((1, 2, 3))

    def test_range(self):
        with pytest.raises(ValueError):
            append_digit(W((1, 2)), 4)
        with pytest.raises(ValueError):
            append_digit(W((1, 2)), 0)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_update_laws_exhaustive(self, n):
        for p in iterate_sn(n - 1):
            i, m, tail = inv(p), maj(p), p.window[-1]
            for k in range(1, n + 1):
                q = append_digit(p, k)
                assert inv(q) == i + (n - k)
                assert maj(q) == (m if k > tail else m + n - 1)
                assert last(q) == k - 1

    @pytest.mark.parametrize("n", range(2, 9))
    def test_bijective(self, n):
        images = {append_digit(p, k) for p in iterate_sn(n - 1) for k in range(1, n + 1)}
        assert len(images) == factorial(n)

    def test_update_laws_random(self):
        laws.append_digit_updates()
        laws.append_digit_invertible()
