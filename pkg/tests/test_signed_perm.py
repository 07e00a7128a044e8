from collections import Counter

import numpy as np
import pytest

from signed_mahonian import signed_perm as sp
from signed_mahonian.perm_core import Perm, maj, sign_perm
from signed_mahonian.signed_perm import (
    OrderConvention, SignedPerm, char_neg, compose, fmaj, iterate_bn,
    iterate_un, length_bn, maj_signed, neg, sign_abs, sign_bn, un_sn_decompose,
)

S = SignedPerm
REV, NAT = OrderConvention.NEG_REVERSED, OrderConvention.NATURAL


def coxeter_length_bfs(n):
    """Independent oracle: word length in the generators s_0, s_1, ..., s_{n-1}."""
    def apply(w, g):
        w = list(w)
        if g == 0:
            w[0] = -w[0]
        else:
            w[g - 1], w[g] = w[g], w[g - 1]
        return tuple(w)

    start = tuple(range(1, n + 1))
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in range(n):
                v = apply(w, g)
                if v not in dist:
                    dist[v] = dist[w] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def test_validation():
    with pytest.raises(ValueError):
        S((1, -1))
    with pytest.raises(ValueError):
        S((0, 1))
    s = S((2, -1))
    assert s(1) == 2 and s(-1) == -2 and s(2) == -1


class TestIterate:
    def test_small(self):
        assert list(iterate_bn(1)) == [S((1,)), S((-1,))]
        assert len(list(iterate_bn(2))) == 8

    def test_b7_count_and_distinct(self):
        n = 7
        total = sum(blk["window"].shape[0] for blk in sp.bn_blocks(n))
        assert total == 645120 == sp.bn_order(n)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_distinct(self, n):
        items = list(iterate_bn(n))
        assert len(set(items)) == len(items) == sp.bn_order(n)

    def test_cap(self, monkeypatch):
        with pytest.raises(ValueError):
            list(iterate_bn(0))
        monkeypatch.setenv(sp.BN_CAP_ENV, "3")
        with pytest.raises(ValueError):
            list(iterate_bn(4))


class TestStatistics:
    def test_neg(self):
        assert neg(S((1, 2))) == 0
        assert neg(S((-1, -2))) == 2
        assert neg(S((-2, 1, 3))) == 1

    def test_maj_orders(self):
        assert maj_signed(S((-1, -2, -3)), REV) == 0
        assert maj_signed(S((-1, -2, -3)), NAT) == 3
        assert maj_signed(S((2, -1)), REV) == 1

    def test_fmaj(self):
        for n in range(1, 5):
            assert fmaj(S(tuple(range(1, n + 1)))) == 0
        for order in OrderConvention:
            assert fmaj(S((-1,)), order) == 1
        assert fmaj(S((2, -1)), REV) == 3

    def test_length(self):
        assert length_bn(S((1, 2, 3))) == 0
        assert length_bn(S((-1, 2))) == 1
        assert length_bn(S((-1, -2))) == 4

    @pytest.mark.parametrize("n", range(1, 5))
    def test_length_matches_coxeter_bfs(self, n):
        dist = coxeter_length_bfs(n)
        assert len(dist) == sp.bn_order(n)
        for w, d in dist.items():
            assert length_bn(S(w)) == d

    def test_characters(self):
        assert (sign_bn(S((1, 2))), char_neg(S((1, 2))), sign_abs(S((1, 2)))) == (1, 1, 1)
        assert (sign_bn(S((-1, 2))), char_neg(S((-1, 2))), sign_abs(S((-1, 2)))) == (-1, -1, 1)
        assert (sign_bn(S((2, 1))), char_neg(S((2, 1))), sign_abs(S((2, 1)))) == (-1, 1, -1)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_vectorised_matches_scalar(self, n):
        for order in OrderConvention:
            rows = {}
            for blk in sp.bn_blocks(n, order):
                for i, w in enumerate(blk["window"].tolist()):
                    rows[tuple(w)] = {k: int(blk[k][i]) for k in blk if k != "window"}
            assert len(rows) == sp.bn_order(n)
            for s in iterate_bn(n):
                r = rows[s.window]
                assert r["neg"] == neg(s)
                assert r["maj"] == maj_signed(s, order)
                assert r["fmaj"] == fmaj(s, order)
                assert r["length"] == length_bn(s)
                assert r["sign"] == sign_bn(s)
                assert r["char_neg"] == char_neg(s)
                assert r["sign_abs"] == sign_abs(s)


class TestBlockLaws:
    """Exhaustive laws over B_n, n <= 7, on the vectorised sweep."""

    @pytest.mark.parametrize("n", range(1, 8))
    def test_parity_and_character_factorisation(self, n):
        for blk in sp.bn_blocks(n):
            assert np.all((blk["fmaj"] - blk["neg"]) % 2 == 0)
            assert np.array_equal(blk["sign"], blk["sign_abs"] * blk["char_neg"])

    @pytest.mark.parametrize("n", range(1, 8))
    def test_equidistributions(self, n):
        length, fm_rev, fm_nat = Counter(), Counter(), Counter()
        for blk, blk_nat in zip(sp.bn_blocks(n, REV), sp.bn_blocks(n, NAT)):
            length.update(blk["length"].tolist())
            fm_rev.update(blk["fmaj"].tolist())
            fm_nat.update(blk_nat["fmaj"].tolist())
        assert length == fm_rev == fm_nat

    @pytest.mark.parametrize("n", range(1, 8))
    def test_decomposition_additivity(self, n):
        for blk in sp.bn_blocks(n):
            w = blk["window"]
            keys = sp.order_keys(w, REV)
            order = np.argsort(keys, axis=1, kind="stable")
            tau = np.take_along_axis(w, order, axis=1)
            pi = np.argsort(order, axis=1) + 1
            # tau increasing in the flag-major order, pi recomposes to sigma
            tk = sp.order_keys(tau, REV)
            assert np.all(tk[:, :-1] < tk[:, 1:])
            assert np.array_equal(np.take_along_axis(tau, pi - 1, axis=1), w)
            maj_pi = (pi[:, :-1] > pi[:, 1:]) @ np.arange(1, n)
            assert np.array_equal(blk["fmaj"], 2 * maj_pi + (tau < 0).sum(axis=1))


class TestDecomposition:
    def test_examples(self):
        assert un_sn_decompose(S((1, 2, 3))) == (S((1, 2, 3)), Perm((1, 2, 3)))
        assert un_sn_decompose(S((-1,))) == (S((-1,)), Perm((1,)))
        tau, pi = un_sn_decompose(S((2, -1)))
        assert tau == S((-1, 2)) and pi == Perm((2, 1))
        assert compose(tau, pi) == S((2, -1))

    def test_uniqueness_b2(self):
        u2 = list(iterate_un(2))
        s2 = [Perm(w) for w in ((1, 2), (2, 1))]
        hits = [(t, p) for t in u2 for p in s2 if compose(t, p) == S((2, -1))]
        assert hits == [(S((-1, 2)), Perm((2, 1)))]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_scalar_roundtrip_and_additivity(self, n):
        u = set(iterate_un(n))
        assert len(u) == 2**n
        pairs = set()
        for s in iterate_bn(n):
            tau, pi = un_sn_decompose(s)
            assert tau in u
            assert compose(tau, pi) == s
            assert fmaj(s, REV) == 2 * maj(pi) + neg(tau)
            assert sign_bn(s) == sign_bn(tau) * sign_perm(pi)
            pairs.add((tau, pi))
        assert len(pairs) == sp.bn_order(n)

    def test_un_members(self):
        assert set(iterate_un(2)) == {S((1, 2)), S((-1, 2)), S((-2, 1)), S((-1, -2))}

    @pytest.mark.parametrize("n", range(1, 9))
    def test_un_length_law(self, n):
        for tau in iterate_un(n):
            assert length_bn(tau) == sp.un_length_formula(tau)

    def test_un_filter_matches_native(self):
        for n in range(1, 5):
            keyed = [s for s in iterate_bn(n)
                     if all(sp._key(a, n, REV) < sp._key(b, n, REV)
                            for a, b in zip(s.window, s.window[1:]))]
            assert set(keyed) == set(iterate_un(n))
