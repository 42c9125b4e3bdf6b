import itertools
import math
import random
import warnings

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sentence_entropy import (
    BoundExceededWarning,
    DomainError,
    brute_force_entropy,
    build_report,
    h_max,
    h_realized,
    profile,
    profile_from_counts,
)

# (4/9) ln 9: four realized pairs out of nine equiprobable ones.
FOUR_OF_NINE = 0.9765442565938753


def rel_close(a, b, tol):
    return math.isclose(a, b, rel_tol=tol, abs_tol=0.0) or a == b


class TestHMax:
    @pytest.mark.parametrize("n,expected", [(2553, 15.690), (2137, 15.334), (2096, 15.296)])
    def test_published_pairs(self, n, expected):
        assert h_max(2, n) == pytest.approx(expected, abs=5e-4)

    def test_single_configuration(self):
        assert h_max(1, 1) == 0

    def test_domain(self):
        with pytest.raises(DomainError):
            h_max(0, 5)
        with pytest.raises(DomainError):
            h_max(2, 0)


class TestHRealized:
    @pytest.mark.parametrize("k,n,vocab,expected", [
        (2, 375, 2553, 9.027e-4),
        (1, 163, 2553, 5.009e-1),
        (3, 248, 2553, 3.508e-7),
    ])
    def test_published_terms(self, k, n, vocab, expected):
        assert h_realized(k, n, vocab) == pytest.approx(expected, rel=5e-4)

    def test_small_alphabet(self):
        assert h_realized(2, 4, 3) == pytest.approx(FOUR_OF_NINE, rel=1e-12)

    def test_no_configurations(self):
        assert h_realized(5, 0, 100) == 0.0

    def test_single_symbol_alphabet(self):
        assert h_realized(3, 1, 1) == 0.0

    @pytest.mark.parametrize("args", [(0, 1, 2), (1, 1, 0), (1, -1, 2)])
    def test_domain(self, args):
        with pytest.raises(DomainError):
            h_realized(*args)

    def test_huge_exponent_is_finite(self):
        # N**k far beyond the double range: log-space path, flushes to 0
        assert h_realized(200, 10**6, 2553) == 0.0
        v = h_realized(95, 10**300, 2553)
        expected = math.exp(math.log(95) + 300 * math.log(10) + math.log(math.log(2553)) - 95 * math.log(2553))
        assert v > 0 and rel_close(v, expected, 1e-10)

    @pytest.mark.parametrize("k", [2, 10, 40, 88, 89, 90, 91, 95])
    def test_matches_high_precision(self, k):
        # k ln N crosses the direct/log-space switch between 89 and 90
        mp.mp.dps = 60
        exact = k * 7 * mp.log(2553) / mp.mpf(2553) ** k
        assert rel_close(h_realized(k, 7, 2553), float(exact), 1e-12)

    def test_tenth_length_magnitude(self):
        # 10 ln(2553) / 2553**10 = 6.669e-33 per distinct sentence
        assert h_realized(10, 1, 2553) == pytest.approx(6.66939e-33, rel=1e-5)
        assert h_realized(10, 149, 2553) < 1e-30
        assert h_realized(10, 150, 2553) > 1e-30


class TestBruteForce:
    def test_matches_closed_form_example(self):
        got = brute_force_entropy(3, {(0, 1), (1, 0), (2, 2), (0, 0)})
        assert got == pytest.approx(FOUR_OF_NINE, rel=1e-12)

    def test_full_occupancy(self):
        got = brute_force_entropy(2, itertools.product(range(2), repeat=2))
        assert got == pytest.approx(1.3862943611198906, rel=1e-12)

    def test_empty(self):
        assert brute_force_entropy(5, set()) == 0.0

    @pytest.mark.parametrize("vocab,realized", [
        (9, {(0,)}),
        (2, {(0,) * 7}),
        (3, {(0, 3)}),
        (3, {(0, 1), (1,)}),
    ])
    def test_domain(self, vocab, realized):
        with pytest.raises(DomainError):
            brute_force_entropy(vocab, realized)


@pytest.mark.parametrize("vocab", range(1, 7))
@pytest.mark.parametrize("k", range(1, 5))
def test_oracle_equivalence_every_size(vocab, k):
    rng = random.Random(vocab * 100 + k)
    space = list(itertools.product(range(vocab), repeat=k))
    for n in range(len(space) + 1) if len(space) <= 64 else rng.sample(range(len(space) + 1), 64):
        subset = rng.sample(space, n)
        assert rel_close(brute_force_entropy(vocab, subset), h_realized(k, n, vocab), 1e-12)


small = st.tuples(st.integers(1, 4), st.integers(1, 3)).flatmap(
    lambda nk: st.tuples(st.just(nk[1]), st.integers(0, nk[0] ** nk[1]), st.just(nk[0]))
)


@given(small)
def test_bounded_by_max(args):
    k, n, vocab = args
    hr, hm = h_realized(k, n, vocab), h_max(k, vocab)
    assert 0 <= hr <= hm * (1 + 1e-12)
    if n == vocab ** k:
        assert hr == pytest.approx(hm, rel=1e-12)
    elif vocab > 1:
        assert hr < hm


@given(st.integers(1, 12), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(1, 10**5))
def test_linearity(k, a, b, vocab):
    lhs = h_realized(k, a + b, vocab)
    rhs = h_realized(k, a, vocab) + h_realized(k, b, vocab)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)


@given(st.integers(1, 30), st.integers(1, 10**6), st.integers(2, 10**4))
def test_decay_ratio(k, n, vocab):
    a, b = h_realized(k, n, vocab), h_realized(k + 1, n, vocab)
    if b == 0.0:
        return
    expected = ((k + 1) / k) / vocab
    assert rel_close(b / a, expected, 1e-12)
    if vocab * k > k + 1:
        assert b / a < 1


class TestBuildReport:
    def test_sample_one(self):
        p = profile_from_counts("I", 79959, 2553, {1: 163, 2: 375, 3: 248, 4: 225, 5: 209})
        r = build_report(p)
        assert r.sigma == pytest.approx(5.018e-1, abs=1e-4)
        assert r.sigma_norm == pytest.approx(6.276e-2, abs=1e-5)
        assert [t.k for t in r.per_len] == [1, 2, 3, 4, 5]
        assert r.per_len[-1].cumulative == r.sigma

    def test_sample_four(self):
        r = build_report(profile_from_counts("IV", 29083, 1916, {1: 1, 2: 4, 3: 5}))
        assert r.sigma == pytest.approx(3.961e-3, abs=1e-6)
        assert r.sigma_norm == pytest.approx(1.362e-3, abs=1e-6)

    def test_single_symbol(self):
        r = build_report(profile("s", [["a"]]))
        assert r.sigma == 0.0 and r.sigma_norm == 0.0

    def test_empty_profile(self):
        with pytest.raises(DomainError):
            build_report(profile("s", []))

    def test_norm_base_linear(self):
        p = profile_from_counts("I", 79959, 2553, {1: 163, 2: 375})
        assert build_report(p, 20000).sigma_norm == 2 * build_report(p, 10000).sigma_norm
        assert build_report(p, 1).sigma_norm * 10000 == pytest.approx(build_report(p).sigma_norm, rel=1e-15)

    def test_impossible_count_warns(self):
        p = profile_from_counts("x", 10, 2, {1: 3})
        with pytest.warns(BoundExceededWarning):
            r = build_report(p)
        assert r.per_len[0].h_realized > r.per_len[0].h_max

    def test_no_warning_normally(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            build_report(profile("s", [["a", "b"], ["b"]]))

    @given(st.lists(st.lists(st.sampled_from("abcde"), min_size=1, max_size=5), min_size=1, max_size=30))
    def test_report_invariants(self, sentences):
        p = profile("s", sentences)
        if p.vocab_size == 0:
            return
        r = build_report(p)
        running = 0.0
        ks = [t.k for t in r.per_len]
        assert ks == sorted(ks)
        for t in r.per_len:
            running += t.h_realized
            assert t.cumulative == running
            assert 0 <= t.h_realized <= t.h_max * (1 + 1e-12)
        assert r.sigma == running
        assert r.sigma_norm == r.norm_base * r.sigma / r.total_tokens
