"""Combinatorics on words: repetitions, complexity, and the two criteria."""

import random
from fractions import Fraction

import pytest

from rosenlab.convergents import convergents_of
from rosenlab.field import field_new
from rosenlab.rosen import PartialQuotient
from rosenlab.words import (DEFAULT_LETTER_A, DEFAULT_LETTER_B,
                            InsufficientTermsError, Lemma26Result, Repetition,
                            best_repetition, criterion_thm1, criterion_thm2,
                            factor_complexity, fractional_power,
                            lemma26_search, rcf_bracket, repetition_exponents,
                            stammer_statistic, sturmian_word, z_array)

from conftest import FIELDS


def _naive_z(seq):
    L = len(seq)
    if L == 0:
        return []
    z = [L]
    for i in range(1, L):
        k = 0
        while i + k < L and seq[k] == seq[i + k]:
            k += 1
        z.append(k)
    return z


def _naive_repetitions(word):
    L = len(word)
    out = []
    for u in range(L):
        for v in range(1, L - u):
            k = 0
            while u + v + k < L and word[u + k] == word[u + v + k]:
                k += 1
            if k > 0:
                out.append(Repetition(u, v, Fraction(v + k, v)))
    return out


def test_z_array_matches_naive_scan(rng):
    assert z_array("aabxaaby") == [8, 1, 0, 0, 3, 1, 0, 0]
    assert z_array("aaaa") == [4, 3, 2, 1]
    assert z_array([]) == []
    for _ in range(200):
        L = rng.randrange(0, 40)
        seq = [rng.randrange(3) for _ in range(L)]
        assert z_array(seq) == _naive_z(seq)


def test_repetition_exponents_match_brute_force(rng):
    for _ in range(200):
        L = rng.randrange(2, 40)
        word = [rng.randrange(2) for _ in range(L)]
        assert repetition_exponents(word) == _naive_repetitions(word)


def test_repetition_max_u_truncates_by_split_point():
    word = list("abab")
    assert repetition_exponents(word, max_u=0) == [
        Repetition(0, 2, Fraction(2))]


def test_fractional_power():
    assert fractional_power("ab", 3) == list("ababab")
    assert fractional_power("abc", Fraction(7, 3)) == list("abcabca")
    with pytest.raises(ValueError):
        fractional_power([], 2)
    with pytest.raises(ValueError):
        fractional_power("ab", -1)


def test_fractional_power_realizes_reported_exponent(rng):
    # word[u:] begins with V^w for the reported (u, v, w)
    for _ in range(50):
        L = rng.randrange(4, 30)
        word = [rng.randrange(2) for _ in range(L)]
        for rep in repetition_exponents(word)[:10]:
            V = word[rep.u:rep.u + rep.v]
            power = fractional_power(V, rep.w)
            assert word[rep.u:rep.u + len(power)] == power


def test_golden_ratio_slope_word_frozen():
    word = sturmian_word([1] * 9, 10)
    got = ",".join(f"{pq.eps:+d}:{pq.r}" for pq in word)
    assert got == "+1:1,+1:2,+1:1,+1:1,+1:2,+1:1,+1:2,+1:1,+1:1,+1:2"


def test_sturmian_factor_complexity_is_n_plus_one():
    word = sturmian_word([1] * 12, 60)
    for n in range(1, 8):
        assert factor_complexity(word, n) == n + 1
    with pytest.raises(ValueError):
        factor_complexity(word, 0)
    with pytest.raises(ValueError):
        factor_complexity(word, len(word) + 1)


def test_rcf_bracket_fibonacci_convergents():
    lo, hi = rcf_bracket([1, 1, 1, 1, 1, 1])
    assert (lo, hi) == (Fraction(8, 13), Fraction(5, 8))
    with pytest.raises(InsufficientTermsError):
        rcf_bracket([1])
    with pytest.raises(ValueError):
        rcf_bracket([1, 0, 2])


def test_stammer_statistic_of_periodic_word():
    ab = (list((DEFAULT_LETTER_A, DEFAULT_LETTER_B))) * 8
    assert stammer_statistic(ab) == 8
    rep = best_repetition(ab)
    assert (rep.u, rep.v, rep.w) == (0, 2, Fraction(8))


def test_lemma26_witnesses_on_increasing_quotient_word():
    word = sturmian_word(list(range(1, 15)), 120)
    expected = {1: (0, 1, Fraction(2), 2),
                2: (0, 1, Fraction(2), 2),
                3: (0, 3, Fraction(11, 3), 11),
                4: (0, 10, Fraction(51, 10), 51),
                5: (0, 10, Fraction(51, 10), 51)}
    for n, fields in expected.items():
        got = lemma26_search(word, n)
        assert got == Lemma26Result(*fields)
        # the witness really does satisfy u + v + lce >= n (u + v)
        u, v, s, plen = fields
        assert plen >= n * (u + v)


def test_criterion_thm1_fires_on_doubly_exponential_growth():
    d4 = FIELDS[4]
    q = [d4.rational(2 ** (4 ** n)) for n in range(6)]
    rep = criterion_thm1(q, 2)
    assert rep.fires
    assert rep.statistic > rep.threshold
    assert rep.threshold == pytest.approx(1.0986122886681098)


def test_criterion_thm1_quiet_on_geometric_growth():
    d4 = FIELDS[4]
    lam = d4.lam()
    q = [lam ** n * (n + 1) for n in range(12)]
    rep = criterion_thm1(q, 2)
    assert not rep.fires
    assert rep.statistic < rep.threshold


def test_criterion_thm1_flags_degenerate_degree_one():
    d4 = FIELDS[4]
    q = [d4.rational(2 ** (4 ** n)) for n in range(5)]
    rep = criterion_thm1(q, 1)
    assert rep.fires
    assert any("degenerate" in flag for flag in rep.flags)


def test_criterion_thm2_fires_on_periodic_word():
    d4 = FIELDS[4]
    per = [PartialQuotient(1, 1), PartialQuotient(1, 2)] * 8
    states = convergents_of(per, d4)
    q_seq = [st.q for st in states]
    rep = criterion_thm2(per, q_seq, 2)
    assert rep.fires
    assert rep.statistic == pytest.approx(8.0)
    assert any("u = 0" in flag for flag in rep.flags)


def test_criterion_thm2_requires_field_element_denominators():
    per = [PartialQuotient(1, 1), PartialQuotient(1, 2)] * 4
    with pytest.raises(TypeError):
        criterion_thm2(per, [Fraction(1), Fraction(2)], 2)
