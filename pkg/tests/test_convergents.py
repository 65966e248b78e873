"""Convergent recursions, determinants, growth bounds, and estimates."""

import math
from fractions import Fraction

import pytest

from rosenlab.convergents import (advance, approx_bound_check, convergents_of,
                                  growth_constants, growth_stats,
                                  mirror_check, seed)
from rosenlab.field import field_new
from rosenlab.rosen import PartialQuotient, expand, parse_word

from conftest import FIELDS, genuine_word, random_reduced_rational


def test_seed_state():
    desc = FIELDS[4]
    s = seed(desc)
    assert s.n == 0
    assert (s.p_prev.as_fraction(), s.p.as_fraction()) == (1, 0)
    assert (s.q_prev.as_fraction(), s.q.as_fraction()) == (0, 1)


def test_convergents_of_one_half_at_m4():
    desc = FIELDS[4]
    lam = desc.lam()
    word = parse_word("+1:1,+1:1,+1:2")
    states = convergents_of(word, desc)
    assert [st.n for st in states] == [0, 1, 2, 3]
    p = [st.p for st in states]
    q = [st.q for st in states]
    assert [v.as_fraction() for v in (p[0], p[1], p[3])] == [0, 1, 5]
    assert (p[2] - lam).is_zero()
    assert [q[0].as_fraction(), q[2].as_fraction()] == [1, 3]
    assert (q[1] - lam).is_zero() and (q[3] - 7 * lam).is_zero()
    # approximation quality: |x - p_3/q_3| < 1/q_3^2, checked exactly via
    # sign((q_3 x - p_3)^2 q_3^2 - 1) < 0
    from rosenlab.field import sign
    e = q[3] * desc.rational(Fraction(1, 2)) - p[3]
    assert sign(e * e * q[3] * q[3] - 1) == -1


def test_determinant_is_unit(rng):
    for m, desc in FIELDS.items():
        for _ in range(10):
            word, _ = genuine_word(rng, desc)
            states = convergents_of(word, desc)
            sgn = 1
            for st, pq in zip(states[1:], word):
                sgn *= -pq.eps
                det = st.p_prev * st.q - st.p * st.q_prev
                assert det.as_fraction() == sgn


def test_advance_matches_recursion():
    desc = FIELDS[5]
    lam = desc.lam()
    st = seed(desc)
    pq = PartialQuotient(-1, 3)
    nxt = advance(st, pq)
    assert nxt.n == 1
    assert (nxt.p - (-1) * st.p_prev).is_zero()
    assert (nxt.q - 3 * lam * st.q - (-1) * st.q_prev).is_zero()


def test_mirror_formula_frozen_and_random(rng):
    desc = FIELDS[4]
    assert mirror_check(parse_word("+1:1,+1:1,+1:2"), desc)
    assert mirror_check((), desc)
    for m, d in FIELDS.items():
        for _ in range(8):
            word, _ = genuine_word(rng, d)
            assert mirror_check(word, d)


def test_approx_bound_on_expansions(rng):
    for m in (4, 7, 12):
        desc = FIELDS[m]
        for _ in range(4):
            x = random_reduced_rational(rng, desc)
            res = expand(x, max_steps=20)
            states = convergents_of(res.quotients, desc)
            rep = approx_bound_check(x, states)
            assert rep.m == m
            assert rep.ok
            for row in rep.rows:
                assert row.lower_ok and row.upper_c1_ok and row.upper_c2_ok


def test_growth_constants_anchor_m4():
    desc = FIELDS[4]
    gc = growth_constants(desc)
    assert gc.h == 2
    assert gc.c2 == Fraction(3, 2)
    assert gc.R_exact.as_fraction() == 1
    assert (gc.c1_exact - (2 + desc.lam())).is_zero()


def test_growth_constants_defining_relations():
    for m, desc in FIELDS.items():
        gc = growth_constants(desc)
        assert gc.c2 == Fraction(1, 2) + math.ceil(Fraction(m, 4))
        if m % 2 == 0:
            # c1 satisfies c1 * (2 - R * lam) == 2 with R == 1
            assert gc.R_exact.as_fraction() == 1
            assert (gc.c1_exact * (2 - gc.R_exact * desc.lam()) - 2).is_zero()
        else:
            # no exact closed form is exposed for odd m
            assert gc.R_exact is None and gc.c1_exact is None


def test_growth_stats_on_genuine_expansions(rng):
    for m in (4, 5, 7):
        desc = FIELDS[m]
        found = 0
        while found < 3:
            x = random_reduced_rational(rng, desc, qmax=10**6)
            res = expand(x, max_steps=30)
            if len(res.quotients) < 12:
                continue
            found += 1
            states = convergents_of(res.quotients, desc)
            q_seq = [st.q for st in states]
            stats = growth_stats(q_seq)
            assert stats.lemma_ok
            assert 1 < stats.b_est < 4
            assert 1 < stats.B_est < 50
            assert stats.b_est <= stats.B_est + 1e-12


def test_growth_stats_degenerates_to_nan_on_short_input():
    desc = FIELDS[4]
    stats = growth_stats([desc.rational(1)])
    assert math.isnan(stats.b_est) and math.isnan(stats.B_est)
