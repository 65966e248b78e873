"""Randomized invariant suites: small-scale smoke runs and determinism."""

import random

import pytest

from rosenlab.field import field_new
from rosenlab.rosen import check_admissible
from rosenlab.verify import SUITES, random_point, random_word, run_suite, run_suites


def test_suite_names_registry():
    assert SUITES == ("det", "mirror", "bounds", "growth", "domination",
                      "heights", "trace", "columns")


@pytest.mark.parametrize("name", SUITES)
def test_each_suite_passes_at_small_scale(name):
    for m in (4, 5):
        res = run_suite(name, m, count=4, max_word_len=6, seed=3)
        assert res.suite == name and res.m == m
        assert res.failures == 0, res.notes
        assert res.cases > 0
        assert res.seconds >= 0


def test_run_suites_order_and_independence():
    results = run_suites(["det", "mirror"], 4, count=3, seed=5)
    assert [r.suite for r in results] == ["det", "mirror"]
    solo = run_suite("mirror", 4, count=3, seed=5)
    assert results[1].counters == solo.counters


def test_unknown_suite_is_rejected():
    with pytest.raises(ValueError):
        run_suite("bogus", 4, count=1)


def test_same_seed_reproduces_counters():
    a = run_suite("det", 7, count=6, seed=11)
    b = run_suite("det", 7, count=6, seed=11)
    assert (a.cases, a.failures, a.counters) == (b.cases, b.failures, b.counters)
    c = run_suite("det", 7, count=6, seed=12)
    assert a.counters != c.counters or a.cases == c.cases


def test_random_word_is_admissible_with_nonzero_denominators():
    for m in (4, 5, 7, 12):
        desc = field_new(m)
        rng = random.Random(21)
        for _ in range(20):
            word = random_word(rng, desc, 10)
            assert len(word) == 10
            assert check_admissible(word, m)
            from rosenlab.convergents import convergents_of
            for st in convergents_of(word, desc):
                assert not st.q.is_zero()


def test_random_point_lands_in_fundamental_interval():
    from rosenlab.rosen import in_fundamental_interval
    desc = field_new(5)
    rng = random.Random(9)
    for _ in range(50):
        x = random_point(rng, desc)
        assert x.is_zero() or in_fundamental_interval(x)
