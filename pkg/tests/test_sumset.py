"""Sumset kernels: pointwise decisions, windowed masks, exact closed forms."""
from __future__ import annotations

import random

from addcomp.intset import (
    TailSpec,
    Window,
    above,
    below,
    cofinite,
    contains,
    finite,
    integers,
    lemma43_set,
    lemma44_set,
    make_bep,
    nonprimes,
    normalize,
    subgroup_set,
    translate,
)
from addcomp.search import brute_force_cover, complete_radius
from addcomp.sumset import bep_sumset, pointwise_hit, window_bits, windowed_sumset


def test_pointwise_hit_nonprimes():
    # 3 = 3+0 = 2+1 needs a nonprime in {3, 2}; both are prime
    assert pointwise_hit(nonprimes(), finite([0, 1]), 3) is False
    assert pointwise_hit(nonprimes(), finite([0, 1]), 4) is True


def test_pointwise_hit_subgroup():
    assert pointwise_hit(subgroup_set(2), subgroup_set(2), 1) is False
    assert pointwise_hit(subgroup_set(2), subgroup_set(2), 0) is True


def test_pointwise_hit_family():
    assert pointwise_hit(lemma43_set(), finite([0, 1]), 6) is True  # 5 + 1
    assert pointwise_hit(lemma44_set(), lemma44_set(), 0) is None


def test_windowed_nonprimes_pair():
    mask = windowed_sumset(nonprimes(), finite([0, 1]), Window(-20, 20))
    assert mask.uncovered_interior() == [3]
    assert mask.interior_margin == 0


def test_windowed_evens_full():
    mask = windowed_sumset(subgroup_set(2), finite([0, 1]), Window(0, 10))
    assert mask.covered_count() == 11


def test_windowed_block_absorption():
    """A middle translate of a long block sits inside the outer translates."""
    w = lemma43_set()
    rule = w.rule
    k = 5
    win = Window(rule.start(k), rule.start(k) + k)
    mask = windowed_sumset(w, finite([0, 2]), win)
    middle = windowed_sumset(w, finite([1]), win)
    for t in win:
        if middle.covered(t):
            assert mask.covered(t)


def test_bep_sum_evens_plus_pair():
    assert normalize(bep_sumset(subgroup_set(2), finite([0, 1]))) == integers()


def test_bep_sum_residues_close():
    assert bep_sumset(subgroup_set(5), finite(range(5))) == integers()


def test_bep_sum_opposed_rays():
    assert bep_sumset(below(4), above(-1)) == integers()


def test_bep_sum_same_direction_rays():
    # smallest sum of two elements above 0 is 1 + 1
    got = bep_sumset(above(0), above(0))
    assert normalize(got) == normalize(above(1))


def test_bep_sum_period_interaction():
    # 4Z + 6Z lands on gcd 2
    got = normalize(bep_sumset(subgroup_set(4), subgroup_set(6)))
    for t in range(-30, 30):
        assert contains(got, t) == (t % 2 == 0)


def _random_bep(rng: random.Random):
    def tail(threshold):
        roll = rng.random()
        if roll < 0.3:
            return TailSpec.empty(threshold)
        if roll < 0.5:
            return TailSpec.full(threshold)
        period = rng.randrange(1, 13)
        count = rng.randrange(1, period + 1)
        return TailSpec.periodic(threshold, period, rng.sample(range(period), count))

    reach = rng.randrange(5, 50)
    core = [t for t in range(-reach, reach + 1) if rng.random() < 0.3]
    s = make_bep(tail(-reach), core, -reach, reach, tail(reach))
    if not s.__class__.__name__ == "FiniteSet" or s.elements:
        return s
    return finite([0])


def test_bep_sumset_matches_oracle():
    """Exact descriptors agree with definitional enumeration bit for bit."""
    rng = random.Random(404)
    win = Window(-150, 150)
    checked = 0
    while checked < 60:
        a, b = _random_bep(rng), _random_bep(rng)
        radius = complete_radius(a, b, win)
        if radius is None or radius > 2500:
            continue
        got = window_bits(bep_sumset(a, b), win)
        oracle = brute_force_cover(a, b, win, radius)
        assert oracle.interior_margin == 0
        assert got == oracle.bits, f"disagreement for {a} + {b}"
        checked += 1


def test_windowed_commutes():
    rng = random.Random(77)
    for _ in range(20):
        a = _random_bep(rng)
        b = finite(rng.sample(range(-20, 20), rng.randrange(1, 5)))
        win = Window(-60, 60)
        ab = windowed_sumset(a, b, win)
        ba = windowed_sumset(b, a, win)
        assert ab.bits == ba.bits


def test_windowed_translate_equivariance():
    rng = random.Random(78)
    for _ in range(20):
        a = _random_bep(rng)
        b = finite(rng.sample(range(-10, 10), 3))
        g = rng.randrange(-15, 15)
        win = Window(-40, 40)
        base = windowed_sumset(a, b, win)
        shifted = windowed_sumset(translate(a, g), b, Window(win.lo + g, win.hi + g))
        for t in win:
            assert base.covered(t) == shifted.covered(t + g)


def test_finite_associativity():
    rng = random.Random(79)
    for _ in range(15):
        a = finite(rng.sample(range(-12, 12), 3))
        b = finite(rng.sample(range(-12, 12), 3))
        c = finite(rng.sample(range(-12, 12), 3))
        left = bep_sumset(bep_sumset(a, b), c)
        right = bep_sumset(a, bep_sumset(b, c))
        assert normalize(left) == normalize(right)


def test_result_period_divides_lcm():
    got = bep_sumset(subgroup_set(6), subgroup_set(10))
    nb = normalize(got)
    assert nb.right.period in (1, 2)  # gcd(6,10)
    for t in range(-40, 40):
        assert contains(nb, t) == (t % 2 == 0)


def test_mask_serialization():
    mask = windowed_sumset(nonprimes(), finite([0, 1]), Window(0, 8))
    blob = mask.to_json()
    assert blob["window"] == [0, 8]
    assert blob["interiorMargin"] == 0
    runs = blob["runs"]
    assert runs[0]["lo"] == 0 and runs[-1]["hi"] == 8
    for run in runs:
        for t in range(run["lo"], run["hi"] + 1):
            assert mask.covered(t) == bool(run["covered"])


def test_mask_interior_and_uncovered():
    mask = brute_force_cover(cofinite([5]), finite([0]), Window(0, 10), radius=3)
    inner = mask.interior()
    assert inner is not None
    assert mask.uncovered_interior() == [5]
