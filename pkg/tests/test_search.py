"""Brute-force oracles, greedy construction, subset search, gap trends."""
from __future__ import annotations

import random

import pytest

from addcomp.errors import RadiusTooSmallError, TooLargeError
from addcomp.intset import (
    Window,
    above,
    ap,
    cofinite,
    contains,
    finite,
    lemma44_set,
    minus,
    nonprimes,
    subgroup_set,
    union,
)
from addcomp.predicates import is_complement
from addcomp.search import (
    brute_force_cover,
    complete_radius,
    cy_gap_classifier,
    greedy_asymptotic_complement,
    minimal_subset_search,
)
from addcomp.sumset import window_bits, windowed_sumset


def test_cover_evens_pair():
    mask = brute_force_cover(subgroup_set(2), finite([0, 1]), Window(0, 20), radius=25)
    assert mask.covered_count() == 21


def test_cover_nonprimes_pair():
    mask = brute_force_cover(nonprimes(), finite([0, 1]), Window(-50, 50), radius=60)
    assert mask.uncovered_interior() == [3]


def test_cover_blocks_pair():
    mask = brute_force_cover(lemma44_set(), finite([0, 1]), Window(1, 200), radius=210)
    uncovered = set(mask.uncovered_interior())
    assert {7, 14, 26} <= uncovered


def test_cover_needs_elements_in_radius():
    with pytest.raises(RadiusTooSmallError):
        brute_force_cover(subgroup_set(2), finite([100]), Window(0, 10), radius=5)


def test_cover_marks_margin_when_radius_short():
    mask = brute_force_cover(subgroup_set(3), cofinite([]), Window(-10, 10), radius=4)
    assert mask.interior_margin > 0


def test_greedy_blocks_window():
    # nothing of W sits at or below 3, so those targets are reported skipped
    c, skipped = greedy_asymptotic_complement(lemma44_set(), Window(1, 100))
    assert skipped == [1, 2, 3]
    mask = brute_force_cover(lemma44_set(), c, Window(1, 100))
    for t in mask.interior():
        if t not in skipped:
            assert mask.covered(t)


def test_greedy_residue_trace():
    c, _ = greedy_asymptotic_complement(ap(0, 3, "above", -1), Window(0, 10))
    assert c == finite([0, 1, 2])


def test_greedy_singleton_w():
    c, _ = greedy_asymptotic_complement(finite([0]), Window(0, 3))
    assert c == finite([0, 1, 2, 3])


def test_greedy_covers_every_reachable_target():
    rng = random.Random(41)
    for _ in range(10):
        w = finite(sorted(rng.sample(range(-10, 10), rng.randrange(2, 5))))
        c, skipped = greedy_asymptotic_complement(w, Window(-120, 120))
        first = min(w.elements)
        assert skipped == list(range(-120, first))
        mask = brute_force_cover(w, c, Window(first, 120))
        assert mask.interior_margin == 0
        assert mask.covered_count() == 121 - first


def test_subsets_four_with_point():
    comp, ac = minimal_subset_search(union(subgroup_set(4), finite([1])), finite([0, 1, 2, 3]))
    assert [s.elements for s in comp] == [(0, 1, 2, 3)]
    assert [s.elements for s in ac] == [(0, 1, 2, 3)]


def test_subsets_evens_pairs():
    comp, ac = minimal_subset_search(subgroup_set(2), finite([0, 1, 2, 3]))
    want = [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert [s.elements for s in comp] == want
    assert [s.elements for s in ac] == want


def test_subsets_single_hole():
    comp, ac = minimal_subset_search(cofinite([0]), finite([0, 1]))
    assert [s.elements for s in comp] == [(0, 1)]
    assert [s.elements for s in ac] == [(0,), (1,)]


def test_subsets_are_minimal_antichains():
    rng = random.Random(52)
    for _ in range(8):
        w = union(subgroup_set(rng.randrange(2, 5)), finite([rng.randrange(-5, 5)]))
        pool = finite(sorted(rng.sample(range(-6, 7), rng.randrange(3, 7))))
        comp, ac = minimal_subset_search(w, pool)
        for found in (comp, ac):
            for i, s in enumerate(found):
                for j, other in enumerate(found):
                    if i != j:
                        assert not set(s.elements) <= set(other.elements)
        for s in comp:
            assert is_complement(w, s).is_true
            for x in s.elements:
                if len(s.elements) > 1:
                    assert not is_complement(w, minus(s, {x})).is_true


def test_subsets_cap():
    with pytest.raises(TooLargeError):
        minimal_subset_search(subgroup_set(2), finite(range(21)))


def test_gap_flags_blocks():
    report = cy_gap_classifier(lemma44_set(), horizon=3000)
    assert report["flags"]["cy2a"]


def test_gap_flags_doubling_complement():
    pows = [2**j for j in range(1, 14)]
    w = minus(above(0), finite(pows))
    report = cy_gap_classifier(w, horizon=8000)
    assert report["flags"]["thmD"]
    assert report["flags"]["cy2b"]


def test_gap_flags_persistent_ones():
    from addcomp.intset import blocks10_family

    report = cy_gap_classifier(blocks10_family(True), horizon=4000)
    assert not report["flags"]["thmD"]
    assert any("persist" in note for note in report["notes"])


def test_oracle_agrees_with_exact_routes():
    """Closed-form masks and the definitional double loop never disagree."""
    rng = random.Random(63)
    win = Window(-200, 200)
    for _ in range(12):
        w = union(subgroup_set(rng.randrange(2, 6)), finite([rng.randrange(-9, 9)]))
        c = finite(sorted(rng.sample(range(-12, 12), rng.randrange(2, 5))))
        radius = complete_radius(w, c, win)
        assert radius is not None
        oracle = brute_force_cover(w, c, win, radius)
        assert oracle.interior_margin == 0
        exact = windowed_sumset(w, c, win)
        assert exact.interior_margin == 0
        assert oracle.bits == exact.bits


def test_complete_radius_covers_contributors():
    win = Window(-30, 30)
    w = union(subgroup_set(4), finite([1]))
    c = finite([-3, 0, 5])
    radius = complete_radius(w, c, win)
    assert radius is not None
    # widening past the complete radius never changes the mask
    a = brute_force_cover(w, c, win, radius)
    b = brute_force_cover(w, c, win, radius + 37)
    assert a.bits == b.bits


def test_complete_radius_none_for_pointwise():
    assert complete_radius(nonprimes(), finite([0, 1]), Window(0, 10)) is None
