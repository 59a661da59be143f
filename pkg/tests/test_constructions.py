"""Constructive procedures: pairs, representative sets, descents, shrinks."""
from __future__ import annotations

import random

import pytest

from addcomp.constructions import (
    builtin,
    ep_shrink,
    finite_index_minimals,
    interval_shrink,
    subgroup_masc,
    thmA1_shrink,
    thmA2_pair,
    thmD_shrink,
)
from addcomp.errors import (
    BadParamsError,
    ComplementNotInfiniteError,
    FNotSubsetError,
    HypothesisNotObservedError,
    MissingResidueClassError,
    NotContainingSubgroupError,
    PreconditionViolatedError,
)
from addcomp.intset import (
    Window,
    above,
    ap,
    below,
    blocks10_family,
    cofinite,
    contains,
    enumerate_window,
    finite,
    integers,
    lemma44_set,
    minus,
    subgroup_set,
    translate,
    union,
)
from addcomp.predicates import (
    asymptotic_exceptional_set,
    is_asymptotic_complement,
    is_complement,
    is_minimal_asymptotic_complement,
    is_minimal_complement,
)
from addcomp.sumset import pointwise_hit, windowed_sumset


def test_pair_for_two_holes():
    c, v = thmA2_pair(cofinite([0, 2]))
    assert c == finite([0, 1])
    assert v.is_true and v.exact


def test_pair_for_one_hole():
    c, v = thmA2_pair(cofinite([0]))
    assert c == finite([0, 1])
    assert v.is_true and v.exact


def test_pair_avoids_difference_set():
    # excluded {-5,5} gives differences {0, 10, -10}; x = 1 is free
    c, v = thmA2_pair(cofinite([-5, 5]))
    assert c == finite([0, 1])
    assert v.is_true and v.exact


def test_pair_degenerates_to_singleton():
    c, v = thmA2_pair(integers())
    assert c == finite([0])
    assert v.is_true and v.exact


def test_pair_random_cofinite():
    rng = random.Random(14)
    for _ in range(20):
        holes = rng.sample(range(-25, 25), rng.randrange(1, 6))
        c, v = thmA2_pair(cofinite(holes))
        assert len(c.elements) == 2
        assert v.is_true and v.exact
        assert is_minimal_complement(cofinite(holes), c).is_true


def test_finite_removal_keeps_ac():
    _, v = thmA1_shrink(finite([0, 1]), integers(), finite([5]))
    assert v.is_true


def test_finite_removal_of_three():
    _, v = thmA1_shrink(finite([0, 3]), integers(), finite([0, 1, 2]))
    assert v.is_true


def test_finite_removal_surfaces_non_ac():
    _, v = thmA1_shrink(finite([0]), subgroup_set(2), finite([0]))
    assert v.is_false


def test_finite_removal_requires_subset():
    with pytest.raises(FNotSubsetError):
        thmA1_shrink(finite([0, 1]), finite([0, 1, 2]), finite([7]))


def test_representatives_mod_two():
    c, v = subgroup_masc(2, integers())
    assert c == finite([0, 1])
    assert v.is_true and v.exact


def test_representatives_from_nonnegative_evens():
    c, v = subgroup_masc(3, ap(0, 2, "above", -1))
    assert c == finite([0, 2, 4])
    assert v.is_true and v.exact


def test_representatives_tie_to_smaller_absolute():
    # two-sided evens: class 1 mod 3 picks -2 over 4
    c, v = subgroup_masc(3, subgroup_set(2))
    assert c == finite([-2, 0, 2])
    assert v.is_true and v.exact


def test_representatives_missing_class():
    with pytest.raises(MissingResidueClassError) as err:
        subgroup_masc(4, subgroup_set(2))
    assert err.value.residue == 1
    assert err.value.modulus == 4


def test_representatives_are_also_complements():
    rng = random.Random(91)
    for _ in range(10):
        n = rng.randrange(1, 9)
        c, v = subgroup_masc(n, integers())
        assert len(c.elements) == n
        assert len({t % n for t in c.elements}) == n
        assert is_complement(subgroup_set(n), c).is_true


def test_descent_four():
    comp, asym = finite_index_minimals(union(subgroup_set(4), finite([1])))
    assert comp == finite([0, 1, 2, 3])
    assert asym == finite([0, 1, 2, 3])


def test_descent_two():
    comp, asym = finite_index_minimals(union(subgroup_set(2), finite([1])))
    assert comp == finite([0, 1])
    assert asym == finite([0, 1])


def test_descent_two_classes_mod_six():
    w = union(subgroup_set(6), translate(subgroup_set(6), 1))
    comp, asym = finite_index_minimals(w)
    assert comp == finite([0, 2, 4])
    assert asym == finite([0, 2, 4])
    assert is_minimal_complement(w, comp).is_true
    assert is_minimal_asymptotic_complement(w, asym).is_true


def test_descent_requires_subgroup():
    with pytest.raises(NotContainingSubgroupError):
        finite_index_minimals(finite([0, 4, 8]), 4)


def test_descent_rejects_cofinite_leftover():
    with pytest.raises(ComplementNotInfiniteError):
        finite_index_minimals(cofinite([1]), 1)


def test_congruent_shrink_full_ray():
    shrunk, cert = ep_shrink(above(-1), below(1), (-5, -3))
    assert cert.removed == -3
    assert cert.frame == (-5,)
    assert not contains(shrunk, -3)
    assert is_complement(above(-1), shrunk).is_true


def test_congruent_shrink_period_four():
    w = union(ap(0, 4, "above", -1), finite([1]))
    shrunk, cert = ep_shrink(w, below(1), (-8, -4))
    assert cert.removed == -4
    assert is_asymptotic_complement(w, shrunk).is_true


def test_congruent_shrink_period_three():
    w = union(finite([0, 1]), ap(0, 3, "above", 9))
    shrunk, cert = ep_shrink(w, below(1), (-6, -3))
    assert cert.removed == -3
    before = asymptotic_exceptional_set(w, below(1))
    after = asymptotic_exceptional_set(w, shrunk)
    assert before.is_true and after.is_true


def test_congruent_shrink_rejects_incongruent_pair():
    w = union(ap(0, 4, "above", -1), finite([1]))
    with pytest.raises(PreconditionViolatedError):
        ep_shrink(w, below(1), (-5, -4))


def test_interval_shrink_certificate_bound():
    """Loss formula for the quadratic-plus-power blocks at spread 13."""
    w = lemma44_set()
    c = finite([0, 7, 13])
    shrunk, cert = interval_shrink(w, c, (0, 7, 13))
    assert cert.removed == 7
    assert shrunk == finite([0, 13])
    d = 13  # c - a
    lo = 7 - (7 - 0)
    hi = 7 + (d - 1) * (d + 2) // 2 + 2 ** (d + 1) + d
    assert cert.loss_bound.lo >= lo - 1
    assert cert.loss_bound.hi <= hi + 1
    # points covered only through 7 really do stay inside the bound
    win = Window(0, 10**4)
    before = windowed_sumset(w, c, win)
    after = windowed_sumset(w, shrunk, win)
    for t in win:
        if before.covered(t) and not after.covered(t):
            assert cert.loss_bound.lo <= t <= cert.loss_bound.hi


def test_interval_shrink_full_left_tail():
    w = builtin("thmC", variant=2)
    shrunk, cert = interval_shrink(w, finite([0, 1, 2]), (0, 1, 2))
    assert cert.removed == 1
    # the left ray is absorbed by the surviving translates, so every loss
    # point sits inside the certified window
    win = Window(-3000, 3000)
    before = windowed_sumset(w, finite([0, 1, 2]), win)
    after = windowed_sumset(w, shrunk, win)
    for t in win:
        if before.covered(t) and not after.covered(t):
            assert cert.loss_bound.lo <= t <= cert.loss_bound.hi


def test_interval_shrink_ap_left_tail_congruent():
    w = builtin("thmC", variant=4, a=0, n=2)
    shrunk, cert = interval_shrink(w, finite([0, 2, 4]), (0, 2, 4))
    assert cert.removed == 2


def test_interval_shrink_ap_left_tail_requires_congruence():
    w = builtin("thmC", variant=4, a=0, n=2)
    with pytest.raises(PreconditionViolatedError):
        interval_shrink(w, finite([0, 1, 3]), (0, 1, 3))


def test_interval_shrink_triple_must_lie_in_c():
    with pytest.raises(PreconditionViolatedError):
        interval_shrink(lemma44_set(), finite([0, 7, 13]), (0, 5, 13))


def test_gap_floor_shrink_powers_of_two():
    pows = [2**j for j in range(1, 14)]
    w = minus(above(0), finite(pows))
    shrunk, cert = thmD_shrink(w, below(1), (-3, -2, 0), horizon=8000)
    assert cert.removed == -2
    assert cert.thresholds == (1, 2)
    assert not contains(shrunk, -2)


def test_gap_floor_strictness():
    """A gap exactly equal to c-a leaks one point; the certificate covers it.

    With the squares removed and the triple (-5, -1, 0), the gap 9 - 4 = 5
    equals the spread: t = 4 has t+1 = 5 present but t+5 = 9 and t = 4 both
    absent, so 4 survives only through the removed element and must land in
    the certified loss window.
    """
    squares = [k * k for k in range(1, 46)]
    w = minus(above(0), finite(squares))
    assert contains(w, 5) and not contains(w, 9) and not contains(w, 4)
    shrunk, cert = thmD_shrink(w, below(1), (-5, -1, 0), horizon=1800)
    assert cert.loss_bound.lo <= 4 <= cert.loss_bound.hi
    # and the leak is real: 4 is covered by c only via -1
    assert pointwise_hit(w, finite([-5, 0]), 4) is False
    assert pointwise_hit(w, finite([-1]), 4) is True


def test_gap_floor_not_observed():
    with pytest.raises(HypothesisNotObservedError) as err:
        thmD_shrink(blocks10_family(True), finite([0, 5, 9]), (0, 5, 9), horizon=3000)
    report = err.value.report
    assert report["requiredFloor"] == 10
    assert report["horizon"] == 3000


def test_builtin_block_window():
    got = enumerate_window(builtin("lemma44"), Window(1, 50))
    want = [4, 5, 10, 11, 12] + list(range(21, 25)) + list(range(41, 46))
    assert got == want


def test_builtin_ray_variant_removals():
    w = builtin("thmC", variant=3, F=[-10])
    assert not contains(w, -10)
    assert contains(w, -11)
    assert contains(w, 4)


def test_builtin_whole_group():
    assert builtin("subgroup", n=1) == integers()


def test_builtin_rejects_unknown_params():
    with pytest.raises(BadParamsError):
        builtin("lemma44", variant=2)
    with pytest.raises(BadParamsError):
        builtin("thmC", variant=4, a=0, n=0)
    with pytest.raises(BadParamsError):
        builtin("no-such-set")


def test_pair_complements_need_three_elements():
    """Two translates of the blocks leave the first gap point of each block
    uncovered, so no two-element set is an asymptotic complement."""
    w = lemma44_set()
    rule = w.rule
    for u in (1, 2, 3):
        c = finite([0, u])
        pts = [rule.start(k) + rule.length(k) + u for k in range(1, 7)]
        for t in pts:
            assert pointwise_hit(w, c, t) is False
        v = asymptotic_exceptional_set(w, c)
        assert v.is_false
