"""Acceptance gate: one pass/fail line per criterion.

Each test runs one entry of addcomp.acceptance.CHECKS with the same seeding
as run_all, prints a single PASS/FAIL line, and enforces the time budget
where one is declared.  Run with `pytest -s tests/test_acceptance.py` to see
the lines as they happen.
"""
from __future__ import annotations

import random
from time import perf_counter

from addcomp.acceptance import CHECKS

SEED = 0


def _run(idx: int) -> None:
    name, budget, fn = CHECKS[idx - 1]
    rng = random.Random(SEED * 1009 + idx)
    start = perf_counter()
    try:
        ok, detail = fn(rng)
    except Exception as e:
        print(f"FAIL {idx:2d} {name}: raised {type(e).__name__}: {e}")
        raise
    elapsed = perf_counter() - start
    line = f"{'PASS' if ok else 'FAIL'} {idx:2d} {name}: {detail} ({elapsed:.2f}s)"
    print(line)
    assert ok, line
    if budget is not None:
        assert elapsed <= budget, f"{name}: {elapsed:.2f}s over the {budget:g}s budget"


def test_01_block_family_enumeration():
    _run(1)


def test_02_nonprime_minimality():
    _run(2)


def test_03_finite_set_removal_growth():
    _run(3)


def test_04_cofinite_two_element_pairs():
    _run(4)


def test_05_subgroup_representatives():
    _run(5)


def test_06_finite_index_descent():
    _run(6)


def test_07_congruent_pair_shrinks():
    _run(7)


def test_08_translated_block_containments():
    _run(8)


def test_09_ray_family_shrinks():
    _run(9)


def test_10_sumset_against_brute_force():
    _run(10)


def test_11_gap_probe_discrepancy():
    _run(11)
