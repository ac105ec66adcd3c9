"""The identity suite driver: clean passes, bounds, and sensitivity.

The last test feeds the randomized machinery a deliberately corrupted
identity and checks it is rejected at every point: randomized testing at
positive rational points must not produce false passes.
"""

import random
from fractions import Fraction

import pytest

from krenergy.birational import eval_loop_e, eval_loop_h, random_point
from krenergy.identities import (
    box_skew_shapes,
    classical_e_of_products,
    eval_classical_e_of_products,
    identity_suite,
    partitions_in_box,
)
from krenergy.lsym import ColoredPoly, sigma
from krenergy.tableaux import Shape


def failures(checks):
    return [c for c in checks if not c.passed]


def test_symbolic_suite_small_sizes():
    for n, m in [(2, 1), (2, 2), (2, 3), (3, 2)]:
        assert not failures(identity_suite(n, m, mode="symbolic"))


def test_randomized_suite_small_sizes():
    for n, m in [(2, 2), (3, 3)]:
        assert not failures(identity_suite(n, m, mode="randomized", seed=4, trials=3))


def test_randomized_reports_family_summaries():
    checks = identity_suite(2, 2, mode="randomized", seed=0, trials=2)
    names = {c.identity for c in checks}
    assert {"eh_alternating_sum", "tau_via_products", "tau_recursion", "staircase_factorization", "tau_vector_annihilation",
            "minor_tau_factorization", "jacobi_trudi"} <= names


def test_symbolic_bounds_enforced():
    with pytest.raises(ValueError):
        identity_suite(4, 2, mode="symbolic")
    with pytest.raises(ValueError):
        identity_suite(2, 5, mode="symbolic")


def test_mode_and_trials_validation():
    with pytest.raises(ValueError):
        identity_suite(2, 2, mode="exhaustive")
    with pytest.raises(ValueError):
        identity_suite(2, 2, mode="randomized", trials=0)
    with pytest.raises(ValueError):
        identity_suite(1, 2)


def test_staircase_factorization_base_case_polynomial():
    # for (n, m) = (2, 2) the staircase is a single cell: s_(1) = x1 + x2
    from krenergy.lsym import loop_schur_tableaux

    lhs = loop_schur_tableaux(Shape((1,)), 0, 2, n=2)
    rhs = sigma(1, 0, n=2, m=2)
    want = ColoredPoly.variable(1, 0, m=2, n=2) + ColoredPoly.variable(2, 0, m=2, n=2)
    assert lhs == rhs == want


def test_partitions_in_box():
    parts = partitions_in_box(2, 2)
    assert Shape(()) in parts and Shape((2, 2)) in parts and Shape((2, 1)) in parts
    assert len(parts) == 6  # (), (1), (2), (1,1), (2,1), (2,2)


def test_box_skew_shapes_contains_skews():
    shapes = box_skew_shapes(2, 2)
    outers = {(s.outer.parts, s.inner.parts) for s in shapes}
    assert ((2, 1), (1,)) in outers
    assert ((2, 2), (2, 1)) in outers


def test_classical_e_of_products_matches_eval():
    rng = random.Random(1)
    for n, m in [(2, 3), (3, 2)]:
        p = random_point(m, n, rng, bound=10)
        for i in range(0, m + 1):
            sym = classical_e_of_products(i, n=n, m=m).eval_rational(p.value)
            assert sym == eval_classical_e_of_products(i, p)


def test_randomized_testing_has_no_false_passes():
    """A corrupted identity (eh_alternating_sum with a shifted color on h) must be
    rejected at every sampled positive rational point."""
    rng = random.Random(99)
    n, m = 3, 3
    for _ in range(20):
        p = random_point(m, n, rng)
        idx = tuple(range(1, m + 1))
        for k in (1, 2, 3):
            wrong = Fraction(0)
            for i in range(0, min(m, k) + 1):
                term = eval_loop_e(i, -i, idx, p) * eval_loop_h(k - i, -i, idx, p)
                wrong += term if i % 2 == 0 else -term
            assert wrong != 0, (k, p)


def test_staircase_factorization_randomized_n3_m3_fifty_points():
    """Tableau-sum staircase Schur equals the sigma product at 50 points."""
    from krenergy.birational import eval_sigma
    from krenergy.lsym import loop_schur_tableaux
    from krenergy.tableaux import staircase

    n, m = 3, 3
    schur = loop_schur_tableaux(staircase(m - 1, n - 1), 0, m, n=n)
    rng = random.Random(15)
    for _ in range(50):
        p = random_point(m, n, rng)
        lhs = schur.eval_rational(p.value)
        rhs = Fraction(1)
        for i in range(1, m):
            rhs *= eval_sigma((n - 1) * (m - i), i - 1, range(i, m + 1), p)
        assert lhs == rhs


def test_symbolic_and_randomized_agree_where_both_run():
    # same sizes, both modes: identical verdicts (everything passes)
    for n, m in [(2, 2), (2, 3)]:
        sym = failures(identity_suite(n, m, mode="symbolic"))
        rand = failures(identity_suite(n, m, mode="randomized", seed=7, trials=3))
        assert sym == [] and rand == []
