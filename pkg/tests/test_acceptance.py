"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL
line with its runtime.  Run with ``pytest -s tests/test_acceptance.py`` to see
the lines as they complete."""

import os
import time

from nakayama import (
    QuiverKind,
    make_algebra,
    opposite,
    sdomdim,
    spectrum,
    verify,
)

JOBS = min(8, os.cpu_count() or 1)

C = QuiverKind.CYCLE
L = QuiverKind.LINE


class Criterion:
    def __init__(self, number, description, budget_seconds):
        self.number = number
        self.description = description
        self.budget = budget_seconds
        self.start = time.perf_counter()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"{status} criterion {self.number}: {self.description} ({elapsed:.1f} s)")
        if exc_type is None:
            assert elapsed < self.budget, (
                f"criterion {self.number} exceeded its {self.budget} s budget: {elapsed:.1f} s"
            )
        return False


def _assert_suite(name, **kwargs):
    report = verify(name, **kwargs)
    assert report.passed, (name, report.counterexamples)
    return report


def test_criterion_1_super_dominant_dimension_example():
    with Criterion(1, "sdomdim([2,4,3,3,3]) = 5 and sdomdim of the opposite = 4", 1.0):
        a = make_algebra(C, (2, 4, 3, 3, 3))
        assert sdomdim(a) == 5
        assert sdomdim(opposite(a)) == 4


def test_criterion_2_truncation_table_reproduction():
    with Criterion(2, "n=7 truncation table: 21 mapped entries match, 9 canceled have domdim <= 2", 1.0):
        report = _assert_suite("table1")
        assert report.scanned == 30


def test_criterion_3_extremal_algebra_suite():
    with Criterion(3, "extremal defect-1 algebras for n <= 25: parameters, dimensions, recursion", 30.0):
        report = _assert_suite("z-formulas", n_max=25)
        assert report.scanned == sum(n - 1 for n in range(2, 26))
        _assert_suite("dim-corollary", n_max=25)


def test_criterion_4_spectra_n9():
    with Criterion(4, "spectra at n = 9: line {2,3,4,5,8}, cycle {3..7, 9..16}", 15 * 60.0):
        line = spectrum(9, L)
        assert line.values == {2, 3, 4, 5, 8}
        cycle = spectrum(9, C, cap=18, jobs=JOBS)
        assert cycle.values == {3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16}


def test_criterion_5_conjecture_through_n10():
    with Criterion(5, "spectrum union = {2..2n-2} for every n <= 10", 2 * 60 * 60.0):
        report = _assert_suite("conjecture", n_max=10, jobs=JOBS)
        assert report.scanned == 9


def test_criterion_6_inequality_suite():
    with Criterion(6, "sdomdim <= 2n - defect over all cycle algebras with n <= 7, cap 20", 15 * 60.0):
        _assert_suite("inequality", n_max=7, cap=20, jobs=JOBS)


def test_criterion_7_uniqueness_and_equivalence():
    with Criterion(7, "unique higher Auslander algebra per gldim in [n, 2n-2] and the three-way equivalence, n <= 9", 20 * 60.0):
        _assert_suite("uniqueness", n_max=9, jobs=JOBS)
        _assert_suite("main-equivalence", n_max=9, jobs=JOBS)


def test_criterion_8_sharpened_bound_suite():
    with Criterion(8, "gldim <= n+m-1 with unique attainment; quasi-hereditary bound, n <= 9", 20 * 60.0):
        _assert_suite("mm-bound", n_max=9, jobs=JOBS)
        _assert_suite("bound-unique", n_max=9, jobs=JOBS)
        _assert_suite("qh-corollary", n_max=9, jobs=JOBS)


def test_criterion_9_d1_gorenstein_suite():
    with Criterion(9, "defect-1 infinite-gldim: Gorenstein iff even domdim iff minimal Auslander-Gorenstein; phi laws, n <= 9", 10 * 60.0):
        _assert_suite("d1-gorenstein", n_max=9)


def test_criterion_10_morita_suite():
    with Criterion(10, "endomorphism algebras for 3 <= n <= 20, 2 <= w <= 20: domdim, Gorenstein, finiteness", 60.0):
        report = _assert_suite("morita", n_max=20, w_max=20)
        assert report.scanned == 18 * 19


def test_criterion_11_crosscheck_suite():
    with Criterion(11, "Shen criteria, source counts, weights, opposite symmetry over n <= 6, cap 14", 5 * 60.0):
        _assert_suite("shen-crosscheck", n_max=6, cap=14, jobs=JOBS)
