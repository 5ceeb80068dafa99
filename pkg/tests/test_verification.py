"""
Test suite for the structural checks
Tests: Positive, Negative, and Boundary Conditions
"""
from django.test import SimpleTestCase

from kolam.exceptions import SpecError
from kolam.layout import build_closed_path
from kolam.sequence import make_spec
from kolam.verification import FAULTS, CheckResult, inject_fault, run_checks


def failing(results):
    return [r.name for r in results if not r.passed]


class RunChecksTestCase(SimpleTestCase):

    # ========== POSITIVE TESTS ==========

    def test_all_checks_pass(self):
        """Positive: every check passes for valid specs"""
        for m, n in ((4, 3), (4, 5), (5, 8), (8, 5), (12, 13), (20, 91)):
            with self.subTest(m=m, n=n):
                self.assertEqual(failing(run_checks(make_spec(m, n))), [])

    def test_check_list_is_stable(self):
        """Positive: twelve named checks in a fixed order"""
        names = [r.name for r in run_checks(make_spec(4, 3))]
        self.assertEqual(len(names), 12)
        self.assertEqual(names[0], "sequence is a permutation of 1..m")
        self.assertEqual(names[-1], "3-fold rotational symmetry")

    def test_format(self):
        """Positive: PASS and FAIL lines"""
        self.assertEqual(CheckResult("x", True).format(), "PASS  x")
        self.assertEqual(CheckResult("x", False, "why").format(), "FAIL  x: why")

    # ========== NEGATIVE TESTS ==========

    def test_shuffled_path_breaks_the_ordered_check(self):
        """Negative: same dots in another order are caught"""
        results = run_checks(make_spec(8, 5), fault="shuffle-path")
        self.assertIn("consistency: path follows the matrix row by row", failing(results))
        self.assertNotIn("consistency: matrix and path hold the same dots", failing(results))

    def test_perturbed_radius_breaks_the_multiset_check(self):
        """Negative: a moved dot is caught"""
        results = run_checks(make_spec(4, 3), fault="perturb-radius")
        failed = failing(results)
        self.assertIn("consistency: matrix and path hold the same dots", failed)
        self.assertIn("path visits m*n distinct dots", failed)

    def test_perturbed_radius_needs_two_dots_per_arm(self):
        """Negative: with one dot per arm there is no other radius to move to"""
        path = build_closed_path(make_spec(1, 1))
        with self.assertRaises(SpecError):
            inject_fault(path, "perturb-radius")
        with self.assertRaises(SpecError):
            run_checks(make_spec(1, 3), fault="perturb-radius")

    def test_unknown_fault(self):
        """Negative: only the listed faults can be injected"""
        with self.assertRaises(ValueError):
            inject_fault(build_closed_path(make_spec(4, 3)), "flip-arm")

    # ========== BOUNDARY TESTS ==========

    def test_single_dot(self):
        """Boundary: (1, 1) passes every check"""
        self.assertEqual(failing(run_checks(make_spec(1, 1))), [])

    def test_faults_keep_the_path_closed(self):
        """Boundary: injected faults still return a closed path of the same length"""
        path = build_closed_path(make_spec(5, 8))
        for fault in FAULTS:
            broken = inject_fault(path, fault)
            self.assertTrue(broken.is_closed)
            self.assertEqual(len(broken), len(path))
