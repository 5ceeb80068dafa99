"""
Test suite for the dot matrix and the closed polar path
Tests: Positive, Negative, and Boundary Conditions
"""
import json
import math
from collections import Counter
from dataclasses import replace

from django.test import SimpleTestCase

from kolam.layout import (
    ClosedPath,
    PolarPoint,
    angle_is_on_arm,
    build_closed_path,
    build_matrix,
    dump_matrix_json,
    dump_matrix_text,
    dump_path_json,
    fill_order,
    matrix_to_path_consistency,
    path_follows_matrix,
)
from kolam.sequence import GeneratorSequence, generate_sequence, make_spec
from tests.strategies import valid_pairs


def matrix_for(m, n):
    return build_matrix(generate_sequence(make_spec(m, n)), n)


class BuildMatrixTestCase(SimpleTestCase):

    # ========== POSITIVE TESTS ==========

    def test_more_dots_than_arms(self):
        """Positive: one copy of the sequence spills over several rows"""
        matrix = build_matrix(GeneratorSequence((4, 3, 2, 1)), 3)
        self.assertEqual(matrix.tolist(), [[4, 3, 2], [1, 4, 3], [2, 1, 4], [3, 2, 1]])

    def test_fewer_dots_than_arms(self):
        """Positive: a row holds more than one copy of the sequence"""
        matrix = build_matrix(GeneratorSequence((4, 1, 2, 3)), 5)
        self.assertEqual(
            matrix.tolist(),
            [[4, 1, 2, 3, 4], [1, 2, 3, 4, 1], [2, 3, 4, 1, 2], [3, 4, 1, 2, 3]],
        )

    def test_two_dots_three_arms(self):
        """Positive: direct row-major fill"""
        matrix = build_matrix(GeneratorSequence((2, 1)), 3)
        self.assertEqual(matrix.tolist(), [[2, 1, 2], [1, 2, 1]])
        self.assertEqual((matrix.rows, matrix.cols), (2, 3))

    def test_first_arm_reads_the_layers(self):
        """Positive: arm 0 of (4, 3) holds 4, 1, 2, 3 from the inside out"""
        self.assertEqual(matrix_for(4, 3).column(0), [4, 1, 2, 3])

    def test_every_column_is_a_permutation(self):
        """Positive: each arm holds every radius exactly once"""
        for m, n in valid_pairs():
            matrix = matrix_for(m, n)
            for j in range(n):
                with self.subTest(m=m, n=n, arm=j):
                    self.assertEqual(sorted(matrix.column(j)), list(range(1, m + 1)))

    def test_unique_fill(self):
        """Positive: every cell is written exactly once"""
        for m, n in valid_pairs():
            seq = generate_sequence(make_spec(m, n))
            writes = Counter((i, j) for _, i, j, _ in fill_order(seq, n))
            with self.subTest(m=m, n=n):
                self.assertEqual(len(writes), m * n)
                self.assertEqual(set(writes.values()), {1})

    def test_fill_order_matches_matrix(self):
        """Positive: the constructive fill and the vectorised build agree"""
        seq = generate_sequence(make_spec(8, 5))
        matrix = build_matrix(seq, 5)
        for _, i, j, value in fill_order(seq, 5):
            self.assertEqual(matrix.entries[i, j], value)

    def test_row_advance(self):
        """Positive: row i+1 advances row i by n in sequence-index space"""
        for m, n in valid_pairs():
            seq = generate_sequence(make_spec(m, n))
            matrix = build_matrix(seq, n)
            for i in range(m - 1):
                for j in range(n):
                    expected = seq[(seq.index_of(int(matrix.entries[i, j])) + n) % m]
                    self.assertEqual(matrix.entries[i + 1, j], expected)

    # ========== NEGATIVE TESTS ==========

    def test_matrix_is_read_only(self):
        """Negative: entries cannot be written"""
        matrix = matrix_for(4, 3)
        with self.assertRaises(ValueError):
            matrix.entries[0, 0] = 9

    # ========== BOUNDARY TESTS ==========

    def test_single_cell(self):
        """Boundary: m = n = 1"""
        self.assertEqual(matrix_for(1, 1).tolist(), [[1]])


class ClosedPathTestCase(SimpleTestCase):

    # ========== POSITIVE TESTS ==========

    def test_hand_unrolled_points(self):
        """Positive: (4, 3) starts on arm 0 at radius 4 and steps one arm per term"""
        path = build_closed_path(make_spec(4, 3))
        self.assertEqual(len(path), 13)
        self.assertEqual([p.key for p in path.points[:4]], [(4, 0), (3, 1), (2, 2), (1, 0)])
        self.assertAlmostEqual(path.points[1].theta, 2 * math.pi / 3)
        self.assertAlmostEqual(path.points[2].theta, 4 * math.pi / 3)
        self.assertEqual(path.points[3].theta, 0.0)

    def test_radii_follow_the_sequence(self):
        """Positive: (5, 8) visits 5, 3, 1, 4, 2 on consecutive arms"""
        path = build_closed_path(make_spec(5, 8))
        self.assertEqual([p.radius for p in path.points[:5]], [5, 3, 1, 4, 2])
        self.assertEqual([p.arm for p in path.points[:5]], [0, 1, 2, 3, 4])

    def test_closure_and_distinct_dots(self):
        """Positive: closed, m*n + 1 points, first m*n distinct"""
        for m, n in valid_pairs():
            path = build_closed_path(make_spec(m, n))
            with self.subTest(m=m, n=n):
                self.assertEqual(len(path), m * n + 1)
                self.assertTrue(path.is_closed)
                self.assertEqual(len({p.key for p in path.dots}), m * n)

    def test_angles_sit_on_their_arm(self):
        """Positive: every theta is arm * 2π/n inside [0, 2π)"""
        for m, n in ((4, 3), (5, 8), (20, 91)):
            path = build_closed_path(make_spec(m, n))
            self.assertTrue(all(angle_is_on_arm(p, n) for p in path.points))

    def test_reversal_keeps_undirected_edges(self):
        """Positive: travelling the loop backwards draws the same figure"""
        for m, n in ((4, 3), (5, 8), (7, 3)):
            path = build_closed_path(make_spec(m, n))
            reverse = path.reversed()
            self.assertEqual(reverse.points[0], path.points[-1])
            self.assertEqual(reverse.undirected_edges(), path.undirected_edges())

    def test_theta_is_not_part_of_identity(self):
        """Positive: points compare on (radius, arm) only"""
        self.assertEqual(PolarPoint(2, 1, 0.5), PolarPoint(2, 1, 0.7))

    # ========== BOUNDARY TESTS ==========

    def test_single_point_loop(self):
        """Boundary: (1, 1) is one dot visited then closed"""
        path = build_closed_path(make_spec(1, 1))
        self.assertEqual([p.key for p in path.points], [(1, 0), (1, 0)])
        self.assertTrue(path.is_closed)


class ConsistencyTestCase(SimpleTestCase):

    # ========== POSITIVE TESTS ==========

    def test_matrix_and_path_agree(self):
        """Positive: same dots in matrix and path"""
        for m, n in ((4, 3), (2, 3), (5, 8), (12, 13)):
            spec = make_spec(m, n)
            matrix = matrix_for(m, n)
            path = build_closed_path(spec)
            with self.subTest(m=m, n=n):
                self.assertTrue(matrix_to_path_consistency(matrix, path))
                self.assertTrue(path_follows_matrix(matrix, path))

    # ========== NEGATIVE TESTS ==========

    def test_perturbed_radius(self):
        """Negative: one radius changed breaks the multiset"""
        path = build_closed_path(make_spec(4, 3))
        dots = list(path.dots)
        dots[0] = replace(dots[0], radius=dots[0].radius % 4 + 1)
        broken = ClosedPath(points=tuple(dots + dots[:1]), m=4, n=3)
        self.assertFalse(matrix_to_path_consistency(matrix_for(4, 3), broken))

    def test_reordered_path(self):
        """Negative: same dots in a different order only fail the ordered check"""
        path = build_closed_path(make_spec(4, 3))
        dots = list(path.dots)
        dots[0], dots[1] = dots[1], dots[0]
        swapped = ClosedPath(points=tuple(dots + dots[:1]), m=4, n=3)
        matrix = matrix_for(4, 3)
        self.assertTrue(matrix_to_path_consistency(matrix, swapped))
        self.assertFalse(path_follows_matrix(matrix, swapped))

    def test_truncated_path(self):
        """Negative: a short path cannot follow the matrix"""
        path = build_closed_path(make_spec(4, 3))
        short = ClosedPath(points=path.points[:6] + path.points[:1], m=4, n=3)
        self.assertFalse(path_follows_matrix(matrix_for(4, 3), short))


class DumpTestCase(SimpleTestCase):

    def test_matrix_text(self):
        """Positive: one row per line, entries space-separated"""
        self.assertEqual(dump_matrix_text(matrix_for(4, 3)), "4 3 2\n1 4 3\n2 1 4\n3 2 1\n")

    def test_matrix_json(self):
        """Positive: compact JSON form"""
        self.assertEqual(
            dump_matrix_json(matrix_for(2, 3)),
            '{"m":2,"n":3,"rows":[[2,1,2],[1,2,1]]}',
        )

    def test_path_json(self):
        """Positive: closure point is included"""
        payload = json.loads(dump_path_json(build_closed_path(make_spec(2, 3))))
        self.assertEqual(payload["m"], 2)
        self.assertEqual(payload["points"], [[2, 0], [1, 1], [2, 2], [1, 0], [2, 1], [1, 2], [2, 0]])
