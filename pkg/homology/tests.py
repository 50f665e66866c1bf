import random
import time

import numpy as np
from django.test import SimpleTestCase
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_smith
from sympy.polys.matrices import DomainMatrix

from grid.images import (
    AdjacencyKind, DigitalImage, DigitalMap, components, interval, permute_axes, product, translate,
)

from .cohomology import (
    Cochain, CupLength, NotSimplicial, betti, coboundary, cohomology, cohomology_generators, cup, euler_characteristic,
    homology, induced_cochain_map, induced_cohomology_map, is_coboundary, nilpotency,
)
from .complexes import ComplexError, VertexOrder, boundary, build_clique_complex, dump_matrix
from .linalg import CoefficientError, Coefficients, fraction_free_rank, kernel_basis, rank, torsion
from .smith import identity, invariant_factors, smith_normal_form


P = {
    0: (1, 0, 0), 1: (1, 1, 0), 2: (1, 1, 1), 3: (1, 0, 1),
    4: (0, 0, 1), 5: (0, 1, 1), 6: (0, 1, 0), 7: (0, 0, 0),
}
PROOF_ORDER = [P[i] for i in (7, 4, 6, 5, 0, 3, 1, 2)]
# e_i: (plus, minus) of the boundary of each edge
EDGE_BOUNDARIES = [
    (1, 0), (3, 0), (2, 1), (1, 6), (2, 5), (2, 3),
    (3, 4), (4, 7), (5, 4), (5, 6), (6, 7), (0, 7),
]
SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def cube_corners():
    return DigitalImage.from_points(P.values(), 6)


def theta():
    ring1 = {(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)}
    ring2 = {(x, y) for x in range(2, 5) for y in range(2, 5) if (x, y) != (3, 3)}
    return DigitalImage.from_points(ring1 | ring2, 4)


def random_image(rng, max_points=20):
    m = rng.randint(1, 4)
    points = {tuple(rng.randint(0, 2) for _ in range(m)) for _ in range(rng.randint(1, max_points))}
    return DigitalImage(frozenset(points), AdjacencyKind(rng.randint(1, m), m))


def random_matrix(rng, rows, cols):
    if rng.random() < 0.5:
        return np.array([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)], dtype=object)
    inner = rng.randint(1, max(1, min(rows, cols)))
    a = np.array([[rng.randint(-2, 2) for _ in range(inner)] for _ in range(rows)], dtype=object)
    b = np.array([[rng.randint(-2, 2) for _ in range(cols)] for _ in range(inner)], dtype=object)
    return a.dot(b)


def determinant(M):
    n = M.shape[0]
    return DomainMatrix([[ZZ(int(v)) for v in row] for row in M.tolist()], (n, n), ZZ).det()


class SmithFormTest(SimpleTestCase):
    def assertSmithForm(self, A):
        D, U, V = smith_normal_form(A)
        self.assertTrue((U.dot(A).dot(V) == D).all())
        self.assertIn(determinant(U), (1, -1))
        self.assertIn(determinant(V), (1, -1))
        for i in range(D.shape[0]):
            for j in range(D.shape[1]):
                if i != j:
                    self.assertEqual(D[i, j], 0)
        factors = invariant_factors(D)
        for a, b in zip(factors, factors[1:]):
            self.assertEqual(b % a, 0)
        nonzero = len(factors)
        self.assertEqual([D[i, i] for i in range(nonzero)], factors)
        self.assertTrue(all(D[i, i] == 0 for i in range(nonzero, min(D.shape))))
        return factors

    def test_zero(self):
        D, U, V = smith_normal_form(np.zeros((2, 3), dtype=object))
        self.assertFalse(D.any())
        self.assertTrue((U == identity(2)).all())
        self.assertTrue((V == identity(3)).all())

    def test_small(self):
        D, _, _ = smith_normal_form([[2, 4], [6, 8]])
        self.assertEqual(D.tolist(), [[2, 0], [0, 4]])
        self.assertEqual(torsion([[2, 0], [0, 3]]), [6])

    def test_big_entries_do_not_wrap(self):
        big = 2 ** 70
        factors = self.assertSmithForm(np.array([[big, 0], [0, big * 3]], dtype=object))
        self.assertEqual(factors, [big, big * 3])

    def test_random_postconditions(self):
        rng = random.Random(10)
        started = time.monotonic()
        for _ in range(200):
            A = random_matrix(rng, rng.randint(1, 30), rng.randint(1, 30))
            self.assertSmithForm(A)
        self.assertLess(time.monotonic() - started, 60)

    def test_tall_product_matrix_is_quick(self):
        rng = random.Random(3)
        a = np.array([[rng.randint(-2, 2) for _ in range(12)] for _ in range(28)], dtype=object)
        b = np.array([[rng.randint(-2, 2) for _ in range(13)] for _ in range(12)], dtype=object)
        A = a.dot(b)
        started = time.monotonic()
        factors = self.assertSmithForm(A)
        self.assertLess(time.monotonic() - started, 5)
        self.assertEqual(len(factors), fraction_free_rank(A))
        self.assertEqual(factors[0], np.gcd.reduce([abs(int(v)) for v in A.flat if v]))

    def test_against_sympy(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(1, 6)
            A = random_matrix(rng, n, n)
            ours = invariant_factors(smith_normal_form(A).D)
            theirs = sympy_smith(Matrix(A.tolist()), domain=ZZ)
            expected = sorted(abs(int(theirs[i, i])) for i in range(min(theirs.shape)) if theirs[i, i] != 0)
            self.assertEqual(sorted(ours), expected)

    def test_rank_oracle(self):
        rng = random.Random(12)
        for _ in range(100):
            A = random_matrix(rng, rng.randint(1, 12), rng.randint(1, 12))
            self.assertEqual(rank(A, 'q'), fraction_free_rank(A))


class LinalgTest(SimpleTestCase):
    def test_coefficients(self):
        self.assertEqual(Coefficients.parse('p7').prime, 7)
        self.assertEqual(str(Coefficients.parse('q')), 'Q')
        self.assertEqual(str(Coefficients.parse('int')), 'Z')
        for bad in ('p4', 'p', 'r'):
            with self.assertRaises(CoefficientError):
                Coefficients.parse(bad)

    def test_rank_mod_p(self):
        self.assertEqual(rank([[2]], 'p2'), 0)
        self.assertEqual(rank([[2]], 'p3'), 1)
        self.assertEqual(rank([[1, 1], [1, -1]], 'p2'), 1)
        self.assertEqual(rank([[1, 1], [1, -1]], 'q'), 2)

    def test_kernel_basis(self):
        A = np.array([[1, 1, 0], [0, 1, 1]], dtype=object)
        basis = kernel_basis(A)
        self.assertEqual(basis.shape, (3, 1))
        self.assertFalse(A.dot(basis).any())


class CliqueComplexTest(SimpleTestCase):
    def test_cube_corners(self):
        K = build_clique_complex(cube_corners())
        self.assertEqual(K.sizes(), [8, 12, 0, 0, 0])

    def test_full_square(self):
        K = build_clique_complex(DigitalImage.from_points(SQUARE, 8))
        self.assertEqual(K.sizes(), [4, 6, 4, 1])

    def test_singleton(self):
        K = build_clique_complex(DigitalImage.from_points([(0, 0)], 4))
        self.assertEqual(K.sizes()[0], 1)
        self.assertEqual(sum(K.sizes()), 1)
        self.assertEqual(homology(K).lines()[0], 'H_0 = Z')
        self.assertTrue(all(homology(K).is_trivial(q) for q in range(1, K.max_dim + 1)))

    def test_edge_boundaries_in_proof_order(self):
        K = build_clique_complex(cube_corners(), order=PROOF_ORDER)
        d1 = boundary(K, 1)
        for plus, minus in EDGE_BOUNDARIES:
            j = K.index(K.order.sort((P[plus], P[minus])))
            column = d1[:, j]
            self.assertEqual(column[K.index((P[plus],))], 1)
            self.assertEqual(column[K.index((P[minus],))], -1)
            self.assertEqual(sum(abs(v) for v in column), 2)
        self.assertFalse(boundary(K, 0).any())
        self.assertEqual(boundary(K, 0).shape, (0, 8))
        self.assertEqual(rank(d1), 7)

    def test_bad_order(self):
        with self.assertRaises(ComplexError):
            VertexOrder(P.values(), PROOF_ORDER[:-1])
        K = build_clique_complex(cube_corners(), max_dim=1)
        with self.assertRaises(ComplexError):
            boundary(K, 2)

    def test_boundary_squares_to_zero(self):
        rng = random.Random(13)
        images = [cube_corners(), theta(), DigitalImage.from_points(SQUARE, 8)]
        images += [random_image(rng) for _ in range(200)]
        for image in images:
            K = build_clique_complex(image)
            for q in range(1, K.max_dim + 1):
                self.assertFalse(K.boundary(q - 1).dot(K.boundary(q)).any())

    def test_dump_matrix(self):
        self.assertEqual(dump_matrix([[1, -1], [0, 2]]), '1 -1\n0 2\n')


class HomologyTest(SimpleTestCase):
    def test_cube_corners_cohomology(self):
        K = build_clique_complex(cube_corners(), order=PROOF_ORDER)
        H = cohomology(K)
        self.assertEqual(H.lines(), ['H^0 = Z', 'H^1 = Z^5', 'H^2 = 0', 'H^3 = 0', 'H^4 = 0'])
        self.assertEqual(H.cycle_ranks[1], 12)
        self.assertEqual(H.boundary_ranks[1], 7)
        self.assertEqual(homology(K).betti(1), 5)

    def test_betti_examples(self):
        self.assertEqual(betti(theta(), 1), 2)
        self.assertEqual(betti(interval(6), 1), 0)
        self.assertEqual(betti(DigitalImage.from_points(SQUARE, 4), 1), 1)
        self.assertEqual(betti(DigitalImage.from_points(SQUARE, 8), 1), 0)
        self.assertEqual(betti(cube_corners(), 0), 1)

    def test_field_coefficients(self):
        K = build_clique_complex(theta())
        for coefficients in ('q', 'p2', 'p5'):
            self.assertEqual(cohomology(K, coefficients).betti(1), 2)
        self.assertEqual(cohomology(K, 'p3').lines()[1], 'H^1 = F_3^2')

    def test_betti_invariant_under_isometries(self):
        rng = random.Random(14)
        for image in (cube_corners(), theta(), DigitalImage.from_points(SQUARE, 8)):
            expected = [betti(image, q) for q in range(3)]
            for _ in range(50):
                order = list(range(image.dimension))
                rng.shuffle(order)
                moved = translate(permute_axes(image, order), [rng.randint(-5, 5) for _ in order])
                self.assertEqual([betti(moved, q) for q in range(3)], expected)

    def test_triangle_free_first_betti(self):
        rng = random.Random(15)
        for _ in range(100):
            m = rng.randint(1, 3)
            points = {tuple(rng.randint(0, 3) for _ in range(m)) for _ in range(rng.randint(1, 20))}
            image = DigitalImage(frozenset(points), AdjacencyKind(1, m))
            edges = image.graph.number_of_edges()
            expected = edges - len(image) + len(components(image))
            self.assertEqual(betti(image, 1), expected)

    def test_euler_characteristic(self):
        rng = random.Random(16)
        images = [cube_corners(), theta(), DigitalImage.from_points(SQUARE, 8)]
        images += [random_image(rng, 12) for _ in range(50)]
        for image in images:
            K = build_clique_complex(image)
            H = homology(K, 'int')
            if any(H.torsion_of(q) for q in range(K.max_dim + 1)):
                continue
            alternating = sum((-1) ** q * H.betti(q) for q in range(K.max_dim + 1))
            self.assertEqual(euler_characteristic(K), alternating)


class InducedMapTest(SimpleTestCase):
    def test_diagonal_into_cube_corners(self):
        x = interval(1)
        cube = cube_corners()
        diagonal = DigitalMap(x, cube, {(0,): (0, 0, 0), (1,): (1, 1, 1)})
        K_dom, K_cod = build_clique_complex(x), build_clique_complex(cube)
        induced = induced_cohomology_map(diagonal, K_dom, K_cod, 1, allow_discontinuous=True)
        self.assertEqual(induced.rank, 0)
        self.assertEqual(induced.kernel_rank, 5)
        self.assertFalse(induced.continuity_checked)
        with self.assertRaises(NotSimplicial):
            induced_cochain_map(diagonal, K_dom, K_cod)

    def test_discontinuous_map_into_zero_group_is_rejected(self):
        x = interval(1)
        cube = cube_corners()
        diagonal = DigitalMap(x, cube, {(0,): (0, 0, 0), (1,): (1, 1, 1)})
        K_dom, K_cod = build_clique_complex(x), build_clique_complex(cube)
        self.assertEqual(cohomology(K_dom).betti(1), 0)
        for q in (0, 1):
            with self.assertRaises(NotSimplicial):
                induced_cohomology_map(diagonal, K_dom, K_cod, q)

    def test_allowing_discontinuity_still_needs_continuity_for_nonzero_maps(self):
        image = theta()
        K = build_clique_complex(image)
        points = image.sorted_points
        swapped = DigitalMap(image, image, {p: points[-1] if p == points[0] else points[0] if p == points[-1] else p
                                            for p in points})
        with self.assertRaises(NotSimplicial):
            induced_cohomology_map(swapped, K, K, 1, allow_discontinuous=True)

    def test_identity(self):
        image = DigitalImage.from_points(SQUARE, 8)
        K = build_clique_complex(image)
        maps = induced_cochain_map(DigitalMap.identity(image), K, K)
        for q, matrix in maps.items():
            self.assertTrue((matrix == identity(K.size(q))).all())
        self.assertEqual(induced_cohomology_map(DigitalMap.identity(theta()), build_clique_complex(theta()),
                                                build_clique_complex(theta()), 1).rank, 2)

    def test_constant(self):
        image = DigitalImage.from_points(SQUARE, 8)
        K = build_clique_complex(image)
        maps = induced_cochain_map(DigitalMap.constant(image, image, (0, 0)), K, K)
        for q in range(1, K.max_dim + 1):
            self.assertFalse(maps[q].any())
        self.assertTrue(maps[0].any())


class CupProductTest(SimpleTestCase):
    def setUp(self):
        self.K = build_clique_complex(DigitalImage.from_points(SQUARE, 8))
        self.rng = random.Random(17)

    def random_cochain(self, q):
        return Cochain(self.K, q, [self.rng.randint(-3, 3) for _ in range(self.K.size(q))])

    def test_unit(self):
        unit = Cochain.unit(self.K)
        for q in range(3):
            phi = self.random_cochain(q)
            self.assertEqual(cup(unit, phi), phi)
            self.assertEqual(cup(phi, unit), phi)

    def test_associative_and_bilinear(self):
        for _ in range(20):
            a, b, c = self.random_cochain(1), self.random_cochain(1), self.random_cochain(1)
            self.assertEqual(cup(cup(a, b), c), cup(a, cup(b, c)))
            a2 = self.random_cochain(1)
            self.assertEqual(cup(a + a2, b), cup(a, b) + cup(a2, b))
            self.assertEqual(cup(a, b.scale(3)), cup(a, b).scale(3))

    def test_leibniz(self):
        for p, q in ((0, 1), (1, 1), (1, 0), (0, 2)):
            for _ in range(10):
                a, b = self.random_cochain(p), self.random_cochain(q)
                left = coboundary(cup(a, b))
                right = cup(coboundary(a), b) + cup(a, coboundary(b)).scale((-1) ** p)
                self.assertEqual(left, right)

    def test_products_above_top_dimension(self):
        K = build_clique_complex(cube_corners())
        generators = cohomology_generators(K, 1)
        self.assertEqual(len(generators), 5)
        for a in generators:
            self.assertFalse(is_coboundary(a))
            for b in generators:
                self.assertTrue(cup(a, b).is_zero())
        self.assertEqual(nilpotency(K), CupLength(1))

    def test_spent_budget_gives_a_lower_bound(self):
        K = build_clique_complex(cube_corners())
        partial = nilpotency(K, budget=1)
        self.assertEqual(partial, CupLength(1, exact=False))
        self.assertEqual(str(partial), '>= 1')
        self.assertEqual(str(nilpotency(K)), '1')

    def test_interval_has_no_positive_classes(self):
        K = build_clique_complex(interval(1))
        self.assertEqual(cohomology(K).betti(1), 0)
        self.assertEqual(cohomology_generators(K, 1), [])
        self.assertEqual(nilpotency(K), CupLength(0))

    def test_cup_on_product_of_intervals(self):
        x = interval(1)
        K = build_clique_complex(product(x, x))
        self.assertEqual(nilpotency(K), CupLength(0))
