import itertools
import random

from django.test import SimpleTestCase

from helpers.parsing import FormatError

from .formats import dump_image, parse_image
from .images import (
    AdjacencyKind, DigitalImage, DigitalMap, DimensionMismatch, ImageError, MalformedMap,
    PointNotInImage, WedgeError, adjacent, components, interval, is_connected, is_continuous,
    is_isomorphism, is_simple_closed_curve, neighbors, permute_axes, product, wedge,
)


CUBE_CORNERS = [(1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 0, 1), (0, 0, 1), (0, 1, 1), (0, 1, 0), (0, 0, 0)]
SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
HEXAGON = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)]


def random_image(rng, dimension=None, size=None):
    dimension = dimension or rng.randint(1, 3)
    size = size or rng.randint(1, 20)
    points = {tuple(rng.randint(0, 3) for _ in range(dimension)) for _ in range(size)}
    k = rng.randint(1, dimension)
    return DigitalImage(frozenset(points), AdjacencyKind(k, dimension))


class AdjacencyTest(SimpleTestCase):
    def test_aliases(self):
        self.assertEqual(AdjacencyKind.from_name(2, 1).k, 1)
        self.assertEqual(AdjacencyKind.from_name(8, 2).k, 2)
        self.assertEqual(AdjacencyKind.from_name(18, 3).k, 2)
        self.assertEqual(AdjacencyKind.from_name(26, 3).k, 3)
        self.assertEqual(AdjacencyKind.from_name(80, 4).k, 4)
        with self.assertRaises(ImageError):
            AdjacencyKind.from_name(8, 3)

    def test_examples(self):
        six = AdjacencyKind.from_name(6, 3)
        self.assertTrue(adjacent((0, 0, 0), (1, 0, 0), six))
        self.assertTrue(adjacent((1, 1, 0), (1, 1, 1), six))
        self.assertFalse(adjacent((0, 0), (1, 1), AdjacencyKind.from_name(4, 2)))
        self.assertTrue(adjacent((0, 0), (1, 1), AdjacencyKind.from_name(8, 2)))

    def test_errors(self):
        four = AdjacencyKind(1, 2)
        with self.assertRaises(DimensionMismatch):
            adjacent((0, 0), (0, 0, 1), four)
        with self.assertRaises(ImageError):
            adjacent((0, 0), (0, 0), four)
        with self.assertRaises(ImageError):
            AdjacencyKind(3, 2)
        with self.assertRaises(ImageError):
            AdjacencyKind(1, 5)

    def test_symmetric_and_irreflexive(self):
        rng = random.Random(1)
        for _ in range(500):
            m = rng.randint(1, 4)
            kind = AdjacencyKind(rng.randint(1, m), m)
            p = tuple(rng.randint(-2, 2) for _ in range(m))
            q = tuple(rng.randint(-2, 2) for _ in range(m))
            self.assertFalse(kind.adjacent(p, p))
            self.assertEqual(kind.adjacent(p, q), kind.adjacent(q, p))

    def test_neighbourhood_counts(self):
        for m, k, count in [(1, 1, 2), (2, 1, 4), (2, 2, 8), (3, 1, 6), (3, 2, 18), (3, 3, 26)]:
            self.assertEqual(len(AdjacencyKind(k, m).offsets), count)


class ImageTest(SimpleTestCase):
    def setUp(self):
        self.cube = DigitalImage.from_points(CUBE_CORNERS, 6)

    def test_construction_errors(self):
        with self.assertRaises(ImageError):
            DigitalImage.from_points([], 4)
        with self.assertRaises(DimensionMismatch):
            DigitalImage(frozenset([(0, 0), (0, 0, 0)]), AdjacencyKind(1, 2))
        with self.assertRaises(DimensionMismatch):
            DigitalImage(frozenset([(0, 0)]), AdjacencyKind(1, 3))

    def test_neighbors(self):
        self.assertEqual(neighbors(self.cube, (1, 0, 0)), {(1, 1, 0), (1, 0, 1), (0, 0, 0)})
        self.assertEqual(neighbors(DigitalImage.from_points([(3, 3)], 4), (3, 3)), frozenset())
        with self.assertRaises(PointNotInImage):
            neighbors(self.cube, (2, 0, 0))

    def test_theta_neighbors(self):
        ring1 = [(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)]
        ring2 = [(x, y) for x in range(2, 5) for y in range(2, 5) if (x, y) != (3, 3)]
        theta = DigitalImage.from_points(set(ring1) | set(ring2), 4)
        self.assertEqual(neighbors(theta, (2, 1)), {(2, 0), (2, 2)})

    def test_components(self):
        self.assertEqual(len(components(self.cube)), 1)
        self.assertTrue(is_connected(DigitalImage.from_points([(7,)], 2)))
        far = DigitalImage.from_points([(0, 0), (5, 5)], 4)
        self.assertEqual(components(far), [frozenset([(0, 0)]), frozenset([(5, 5)])])
        self.assertFalse(is_connected(far))

    def test_components_partition(self):
        rng = random.Random(2)
        for _ in range(100):
            image = random_image(rng)
            parts = components(image)
            self.assertEqual(frozenset().union(*parts), image.points)
            self.assertEqual(sum(len(p) for p in parts), len(image))
            for part in parts:
                self.assertTrue(is_connected(image.subimage(part)))
            for a, b in itertools.combinations(parts, 2):
                for p in a:
                    self.assertFalse(image.neighbors(p) & b)

    def test_simple_closed_curve(self):
        self.assertTrue(is_simple_closed_curve(DigitalImage.from_points(SQUARE, 4)))
        self.assertFalse(is_simple_closed_curve(DigitalImage.from_points(SQUARE, 8)))
        self.assertFalse(is_simple_closed_curve(interval(3)))
        self.assertTrue(is_simple_closed_curve(DigitalImage.from_points(HEXAGON, 6)))

    def test_labels_are_metadata(self):
        a = DigitalImage.from_points(SQUARE, 4, labels={(0, 0): 'v0'})
        b = DigitalImage.from_points(SQUARE, 4)
        self.assertEqual(a, b)
        self.assertEqual(a.label((0, 0)), 'v0')


class MapTest(SimpleTestCase):
    def test_malformed(self):
        x = interval(1)
        with self.assertRaises(MalformedMap):
            DigitalMap(x, x, {(0,): (0,)})
        with self.assertRaises(MalformedMap):
            DigitalMap(x, x, {(0,): (0,), (1,): (2,)})

    def test_identity_and_constant(self):
        cube = DigitalImage.from_points(CUBE_CORNERS, 6)
        self.assertTrue(is_continuous(DigitalMap.identity(cube)))
        self.assertTrue(is_continuous(DigitalMap.constant(cube, cube, (0, 0, 0))))

    def test_xor_multiplication(self):
        x = interval(1)
        square = product(x, x)
        xor = DigitalMap.from_function(square, x, lambda p: ((p[0] + p[1]) % 2,))
        self.assertTrue(is_continuous(xor))

    def test_teleport_is_discontinuous(self):
        x = interval(2)
        f = DigitalMap(x, x, {(0,): (0,), (1,): (0,), (2,): (2,)})
        self.assertFalse(is_continuous(f))

    def test_isomorphisms(self):
        cube = DigitalImage.from_points(CUBE_CORNERS, 6)
        swap = DigitalMap.from_function(cube, cube, lambda p: (p[2], p[0], p[1]))
        self.assertTrue(is_isomorphism(swap))

        pair = interval(1)
        self.assertFalse(is_isomorphism(DigitalMap.constant(pair, pair, (0,))))

        cycle = DigitalImage.from_points(SQUARE, 4)
        full = DigitalImage.from_points(SQUARE, 8)
        there = DigitalMap.from_function(cycle, full, lambda p: p)
        back = DigitalMap.from_function(full, cycle, lambda p: p)
        self.assertTrue(is_continuous(there))
        self.assertFalse(is_continuous(back))
        self.assertFalse(is_isomorphism(there))
        self.assertFalse(is_isomorphism(back))

    def test_composition_closure(self):
        rng = random.Random(3)
        x = interval(3)
        found = 0
        for _ in range(400):
            f = DigitalMap(x, x, {p: (rng.randint(0, 3),) for p in x.points})
            g = DigitalMap(x, x, {p: (rng.randint(0, 3),) for p in x.points})
            if is_continuous(f) and is_continuous(g):
                found += 1
                self.assertTrue(is_continuous(f.then(g)))
        self.assertGreater(found, 0)


class ProductTest(SimpleTestCase):
    def test_unit_square(self):
        x = interval(1)
        square = product(x, x)
        self.assertEqual(len(square), 4)
        self.assertEqual(square.graph.number_of_edges(), 6)

    def test_singleton_factor(self):
        x = DigitalImage.from_points(HEXAGON, 6)
        point = DigitalImage.from_points([(5,)], 2)
        xp = product(x, point)
        projection = DigitalMap.from_function(xp, x, lambda p: p[:3])
        self.assertTrue(is_isomorphism(projection))

    def test_cardinality(self):
        x = DigitalImage.from_points(SQUARE + [(2, 0)], 4)
        self.assertEqual(len(product(x, x)), len(x) ** 2)

    def test_degree_formula(self):
        rng = random.Random(4)
        for _ in range(20):
            x = random_image(rng, size=6)
            y = random_image(rng, size=6)
            xy = product(x, y)
            n = x.dimension
            for p in xy.points:
                dx = len(x.neighbors(p[:n]))
                dy = len(y.neighbors(p[n:]))
                self.assertEqual(xy.graph.degree(p), dx * dy + dx + dy)


class WedgeTest(SimpleTestCase):
    def test_hexagon_wedge(self):
        a = DigitalImage.from_points(HEXAGON, 6)
        b = DigitalImage.from_points([tuple(-c for c in p) for p in HEXAGON], 6)
        w = wedge(a, b, (0, 0, 0))
        self.assertEqual(len(w), 11)
        self.assertEqual(len(wedge(b, a, (0, 0, 0))), 11)

    def test_shared_points(self):
        a = DigitalImage.from_points(SQUARE, 4)
        with self.assertRaises(WedgeError):
            wedge(a, a, (0, 0))

    def test_cross_adjacency(self):
        a = DigitalImage.from_points(SQUARE, 8)
        b = DigitalImage.from_points([(1, 1), (2, 1), (2, 2), (1, 2)], 8)
        with self.assertRaises(WedgeError):
            wedge(a, b, (1, 1))
        with self.assertRaises(WedgeError):
            wedge(b, a, (1, 1))

    def test_validity_symmetric(self):
        rng = random.Random(5)
        for _ in range(100):
            a = random_image(rng, dimension=2, size=5)
            x0 = min(a.points)
            b_points = {x0} | {tuple(rng.randint(-3, 0) for _ in range(2)) for _ in range(4)}
            b = DigitalImage(frozenset(b_points), a.adjacency)
            outcomes = []
            for first, second in ((a, b), (b, a)):
                try:
                    wedge(first, second, x0)
                    outcomes.append(True)
                except WedgeError:
                    outcomes.append(False)
            self.assertEqual(outcomes[0], outcomes[1])


class FormatTest(SimpleTestCase):
    def test_parse_with_labels(self):
        image = parse_image('# cube corners\ndim 3 adjacency 6\n1 0 0  # p0\n\n1 1 0 # p1\n')
        self.assertEqual(image.points, {(1, 0, 0), (1, 1, 0)})
        self.assertEqual(image.label((1, 0, 0)), 'p0')
        self.assertEqual(image.adjacency, AdjacencyKind(1, 3))

    def test_round_trip(self):
        x = interval(1)
        for image in (DigitalImage.from_points(CUBE_CORNERS, 26), product(x, x)):
            self.assertEqual(parse_image(dump_image(image)), image)

    def test_line_numbers(self):
        with self.assertRaisesMessage(FormatError, 'img:3: point (1, 2) does not have 3 coordinates'):
            parse_image('dim 3 adjacency 6\n0 0 0\n1 2\n', source='img')
        with self.assertRaisesMessage(FormatError, 'img:1:'):
            parse_image('dim 2 adjacency 6\n0 0\n', source='img')
        with self.assertRaisesMessage(FormatError, 'img:3: point (0, 0) listed twice'):
            parse_image('dim 2 adjacency 4\n0 0\n0 0\n', source='img')
        with self.assertRaisesMessage(FormatError, 'img:3:'):
            parse_image('dim 1 adjacency product\n0\nedge 0 -- 4\n', source='img')

    def test_permuted_axes(self):
        image = DigitalImage.from_points([(0, 0, 1), (0, 1, 1)], 6)
        self.assertEqual(permute_axes(image, (2, 1, 0)).points, {(1, 0, 0), (1, 1, 0)})
