import random

from django.test import SimpleTestCase

from grid.images import DigitalImage, interval, permute_axes, translate

from .export import to_csv, to_obj
from .genus import (
    SurfaceError, _local_complement_parts, classify_neighbors, genus, is_closed_surface, polycube_surface,
)


CUBE_CORNERS = [(1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 0, 1), (0, 0, 1), (0, 1, 1), (0, 1, 0), (0, 0, 0)]


def slab(width, depth, holes):
    """Two cubes thick, with square 2×2 tunnels at the given (i, j) corners."""
    removed = {(i + a, j + b) for i, j in holes for a in (0, 1) for b in (0, 1)}
    return polycube_surface((i, j, k) for i in range(width) for j in range(depth) for k in range(2)
                            if (i, j) not in removed)


class ClassificationTest(SimpleTestCase):
    def test_cube_corners(self):
        classes = classify_neighbors(DigitalImage.from_points(CUBE_CORNERS, 6))
        self.assertEqual(classes[3], 8)
        self.assertEqual(classes[4] + classes[5] + classes[6], 0)
        self.assertEqual(classes.table(), ['M3 = 8', 'M4 = 0', 'M5 = 0', 'M6 = 0'])

    def test_interval_leftover(self):
        classes = classify_neighbors(interval(2))
        self.assertEqual(classes.leftover, {(0,), (1,), (2,)})
        self.assertEqual(classes.total, 3)

    def test_annulus_counts(self):
        classes = classify_neighbors(slab(6, 6, [(2, 2)]))
        self.assertEqual((classes[3], classes[4], classes[5], classes[6]), (8, 112, 8, 0))
        self.assertEqual(classes.total, 128)

    def test_two_tunnel_counts(self):
        classes = classify_neighbors(slab(10, 6, [(2, 2), (6, 2)]))
        self.assertEqual((classes[3], classes[4], classes[5], classes[6]), (8, 174, 16, 0))
        self.assertEqual(classes.total, 198)

    def test_totals(self):
        rng = random.Random(20)
        for _ in range(50):
            points = {tuple(rng.randint(0, 3) for _ in range(3)) for _ in range(rng.randint(1, 30))}
            image = DigitalImage.from_points(points, rng.choice([6, 18, 26]))
            self.assertEqual(classify_neighbors(image).total, len(image))


class GenusTest(SimpleTestCase):
    def test_fixtures(self):
        cube = DigitalImage.from_points(CUBE_CORNERS, 6)
        self.assertEqual(genus(cube), 0)
        self.assertEqual(genus(slab(6, 6, [(2, 2)])), 1)
        self.assertEqual(genus(slab(10, 6, [(2, 2), (6, 2)])), 2)

    def test_single_cube_polycube(self):
        self.assertEqual(polycube_surface([(0, 0, 0)]).points, set(CUBE_CORNERS))

    def test_closed_surfaces(self):
        self.assertTrue(is_closed_surface(DigitalImage.from_points(CUBE_CORNERS, 6)))
        self.assertTrue(is_closed_surface(slab(6, 6, [(2, 2)])))
        self.assertTrue(is_closed_surface(slab(10, 6, [(2, 2), (6, 2)])))
        block = polycube_surface((x, y, z) for x in range(2) for y in range(2) for z in range(2))
        self.assertEqual(len(block), 26)
        self.assertTrue(is_closed_surface(block))
        self.assertEqual(genus(block), 0)

    def test_not_surfaces(self):
        solid = [(x, y, z) for x in range(3) for y in range(3) for z in range(3)]
        self.assertFalse(is_closed_surface(DigitalImage.from_points(solid, 6)))
        self.assertFalse(is_closed_surface(DigitalImage.from_points(solid, 26)))
        cube = set(CUBE_CORNERS)
        self.assertFalse(is_closed_surface(DigitalImage.from_points(cube - {(0, 0, 0)}, 6)))
        far = cube | {(5, 5, 5)}
        self.assertFalse(is_closed_surface(DigitalImage.from_points(far, 6)))
        with self.assertRaises(SurfaceError):
            genus(DigitalImage.from_points(solid, 6))

    def test_complement_parts_must_reach_the_point(self):
        centre = (0, 0, 0)
        block = {(x, y, z) for x in (-1, 0, 1) for y in (-1, 0, 1) for z in (-1, 0, 1)}
        below_and_corner = block - {(0, 0, -1), (1, 1, 1)}
        self.assertEqual(_local_complement_parts(centre, below_and_corner, 1), (2, 1))
        self.assertEqual(_local_complement_parts(centre, below_and_corner, 3), (2, 2))
        below_and_above = block - {(0, 0, -1), (0, 0, 1)}
        self.assertEqual(_local_complement_parts(centre, below_and_above, 1), (2, 2))

    def test_dimension(self):
        with self.assertRaises(SurfaceError):
            is_closed_surface(DigitalImage.from_points([(0, 0), (0, 1)], 4))

    def test_invariance(self):
        rng = random.Random(21)
        surface = slab(6, 6, [(2, 2)])
        for _ in range(10):
            order = [0, 1, 2]
            rng.shuffle(order)
            moved = translate(permute_axes(surface, order), [rng.randint(-9, 9) for _ in range(3)])
            self.assertEqual(genus(moved), 1)
            classes = classify_neighbors(moved)
            self.assertEqual(8 * (genus(moved) - 1), classes.numerator)


class ExportTest(SimpleTestCase):
    def test_single_voxel(self):
        obj = to_obj(DigitalImage.from_points([(0, 0, 0)], 6))
        lines = obj.splitlines()
        self.assertEqual(len([l for l in lines if l.startswith('v ')]), 8)
        self.assertEqual(len([l for l in lines if l.startswith('f ')]), 6)
        self.assertIn('v -0.5 -0.5 -0.5', lines)

    def test_shared_vertices(self):
        obj = to_obj(DigitalImage.from_points([(0, 0, 0), (1, 0, 0)], 6))
        lines = obj.splitlines()
        self.assertEqual(len([l for l in lines if l.startswith('v ')]), 12)
        self.assertEqual(len([l for l in lines if l.startswith('f ')]), 12)

    def test_csv(self):
        image = DigitalImage.from_points([(1, 0), (0, 0)], 4, labels={(0, 0): 'a1'})
        self.assertEqual(to_csv(image), 'x0,x1,label\n0,0,a1\n1,0,\n')
