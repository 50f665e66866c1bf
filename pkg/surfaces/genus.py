"""
Closed digital surfaces in Z^3 and their genus from neighbour counts:

    g = 1 + (|M5| + 2|M6| - |M3|) / 8

where M_i holds the points with exactly i neighbours in the surface.
"""
import itertools
import logging
from dataclasses import dataclass

import numpy as np
from skimage import measure

from grid.images import AdjacencyKind, DigitalImage, is_connected


logger = logging.getLogger(__name__)

BUCKETS = (3, 4, 5, 6)


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceClassification:
    counts: tuple
    leftover: frozenset

    def __getitem__(self, i):
        return dict(self.counts).get(i, 0)

    @property
    def total(self):
        return sum(n for _, n in self.counts) + len(self.leftover)

    @property
    def numerator(self):
        return self[5] + 2 * self[6] - self[3]

    def table(self):
        rows = ['M{} = {}'.format(i, n) for i, n in self.counts]
        if self.leftover:
            rows.append('other = {}'.format(len(self.leftover)))
        return rows


def classify_neighbors(image):
    counts = dict.fromkeys(BUCKETS, 0)
    leftover = set()
    for p in image.sorted_points:
        n = len(image.neighbors(p))
        if n in counts:
            counts[n] += 1
        else:
            leftover.add(p)
    return SurfaceClassification(tuple(sorted(counts.items())), frozenset(leftover))


def _thickening(image):
    """
    The cells of X at half-unit resolution (doubled coordinates): its points,
    the midpoints of its unit edges and the centres of its unit squares.
    """
    cells = {tuple(2 * c for c in p) for p in image.points}
    for p in image.points:
        for axis in range(3):
            q = tuple(c + (i == axis) for i, c in enumerate(p))
            if q in image.points:
                cells.add(tuple(a + b for a, b in zip(p, q)))
        for a, b in itertools.combinations(range(3), 2):
            corners = [tuple(c + (i == a) * da + (i == b) * db for i, c in enumerate(p))
                       for da in (0, 1) for db in (0, 1)]
            if all(c in image.points for c in corners):
                cells.add(tuple(2 * c + (i == a) + (i == b) for i, c in enumerate(p)))
    return cells


def _local_complement_parts(centre, occupied, connectivity):
    """
    Components of the complement in the 3×3×3 block around centre, and how
    many of them reach a cell adjacent to the centre.
    """
    block = np.ones((3, 3, 3), dtype=bool)
    near = []
    for offset in itertools.product(range(3), repeat=3):
        point = tuple(c + o - 1 for c, o in zip(centre, offset))
        if point in occupied:
            block[offset] = False
        if 1 <= sum(abs(o - 1) for o in offset) <= connectivity:
            near.append(offset)
    labels, count = measure.label(block, connectivity=connectivity, return_num=True)
    attached = {labels[offset] for offset in near} - {0}
    return count, len(attached)


def is_closed_surface(image):
    """
    Connected, and around every point the complement in the 3×3×3 block falls
    into exactly two components, each reaching a cell adjacent to the point.
    6-surfaces are examined on their cellular thickening so that sheets
    without interior lattice points still separate.
    """
    if image.dimension != 3:
        raise SurfaceError('surfaces live in Z^3, not Z^{}'.format(image.dimension))
    if image.adjacency.explicit:
        raise SurfaceError('surfaces need a c_k adjacency')
    if not is_connected(image):
        return False

    if image.adjacency.k == 1:
        occupied = _thickening(image)
        centres = [tuple(2 * c for c in p) for p in image.sorted_points]
        connectivity = 3
    else:
        occupied = image.points
        centres = image.sorted_points
        connectivity = 1

    for centre in centres:
        parts, attached = _local_complement_parts(centre, occupied, connectivity)
        if parts != 2 or attached != parts:
            logger.debug('local complement at %s has %d components, %d next to it', centre, parts, attached)
            return False
    return True


def genus(image):
    if not is_closed_surface(image):
        raise SurfaceError('image is not a closed surface')
    classes = classify_neighbors(image)
    if classes.leftover:
        p = min(classes.leftover)
        raise SurfaceError('{} has {} neighbours; the formula needs 3 to 6'.format(p, len(image.neighbors(p))))
    if classes.numerator % 8:
        raise SurfaceError('|M5| + 2|M6| - |M3| = {} is not a multiple of 8'.format(classes.numerator))
    return 1 + classes.numerator // 8


def polycube_surface(cubes):
    """
    Vertex set of the boundary of a union of unit cubes (given by their
    minimal corners), with 6-adjacency.
    """
    cubes = {tuple(c) for c in cubes}
    if not cubes:
        raise SurfaceError('no cubes given')
    points = set()
    for cube in cubes:
        for axis in range(3):
            for side in (0, 1):
                across = tuple(c + (i == axis) * (2 * side - 1) for i, c in enumerate(cube))
                if across in cubes:
                    continue
                others = [i for i in range(3) if i != axis]
                for da in (0, 1):
                    for db in (0, 1):
                        corner = list(cube)
                        corner[axis] += side
                        corner[others[0]] += da
                        corner[others[1]] += db
                        points.add(tuple(corner))
    return DigitalImage(frozenset(points), AdjacencyKind(1, 3))
