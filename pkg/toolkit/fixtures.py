"""
Named built-in images, referenced on the command line as ``@name``.

Each fixture declares the properties it is known to have; they are checked
every time the fixture is built, so a broken fixture fails loudly instead of
feeding a wrong image into a computation.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache

from grid.formats import load_image
from grid.images import DigitalImage, ImageError, interval, is_connected, is_simple_closed_curve, power, wedge
from homology.cohomology import betti
from surfaces.genus import is_closed_surface, polycube_surface


logger = logging.getLogger(__name__)


class FixtureError(ImageError):
    pass


CUBE_CORNERS = {
    (1, 0, 0): 'p0', (1, 1, 0): 'p1', (1, 1, 1): 'p2', (1, 0, 1): 'p3',
    (0, 0, 1): 'p4', (0, 1, 1): 'p5', (0, 1, 0): 'p6', (0, 0, 0): 'p7',
}
# vertex order used for the hand computation of its cochain groups
PROOF_ORDER = ('p7', 'p4', 'p6', 'p5', 'p0', 'p3', 'p1', 'p2')

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
HEXAGON = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)]

# two 8-cycles of 4-adjacent points sharing (2, 2)
THETA = {
    (0, 0): 'a1', (1, 0): 'a2', (2, 0): 'a3', (2, 1): 'a4', (2, 2): 'a5', (2, 3): 'a6', (2, 4): 'a7',
    (3, 4): 'a8', (4, 4): 'a9', (4, 3): 'a10', (4, 2): 'a11', (3, 2): 'a12', (1, 2): 'a13', (0, 2): 'a14',
    (0, 1): 'a15',
}
# the two arcs from a1 to a9
ALPHA = ('a1', 'a15', 'a14', 'a13', 'a5', 'a6', 'a7', 'a8', 'a9')
BETA = ('a1', 'a2', 'a3', 'a4', 'a5', 'a12', 'a11', 'a10', 'a9')


def slab(width, depth, tunnels):
    """Boundary of a block two cubes thick, pierced by 2×2 tunnels at the given corners."""
    removed = {(i + a, j + b) for i, j in tunnels for a in (0, 1) for b in (0, 1)}
    return polycube_surface((i, j, k) for i in range(width) for j in range(depth) for k in range(2)
                            if (i, j) not in removed)


def labelled(image, prefix):
    return DigitalImage(image.points, image.adjacency, tuple(
        (p, '{}{}'.format(prefix, i)) for i, p in enumerate(image.sorted_points)))


def points_of(labels, names):
    by_name = {v: k for k, v in labels.items()}
    return [by_name[n] for n in names]


CONNECTED = ('connected', is_connected)
CURVE = ('a simple closed curve', is_simple_closed_curve)
SURFACE = ('a closed surface', is_closed_surface)


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    build: object
    checks: tuple = ()

    def load(self):
        image = self.build()
        for label, check in self.checks:
            if not check(image):
                raise FixtureError('fixture @{} is not {}'.format(self.name, label))
        logger.debug('built fixture @%s: %s', self.name, image)
        return image


REGISTRY = {}


def fixture(name, description, *checks, aliases=()):
    def register(build):
        entry = Fixture(name, description, build, checks)
        for key in (name,) + tuple(aliases):
            REGISTRY[key] = entry
        return build
    return register


@fixture('mss6', "MSS'_6: the eight corners of the unit cube", CONNECTED, SURFACE, aliases=('genus0',))
def cube_corners():
    return DigitalImage.from_points(CUBE_CORNERS, 6, CUBE_CORNERS)


@fixture('msc4', 'MSC_4: the unit square, 4-adjacency', CURVE)
def square():
    return DigitalImage.from_points(SQUARE, 4)


@fixture('msc4-8', 'MSC_4 under 8-adjacency (every pair adjacent)', CONNECTED,
         ('not a curve', lambda image: not is_simple_closed_curve(image)))
def full_square():
    return DigitalImage.from_points(SQUARE, 8)


@fixture('msc6', "MSC'_6: a six-point 6-curve on the unit cube", CURVE)
def hexagon():
    return DigitalImage.from_points(HEXAGON, 6, {p: 'b{}'.format(i) for i, p in enumerate(HEXAGON, start=1)})


@fixture('msc6-wedge', "MSC'_6 wedged with its point reflection at the origin", CONNECTED)
def hexagon_wedge():
    mirror = [tuple(-c for c in p) for p in HEXAGON]
    other = DigitalImage.from_points(mirror, 6, {p: 'c{}'.format(i) for i, p in enumerate(mirror, start=1)})
    return wedge(hexagon(), other, (0, 0, 0))


@fixture('theta', 'two 4-curves of eight points sharing one point', CONNECTED,
         ('of first Betti number 2', lambda image: betti(image, 1) == 2))
def theta():
    return DigitalImage.from_points(THETA, 4, THETA)


@fixture('genus1', 'boundary of a 6×6×2 block with one tunnel', CONNECTED, SURFACE)
def annulus():
    return labelled(slab(6, 6, [(2, 2)]), 's')


@fixture('genus2', 'boundary of a 10×6×2 block with two tunnels', CONNECTED, SURFACE)
def two_tunnels():
    return labelled(slab(10, 6, [(2, 2), (6, 2)]), 's')


@fixture('interval01-squared', '[0,1]_Z × [0,1]_Z with the product adjacency', CONNECTED)
def unit_square():
    return power(interval(1), 2)


INTERVAL = re.compile(r'^interval(\d+)$')


@lru_cache(maxsize=None)
def get_fixture(name):
    """The image registered as ``name``; ``interval<n>`` is [0,n]_Z."""
    match = INTERVAL.match(name)
    if match:
        return interval(int(match.group(1)))
    try:
        entry = REGISTRY[name]
    except KeyError:
        raise FixtureError('no fixture named @{} (known: {})'.format(name, ', '.join(sorted(REGISTRY))))
    return entry.load()


def resolve_image(ref):
    """``@name`` for a fixture, anything else is an image file."""
    if ref.startswith('@'):
        return get_fixture(ref[1:])
    return load_image(ref)


def alpha():
    return points_of(THETA, ALPHA)


def beta():
    return points_of(THETA, BETA)


def build_registry():
    return {name: get_fixture(name) for name in sorted(REGISTRY)}
