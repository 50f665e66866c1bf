"""
Digital images: finite sets of lattice points with an adjacency relation.

Two kinds of adjacency are supported. ``AdjacencyKind`` is the c_k relation on
Z^m (at most k coordinates differ, each by exactly one); ``ExplicitAdjacency``
is an arbitrary edge list, which is what cartesian products carry since the
product relation is not in general a c_k relation on the ambient grid.
"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

import networkx as nx

from helpers.conf import topology_setting


logger = logging.getLogger(__name__)


class ImageError(ValueError):
    pass

class DimensionMismatch(ImageError):
    pass

class PointNotInImage(ImageError):
    pass

class MalformedMap(ImageError):
    pass

class WedgeError(ImageError):
    pass


def neighbourhood_size(dimension, k):
    """Number of c_k-neighbours of a lattice point in Z^dimension (2, 4, 8, 6, 18, 26, ...)."""
    return sum(comb(dimension, i) * 2**i for i in range(1, k + 1))


@dataclass(frozen=True)
class AdjacencyKind:
    k: int
    dimension: int

    explicit = False

    def __post_init__(self):
        if not 1 <= self.dimension <= topology_setting('MAX_GRID_DIMENSION'):
            raise ImageError('grid dimension {} is not supported'.format(self.dimension))
        if not 1 <= self.k <= self.dimension:
            raise ImageError('c_{} adjacency needs 1 <= k <= {}'.format(self.k, self.dimension))

    @property
    def name(self):
        return neighbourhood_size(self.dimension, self.k)

    def __str__(self):
        return str(self.name)

    @classmethod
    def from_name(cls, name, dimension):
        """Resolve the usual alias (4, 8, 6, 18, 26, ...) in the given dimension."""
        name = int(name)
        for k in range(1, dimension + 1):
            if neighbourhood_size(dimension, k) == name:
                return cls(k, dimension)
        raise ImageError('{}-adjacency does not exist in Z^{}'.format(name, dimension))

    @cached_property
    def offsets(self):
        steps = []
        for delta in itertools.product((-1, 0, 1), repeat=self.dimension):
            moved = sum(1 for d in delta if d)
            if 1 <= moved <= self.k:
                steps.append(delta)
        return tuple(steps)

    def adjacent(self, p, q):
        if p == q:
            return False
        moved = 0
        for a, b in zip(p, q):
            d = abs(a - b)
            if d > 1:
                return False
            moved += d
        return moved <= self.k


@dataclass(frozen=True)
class ExplicitAdjacency:
    """An adjacency relation given by its (unordered) edges."""
    edges: frozenset

    explicit = True
    name = 'product'

    def __str__(self):
        return self.name

    @classmethod
    def from_pairs(cls, pairs):
        return cls(frozenset(frozenset((tuple(p), tuple(q))) for p, q in pairs if tuple(p) != tuple(q)))

    def adjacent(self, p, q):
        return p != q and frozenset((p, q)) in self.edges


def adjacent(p, q, kind):
    """Adjacency of two distinct points of the same dimension."""
    p, q = tuple(p), tuple(q)
    if len(p) != len(q):
        raise DimensionMismatch('points {} and {} have different dimensions'.format(p, q))
    if not kind.explicit and len(p) != kind.dimension:
        raise DimensionMismatch('{}-adjacency is defined on Z^{}, not Z^{}'.format(kind, kind.dimension, len(p)))
    if p == q:
        raise ImageError('adjacency is irreflexive; {} was given twice'.format(p))
    return kind.adjacent(p, q)


@dataclass(frozen=True)
class DigitalImage:
    points: frozenset
    adjacency: object
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        points = frozenset(tuple(int(c) for c in p) for p in self.points)
        object.__setattr__(self, 'points', points)
        if not points:
            raise ImageError('a digital image needs at least one point')

        dimensions = {len(p) for p in points}
        if len(dimensions) != 1:
            raise DimensionMismatch('points of mixed dimensions {}'.format(sorted(dimensions)))

        if self.adjacency.explicit:
            for edge in self.adjacency.edges:
                if not edge <= points:
                    raise ImageError('edge {} leaves the image'.format(sorted(edge)))
        elif self.adjacency.dimension != self.dimension:
            raise DimensionMismatch('{}-adjacency is defined on Z^{}, the points live in Z^{}'.format(
                self.adjacency, self.adjacency.dimension, self.dimension))

    @classmethod
    def from_points(cls, points, adjacency, labels=None):
        """
        Build an image; ``adjacency`` may be an alias such as 4 or 26, resolved
        in the dimension of the points.
        """
        points = [tuple(p) for p in points]
        if isinstance(adjacency, (int, str)):
            if not points:
                raise ImageError('a digital image needs at least one point')
            adjacency = AdjacencyKind.from_name(adjacency, len(points[0]))
        return cls(frozenset(points), adjacency, tuple(sorted((labels or {}).items())))

    @property
    def dimension(self):
        return len(next(iter(self.points)))

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return tuple(point) in self.points

    def __iter__(self):
        return iter(self.sorted_points)

    def __str__(self):
        return '<{} points in Z^{}, {}-adjacency>'.format(len(self), self.dimension, self.adjacency)

    @cached_property
    def sorted_points(self):
        return tuple(sorted(self.points))

    @cached_property
    def label_map(self):
        return dict(self.labels)

    def label(self, point):
        return self.label_map.get(tuple(point))

    @cached_property
    def graph(self):
        """The adjacency graph, one node per point."""
        g = nx.Graph()
        g.add_nodes_from(self.sorted_points)
        if self.adjacency.explicit:
            g.add_edges_from(tuple(edge) for edge in self.adjacency.edges)
        else:
            for p in self.sorted_points:
                for step in self.adjacency.offsets:
                    q = tuple(a + d for a, d in zip(p, step))
                    if q in self.points:
                        g.add_edge(p, q)
        return g

    def adjacent(self, p, q):
        return self.adjacency.adjacent(tuple(p), tuple(q))

    def near(self, p, q):
        """Equal or adjacent; the relation continuity asks of images of adjacent points."""
        return p == q or self.adjacent(p, q)

    def neighbors(self, point):
        point = tuple(point)
        if point not in self.points:
            raise PointNotInImage('{} is not a point of the image'.format(point))
        return frozenset(self.graph[point])

    def closed_neighbors(self, point):
        return self.neighbors(point) | {tuple(point)}

    def subimage(self, points):
        """The image induced on a subset of the points, keeping this adjacency."""
        points = frozenset(tuple(p) for p in points)
        missing = points - self.points
        if missing:
            raise PointNotInImage('{} is not a point of the image'.format(min(missing)))

        adjacency = self.adjacency
        if adjacency.explicit:
            adjacency = ExplicitAdjacency(frozenset(e for e in adjacency.edges if e <= points))
        labels = tuple((p, l) for p, l in self.labels if p in points)
        return DigitalImage(points, adjacency, labels)


def neighbors(image, point):
    return image.neighbors(point)


def components(image):
    """Maximal connected subsets, ordered by their smallest point."""
    parts = [frozenset(c) for c in nx.connected_components(image.graph)]
    return sorted(parts, key=min)


def is_connected(image):
    return nx.is_connected(image.graph)


def diameter(image):
    """Largest graph distance between two points of a common component."""
    return max(nx.diameter(image.graph.subgraph(part)) for part in components(image))


def is_simple_closed_curve(image):
    if len(image) < 4 or not is_connected(image):
        return False
    return all(image.graph.degree(p) == 2 for p in image.points)


def interval(n, start=0):
    """[start, start+n]_Z with 2-adjacency."""
    return DigitalImage.from_points([(start + i,) for i in range(n + 1)], 2)


def translate(image, offset):
    shifted = {p: tuple(a + b for a, b in zip(p, offset)) for p in image.points}
    return _relabel(image, shifted)


def permute_axes(image, order):
    moved = {p: tuple(p[i] for i in order) for p in image.points}
    return _relabel(image, moved)


def _relabel(image, moved):
    adjacency = image.adjacency
    if adjacency.explicit:
        adjacency = ExplicitAdjacency(frozenset(frozenset(moved[p] for p in e) for e in adjacency.edges))
    labels = tuple(sorted((moved[p], l) for p, l in image.labels))
    return DigitalImage(frozenset(moved.values()), adjacency, labels)


@dataclass(frozen=True)
class DigitalMap:
    """A total map between the point sets of two images, stored as a table."""
    domain: DigitalImage
    codomain: DigitalImage
    table: tuple

    def __post_init__(self):
        table = self.table
        if hasattr(table, 'items'):
            table = table.items()
        table = tuple(sorted((tuple(p), tuple(q)) for p, q in table))
        object.__setattr__(self, 'table', table)

        keys = [p for p, _ in table]
        if len(set(keys)) != len(keys):
            raise MalformedMap('a point is mapped twice')
        if set(keys) != self.domain.points:
            missing = self.domain.points - set(keys)
            if missing:
                raise MalformedMap('no value for {}'.format(min(missing)))
            raise MalformedMap('{} is not in the domain'.format(min(set(keys) - self.domain.points)))
        for p, q in table:
            if q not in self.codomain.points:
                raise MalformedMap('{} -> {} leaves the codomain'.format(p, q))

    @classmethod
    def from_function(cls, domain, codomain, fn):
        return cls(domain, codomain, tuple((p, tuple(fn(p))) for p in domain.sorted_points))

    @classmethod
    def identity(cls, image):
        return cls(image, image, tuple((p, p) for p in image.sorted_points))

    @classmethod
    def constant(cls, domain, codomain, value):
        return cls(domain, codomain, tuple((p, tuple(value)) for p in domain.sorted_points))

    @cached_property
    def lookup(self):
        return dict(self.table)

    def __call__(self, point):
        return self.lookup[tuple(point)]

    def values(self):
        return [q for _, q in self.table]

    def image_points(self):
        return frozenset(self.values())

    def then(self, other):
        """``other`` after ``self``."""
        return DigitalMap(self.domain, other.codomain, tuple((p, other(q)) for p, q in self.table))

    def is_constant(self):
        return len(self.image_points()) == 1


def discontinuity(f):
    """First adjacent domain pair whose images are neither equal nor adjacent, or None."""
    for p, q in sorted(tuple(sorted(e)) for e in f.domain.graph.edges):
        if not f.codomain.near(f(p), f(q)):
            return p, q
    return None


def is_continuous(f):
    return discontinuity(f) is None


def inverse(f):
    if len(f.image_points()) != len(f.domain) or len(f.codomain) != len(f.domain):
        raise MalformedMap('map is not bijective')
    return DigitalMap(f.codomain, f.domain, tuple((q, p) for p, q in f.table))


def is_isomorphism(f):
    try:
        g = inverse(f)
    except MalformedMap:
        return False
    return is_continuous(f) and is_continuous(g)


def product(x, y):
    """
    Cartesian product with the product adjacency: distinct pairs whose
    coordinates are componentwise equal or adjacent. Points are concatenated
    coordinate tuples.
    """
    edges = set()
    for p in x.sorted_points:
        for q in y.sorted_points:
            here = p + q
            for p2 in x.closed_neighbors(p):
                for q2 in y.closed_neighbors(q):
                    there = p2 + q2
                    if there != here:
                        edges.add(frozenset((here, there)))

    points = frozenset(p + q for p in x.points for q in y.points)
    return DigitalImage(points, ExplicitAdjacency(frozenset(edges)))


def power(image, n):
    """image^n with the product adjacency."""
    if n < 1:
        raise ImageError('power needs n >= 1')
    result = image
    for _ in range(n - 1):
        result = product(result, image)
    return result


def wedge(x, y, x0):
    """
    Union of two images meeting in exactly ``x0`` with no adjacency across the
    two sides apart from through ``x0``.
    """
    x0 = tuple(x0)
    if x.adjacency.explicit != y.adjacency.explicit or (not x.adjacency.explicit and x.adjacency != y.adjacency):
        raise WedgeError('images carry different adjacencies ({} and {})'.format(x.adjacency, y.adjacency))

    common = x.points & y.points
    if common != {x0}:
        raise WedgeError('images must share exactly the wedge point {}, they share {}'.format(
            x0, sorted(common)))

    if x.adjacency.explicit:
        adjacency = ExplicitAdjacency(x.adjacency.edges | y.adjacency.edges)
    else:
        adjacency = x.adjacency

    for p in sorted(x.points - {x0}):
        for q in sorted(y.points - {x0}):
            if x.adjacency.explicit:
                linked = frozenset((p, q)) in adjacency.edges
            else:
                linked = adjacency.adjacent(p, q)
            if linked:
                raise WedgeError('{} and {} are adjacent across the wedge'.format(p, q))

    labels = tuple(sorted(dict(x.labels + y.labels).items()))
    logger.debug('wedge of %d and %d points at %s', len(x), len(y), x0)
    return DigitalImage(x.points | y.points, adjacency, labels)
