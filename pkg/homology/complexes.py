"""
Clique complexes of digital images.

A q-simplex is a set of q+1 mutually adjacent points, stored as a tuple sorted
by the complex's vertex order.
"""
import logging

import networkx as nx
import numpy as np

from .smith import integer_matrix


logger = logging.getLogger(__name__)


class ComplexError(ValueError):
    pass


class VertexOrder:
    """A strict total order on the points of an image; lexicographic unless given."""

    def __init__(self, points, sequence=None):
        points = frozenset(tuple(p) for p in points)
        if sequence is None:
            sequence = sorted(points)
        sequence = tuple(tuple(p) for p in sequence)
        if len(set(sequence)) != len(sequence) or set(sequence) != points:
            raise ComplexError('vertex order must list every point of the image exactly once')
        self.sequence = sequence
        self.position = {p: i for i, p in enumerate(sequence)}

    def __eq__(self, other):
        return isinstance(other, VertexOrder) and self.sequence == other.sequence

    def __hash__(self):
        return hash(self.sequence)

    def sort(self, vertices):
        return tuple(sorted(vertices, key=self.position.__getitem__))

    def key(self, simplex):
        return tuple(self.position[v] for v in simplex)


class ChainComplex:
    def __init__(self, image, order, max_dim, bases):
        self.image = image
        self.order = order
        self.max_dim = max_dim
        self.bases = tuple(tuple(b) for b in bases)
        self._index = [{s: i for i, s in enumerate(b)} for b in self.bases]
        self._boundaries = {}

    def __repr__(self):
        return '<ChainComplex {}>'.format(' '.join(str(n) for n in self.sizes()))

    def sizes(self):
        return [len(b) for b in self.bases]

    def size(self, q):
        if 0 <= q <= self.max_dim:
            return len(self.bases[q])
        return 0

    def simplices(self, q):
        if 0 <= q <= self.max_dim:
            return self.bases[q]
        return ()

    def index(self, simplex):
        q = len(simplex) - 1
        if not 0 <= q <= self.max_dim:
            return None
        return self._index[q].get(tuple(simplex))

    @property
    def top(self):
        """Highest dimension with a simplex."""
        return max(q for q in range(self.max_dim + 1) if self.bases[q])

    def boundary(self, q):
        """∂_q as a (|C_{q-1}| × |C_q|) integer matrix; ∂_0 has no rows."""
        if not 0 <= q <= self.max_dim:
            raise ComplexError('boundary degree {} outside 0..{}'.format(q, self.max_dim))
        return self.boundary_or_zero(q)

    def boundary_or_zero(self, q):
        """Like boundary() but zero (with the right shape) outside the built range."""
        if q not in self._boundaries:
            matrix = np.zeros((self.size(q - 1), self.size(q)), dtype=object)
            if q >= 1:
                for j, simplex in enumerate(self.simplices(q)):
                    for i in range(len(simplex)):
                        face = simplex[:i] + simplex[i + 1:]
                        matrix[self._index[q - 1][face], j] += (-1) ** i
            self._boundaries[q] = matrix
        return self._boundaries[q].copy()

    def coboundary(self, q):
        """δ^q : C^q → C^{q+1}, the transpose of ∂_{q+1}."""
        return self.boundary_or_zero(q + 1).T.copy()


def build_clique_complex(image, max_dim=None, order=None):
    if max_dim is None:
        max_dim = image.dimension + 1
    if max_dim < 0:
        raise ComplexError('max_dim must be non-negative')

    if order is None:
        order = VertexOrder(image.points)
    elif not isinstance(order, VertexOrder):
        order = VertexOrder(image.points, order)
    elif set(order.sequence) != image.points:
        raise ComplexError('vertex order does not match the image')

    bases = [[] for _ in range(max_dim + 1)]
    for clique in nx.enumerate_all_cliques(image.graph):
        if len(clique) > max_dim + 1:
            break
        bases[len(clique) - 1].append(order.sort(clique))
    for basis in bases:
        basis.sort(key=order.key)

    complex_ = ChainComplex(image, order, max_dim, bases)
    logger.debug('clique complex of %s: %r', image, complex_)
    return complex_


def boundary(K, q):
    return K.boundary(q)


def dump_matrix(matrix):
    """Row-major plain text, one row per line."""
    matrix = integer_matrix(matrix)
    return '\n'.join(' '.join(str(v) for v in row) for row in matrix) + '\n' if len(matrix) else ''
