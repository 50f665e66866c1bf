"""
Homology and cohomology of clique complexes, induced maps and cup products.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from grid.images import discontinuity
from helpers.conf import topology_setting

from .complexes import build_clique_complex
from .linalg import INTEGERS, RATIONALS, Coefficients, CoefficientError, hstack, kernel_basis, rank, torsion


logger = logging.getLogger(__name__)


class NotSimplicial(ValueError):
    pass


@dataclass(frozen=True)
class HomologyResult:
    """Per-degree rank and torsion; ``upper`` selects cohomology notation."""
    ranks: tuple
    torsion: tuple
    coefficients: Coefficients = INTEGERS
    upper: bool = False
    cycle_ranks: tuple = field(default=(), compare=False)
    boundary_ranks: tuple = field(default=(), compare=False)

    def betti(self, q):
        return self.ranks[q] if 0 <= q < len(self.ranks) else 0

    def torsion_of(self, q):
        return self.torsion[q] if 0 <= q < len(self.torsion) else ()

    def is_trivial(self, q):
        return self.betti(q) == 0 and not self.torsion_of(q)

    def group(self, q):
        ring = str(self.coefficients)
        parts = []
        b = self.betti(q)
        if b:
            parts.append(ring if b == 1 else '{}^{}'.format(ring, b))
        parts.extend('Z/{}'.format(t) for t in self.torsion_of(q))
        return ' + '.join(parts) or '0'

    def lines(self):
        mark = '^' if self.upper else '_'
        return ['H{}{} = {}'.format(mark, q, self.group(q)) for q in range(len(self.ranks))]

    def __str__(self):
        return '\n'.join(self.lines())


def _boundary_ranks(K, coefficients):
    # r[q] = rank ∂_q for q = 0..max_dim+1
    return [rank(K.boundary_or_zero(q), coefficients) for q in range(K.max_dim + 2)]


def homology(K, coefficients=INTEGERS):
    coefficients = Coefficients.parse(coefficients)
    r = _boundary_ranks(K, coefficients)
    ranks, tors, cycles = [], [], []
    for q in range(K.max_dim + 1):
        cycles.append(K.size(q) - r[q])
        ranks.append(K.size(q) - r[q] - r[q + 1])
        tors.append(tuple(torsion(K.boundary_or_zero(q + 1))) if not coefficients.is_field else ())
    return HomologyResult(tuple(ranks), tuple(tors), coefficients, False, tuple(cycles), tuple(r[1:]))


def cohomology(K, coefficients=INTEGERS):
    """
    H^q = ker δ^q / im δ^{q-1}. ``cycle_ranks`` holds rank Z^q and
    ``boundary_ranks`` rank B^q.
    """
    coefficients = Coefficients.parse(coefficients)
    deltas = [rank(K.coboundary(q), coefficients) for q in range(-1, K.max_dim + 1)]
    ranks, tors, cocycles, coboundaries = [], [], [], []
    for q in range(K.max_dim + 1):
        into, out = deltas[q], deltas[q + 1]
        cocycles.append(K.size(q) - out)
        coboundaries.append(into)
        ranks.append(K.size(q) - out - into)
        tors.append(tuple(torsion(K.coboundary(q - 1))) if not coefficients.is_field else ())
    return HomologyResult(tuple(ranks), tuple(tors), coefficients, True, tuple(cocycles), tuple(coboundaries))


def betti(image, q, coefficients=RATIONALS):
    if q < 0:
        return 0
    K = build_clique_complex(image, max_dim=q + 1)
    return homology(K, coefficients).betti(q)


def euler_characteristic(K):
    return sum((-1) ** q * n for q, n in enumerate(K.sizes()))


def _permutation_sign(sequence):
    sign = 1
    seq = list(sequence)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def chain_map(f, K_dom, K_cod, q):
    """f_# : C_q(domain) → C_q(codomain), degenerate images going to zero."""
    matrix = np.zeros((K_cod.size(q), K_dom.size(q)), dtype=object)
    for j, simplex in enumerate(K_dom.simplices(q)):
        image = [f(v) for v in simplex]
        if len(set(image)) < len(image):
            continue
        target = K_cod.order.sort(image)
        i = K_cod.index(target)
        if i is None:
            raise NotSimplicial('{} maps to {}, which is not a simplex of the codomain complex'.format(
                simplex, tuple(image)))
        matrix[i, j] = _permutation_sign([K_cod.order.position[v] for v in image])
    return matrix


def induced_cochain_map(f, K_dom, K_cod, degrees=None):
    """
    Cochain maps f^# = (f_#)^T : C^q(codomain) → C^q(domain), keyed by degree.
    """
    if K_dom.image != f.domain or K_cod.image != f.codomain:
        raise NotSimplicial('complexes were not built over the map\'s domain and codomain')
    broken = discontinuity(f)
    if broken:
        raise NotSimplicial('map is not continuous: {} and {} are adjacent, their images are not'.format(*broken))
    if degrees is None:
        degrees = range(min(K_dom.max_dim, K_cod.max_dim) + 1)
    return {q: chain_map(f, K_dom, K_cod, q).T.copy() for q in degrees}


@dataclass(frozen=True)
class InducedMap:
    degree: int
    source_rank: int
    target_rank: int
    rank: int
    continuity_checked: bool = True

    @property
    def kernel_rank(self):
        return self.source_rank - self.rank


def induced_cohomology_map(f, K_dom, K_cod, q, coefficients=RATIONALS, allow_discontinuous=False):
    """
    f^* : H^q(codomain) → H^q(domain) over a field. f must be continuous and
    NotSimplicial is raised otherwise. With ``allow_discontinuous`` a zero
    group on either side yields the zero map without that check, and the
    result carries ``continuity_checked=False``; a nonzero map still needs
    a continuous f.
    """
    if K_dom.image != f.domain or K_cod.image != f.codomain:
        raise NotSimplicial('complexes were not built over the map\'s domain and codomain')
    checked = not allow_discontinuous
    if checked:
        broken = discontinuity(f)
        if broken:
            raise NotSimplicial('map is not continuous: {} and {} are adjacent, their images are not'.format(*broken))
    coefficients = Coefficients.parse(coefficients)
    if not coefficients.is_field:
        coefficients = RATIONALS
    source = cohomology(K_cod, coefficients).betti(q)
    target = cohomology(K_dom, coefficients).betti(q)
    if target == 0 or source == 0:
        return InducedMap(q, source, target, 0, continuity_checked=checked)

    F = induced_cochain_map(f, K_dom, K_cod, degrees=[q])[q]
    cocycles = kernel_basis(K_cod.coboundary(q))
    coboundaries = K_dom.coboundary(q - 1)
    n = K_dom.size(q)
    moved = hstack(F.dot(cocycles) if cocycles.shape[1] else np.zeros((n, 0), dtype=object),
                   coboundaries, rows=n)
    image_rank = rank(moved, coefficients) - rank(coboundaries, coefficients)
    return InducedMap(q, source, target, image_rank)


class Cochain:
    def __init__(self, K, degree, values, coefficients=RATIONALS):
        self.K = K
        self.degree = degree
        self.coefficients = Coefficients.parse(coefficients)
        values = [int(v) for v in values]
        if len(values) != K.size(degree):
            raise ValueError('{}-cochain needs {} values, got {}'.format(degree, K.size(degree), len(values)))
        if self.coefficients.prime:
            values = [v % self.coefficients.prime for v in values]
        self.values = tuple(values)

    @classmethod
    def zero(cls, K, degree, coefficients=RATIONALS):
        return cls(K, degree, [0] * K.size(degree), coefficients)

    @classmethod
    def unit(cls, K, coefficients=RATIONALS):
        return cls(K, 0, [1] * K.size(0), coefficients)

    @classmethod
    def from_dict(cls, K, degree, values, coefficients=RATIONALS):
        """Cochain from {simplex: value}; simplices in any vertex order."""
        out = [0] * K.size(degree)
        for simplex, value in values.items():
            i = K.index(K.order.sort(simplex))
            if i is None:
                raise ValueError('{} is not a {}-simplex of the complex'.format(simplex, degree))
            out[i] += value
        return cls(K, degree, out, coefficients)

    def __call__(self, simplex):
        i = self.K.index(simplex)
        return 0 if i is None else self.values[i]

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.K is other.K and self.degree == other.degree
                and self.values == other.values)

    def __hash__(self):
        return hash((self.degree, self.values))

    def __repr__(self):
        return '<{}-cochain {}>'.format(self.degree, list(self.values))

    def _same(self, other):
        if self.K is not other.K or self.degree != other.degree:
            raise ValueError('cochains live on different complexes or degrees')

    def __add__(self, other):
        self._same(other)
        return Cochain(self.K, self.degree, [a + b for a, b in zip(self.values, other.values)], self.coefficients)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor):
        return Cochain(self.K, self.degree, [factor * v for v in self.values], self.coefficients)

    def is_zero(self):
        return not any(self.values)

    def column(self):
        return np.array([[v] for v in self.values], dtype=object).reshape(len(self.values), 1)


def coboundary(phi):
    values = phi.K.coboundary(phi.degree).dot(np.array(phi.values, dtype=object)) if phi.values else \
        [0] * phi.K.size(phi.degree + 1)
    return Cochain(phi.K, phi.degree + 1, list(values), phi.coefficients)


def is_cocycle(phi):
    return coboundary(phi).is_zero()


def is_coboundary(phi):
    """Whether phi lies in B^q, i.e. represents the zero class when it is a cocycle."""
    if phi.is_zero():
        return True
    B = phi.K.coboundary(phi.degree - 1)
    return rank(hstack(B, phi.column(), rows=len(phi.values)), phi.coefficients) == rank(B, phi.coefficients)


def cup(phi, psi):
    """
    Front face of phi times back face of psi on each ordered simplex. Above the
    complex's top dimension the product is the zero cochain of that degree.
    """
    if phi.K is not psi.K:
        raise ValueError('cochains live on different complexes')
    if phi.coefficients != psi.coefficients:
        raise CoefficientError('cochains have different coefficients')
    K = phi.K
    p, q = phi.degree, psi.degree
    values = []
    for simplex in K.simplices(p + q):
        values.append(phi(simplex[:p + 1]) * psi(simplex[p:]))
    return Cochain(K, p + q, values, phi.coefficients)


def cohomology_generators(K, q, coefficients=RATIONALS):
    """Cocycles whose classes form a basis of H^q over Q (or F_p for small examples)."""
    coefficients = Coefficients.parse(coefficients)
    if not coefficients.is_field:
        coefficients = RATIONALS
    n = K.size(q)
    if not n:
        return []
    B = K.coboundary(q - 1)
    cocycles = kernel_basis(K.coboundary(q))
    chosen = B
    base = rank(B, coefficients)
    generators = []
    for j in range(cocycles.shape[1]):
        candidate = hstack(chosen, cocycles[:, j:j + 1], rows=n)
        r = rank(candidate, coefficients)
        if r > base:
            chosen, base = candidate, r
            generators.append(Cochain(K, q, list(cocycles[:, j]), coefficients))
    return generators


@dataclass(frozen=True)
class CupLength:
    """A cup length; ``exact`` is False when the budget ran out first."""
    length: int
    exact: bool = True

    def __str__(self):
        return str(self.length) if self.exact else '>= {}'.format(self.length)


def nilpotency(K, classes=None, budget=None, coefficients=RATIONALS):
    """
    Largest k such that some k-fold cup product of positive-degree classes is
    nonzero in cohomology (0 when there are no such classes). Every product of
    classes is a combination of products of basis classes, so basis products
    decide each level. ``budget`` caps the number of products formed; once it
    is spent the length reached so far is only a lower bound.
    """
    budget = budget or topology_setting('SEARCH_BUDGET')
    if classes is None:
        classes = [c for q in range(1, K.max_dim + 1) for c in cohomology_generators(K, q, coefficients)]
    classes = [c for c in classes if c.degree >= 1 and is_cocycle(c) and not is_coboundary(c)]
    if not classes:
        return CupLength(0)

    length = 1
    level = [(i,) for i in range(len(classes))]
    products = {(i,): c for i, c in enumerate(classes)}
    spent = 0
    while True:
        survivors = []
        for combo in level:
            for i in range(combo[-1], len(classes)):
                spent += 1
                if spent > budget:
                    logger.info('cup length search stopped at length %d after %d products', length, budget)
                    return CupLength(length, exact=False)
                product = cup(products[combo], classes[i])
                if product.degree > K.max_dim or product.is_zero() or is_coboundary(product):
                    continue
                key = combo + (i,)
                products[key] = product
                survivors.append(key)
        if not survivors:
            return CupLength(length)
        length += 1
        level = survivors
