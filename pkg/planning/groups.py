"""
Digital topological groups: a group law on an image whose multiplication
X×X → X and inversion X → X are both continuous. For such groups
TC_n(H) = cat(H^{n-1}), which turns a cat witness for the power into a TC_n
bound.
"""
import itertools
from dataclasses import dataclass

from grid.images import DigitalMap, discontinuity, interval, is_connected, power, product
from helpers.parsing import (
    FormatError, expect_header, format_point_token, logical_lines, parse_point_token, read_source,
)
from helpers.verdicts import Verdict

from .sections import CertifiedBound, verify_cat_witness
from .witnesses import WitnessError


class GroupAxiomError(ValueError):
    pass


class GroupTable:
    def __init__(self, image, multiplication, identity=None, inverse=None):
        self.image = image
        self.multiplication = {(tuple(a), tuple(b)): tuple(c) for (a, b), c in dict(multiplication).items()}
        self._identity = tuple(identity) if identity is not None else None
        self._inverse = {tuple(a): tuple(b) for a, b in dict(inverse).items()} if inverse else None

        points = image.sorted_points
        for a, b in itertools.product(points, repeat=2):
            c = self.multiplication.get((a, b))
            if c is None:
                raise GroupAxiomError('no product for {} * {}'.format(a, b))
            if c not in image:
                raise GroupAxiomError('{} * {} = {} leaves the image'.format(a, b, c))
        if len(self.multiplication) != len(points) ** 2:
            raise GroupAxiomError('table multiplies points outside the image')

    @classmethod
    def from_function(cls, image, op, identity=None):
        points = image.sorted_points
        return cls(image, {(a, b): tuple(op(a, b)) for a in points for b in points}, identity)

    def mul(self, a, b):
        return self.multiplication[(tuple(a), tuple(b))]

    @property
    def identity(self):
        if self._identity is None:
            points = self.image.sorted_points
            for e in points:
                if all(self.mul(e, x) == x == self.mul(x, e) for x in points):
                    self._identity = e
                    break
            else:
                raise GroupAxiomError('no identity element')
        return self._identity

    def inv(self, a):
        if self._inverse is None:
            e = self.identity
            inverse = {}
            for x in self.image.sorted_points:
                match = [y for y in self.image.sorted_points if self.mul(x, y) == e == self.mul(y, x)]
                if not match:
                    raise GroupAxiomError('{} has no inverse'.format(x))
                inverse[x] = match[0]
            self._inverse = inverse
        return self._inverse[tuple(a)]

    def check_axioms(self):
        points = self.image.sorted_points
        e = self.identity
        for x in points:
            if self.mul(e, x) != x or self.mul(x, e) != x:
                raise GroupAxiomError('{} is not an identity: {} * {} = {}'.format(e, e, x, self.mul(e, x)))
            y = self.inv(x)
            if y not in self.image or self.mul(x, y) != e or self.mul(y, x) != e:
                raise GroupAxiomError('{} is not an inverse of {}'.format(y, x))
        for a, b, c in itertools.product(points, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise GroupAxiomError('({0} * {1}) * {2} != {0} * ({1} * {2})'.format(a, b, c))

    def multiplication_map(self):
        square = product(self.image, self.image)
        m = self.image.dimension
        return DigitalMap.from_function(square, self.image, lambda u: self.mul(u[:m], u[m:]))

    def inversion_map(self):
        return DigitalMap.from_function(self.image, self.image, self.inv)


def cyclic_group(n, start=0):
    """[start, start+n-1]_Z with addition mod n (shifted so ``start`` is the identity)."""
    if n < 1:
        raise GroupAxiomError('cyclic group needs n >= 1')
    image = interval(n - 1, start)
    return GroupTable.from_function(image, lambda a, b: (start + (a[0] + b[0] - 2 * start) % n,))


def group_check(image, table):
    """
    Axioms first (GroupAxiomError on failure), then continuity of the two
    structure maps, reported as a Verdict.
    """
    if table.image != image:
        raise GroupAxiomError('table is defined on another image')
    table.check_axioms()

    broken = discontinuity(table.multiplication_map())
    if broken:
        u, v = broken
        return Verdict.failure('multiplication is not continuous: {} ~ {} but the products {} and {} are not',
                               u, v, table.mul(u[:image.dimension], u[image.dimension:]),
                               table.mul(v[:image.dimension], v[image.dimension:]))
    broken = discontinuity(table.inversion_map())
    if broken:
        a, b = broken
        return Verdict.failure('inversion is not continuous: {} ~ {} but {} and {} are not',
                               a, b, table.inv(a), table.inv(b))
    return Verdict.success()


@dataclass(frozen=True)
class GroupBound:
    value: int
    verdict: Verdict
    certificate: tuple = ()

    def __bool__(self):
        return bool(self.verdict)


def tcn_upper_via_group(group, table, n, cover, certificates):
    """TC_n(H) <= l from a group law on H and a cat cover of H^{n-1} with l parts."""
    if n < 2:
        raise WitnessError('TC_n needs n >= 2')
    continuity = group_check(group, table)
    if not continuity:
        return GroupBound(None, continuity)
    if not is_connected(group):
        return GroupBound(None, Verdict.failure('the group image is not connected'))

    base = power(group, n - 1)
    bound = verify_cat_witness(base, cover, certificates)
    if not bound:
        return GroupBound(None, bound.verdict)

    lines = (
        'group law on {} points: axioms hold, multiplication and inversion continuous'.format(len(group)),
        'cat(H^{}) <= {} ({} contractions verified)'.format(n - 1, bound.value, len(certificates)),
        'TC_{}(H) = cat(H^{}) <= {}'.format(n, n - 1, bound.value),
    )
    return GroupBound(bound.value, Verdict.success(), lines)


def parse_group(text, image, source=None):
    """
    Group table files: a ``group`` header, an optional ``identity <e>`` line
    and one ``a * b = c`` line per pair.
    """
    lines = logical_lines(text, source)
    header, tokens = expect_header(lines, 'group', source)
    identity = None
    table = {}
    for line in lines:
        tokens = line.text.split()
        if tokens[0] == 'identity' and len(tokens) == 2:
            identity = parse_point_token(tokens[1], line, source)
            continue
        if len(tokens) != 5 or tokens[1] != '*' or tokens[3] != '=':
            raise FormatError('expected "a * b = c"', line.lineno, source)
        a, b, c = (parse_point_token(tokens[i], line, source) for i in (0, 2, 4))
        for p in (a, b):
            if p not in image:
                raise FormatError('{} is not a point of the image'.format(p), line.lineno, source)
        if (a, b) in table:
            raise FormatError('{} * {} given twice'.format(a, b), line.lineno, source)
        table[(a, b)] = c
    return GroupTable(image, table, identity)


def load_group(path, image):
    return parse_group(read_source(path), image, source=path)


def dump_group(table):
    out = ['group']
    if table._identity is not None:
        out.append('identity {}'.format(format_point_token(table._identity)))
    for (a, b), c in sorted(table.multiplication.items()):
        out.append('{} * {} = {}'.format(format_point_token(a), format_point_token(b), format_point_token(c)))
    return '\n'.join(out) + '\n'
