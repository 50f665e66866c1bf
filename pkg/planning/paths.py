"""
Digital paths and spiders (bundles of paths with a common start).

A path of length n is evaluated past its end at its final value, which is the
synchronisation rule used whenever two paths of different lengths are
compared.
"""
from dataclasses import dataclass

import networkx as nx

from helpers.conf import topology_setting


PATH_ADJACENCY_MODES = ('adjacent', 'connected')


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class DigitalPath:
    image: object
    values: tuple

    def __post_init__(self):
        values = tuple(tuple(v) for v in self.values)
        object.__setattr__(self, 'values', values)
        if not values:
            raise PathError('a path has at least one point')
        for v in values:
            if v not in self.image:
                raise PathError('{} is not a point of the image'.format(v))
        for t in range(len(values) - 1):
            if not self.image.near(values[t], values[t + 1]):
                raise PathError('path jumps from {} to {} at t={}'.format(values[t], values[t + 1], t))

    @classmethod
    def constant(cls, image, point):
        return cls(image, (tuple(point),))

    @property
    def length(self):
        return len(self.values) - 1

    @property
    def start(self):
        return self.values[0]

    @property
    def end(self):
        return self.values[-1]

    def __call__(self, t):
        return self.values[min(t, self.length)]

    def __len__(self):
        return len(self.values)

    def extended(self, length):
        if length <= self.length:
            return self
        return DigitalPath(self.image, self.values + (self.end,) * (length - self.length))

    def reversed(self):
        return DigitalPath(self.image, self.values[::-1])


def endpoints(path):
    return path.start, path.end


def synchronize(a, b):
    n = max(a.length, b.length)
    return a.extended(n), b.extended(n)


def _mode(mode):
    mode = mode or topology_setting('PATH_ADJACENCY')
    if mode not in PATH_ADJACENCY_MODES:
        raise PathError('path adjacency must be one of {}'.format(', '.join(PATH_ADJACENCY_MODES)))
    return mode


def first_separation(a, b, mode=None):
    """First time at which the synchronised paths are not related, or None."""
    mode = _mode(mode)
    if a.image != b.image:
        raise PathError('paths run in different images')
    image = a.image
    for t in range(max(a.length, b.length) + 1):
        p, q = a(t), b(t)
        if mode == 'adjacent':
            related = image.near(p, q)
        else:
            related = nx.has_path(image.graph, p, q)
        if not related:
            return t
    return None


def paths_adjacent(a, b, mode=None):
    """
    Pointwise equal-or-adjacent after synchronisation. The ``connected`` mode
    only asks for the two points to share a component.
    """
    return first_separation(a, b, mode) is None


@dataclass(frozen=True)
class Spider:
    legs: tuple

    def __post_init__(self):
        legs = tuple(self.legs)
        object.__setattr__(self, 'legs', legs)
        if not legs:
            raise PathError('a spider has at least one leg')
        starts = {leg.start for leg in legs}
        if len(starts) != 1:
            raise PathError('legs start at different points {}'.format(sorted(starts)))
        if len({leg.image for leg in legs}) != 1:
            raise PathError('legs run in different images')

    @classmethod
    def from_values(cls, image, legs):
        return cls(tuple(DigitalPath(image, leg) for leg in legs))

    @property
    def n(self):
        return len(self.legs)

    @property
    def start(self):
        return self.legs[0].start

    @property
    def ends(self):
        return tuple(leg.end for leg in self.legs)


def spiders_adjacent(s, r, mode=None):
    if s.n != r.n:
        raise PathError('spiders have {} and {} legs'.format(s.n, r.n))
    return all(paths_adjacent(a, b, mode) for a, b in zip(s.legs, r.legs))


def path_as_spider(path):
    """The two-legged spider (constant at the start, the path) with the path's endpoints."""
    return Spider((DigitalPath.constant(path.image, path.start), path))
