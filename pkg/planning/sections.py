"""
Verification of motion-planning sections and of TC, TC_n and cat witnesses.

A section over U ⊆ X^n assigns each u = (x_1, ..., x_n) a spider whose leg i
ends at x_i; for n = 2 a path from x to y is the spider (constant x, path).
Sections must be continuous: members adjacent in the product adjacency get
legwise adjacent spiders.
"""
import itertools
import logging
from collections import namedtuple
from dataclasses import dataclass

import networkx as nx

from helpers.verdicts import Verdict
from homotopy.scripts import verify_contraction
from homotopy.search import Outcome, find_contraction

from .paths import DigitalPath, Spider, first_separation, path_as_spider
from .witnesses import WitnessError


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertifiedBound:
    """An upper bound certified by a witness; ``value`` is None when it was refuted."""
    value: int
    verdict: Verdict

    def __bool__(self):
        return bool(self.verdict)

    @classmethod
    def refuted(cls, reason, *args):
        return cls(None, Verdict.failure(reason, *args))


Obstruction = namedtuple('Obstruction', ['kind', 'point'])


def split(u, image, n):
    """(x_1, ..., x_n) from a flattened member of image^n."""
    m = image.dimension
    if len(u) != m * n:
        raise WitnessError('{} is not a point of the {}-fold power'.format(u, n))
    factors = tuple(tuple(u[i * m:(i + 1) * m]) for i in range(n))
    for x in factors:
        if x not in image:
            raise WitnessError('{} has a factor {} outside the image'.format(u, x))
    return factors


def power_points(image, n):
    return frozenset(sum(combo, ()) for combo in itertools.product(image.sorted_points, repeat=n))


def _product_adjacent(a, b, image):
    return a != b and all(image.near(x, y) for x, y in zip(a, b))


def adjacent_members(members, image, n):
    """Pairs of members adjacent in the product adjacency, in sorted order."""
    members = sorted(members)
    factors = {u: split(u, image, n) for u in members}
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if _product_adjacent(factors[u], factors[v], image):
                yield u, v


def verify_spider_section(U, rule, image, n, mode=None):
    U = frozenset(tuple(u) for u in U)
    missing = U - set(rule)
    if missing:
        raise WitnessError('rule has no spider for {}'.format(min(missing)))

    for u in sorted(U):
        factors = split(u, image, n)
        spider = rule[u]
        if not isinstance(spider, Spider):
            raise WitnessError('rule for {} is not a spider'.format(u))
        if spider.n != n:
            return Verdict.failure('spider for {} has {} legs, expected {}', u, spider.n, n)
        if spider.legs[0].image != image:
            return Verdict.failure('spider for {} runs in another image', u)
        for i, (leg, x) in enumerate(zip(spider.legs, factors), start=1):
            if leg.end != x:
                return Verdict.failure('leg {} of the spider for {} ends at {}, not {}', i, u, leg.end, x)

    for u, v in adjacent_members(U, image, n):
        for i, (a, b) in enumerate(zip(rule[u].legs, rule[v].legs), start=1):
            t = first_separation(a, b, mode)
            if t is not None:
                return Verdict.failure('{} ~ {} but leg {} of their spiders separates at t={} ({} vs {})',
                                       u, v, i, t, a(t), b(t))
    return Verdict.success()


def verify_section(U, rule, image, mode=None):
    """A path rule over U ⊆ X×X, checked as the two-legged spider rule."""
    spiders = {}
    for u, path in rule.items():
        if not isinstance(path, DigitalPath):
            raise WitnessError('rule for {} is not a path'.format(u))
        spiders[tuple(u)] = path_as_spider(path)
    return verify_spider_section(U, spiders, image, 2, mode)


def verify_tcn_witness(image, n, cover, sections, mode=None):
    if n < 2:
        raise WitnessError('TC_n needs n >= 2')
    if cover.base.points != power_points(image, n):
        raise WitnessError('cover base is not the {}-fold power of the image'.format(n))
    if len(sections) != len(cover):
        raise WitnessError('{} rules for {} parts'.format(len(sections), len(cover)))
    if not cover.is_cover:
        return CertifiedBound.refuted('{} is not covered', min(cover.uncovered()))

    for i, (part, rule) in enumerate(zip(cover.parts, sections), start=1):
        verdict = verify_spider_section(part, rule, image, n, mode)
        if not verdict:
            logger.debug('part %d rejected: %s', i, verdict.reason)
            return CertifiedBound.refuted('part {}: {}', i, verdict.reason)
    return CertifiedBound(len(cover), Verdict.success())


def verify_tc_witness(image, cover, sections, mode=None):
    spider_rules = []
    for rule in sections:
        converted = {}
        for u, path in rule.items():
            if isinstance(path, Spider):
                raise WitnessError('TC witnesses assign paths, not spiders')
            converted[u] = path_as_spider(path)
        spider_rules.append(converted)
    return verify_tcn_witness(image, 2, cover, spider_rules, mode)


def verify_cat_witness(image, cover, certificates):
    """Each part must contract to a point inside the image."""
    if cover.base.points != image.points:
        raise WitnessError('cat covers are covers of the image itself')
    if len(certificates) != len(cover):
        raise WitnessError('{} contractions for {} parts'.format(len(certificates), len(cover)))
    if not cover.is_cover:
        return CertifiedBound.refuted('{} is not covered', min(cover.uncovered()))

    for i, (part, certificate) in enumerate(zip(cover.parts, certificates), start=1):
        if certificate.domain.points != part:
            return CertifiedBound.refuted('part {}: contraction is not defined on the part', i)
        if certificate.codomain != image:
            return CertifiedBound.refuted('part {}: contraction does not run inside the image', i)
        verdict = verify_contraction(certificate)
        if not verdict:
            return CertifiedBound.refuted('part {}: {}', i, verdict.reason)
    return CertifiedBound(len(cover), Verdict.success())


def sections_from_contractions(image, first, second):
    """
    A section over W_a × W_b from contractions of W_a and W_b inside the
    image: follow the first homotopy from x to its target, a fixed path
    between the targets, then the second homotopy backwards to y.
    """
    if first.codomain != image or second.codomain != image:
        raise WitnessError('contractions must run inside the image')
    connector = nx.shortest_path(image.graph, tuple(first.target), tuple(second.target))
    rule = {}
    for x in first.domain.sorted_points:
        outbound = first.script.track(x)
        for y in second.domain.sorted_points:
            inbound = second.script.track(y)[::-1]
            values = outbound + connector[1:] + inbound[1:]
            rule[x + y] = DigitalPath(image, values)

    U = rule.keys()
    verdict = verify_section(U, rule, image, mode='adjacent')
    if not verdict:
        raise AssertionError('section built from contractions failed verification: {}'.format(verdict.reason))
    return rule


def full_row_obstruction(U, image, contractible=None, budget=None):
    """
    A part containing a whole row X×{y} (or column {y}×X) has a section only
    if X is contractible: restricting the section to the row is a contraction.
    Returns the first such row when X is known not to be contractible.
    """
    U = frozenset(tuple(u) for u in U)
    points = image.sorted_points
    rows = [Obstruction('row', y) for y in points if all(x + y in U for x in points)]
    rows += [Obstruction('column', x) for x in points if all(x + y in U for y in points)]
    if not rows:
        return None

    if contractible is None:
        outcome = find_contraction(image, budget=budget).outcome
        if outcome == Outcome.UNKNOWN:
            return None
        contractible = outcome == Outcome.CONTRACTIBLE
    return None if contractible else rows[0]


def reverse_section(rule):
    """(y, x) ↦ reversed path, after padding every path to a common length."""
    if not rule:
        return {}
    length = max(path.length for path in rule.values())
    reversed_rule = {}
    for u, path in rule.items():
        m = len(u) // 2
        reversed_rule[tuple(u[m:]) + tuple(u[:m])] = path.extended(length).reversed()
    return reversed_rule
