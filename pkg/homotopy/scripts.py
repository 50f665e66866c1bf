"""
Homotopy scripts: a digital homotopy G : X × [0,n]_Z → Y written out as the
maps f_0, ..., f_n.
"""
import logging
from dataclasses import dataclass

from grid.images import DigitalMap, MalformedMap, discontinuity
from helpers.verdicts import Verdict


logger = logging.getLogger(__name__)


class ScriptError(ValueError):
    pass


@dataclass(frozen=True)
class HomotopyScript:
    domain: object
    codomain: object
    steps: tuple

    def __post_init__(self):
        steps = tuple(self.steps)
        object.__setattr__(self, 'steps', steps)
        if not steps:
            raise ScriptError('a homotopy needs at least one map')
        for t, f in enumerate(steps):
            if f.domain != self.domain or f.codomain != self.codomain:
                raise ScriptError('f_{} does not go from the script\'s domain to its codomain'.format(t))

    @classmethod
    def from_tables(cls, domain, codomain, tables):
        steps = []
        for t, table in enumerate(tables):
            try:
                steps.append(DigitalMap(domain, codomain, table))
            except MalformedMap as e:
                raise ScriptError('f_{}: {}'.format(t, e))
        return cls(domain, codomain, tuple(steps))

    @property
    def length(self):
        return len(self.steps) - 1

    def __getitem__(self, t):
        return self.steps[t]

    def track(self, point):
        """t ↦ f_t(point)"""
        return [f(point) for f in self.steps]

    def reversed(self):
        return HomotopyScript(self.domain, self.codomain, self.steps[::-1])

    def then(self, other):
        return concatenate(self, other)


@dataclass(frozen=True)
class ContractionCertificate:
    """
    A homotopy from the inclusion of its domain into the codomain to the
    constant map at ``target``. For a contraction of X the two images agree.
    """
    script: HomotopyScript
    target: tuple

    @property
    def domain(self):
        return self.script.domain

    @property
    def codomain(self):
        return self.script.codomain

    @property
    def length(self):
        return self.script.length


def concatenate(first, second):
    if first.domain != second.domain or first.codomain != second.codomain:
        raise ScriptError('scripts run between different images')
    if first.steps[-1] != second.steps[0]:
        raise ScriptError('last map of the first script differs from the first map of the second')
    return HomotopyScript(first.domain, first.codomain, first.steps + second.steps[1:])


def reverse(script):
    return script.reversed()


def verify_homotopy(script):
    for t, f in enumerate(script.steps):
        broken = discontinuity(f)
        if broken:
            p, q = broken
            return Verdict.failure('f_{} is not continuous: {} ~ {} but {} and {} are not adjacent',
                                   t, p, q, f(p), f(q))

    for t in range(script.length):
        now, later = script.steps[t], script.steps[t + 1]
        for x in script.domain.sorted_points:
            if not script.codomain.near(now(x), later(x)):
                return Verdict.failure('{} jumps from {} to {} between t={} and t={}',
                                       x, now(x), later(x), t, t + 1)
    return Verdict.success()


def verify_contraction(certificate):
    script = certificate.script
    first, last = script.steps[0], script.steps[-1]
    for x in script.domain.sorted_points:
        if first(x) != x:
            return Verdict.failure('f_0 is not the inclusion: {} -> {}', x, first(x))
    if tuple(certificate.target) not in script.codomain:
        return Verdict.failure('target {} is not in the image', certificate.target)
    for x in script.domain.sorted_points:
        if last(x) != tuple(certificate.target):
            return Verdict.failure('f_{} is not constant at {}: {} -> {}',
                                   script.length, certificate.target, x, last(x))
    verdict = verify_homotopy(script)
    if not verdict:
        logger.debug('contraction rejected: %s', verdict.reason)
    return verdict


def fold_chain(image, chain):
    """
    Contract a chain v_0, ..., v_n of points of ``image`` onto v_0 inside the
    image: f_t(v_i) = v_max(0, i - t).
    """
    chain = [tuple(v) for v in chain]
    if len(set(chain)) != len(chain):
        raise ScriptError('chain visits a point twice')
    part = image.subimage(chain)
    tables = []
    for t in range(max(1, len(chain))):
        tables.append({v: chain[max(0, i - t)] for i, v in enumerate(chain)})
    script = HomotopyScript.from_tables(part, image, tables)
    return ContractionCertificate(script, chain[0])


def constant_certificate(image):
    """The length-0 contraction of a one-point image."""
    if len(image) != 1:
        raise ScriptError('only a one-point image is contracted by its identity')
    point = image.sorted_points[0]
    return ContractionCertificate(HomotopyScript(image, image, (DigitalMap.identity(image),)), point)
