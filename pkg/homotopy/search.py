"""
Search for contractions.

States are self-maps of X reachable from the identity, each one step of a
homotopy away from its parent: every point stays or moves to a neighbour of
its current value, and every state is continuous. Expansion is best-first on
the size of the image, then depth.
"""
import enum
import heapq
import itertools
import logging
from dataclasses import dataclass

from helpers.conf import topology_setting

from .scripts import ContractionCertificate, HomotopyScript, ScriptError, constant_certificate, verify_contraction


logger = logging.getLogger(__name__)


class Outcome(enum.Enum):
    CONTRACTIBLE = 'contractible'
    NOT_CONTRACTIBLE = 'not_contractible'
    UNKNOWN = 'unknown'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ContractionSearch:
    outcome: Outcome
    certificate: ContractionCertificate = None
    nodes: int = 0
    reason: str = ''


def one_step_moves(image, state):
    """
    Continuous maps g with g(x) equal or adjacent to state(x), in
    lexicographic order of (point, target). ``state`` is a tuple of values
    aligned with image.sorted_points.
    """
    points = image.sorted_points
    position = {p: i for i, p in enumerate(points)}
    earlier = [[position[q] for q in image.neighbors(p) if position[q] < i] for i, p in enumerate(points)]
    options = [sorted(image.closed_neighbors(v)) for v in state]
    chosen = [None] * len(points)

    def extend(i):
        if i == len(points):
            yield tuple(chosen)
            return
        for value in options[i]:
            if all(image.near(value, chosen[j]) for j in earlier[i]):
                chosen[i] = value
                yield from extend(i + 1)

    return extend(0)


def find_contraction(image, max_steps=None, budget=None):
    """
    Returns a ContractionSearch. NOT_CONTRACTIBLE means every state reachable
    from the identity was expanded without meeting a constant map; a depth
    cut-off or the node budget turns that into UNKNOWN.
    """
    if max_steps is not None and max_steps < 1:
        raise ScriptError('max_steps must be at least 1')
    budget = budget or topology_setting('SEARCH_BUDGET')

    if len(image) == 1:
        return ContractionSearch(Outcome.CONTRACTIBLE, constant_certificate(image), 1)

    identity = tuple(image.sorted_points)
    parents = {identity: None}
    depths = {identity: 0}
    counter = itertools.count()
    queue = [(len(identity), 0, next(counter), identity)]
    nodes = 0
    expanded = 0
    truncated = False

    while queue:
        _, depth, _, state = heapq.heappop(queue)
        if depth > depths[state]:
            continue
        if max_steps is not None and depth >= max_steps:
            truncated = True
            continue

        for move in one_step_moves(image, state):
            nodes += 1
            if nodes > budget:
                logger.info('contraction search gave up after %d nodes', budget)
                return ContractionSearch(Outcome.UNKNOWN, nodes=nodes,
                                         reason='budget of {} nodes exhausted'.format(budget))
            # under a step limit a shallower route reopens a state
            if move in depths and (max_steps is None or depths[move] <= depth + 1):
                continue
            parents[move] = state
            depths[move] = depth + 1
            if len(set(move)) == 1:
                certificate = _certificate(image, parents, move)
                verdict = verify_contraction(certificate)
                if not verdict:
                    raise AssertionError('searched contraction failed verification: {}'.format(verdict.reason))
                logger.info('contraction of %s in %d steps after %d nodes', image, certificate.length, nodes)
                return ContractionSearch(Outcome.CONTRACTIBLE, certificate, nodes)
            heapq.heappush(queue, (len(set(move)), depth + 1, next(counter), move))

        expanded += 1
        if not expanded % 10000:
            logger.debug('%d nodes, %d states, queue %d', nodes, len(parents), len(queue))

    if truncated:
        return ContractionSearch(Outcome.UNKNOWN, nodes=nodes, reason='cut off at {} steps'.format(max_steps))
    logger.info('%s is not contractible: %d reachable maps, none constant', image, len(parents))
    return ContractionSearch(Outcome.NOT_CONTRACTIBLE, nodes=nodes,
                             reason='{} reachable maps, none constant'.format(len(parents)))


def _certificate(image, parents, goal):
    chain = []
    state = goal
    while state is not None:
        chain.append(state)
        state = parents[state]
    chain.reverse()
    points = image.sorted_points
    tables = [dict(zip(points, values)) for values in chain]
    script = HomotopyScript.from_tables(image, image, tables)
    return ContractionCertificate(script, goal[0])
