"""
Searching for sections.

synthesize_section treats each member (x, y) of U as a variable whose values
are candidate paths: every walk from x to y, waiting steps included, of
length at most max_path_len and at most max_detour steps longer than a
shortest path. A constraint joins every two members adjacent in X×X.
Backtracking picks the variable with the fewest remaining candidates and
prunes neighbours' candidates forward. The detour allowance grows from 0, so
sections made of shortest paths are found before longer walks are tried.
"""
import enum
import logging
from dataclasses import dataclass, field

import networkx as nx

from grid.images import diameter
from helpers.conf import topology_setting
from homotopy.search import Outcome, find_contraction

from .paths import DigitalPath, paths_adjacent
from .sections import adjacent_members, full_row_obstruction, sections_from_contractions, split, verify_section


logger = logging.getLogger(__name__)


class SectionOutcome(enum.Enum):
    FOUND = 'found'
    NONE = 'none'
    UNKNOWN = 'unknown'

    def __str__(self):
        return self.value


class Answer(enum.Enum):
    YES = 'yes'
    NO = 'no'
    UNKNOWN = 'unknown'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SectionSearch:
    outcome: SectionOutcome
    rule: dict = field(default=None, compare=False)
    nodes: int = 0
    reason: str = ''


@dataclass(frozen=True)
class TcDecision:
    answer: Answer
    rule: dict = field(default=None, compare=False)
    reason: str = ''


class _BudgetExhausted(Exception):
    pass


def candidate_paths(image, x, y, max_len, max_detour=0, distances=None):
    """
    Walks from x to y that may wait or turn back. A walk ends on a move (or
    has length 0): trailing waits change nothing once paths are synchronised.
    """
    if distances is None:
        distances = nx.single_source_shortest_path_length(image.graph, y)
    if x not in distances:
        return []
    limit = min(max_len, distances[x] + max_detour)
    walks = []

    def extend(walk):
        p = walk[-1]
        if p == y and (len(walk) == 1 or walk[-2] != p):
            walks.append(tuple(walk))
        if len(walk) - 1 == limit:
            return
        for q in [p] + sorted(image.neighbors(p)):
            if distances[q] + len(walk) <= limit:
                walk.append(q)
                extend(walk)
                walk.pop()

    extend([x])
    return [DigitalPath(image, w) for w in sorted(walks, key=lambda w: (len(w), w))]


def synthesize_section(U, image, budget=None, max_path_len=None, mode=None, check_rows=True, max_detour=None):
    budget = budget or topology_setting('SEARCH_BUDGET')
    if max_path_len is None:
        max_path_len = diameter(image) + topology_setting('PATH_SLACK')
    if max_detour is None:
        max_detour = topology_setting('PATH_SLACK')

    U = sorted(frozenset(tuple(u) for u in U))
    for u in U:
        split(u, image, 2)

    obstruction = full_row_obstruction(U, image, budget=budget) if check_rows else None
    if obstruction:
        reason = 'U contains the {} through {}; a section there would contract the image, which is not contractible'
        return SectionSearch(SectionOutcome.NONE, reason=reason.format(obstruction.kind, obstruction.point))

    m = image.dimension
    distances = {}
    for y in {u[m:] for u in U}:
        distances[y] = nx.single_source_shortest_path_length(image.graph, y)
    widest = {u: candidate_paths(image, u[:m], u[m:], max_path_len, max_detour, distances[u[m:]]) for u in U}
    for u in U:
        if not widest[u]:
            return SectionSearch(SectionOutcome.NONE,
                                 reason='no path of length <= {} joins {} to {}'.format(max_path_len, u[:m], u[m:]))
    shortest = {u: distances[u[m:]][u[:m]] for u in U}

    neighbours = {u: [] for u in U}
    for u, v in adjacent_members(U, image, 2):
        neighbours[u].append(v)
        neighbours[v].append(u)

    counter = {'nodes': 0}
    assignment = {}

    def solve(domains):
        if len(assignment) == len(U):
            return True
        u = min((v for v in U if v not in assignment), key=lambda v: (len(domains[v]), v))
        for path in domains[u]:
            counter['nodes'] += 1
            if counter['nodes'] > budget:
                raise _BudgetExhausted
            pruned = dict(domains)
            pruned[u] = [path]
            dead = False
            for v in neighbours[u]:
                if v in assignment:
                    continue
                pruned[v] = [q for q in domains[v] if paths_adjacent(path, q, mode)]
                if not pruned[v]:
                    dead = True
                    break
            if dead:
                continue
            assignment[u] = path
            if solve(pruned):
                return True
            del assignment[u]
        return False

    found = False
    previous = None
    try:
        for detour in range(max_detour + 1):
            domains = {u: [p for p in widest[u] if p.length <= shortest[u] + detour] for u in U}
            sizes = [len(domains[u]) for u in U]
            if sizes == previous:
                continue
            previous = sizes
            logger.debug('section search, detour %d: %d candidate paths', detour, sum(sizes))
            if solve(domains):
                found = True
                break
    except _BudgetExhausted:
        logger.info('section search gave up after %d nodes', budget)
        return SectionSearch(SectionOutcome.UNKNOWN, nodes=counter['nodes'],
                             reason='budget of {} nodes exhausted'.format(budget))

    if not found:
        reason = 'no section among walks of length <= {} at most {} steps longer than a shortest path'
        return SectionSearch(SectionOutcome.NONE, nodes=counter['nodes'],
                             reason=reason.format(max_path_len, max_detour))

    rule = dict(assignment)
    verdict = verify_section(U, rule, image, mode)
    if not verdict:
        raise AssertionError('searched section failed verification: {}'.format(verdict.reason))
    logger.info('section over %d members found after %d nodes', len(U), counter['nodes'])
    return SectionSearch(SectionOutcome.FOUND, rule, counter['nodes'])


def tc_is_one(image, budget=None, max_path_len=None):
    """
    TC(X) = 1 exactly when X is contractible: a contraction gives a global
    section, and a global section restricted to X×{c} is a contraction. The
    path search only runs when the contraction search is inconclusive.
    """
    search = find_contraction(image, budget=budget)
    if search.outcome == Outcome.CONTRACTIBLE:
        rule = sections_from_contractions(image, search.certificate, search.certificate)
        return TcDecision(Answer.YES, rule, 'contractible in {} steps'.format(search.certificate.length))
    if search.outcome == Outcome.NOT_CONTRACTIBLE:
        return TcDecision(Answer.NO, reason='not contractible: {}'.format(search.reason))

    points = image.sorted_points
    everything = [x + y for x in points for y in points]
    section = synthesize_section(everything, image, budget, max_path_len, check_rows=False)
    if section.outcome == SectionOutcome.FOUND:
        return TcDecision(Answer.YES, section.rule, 'global section found')
    return TcDecision(Answer.UNKNOWN, reason='contraction search: {}; section search: {}'.format(
        search.reason, section.reason))
