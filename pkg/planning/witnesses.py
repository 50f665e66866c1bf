"""
Cover and section witnesses, and their file format.

    cover 2
    part 1
    0,0 0,1
    part 2
    1,0 1,1
    rule 1
    (0,0) -> path: 0
    (0,1) -> path: 0 1
    rule 2
    (1,0,1) -> legs 3
    leg: 1
    leg: 1 0
    leg: 1

Members of X×X (or X^n) are written as one comma-separated token holding the
coordinates of all factors; path points as one token each.
"""
import logging

from helpers.parsing import (
    FormatError, expect_header, format_point_token, logical_lines, parse_int, parse_point_token, read_source,
)

from .paths import DigitalPath, PathError, Spider


logger = logging.getLogger(__name__)


class WitnessError(ValueError):
    pass


class CoverWitness:
    def __init__(self, base, parts):
        self.base = base
        self.parts = tuple(frozenset(tuple(u) for u in part) for part in parts)
        if not self.parts:
            raise WitnessError('a cover has at least one part')
        for i, part in enumerate(self.parts, start=1):
            stray = part - base.points
            if stray:
                raise WitnessError('part {} contains {}, which is not in the base'.format(i, min(stray)))

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, CoverWitness) and self.base == other.base and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def uncovered(self):
        return self.base.points - frozenset().union(*self.parts)

    @property
    def is_cover(self):
        return not self.uncovered()


class SectionWitness:
    """One rule per cover part: member → DigitalPath (TC) or Spider (TC_n)."""

    def __init__(self, rules):
        self.rules = tuple({tuple(u): s for u, s in dict(rule).items()} for rule in rules)

    def __len__(self):
        return len(self.rules)

    def __getitem__(self, i):
        return self.rules[i]

    def __iter__(self):
        return iter(self.rules)

    def __eq__(self, other):
        return isinstance(other, SectionWitness) and self.rules == other.rules


def _member(token, line, source):
    return parse_point_token(token.strip('()'), line, source)


def parse_witness(text, base, image, source=None):
    """
    Parse a witness file over ``base`` (X×X, X^n or X) whose paths run in
    ``image``. Returns (CoverWitness, SectionWitness or None).
    """
    lines = logical_lines(text, source)
    header, tokens = expect_header(lines, 'cover', source)
    if len(tokens) != 1:
        raise FormatError('header must read "cover <l>"', header.lineno, source)
    count = parse_int(tokens[0], header, source)
    if count < 1:
        raise FormatError('a cover has at least one part', header.lineno, source)

    parts, rules = [], []
    pending_legs = None
    for line in lines:
        tokens = line.text.split()
        keyword = tokens[0]

        if pending_legs is not None:
            u, wanted, legs, start = pending_legs
            if keyword != 'leg:':
                raise FormatError('spider for {} needs {} "leg:" lines'.format(u, wanted), line.lineno, source)
            legs.append([_member(t, line, source) for t in tokens[1:]])
            if len(legs) == wanted:
                rules[-1][u] = _spider(image, legs, start, source)
                pending_legs = None
            continue

        if keyword in ('part', 'rule'):
            target = parts if keyword == 'part' else rules
            if keyword == 'part' and rules:
                raise FormatError('parts must come before the rules', line.lineno, source)
            if keyword == 'rule' and len(parts) != count:
                raise FormatError('found {} parts, header promises {}'.format(len(parts), count), line.lineno, source)
            if len(tokens) != 2 or parse_int(tokens[1], line, source) != len(target) + 1:
                raise FormatError('expected "{} {}"'.format(keyword, len(target) + 1), line.lineno, source)
            target.append({} if keyword == 'rule' else set())
            continue

        if rules:
            if '->' not in tokens:
                raise FormatError('rule line needs "->"', line.lineno, source)
            u = _member(tokens[0], line, source)
            if u in rules[-1]:
                raise FormatError('{} has two rules'.format(u), line.lineno, source)
            kind = tokens[2] if len(tokens) > 2 else ''
            if kind == 'path:':
                points = [_member(t, line, source) for t in tokens[3:]]
                try:
                    rules[-1][u] = DigitalPath(image, points)
                except PathError as e:
                    raise FormatError(str(e), line.lineno, source)
            elif kind == 'legs' and len(tokens) == 4:
                pending_legs = (u, parse_int(tokens[3], line, source), [], line)
                if pending_legs[1] < 1:
                    raise FormatError('a spider has at least one leg', line.lineno, source)
            else:
                raise FormatError('expected "-> path: ..." or "-> legs <n>"', line.lineno, source)
            continue

        if not parts:
            raise FormatError('member listed before "part 1"', line.lineno, source)
        for token in tokens:
            u = _member(token, line, source)
            if u not in base:
                raise FormatError('{} is not a point of the base'.format(u), line.lineno, source)
            parts[-1].add(u)

    if pending_legs is not None:
        raise FormatError('spider for {} is missing legs'.format(pending_legs[0]), pending_legs[3].lineno, source)
    if len(parts) != count:
        raise FormatError('found {} parts, header promises {}'.format(len(parts), count), header.lineno, source)
    if rules and len(rules) != count:
        raise FormatError('found {} rules for {} parts'.format(len(rules), count), header.lineno, source)

    cover = CoverWitness(base, parts)
    return cover, (SectionWitness(rules) if rules else None)


def _spider(image, legs, line, source):
    try:
        return Spider.from_values(image, legs)
    except PathError as e:
        raise FormatError(str(e), line.lineno, source)


def load_witness(path, base, image):
    return parse_witness(read_source(path), base, image, source=path)


def dump_witness(cover, sections=None):
    out = ['cover {}'.format(len(cover))]
    for i, part in enumerate(cover.parts, start=1):
        out.append('part {}'.format(i))
        members = [format_point_token(u) for u in sorted(part)]
        for k in range(0, len(members), 8):
            out.append(' '.join(members[k:k + 8]))

    for i, rule in enumerate(sections or (), start=1):
        out.append('rule {}'.format(i))
        for u in sorted(rule):
            s = rule[u]
            if isinstance(s, Spider):
                out.append('({}) -> legs {}'.format(format_point_token(u), s.n))
                for leg in s.legs:
                    out.append('leg: {}'.format(' '.join(format_point_token(v) for v in leg.values)))
            else:
                out.append('({}) -> path: {}'.format(format_point_token(u), ' '.join(
                    format_point_token(v) for v in s.values)))
    return '\n'.join(out) + '\n'
