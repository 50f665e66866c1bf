"""
Image files.

    dim 3 adjacency 6
    1 0 0   # p0
    1 1 0   # p1

Product images use ``adjacency product`` and list their relation with
``edge <point> -- <point>`` lines.
"""
from helpers.parsing import (
    FormatError, expect_header, format_point, logical_lines, parse_int, parse_ints, read_source,
)

from .images import AdjacencyKind, DigitalImage, ExplicitAdjacency, ImageError


def parse_image(text, source=None):
    lines = logical_lines(text, source)
    header, tokens = expect_header(lines, 'dim', source)
    if len(tokens) != 3 or tokens[1] != 'adjacency':
        raise FormatError('header must read "dim <m> adjacency <name>"', header.lineno, source)

    dimension = parse_int(tokens[0], header, source)
    name = tokens[2]
    explicit = name == 'product'
    if not explicit:
        try:
            kind = AdjacencyKind.from_name(parse_int(name, header, source), dimension)
        except ImageError as e:
            raise FormatError(str(e), header.lineno, source)

    points = {}
    labels = {}
    edges = []
    for line in lines:
        tokens = line.text.split()
        if tokens[0] == 'edge':
            if not explicit:
                raise FormatError('edge lines need "adjacency product"', line.lineno, source)
            try:
                split = tokens.index('--')
            except ValueError:
                raise FormatError('edge line needs "--" between the two points', line.lineno, source)
            p = parse_ints(tokens[1:split], line, source)
            q = parse_ints(tokens[split + 1:], line, source)
            edges.append((line, p, q))
            continue

        point = parse_ints(tokens, line, source)
        if len(point) != dimension:
            raise FormatError('point {} does not have {} coordinates'.format(point, dimension), line.lineno, source)
        if point in points:
            raise FormatError('point {} listed twice (first on line {})'.format(point, points[point]),
                              line.lineno, source)
        points[point] = line.lineno
        if line.comment:
            labels[point] = line.comment

    if not points:
        raise FormatError('image has no points', header.lineno, source)

    if explicit:
        for line, p, q in edges:
            for r in (p, q):
                if r not in points:
                    raise FormatError('edge endpoint {} is not a listed point'.format(r), line.lineno, source)
            if p == q:
                raise FormatError('edge joins {} to itself'.format(p), line.lineno, source)
        kind = ExplicitAdjacency.from_pairs((p, q) for _, p, q in edges)

    return DigitalImage(frozenset(points), kind, tuple(sorted(labels.items())))


def load_image(path):
    return parse_image(read_source(path), source=path)


def dump_image(image):
    out = ['dim {} adjacency {}'.format(image.dimension, image.adjacency)]
    for p in image.sorted_points:
        label = image.label(p)
        if label:
            out.append('{}  # {}'.format(format_point(p), label))
        else:
            out.append(format_point(p))

    if image.adjacency.explicit:
        for p, q in sorted(tuple(sorted(e)) for e in image.adjacency.edges):
            out.append('edge {} -- {}'.format(format_point(p), format_point(q)))

    return '\n'.join(out) + '\n'
