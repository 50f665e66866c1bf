"""
Shared pieces of the line-oriented text formats (images, homotopy scripts,
cover/section witnesses, group tables).

All formats ignore blank lines and lines starting with ``#``; a ``#`` after
content starts a trailing comment, which images use as a point label.
"""
from collections import namedtuple


class FormatError(ValueError):
    """A malformed input file; the message carries the line number."""
    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        if lineno is not None:
            message = '{}:{}: {}'.format(source or '<input>', lineno, message)
        super().__init__(message)


Line = namedtuple('Line', ['lineno', 'text', 'comment'])


def logical_lines(text, source=None):
    """Yield the meaningful lines of ``text`` with their 1-based numbers."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content, _, comment = raw.partition('#')
        content = content.strip()
        if not content:
            continue
        yield Line(lineno, content, comment.strip() or None)


def parse_int(token, line, source=None):
    try:
        return int(token)
    except ValueError:
        raise FormatError('expected an integer, got {!r}'.format(token), line.lineno, source)


def parse_ints(tokens, line, source=None):
    return tuple(parse_int(t, line, source) for t in tokens)


def parse_point_token(token, line, source=None):
    """``1,0,-2`` -> (1, 0, -2)"""
    return parse_ints(token.split(','), line, source)


def format_point_token(point):
    return ','.join(str(c) for c in point)


def format_point(point):
    return ' '.join(str(c) for c in point)


def expect_header(lines, keyword, source=None):
    """
    Consume the first line, which must start with ``keyword``; return its
    remaining tokens.
    """
    try:
        line = next(lines)
    except StopIteration:
        raise FormatError('empty input, expected "{}" header'.format(keyword), source=source)

    tokens = line.text.split()
    if tokens[0] != keyword:
        raise FormatError('expected "{}" header, got {!r}'.format(keyword, tokens[0]), line.lineno, source)

    return line, tokens[1:]


def read_source(path):
    with open(path, 'r') as fh:
        return fh.read()
