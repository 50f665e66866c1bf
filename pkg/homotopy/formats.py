"""
Homotopy script files.

    homotopy 2
    t 0
    0 0 -> 0 0
    1 1 -> 1 1
    t 1
    ...

Points are whitespace-separated coordinates; the block for t lists f_t(x)
for every x of the domain.
"""
from helpers.parsing import FormatError, expect_header, format_point, logical_lines, parse_int, parse_ints, read_source

from .scripts import ContractionCertificate, HomotopyScript, ScriptError


def parse_script(text, domain, codomain=None, source=None):
    codomain = codomain or domain
    lines = logical_lines(text, source)
    header, tokens = expect_header(lines, 'homotopy', source)
    if len(tokens) != 1:
        raise FormatError('header must read "homotopy <n>"', header.lineno, source)
    n = parse_int(tokens[0], header, source)
    if n < 0:
        raise FormatError('homotopy length must be non-negative', header.lineno, source)

    blocks = []
    block_line = None
    for line in lines:
        tokens = line.text.split()
        if tokens[0] == 't':
            if len(tokens) != 2 or parse_int(tokens[1], line, source) != len(blocks):
                raise FormatError('expected "t {}"'.format(len(blocks)), line.lineno, source)
            _check_block(blocks, block_line, domain, source)
            blocks.append({})
            block_line = line
            continue

        if not blocks:
            raise FormatError('mapping line before the first "t" block', line.lineno, source)
        if '->' not in tokens:
            raise FormatError('mapping line needs "->"', line.lineno, source)
        split = tokens.index('->')
        x = parse_ints(tokens[:split], line, source)
        y = parse_ints(tokens[split + 1:], line, source)
        if x not in domain:
            raise FormatError('{} is not a point of the domain'.format(x), line.lineno, source)
        if y not in codomain:
            raise FormatError('{} is not a point of the codomain'.format(y), line.lineno, source)
        if x in blocks[-1]:
            raise FormatError('{} is mapped twice at t={}'.format(x, len(blocks) - 1), line.lineno, source)
        blocks[-1][x] = y

    _check_block(blocks, block_line, domain, source)
    if len(blocks) != n + 1:
        raise FormatError('header promises {} maps, found {}'.format(n + 1, len(blocks)), header.lineno, source)

    try:
        return HomotopyScript.from_tables(domain, codomain, blocks)
    except ScriptError as e:
        raise FormatError(str(e), header.lineno, source)


def _check_block(blocks, line, domain, source):
    if blocks and len(blocks[-1]) != len(domain):
        missing = min(domain.points - set(blocks[-1]))
        raise FormatError('block t={} has no value for {}'.format(len(blocks) - 1, missing), line.lineno, source)


def parse_certificate(text, image, codomain=None, source=None):
    script = parse_script(text, image, codomain, source)
    return ContractionCertificate(script, script.steps[-1](script.domain.sorted_points[0]))


def load_certificate(path, image, codomain=None):
    return parse_certificate(read_source(path), image, codomain, source=path)


def dump_script(script):
    out = ['homotopy {}'.format(script.length)]
    for t, f in enumerate(script.steps):
        out.append('t {}'.format(t))
        for x, y in f.table:
            out.append('{} -> {}'.format(format_point(x), format_point(y)))
    return '\n'.join(out) + '\n'
