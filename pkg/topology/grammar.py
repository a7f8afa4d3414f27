"""
Text syntax for manifolds; whitespace is ignored and keywords are case-insensitive.

    s3 | rp3 | lens(p,q)
    sfs(BASE;(p1,q1),...,(pk,qk);t)     BASE in S2, P2, T2, K2; ';t' optional
    tb[[a,b],[c,d]]                     determinant +1
    chain(x,y,z)                        x, y, z rationals or inf
"""
import re

from .chainlink import FillingTriple
from .descriptors import RP3, S3, ChainFilling, SeifertFibred, TorusBundle, lens_space
from .exceptions import ManifoldSyntaxError, NotCoprimeError
from .farey import INFINITY, Slope
from .gl2 import GL2Mat
from .seifert import BASES, normalize

_INTEGER = re.compile(r'[+-]?\d+')
_BASE_ALIASES = {'t': 'T2', 'k': 'K2'}


class _Cursor:
    def __init__(self, text):
        self.text = ''.join(text.split()).lower()
        self.pos = 0

    def error(self, message):
        raise ManifoldSyntaxError(message, self.text, self.pos)

    def accept(self, literal):
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal):
        if not self.accept(literal):
            self.error(f"expected {literal!r}")

    def integer(self):
        match = _INTEGER.match(self.text, self.pos)
        if not match:
            self.error('expected an integer')
        self.pos = match.end()
        return int(match.group())

    def slope(self):
        if self.accept('inf'):
            return INFINITY
        start = self.pos
        p = self.integer()
        q = self.integer() if self.accept('/') else 1
        try:
            return Slope(p, q)
        except NotCoprimeError as exc:
            self.pos = start
            self.error(str(exc))

    def pair(self):
        self.expect('(')
        start = self.pos
        p = self.integer()
        self.expect(',')
        q = self.integer()
        self.expect(')')
        return start, p, q

    def finish(self, value):
        if self.pos != len(self.text):
            self.error('unexpected trailing text')
        return value


def _lens(cursor):
    cursor.expect('(')
    start = cursor.pos
    p = cursor.integer()
    cursor.expect(',')
    q = cursor.integer()
    cursor.expect(')')
    try:
        return lens_space(p, q)
    except NotCoprimeError as exc:
        cursor.pos = start
        cursor.error(str(exc))


def _sfs(cursor):
    cursor.expect('(')
    for code in sorted(BASES, key=len, reverse=True) + list(_BASE_ALIASES):
        if cursor.accept(code.lower()):
            base = BASES[_BASE_ALIASES.get(code, code)]
            break
    else:
        cursor.error('expected a base surface S2, P2, T2 or K2')
    cursor.expect(';')
    fibres = []
    if not cursor.text.startswith(';', cursor.pos) and not cursor.text.startswith(')', cursor.pos):
        while True:
            start, p, q = cursor.pair()
            fibres.append((start, p, q))
            if not cursor.accept(','):
                break
    t = cursor.integer() if cursor.accept(';') else 0
    cursor.expect(')')
    for start, p, q in fibres:
        if p == 0:
            cursor.pos = start
            cursor.error('a fibre needs p != 0')
    try:
        manifold = normalize(base, [(p, q) for _, p, q in fibres], t)
    except NotCoprimeError as exc:
        cursor.error(str(exc))
    return SeifertFibred(manifold.canonical())


def _torus_bundle(cursor):
    start = cursor.pos
    values = []
    cursor.expect('[')
    for row in range(2):
        if row:
            cursor.expect(',')
        cursor.expect('[')
        values.append(cursor.integer())
        cursor.expect(',')
        values.append(cursor.integer())
        cursor.expect(']')
    cursor.expect(']')
    a, b, c, d = values
    if a * d - b * c != 1:
        cursor.pos = start
        cursor.error(f'monodromy must have determinant 1, got {a * d - b * c}')
    return TorusBundle.of_matrix(GL2Mat(a, b, c, d))


def _chain(cursor):
    cursor.expect('(')
    slopes = [cursor.slope()]
    for _ in range(2):
        cursor.expect(',')
        slopes.append(cursor.slope())
    cursor.expect(')')
    return ChainFilling(FillingTriple.of(*slopes))


_FORMS = (
    ('lens', _lens),
    ('sfs', _sfs),
    ('tb', _torus_bundle),
    ('chain', _chain),
)


def parse_manifold(text):
    """Descriptor for `text`; ManifoldSyntaxError carries the failing position."""
    cursor = _Cursor(text)
    if cursor.accept('rp3'):
        return cursor.finish(RP3)
    if cursor.accept('s3'):
        return cursor.finish(S3)
    for keyword, parser in _FORMS:
        if cursor.accept(keyword):
            return cursor.finish(parser(cursor))
    cursor.error('expected s3, rp3, lens(...), sfs(...), tb[[...]] or chain(...)')


def parse_slope(text):
    cursor = _Cursor(text)
    return cursor.finish(cursor.slope())
