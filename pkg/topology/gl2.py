"""
GL(2,Z) algebra on the Farey tree.

|A| is the tree distance between theta(0) and its image, ||A|| the minimal
displacement of A on the tree. Conjugacy keys identify torus-bundle
monodromies up to conjugation in GL(2,Z) and inversion.
"""
import re
from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt, lcm

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from .exceptions import DeterminantError, ManifoldSyntaxError, NotMonodromyError, TopologyError
from .farey import Slope, ThetaGraph, ball, dist_theta_theta, flips, path_theta, theta


_MATRIX_RE = re.compile(r'^\[\[(-?\d+),(-?\d+)\],\[(-?\d+),(-?\d+)\]\]$')


@dataclass(frozen=True)
class GL2Mat:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise DeterminantError(self.det)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def trace(self):
        return self.a + self.d

    def __matmul__(self, other):
        return GL2Mat(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self):
        return GL2Mat(-self.a, -self.b, -self.c, -self.d)

    def scaled(self, sign):
        return self if sign > 0 else -self

    def inverse(self):
        e = self.det
        return GL2Mat(e * self.d, -e * self.b, -e * self.c, e * self.a)

    def power(self, n):
        result = IDENTITY
        for _ in range(n):
            result = result @ self
        return result

    def act(self, slope):
        return Slope(self.a * slope.p + self.b * slope.q, self.c * slope.p + self.d * slope.q)

    def act_theta(self, t):
        return ThetaGraph(tuple(self.act(s) for s in t.slopes))

    def __str__(self):
        return f'[[{self.a},{self.b}],[{self.c},{self.d}]]'

    @classmethod
    def parse(cls, text):
        match = _MATRIX_RE.match(''.join(text.split()))
        if not match:
            raise ManifoldSyntaxError('expected [[a,b],[c,d]]', text, 0)
        return cls(*(int(group) for group in match.groups()))


IDENTITY = GL2Mat(1, 0, 0, 1)
S1 = GL2Mat(1, -1, 0, -1)
S2 = GL2Mat(-1, 0, -1, 1)
S3 = GL2Mat(0, 1, 1, 0)
J = GL2Mat(-1, 0, 0, 1)
R = GL2Mat(1, 1, 0, 1)
L = GL2Mat(1, 0, 1, 1)

GENERATORS = {1: S1, 2: S2, 3: S3}


@dataclass(frozen=True)
class Decomposition:
    """A = epsilon * S_{i0} J S_{i1} J ... J S_{in} * S1^m."""

    epsilon: int
    indices: tuple
    m: int

    @property
    def norm(self):
        return len(self.indices) - 1

    def reconstruct(self):
        result = GENERATORS[self.indices[0]]
        for index in self.indices[1:]:
            result = result @ J @ GENERATORS[index]
        return (result @ S1.power(self.m)).scaled(self.epsilon)

    def __str__(self):
        sign = '' if self.epsilon > 0 else '-'
        word = ' J '.join(f'S{i}' for i in self.indices)
        tail = ' S1' if self.m else ''
        return f'{sign}{word}{tail}'


def decompose(A):
    root = theta(0)
    prefix = IDENTITY
    indices = []
    for target in path_theta(root, A.act_theta(root))[1:]:
        for index in (1, 2, 3):
            candidate = prefix @ GENERATORS[index] @ J
            if candidate.act_theta(root) == target:
                break
        else:
            raise TopologyError(f"no generator reaches {target}")
        prefix = candidate
        indices.append(index)
    rest = prefix.inverse() @ A
    # rest stabilises theta(0): one of the twelve epsilon * S_i * S1^m
    for epsilon, index, m in product((1, -1), (1, 2, 3), (0, 1)):
        if (GENERATORS[index] @ S1.power(m)).scaled(epsilon) == rest:
            return Decomposition(epsilon, tuple(indices + [index]), m)
    raise TopologyError(f"{rest} does not stabilise theta(0)")


def norm(A):
    root = theta(0)
    return dist_theta_theta(root, A.act_theta(root))


def _displacement(A, t):
    return dist_theta_theta(t, A.act_theta(t))


def conj_norm(A):
    """Steepest descent of t -> d(t, At) from theta(0)."""
    current = theta(0)
    value = _displacement(A, current)
    while value > 0:
        best_value, best = min(
            ((_displacement(A, neighbour), neighbour) for neighbour in flips(current)),
            key=lambda pair: pair[0],
        )
        if best_value >= value:
            break
        value, current = best_value, best
    return value


def conj_norm_brute_force(A):
    return min(_displacement(A, t) for t in ball(theta(0), norm(A)))


# Conjugacy keys

_FINITE_ORDER = {0: 4, 1: 6, -1: 3}
_FINITE_REPRESENTATIVE = {
    4: GL2Mat(0, 1, -1, 0),
    6: GL2Mat(0, 1, -1, 1),
    3: GL2Mat(0, 1, -1, -1),
}


@dataclass(frozen=True)
class ConjClassKey:
    kind: str
    sign: int = 1
    data: tuple = ()

    def representative(self):
        if self.kind == 'identity':
            return IDENTITY.scaled(self.sign)
        if self.kind == 'finite':
            return _FINITE_REPRESENTATIVE[self.data[0]]
        if self.kind == 'parabolic':
            return GL2Mat(1, self.data[0], 0, 1).scaled(self.sign)
        return word_matrix(self.data).scaled(self.sign)

    @property
    def is_hyperbolic(self):
        return self.kind == 'hyperbolic'

    def __str__(self):
        sign = '+' if self.sign > 0 else '-'
        if self.kind == 'identity':
            return f'identity({sign})'
        if self.kind == 'finite':
            return f'order{self.data[0]}'
        if self.kind == 'parabolic':
            return f'parabolic({sign},{self.data[0]})'
        letters = ''.join(
            ('R' if i % 2 == 0 else 'L') + (f'^{e}' if e > 1 else '')
            for i, e in enumerate(self.data)
        )
        return f'hyperbolic({sign},{letters})'


def word_matrix(exponents):
    result = IDENTITY
    for i, e in enumerate(exponents):
        result = result @ (R if i % 2 == 0 else L).power(e)
    return result


def necklace(exponents):
    """Least rotation of the exponent sequence or of its reversal."""
    seq = tuple(exponents)
    backwards = seq[::-1]
    candidates = [seq[i:] + seq[:i] for i in range(len(seq))]
    candidates += [backwards[i:] + backwards[:i] for i in range(len(seq))]
    return min(candidates)


def conj_class_key(A):
    if A.det != 1:
        raise NotMonodromyError(A)
    if A == IDENTITY:
        return ConjClassKey('identity', 1)
    if A == -IDENTITY:
        return ConjClassKey('identity', -1)
    tr = A.trace
    if tr in _FINITE_ORDER:
        return ConjClassKey('finite', 1, (_FINITE_ORDER[tr],))
    sign = 1 if tr > 0 else -1
    M = A.scaled(sign)
    if tr in (2, -2):
        content = gcd(gcd(M.a - 1, M.b), gcd(M.c, M.d - 1))
        return ConjClassKey('parabolic', sign, (content,))
    return ConjClassKey('hyperbolic', sign, _hyperbolic_word(M))


def _hyperbolic_word(M):
    """Exponents of M (trace > 2) read off the continued fraction of a fixed point."""
    tau = M.trace
    disc = tau * tau - 4
    root = isqrt(disc)
    # fixed point (P + sqrt(disc)) / Q
    state = (M.a - M.d, 2 * M.c)
    seen = {}
    quotients = []
    while state not in seen:
        seen[state] = len(quotients)
        P, Q = state
        if Q > 0:
            quotient = (P + root) // Q
        else:
            quotient = (-P - root - 1) // (-Q)
        quotients.append(quotient)
        P = quotient * Q - P
        state = (P, (disc - P * P) // Q)
    period = quotients[seen[state]:]
    if len(period) % 2:
        period = period * 2
    primitive = word_matrix(period)
    power, W = 1, primitive
    while W.trace < tau:
        W = W @ primitive
        power += 1
    if W.trace != tau:
        raise TopologyError(f"{M} is not a power of its primitive word")
    return necklace(tuple(period) * power)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def hyperbolic_classes(length):
    """Hyperbolic keys (both signs) whose R/L word has total exponent `length`."""
    words = set()
    for parts in range(2, length + 1, 2):
        for composition in _compositions(length, parts):
            words.add(necklace(composition))
    return [ConjClassKey('hyperbolic', sign, word) for word in sorted(words) for sign in (1, -1)]


# Smith normal form

def smith_normal_form(rows):
    """Diagonal d1 | d2 | ... of the Smith form, zeros last, entries >= 0."""
    matrix = Matrix(rows)
    size = min(matrix.shape)
    if size == 0:
        return ()
    if all(entry == 0 for entry in matrix):
        diagonal = [0] * size
    else:
        reduced = sympy_smith_normal_form(matrix, domain=ZZ)
        diagonal = [abs(int(reduced[i, i])) for i in range(size)]
    return _divisor_chain(diagonal)


def _divisor_chain(diagonal):
    values = list(diagonal)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            values[i], values[j] = gcd(values[i], values[j]), lcm(values[i], values[j])
    return tuple(values)
