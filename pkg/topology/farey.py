"""
Slopes and theta-graphs on the torus.

A slope p/q is a vertex of the Farey tessellation (infinity is 1/0), and a
theta-graph is a Farey triangle, i.e. a vertex of the dual trivalent tree.
Distances are computed by walking the tree across separating edges, using
only integer determinants.
"""
from collections import deque
from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from math import gcd

from .exceptions import ManifoldSyntaxError, NotATriangleError, NotCoprimeError, TopologyError


@total_ordering
@dataclass(frozen=True)
class Slope:
    """The class of p/q, stored with q > 0, or q = 0 and p = 1."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if gcd(p, q) != 1:
            raise NotCoprimeError(p, q)
        if q < 0 or (q == 0 and p < 0):
            object.__setattr__(self, 'p', -p)
            object.__setattr__(self, 'q', -q)

    @property
    def sort_key(self):
        return (self.q, self.p)

    def __lt__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        return self.sort_key < other.sort_key

    @property
    def is_infinite(self):
        return self.q == 0

    def __str__(self):
        if self.q == 0:
            return 'inf'
        if self.q == 1:
            return str(self.p)
        return f'{self.p}/{self.q}'

    @classmethod
    def parse(cls, text):
        raw = text.strip()
        if raw.lower() in ('inf', 'infinity', '1/0'):
            return INFINITY
        num, sep, den = raw.partition('/')
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ManifoldSyntaxError('expected a rational or inf', text, 0) from None
        return cls(p, q)


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)
ONE = Slope(1, 1)


def det(u, v):
    return u.p * v.q - u.q * v.p


def separates(x, y, v, z):
    """True when the Farey edge {x, y} separates slope v from slope z."""
    return det(x, v) * det(y, z) * det(x, z) * det(y, v) < 0


@dataclass(frozen=True)
class ThetaGraph:
    """A Farey triangle, stored as its sorted triple of slopes."""

    slopes: tuple

    def __post_init__(self):
        slopes = tuple(sorted(self.slopes))
        if len(slopes) != 3 or len(set(slopes)) != 3:
            raise NotATriangleError(slopes)
        for u, v in combinations(slopes, 2):
            if abs(det(u, v)) != 1:
                raise NotATriangleError(slopes)
        object.__setattr__(self, 'slopes', slopes)

    @classmethod
    def of(cls, *slopes):
        return cls(tuple(slopes))

    def __contains__(self, slope):
        return slope in self.slopes

    def __iter__(self):
        return iter(self.slopes)

    def edges(self):
        """Yield (x, y, z) for each edge {x, y} with opposite vertex z."""
        a, b, c = self.slopes
        yield b, c, a
        yield a, c, b
        yield a, b, c

    def __str__(self):
        return '{' + ','.join(str(s) for s in self.slopes) + '}'

    @classmethod
    def parse(cls, text):
        raw = text.strip()
        if not (raw.startswith('{') and raw.endswith('}')):
            raise ManifoldSyntaxError('expected {s1,s2,s3}', text, 0)
        parts = raw[1:-1].split(',')
        if len(parts) != 3:
            raise ManifoldSyntaxError('a theta-graph has three slopes', text, 1)
        return cls.of(*(Slope.parse(part) for part in parts))


def theta(i):
    """The triangle {i, i+1, inf}."""
    return ThetaGraph.of(Slope(i, 1), Slope(i + 1, 1), INFINITY)


def pq_complexity(p, q):
    """|p,q|: total of the Euclidean partial quotients of p/q, minus one."""
    if gcd(p, q) != 1:
        raise NotCoprimeError(p, q)
    if p < 0:
        p, q = -p, -q
    if p == 0 or q == 0:
        return 0
    if q < 0:
        return _positive_pq(p, -q) + 1
    return _positive_pq(p, q)


def _positive_pq(p, q):
    total = 0
    while q:
        quotient, remainder = divmod(p, q)
        total += quotient
        p, q = q, remainder
    return total - 1


def slope_complexity(slope):
    return pq_complexity(slope.p, slope.q)


def _flip_across(x, y, z):
    w = Slope(x.p + y.p, x.q + y.q)
    if w == z:
        w = Slope(x.p - y.p, x.q - y.q)
    return ThetaGraph.of(x, y, w)


def flips(t):
    """The three triangles sharing an edge with t."""
    return tuple(_flip_across(x, y, z) for x, y, z in t.edges())


def _step_towards(t, v):
    for x, y, z in t.edges():
        if separates(x, y, v, z):
            return _flip_across(x, y, z)
    raise TopologyError(f"no edge of {t} separates it from {v}")


def path_theta(a, b):
    path = [a]
    current = a
    while current != b:
        # any vertex of b outside current lies beyond the edge facing b
        v = next(s for s in b.slopes if s not in current)
        current = _step_towards(current, v)
        path.append(current)
    return path


def dist_theta_theta(a, b):
    return len(path_theta(a, b)) - 1


def dist_slope_theta(s, t):
    """Lines crossed from t to s, minus one; -1 when s is a vertex of t."""
    if s in t:
        return -1
    steps = 0
    current = t
    while s not in current:
        current = _step_towards(current, s)
        steps += 1
    return steps - 1


def ball(center, radius):
    """Map every triangle within `radius` flips of `center` to its distance."""
    seen = {center: 0}
    queue = deque([center])
    while queue:
        current = queue.popleft()
        depth = seen[current]
        if depth == radius:
            continue
        for neighbour in flips(current):
            if neighbour not in seen:
                seen[neighbour] = depth + 1
                queue.append(neighbour)
    return seen


def slopes_by_complexity(k_max):
    """Group slopes by |p,q| for 0 <= |p,q| <= k_max."""
    root = theta(0)
    levels = {0: sorted(root.slopes)}
    frontier = [(root, None)]
    for k in range(1, k_max + 1):
        next_frontier = []
        level = []
        for triangle, parent in frontier:
            for neighbour in flips(triangle):
                if neighbour == parent:
                    continue
                level.append(next(s for s in neighbour.slopes if s not in triangle))
                next_frontier.append((neighbour, triangle))
        levels[k] = sorted(level)
        frontier = next_frontier
    return levels
