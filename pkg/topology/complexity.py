"""
The complexities c0, ..., c9 of the manifolds in the census.

Values are non-negative ints or math.inf. Each entry of a profile carries an
Exactness tag: the hyperbolic c8 relies on a conjectural lower bound and a
capped orbit search only yields an upper bound.
"""
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations

from .chainlink import DEFAULT_ORBIT_CAP, explore_orbit, m221_exceptional, require_hyperbolic
from .chainlink import OneBlock, ProductFilling, SelfGlued, TwoBlock
from .descriptors import ChainFilling, Exceptional, Lens, SeifertFibred, TorusBundle, lens_space
from .exceptions import NonHyperbolicError, UnsupportedManifoldError
from .farey import INFINITY, Slope, dist_slope_theta, dist_theta_theta, pq_complexity, theta
from .gl2 import GL2Mat, conj_class_key, conj_norm, norm
from .seifert import S2, coincidence, mstar_info

INF = math.inf
LEVELS = range(10)


class Exactness(str, Enum):
    EXACT = 'exact'
    UPPER_BOUND = 'upper-bound'
    CONJECTURAL = 'conjecture-conditional'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ComplexityProfile:
    values: tuple
    tags: tuple

    @classmethod
    def uniform(cls, values, tag=Exactness.EXACT):
        values = tuple(values)
        return cls(values, (tag,) * len(values))

    def __getitem__(self, n):
        return self.values[n]

    @property
    def complexity(self):
        """c = c9."""
        return self.values[9]

    def is_non_increasing(self):
        return all(a >= b for a, b in zip(self.values, self.values[1:]))

    def is_well_behaved(self):
        """c1 = c2 and c3 = ... = c7."""
        return self.values[1] == self.values[2] and len(set(self.values[3:8])) == 1

    def as_dict(self):
        return {
            'values': [None if v == INF else v for v in self.values],
            'tags': [str(tag) for tag in self.tags],
        }

    def __str__(self):
        values = ' '.join('inf' if v == INF else str(v) for v in self.values)
        flagged = [f'c{n}:{tag}' for n, tag in enumerate(self.tags) if tag != Exactness.EXACT]
        return values + (f"  ({', '.join(flagged)})" if flagged else '')


# Bricks of the decomposition theory

@dataclass(frozen=True)
class Brick:
    name: str
    complexity: int
    description: str


BRICKS = (
    Brick('B0', 0, 'T x I with the same theta-graph on both ends'),
    Brick('B1', 0, 'solid torus, meridian a vertex of the marking'),
    Brick('B2', 0, 'solid torus marked by {0,1/2,1}'),
    Brick('B3', 1, 'T x I with theta-graphs one flip apart'),
    Brick('B4', 3, '(disc with two holes) x S1, each boundary marked'),
    Brick('B5', 8, '(D,(2,1),(3,1)) with marked boundary'),
    Brick('B6', 8, 'M2_2^1 with marked boundary'),
    Brick('B7', 9, 'M3_4^1 with marked boundary'),
    Brick('B8', 9, 'M4_1^2 with marked boundaries'),
    Brick('B9', 9, 'M6_1^3, first marking'),
    Brick('B10', 9, 'M6_1^3, second marking'),
)


# Elementary evaluators

def c1_t_times_i(theta0, theta1):
    """c1 of T x I with boundary markings theta0 and theta1."""
    return dist_theta_theta(theta0, theta1)


def c1_solid_torus(marking):
    """c1 of the solid torus with meridian inf, i.e. min over n of d(marking, {n, n+1/2, n+1})."""
    if INFINITY in marking:
        raise UnsupportedManifoldError(f"meridian is a vertex of {marking}: brick B1")
    return dist_slope_theta(INFINITY, marking)


def c_lens(p, q):
    if isinstance(lens_space(p, q), Exceptional):
        raise UnsupportedManifoldError(f"lens({p},{q}) has complexity zero: use the exceptional profile")
    value = pq_complexity(p, q) - 2
    return ComplexityProfile.uniform((INF,) + (value,) * 9)


def c_torus_bundle(A):
    conj_class_key(A)
    displacement = conj_norm(A)
    value = max(displacement + 5, 6)
    c0 = 6 if displacement <= 1 else INF
    return ComplexityProfile.uniform((c0,) + (value,) * 9)


def _seifert_family_value(M):
    """|p,q| + 2 for (S2,(2,1),(3,1),(p,q),-1) with p/q > 5 not an integer, else None."""
    for form in (M, M.reverse_orientation()):
        if form.base != S2 or form.k != 3 or form.t != -1:
            continue
        (a, b), (c, d), (p, q) = form.fibres
        if (a, b, c, d) == (2, 1, 3, 1) and q > 1 and p > 5 * q:
            return pq_complexity(p, q) + 2
    return None


def c_seifert(M):
    if coincidence(M) is not None or mstar_info(M) is not None:
        raise UnsupportedManifoldError(f"{M} is routed to its coincidence or to c_mstar")
    chi = M.base.chi
    if M.k - chi <= 0:
        raise UnsupportedManifoldError(f"{M} is not a genuine Seifert form")
    M = M.canonical()
    value = max(0, M.t - 1 + chi) - 6 * (chi - 1) + sum(pq_complexity(p, q) + 2 for p, q in M.fibres)
    low = _seifert_family_value(M)
    tail = (value, value) if low is None else (low, low)
    return ComplexityProfile.uniform((INF,) * 3 + (value,) * 5 + tail)


def c_mstar(M):
    info = mstar_info(M)
    if info is None:
        raise UnsupportedManifoldError(f"{M} is not in the E/C family")
    c_star = info.c_star
    generic = sum(pq_complexity(p, q) for p, q in M.canonical().fibres)
    values, tags = [], []
    for n in LEVELS:
        if n >= c_star:
            values.append(c_star)
            tags.append(Exactness.EXACT)
        elif n < 3:
            values.append(INF)
            tags.append(Exactness.EXACT)
        elif info.family == 'E' and n >= 8:
            # c9 = c* + 1 pins this value only once c* > 9
            values.append(info.indices[0] + 6)
            tags.append(Exactness.EXACT if c_star > 9 else Exactness.UPPER_BOUND)
        else:
            values.append(generic)
            tags.append(Exactness.EXACT if n == 9 else Exactness.UPPER_BOUND)
    return ComplexityProfile(tuple(values), tuple(tags))


# Hyperbolic fillings of the chain link

def _value(s):
    return Fraction(s.p, s.q)


def _h_offset(t):
    values = [_value(s) for s in t]
    offset = None
    for i, j, k in permutations(range(3)):
        if values[i] == 1 and values[j] in (-4, -5):
            if values[k] > -1:
                return 2
            if values[k] < -1:
                offset = 4
    if offset is not None:
        return offset
    if all(v != 1 and v > -2 for v in values):
        return 6
    return 5


def _shifted_complexity(s):
    """T(p/q) = |p+2q, q|."""
    return pq_complexity(s.p + 2 * s.q, s.q)


def h_function(t):
    if any(s.is_infinite for s in t):
        raise NonHyperbolicError(f"h is undefined on {t}")
    return _h_offset(t) + sum(_shifted_complexity(s) for s in t)


def c9_hyperbolic(t, cap=DEFAULT_ORBIT_CAP):
    """min of h over the orbit of t; an upper bound when the orbit was capped."""
    members, _ = explore_orbit(require_hyperbolic(t), cap)
    return min(h_function(m) for m in members)


def c8_m221(s):
    """c8 of the filling of the sister manifold along s."""
    if m221_exceptional(s):
        raise NonHyperbolicError(f"the filling along {s} is not hyperbolic")
    return min(7 + pq_complexity(s.p, -s.q), 7 + pq_complexity(s.q, -s.p))


_ONE = Slope(1, 1)
_MINUS_FOUR = Slope(-4, 1)


def chain_profile(t, cap=DEFAULT_ORBIT_CAP):
    members, capped = explore_orbit(require_hyperbolic(t), cap)
    c9 = min(h_function(m) for m in members)
    sisters = [
        m.without(_ONE)
        for m in members
        if m.contains_pair(_ONE, _MINUS_FOUR)
    ]
    c8 = min(
        (c8_m221(b if a == _MINUS_FOUR else a) for a, b in sisters),
        default=INF,
    )
    values = (INF,) * 8 + (c8, c9)
    tags = (Exactness.EXACT,) * 8 + (
        Exactness.CONJECTURAL,
        Exactness.CONJECTURAL if capped else Exactness.EXACT,
    )
    return ComplexityProfile(values, tags)


# Graph-manifold upper bounds

THETA_ZERO = theta(0)
THETA_MINUS_ONE = theta(-1)


def _distance(filling, target):
    if isinstance(filling, Slope):
        return dist_slope_theta(filling, target)
    return dist_theta_theta(filling, target)


def graph_upper_bounds(description):
    """Upper bound for c9 from a graph-manifold description of a filling."""
    if isinstance(description, OneBlock):
        fillings = description.fillings
        return min(
            3
            + sum(_distance(fillings[j], THETA_ZERO) for j in range(3) if j != third)
            + _distance(fillings[third], THETA_MINUS_ONE)
            for third in range(3)
        )
    if isinstance(description, TwoBlock):
        i, j, h, k = (description.gluing.a, description.gluing.b,
                      description.gluing.c, description.gluing.d)
        fillings = description.left + description.right
        return 6 + sum(_distance(f, THETA_ZERO) for f in fillings) + norm(GL2Mat(i, -j, -h, k))
    if isinstance(description, SelfGlued):
        return 9 + _distance(description.filling, THETA_MINUS_ONE)
    if isinstance(description, ProductFilling):
        raise UnsupportedManifoldError(f"{description} is reducible or a lens space")
    raise UnsupportedManifoldError(f"unknown description {description!r}")


# Dispatch

def profile(descriptor, cap=DEFAULT_ORBIT_CAP):
    """c0..c9 of any descriptor."""
    if isinstance(descriptor, Exceptional):
        return ComplexityProfile.uniform((0,) * 10)
    if isinstance(descriptor, Lens):
        return c_lens(descriptor.p, descriptor.q)
    if isinstance(descriptor, TorusBundle):
        return c_torus_bundle(descriptor.monodromy)
    if isinstance(descriptor, SeifertFibred):
        M = descriptor.manifold
        other = coincidence(M)
        if other is not None:
            return profile(other, cap)
        if mstar_info(M) is not None:
            return c_mstar(M)
        return c_seifert(M)
    if isinstance(descriptor, ChainFilling):
        return chain_profile(descriptor.triple, cap)
    raise UnsupportedManifoldError(f"no complexity routine for {descriptor!r}")
