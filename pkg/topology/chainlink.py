"""
Dehn fillings of the chain-link exterior.

A filling is an unordered triple of slopes. Six relations identify
homeomorphic fillings; orbits are explored breadth first under a cap on
slope height.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import NonHyperbolicError, OrbitCapExceeded, UnrecognizedFillingError
from .farey import INFINITY, ONE, ZERO, Slope
from .gl2 import GL2Mat
from .homology import HomologyGroup

logger = logging.getLogger(__name__)

DEFAULT_ORBIT_CAP = 10_000


@dataclass(frozen=True)
class FillingTriple:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(sorted(self.coeffs))
        if len(coeffs) != 3:
            raise UnrecognizedFillingError(f"a chain-link filling needs three slopes, got {len(coeffs)}")
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def of(cls, *slopes):
        return cls(tuple(s if isinstance(s, Slope) else Slope.parse(str(s)) for s in slopes))

    @property
    def sort_key(self):
        return tuple(s.sort_key for s in self.coeffs)

    @property
    def height(self):
        return max(max(abs(s.p), abs(s.q)) for s in self.coeffs)

    def __contains__(self, slope):
        return slope in self.coeffs

    def __iter__(self):
        return iter(self.coeffs)

    def count(self, slope):
        return self.coeffs.count(slope)

    def contains_pair(self, x, y):
        if x == y:
            return self.count(x) >= 2
        return x in self and y in self

    def without(self, slope):
        """The other two slopes once one copy of `slope` is removed."""
        rest = list(self.coeffs)
        rest.remove(slope)
        return tuple(rest)

    def __str__(self):
        return 'chain(' + ','.join(str(s) for s in self.coeffs) + ')'


def triple(*values):
    """FillingTriple from ints, strings such as '-3/2', or slopes."""
    return FillingTriple.of(*values)


# Hyperbolicity

_EXCLUDED_VALUES = {INFINITY, Slope(-3, 1), Slope(-2, 1), Slope(-1, 1), ZERO}

_EXCLUDED_PAIRS = (
    (ONE, ONE),
    (Slope(-4, 1), Slope(-1, 2)),
    (Slope(-3, 2), Slope(-5, 2)),
)

_EXCLUDED_TRIPLES = frozenset(
    triple(*values) for values in (
        (-5, -5, '-1/2'),
        (-4, -4, '-2/3'),
        (-4, '-3/2', '-3/2'),
        (-4, '-1/3', 1),
        ('-8/3', '-3/2', '-3/2'),
        ('-5/2', '-5/2', '-4/3'),
        ('-5/2', '-5/3', '-5/3'),
        ('-7/3', '-7/3', '-3/2'),
        (1, 2, 2),
        (1, 2, 3),
        (1, 2, 4),
        (1, 2, 5),
        (1, 3, 3),
        (2, 2, 2),
    )
)


def is_hyperbolic(t):
    if any(s in _EXCLUDED_VALUES for s in t):
        return False
    if any(t.contains_pair(x, y) for x, y in _EXCLUDED_PAIRS):
        return False
    return t not in _EXCLUDED_TRIPLES


_M221_EXCEPTIONAL = _EXCLUDED_VALUES | {Slope(-1, 2), Slope(-1, 3), ONE}


def m221_exceptional(s):
    """Slopes whose filling of the one-cusped sister manifold is not hyperbolic."""
    return s in _M221_EXCEPTIONAL


# Relations

_MINUS_FOUR = Slope(-4, 1)
_MINUS_THREE_HALVES = Slope(-3, 2)
_MINUS_FIVE_HALVES = Slope(-5, 2)
_MINUS_HALF = Slope(-1, 2)
_TWO = Slope(2, 1)

_TO_MINUS_FOUR = (GL2Mat(-1, -1, 1, 2), GL2Mat(-1, -3, 0, 1))
_FROM_MINUS_FOUR = (GL2Mat(-2, -1, 1, 1), GL2Mat(-1, -3, 0, 1))
_FIX_MINUS_THREE_HALVES = GL2Mat(-2, -5, 1, 2)
_FIX_MINUS_FIVE_HALVES = (GL2Mat(-1, -3, 1, 2), GL2Mat(-2, -3, 1, 1))
_FIX_MINUS_HALF = GL2Mat(-1, -4, 0, 1)
_FIX_ONE_TWO = GL2Mat(-1, 2, 0, 1)
_INVERT = GL2Mat(0, 1, 1, 0)


def relation_images(t):
    """Fillings one relation away from t."""
    images = set()
    for anchor in set(t):
        x, y = t.without(anchor)
        for u, v in ((x, y), (y, x)):
            if anchor == _MINUS_THREE_HALVES:
                first, second = _TO_MINUS_FOUR
                images.add(FillingTriple.of(_MINUS_FOUR, first.act(u), second.act(v)))
                images.add(FillingTriple.of(
                    anchor, _FIX_MINUS_THREE_HALVES.act(u), _FIX_MINUS_THREE_HALVES.act(v)
                ))
            elif anchor == _MINUS_FOUR:
                first, second = _FROM_MINUS_FOUR
                images.add(FillingTriple.of(_MINUS_THREE_HALVES, first.act(u), second.act(v)))
            elif anchor == _MINUS_FIVE_HALVES:
                first, second = _FIX_MINUS_FIVE_HALVES
                images.add(FillingTriple.of(anchor, first.act(u), second.act(v)))
            elif anchor == _MINUS_HALF:
                images.add(FillingTriple.of(anchor, _FIX_MINUS_HALF.act(u), _FIX_MINUS_HALF.act(v)))
    if t.contains_pair(ONE, _TWO):
        rest = list(t.coeffs)
        rest.remove(ONE)
        rest.remove(_TWO)
        images.add(FillingTriple.of(ONE, _TWO, _FIX_ONE_TWO.act(rest[0])))
    if t.contains_pair(ONE, _MINUS_FOUR):
        rest = list(t.coeffs)
        rest.remove(ONE)
        rest.remove(_MINUS_FOUR)
        images.add(FillingTriple.of(ONE, _MINUS_FOUR, _INVERT.act(rest[0])))
    images.discard(t)
    return images


# Homeomorphic fillings that no relation joins, each mapped to the filling it equals
KNOWN_DUPLICATES = {
    triple(-4, 1, '3/2'): triple(-4, 1, 2),
}

_DUPLICATE_NEIGHBOURS = {}
for _extra, _known in KNOWN_DUPLICATES.items():
    _DUPLICATE_NEIGHBOURS.setdefault(_extra, set()).add(_known)
    _DUPLICATE_NEIGHBOURS.setdefault(_known, set()).add(_extra)


def identified_images(t):
    """Relation images plus listed duplicates of t."""
    return relation_images(t) | _DUPLICATE_NEIGHBOURS.get(t, set())


def listed_duplicates(members):
    """The listed duplicates inside an orbit, as text."""
    return tuple(sorted(str(t) for t in KNOWN_DUPLICATES if t in members))


@lru_cache(maxsize=4096)
def explore_orbit(t, cap=DEFAULT_ORBIT_CAP):
    """(members, capped): the orbit of t below height `cap`, listed duplicates included."""
    members = {t}
    queue = deque([t])
    capped = False
    while queue:
        current = queue.popleft()
        for image in identified_images(current):
            if image in members:
                continue
            if image.height > cap:
                capped = True
                continue
            members.add(image)
            queue.append(image)
    if capped:
        logger.warning("orbit of %s capped at height %d with %d members", t, cap, len(members))
    return frozenset(members), capped


def canonical_triple(t, cap=DEFAULT_ORBIT_CAP):
    members, capped = explore_orbit(t, cap)
    if capped:
        raise OrbitCapExceeded(t, cap, sorted(members, key=lambda m: m.sort_key))
    return min(members, key=lambda m: m.sort_key)


def homology(t):
    """H1 from relations p_i mu_i + q_i (mu_j + mu_k)."""
    rows = []
    for i, s in enumerate(t.coeffs):
        row = [s.q] * 3
        row[i] = s.p
        rows.append(row)
    return HomologyGroup.from_relations(rows, 3)


# Non-hyperbolic fillings as graph manifolds

@dataclass(frozen=True)
class ProductFilling:
    """(D1 x S1) filled along two boundary slopes: not irreducible or a lens space."""

    first: Slope
    second: Slope

    def __str__(self):
        return f'(D1xS1)_{{{self.first},{self.second}}}'


@dataclass(frozen=True)
class OneBlock:
    """(D2 x S1) with three fillings, each a slope or a theta-graph marking."""

    fillings: tuple

    def __str__(self):
        return '(D2xS1)_{' + ','.join(str(f) for f in self.fillings) + '}'


@dataclass(frozen=True)
class TwoBlock:
    left: tuple
    gluing: GL2Mat
    right: tuple

    def __str__(self):
        left = ','.join(str(f) for f in self.left)
        right = ','.join(str(f) for f in self.right)
        return f'(D2xS1)_{{{left}}} U_{self.gluing} (D2xS1)_{{{right}}}'


@dataclass(frozen=True)
class SelfGlued:
    filling: Slope
    gluing: GL2Mat

    def __str__(self):
        return f'(D2xS1)_{{{self.filling}}} / {self.gluing}'


def nonhyperbolic_identity(t):
    """Describe a non-hyperbolic filling; patterns are tried in a fixed order."""
    if INFINITY in t:
        a, b = t.without(INFINITY)
        return ProductFilling(a, Slope(-b.q, b.p))
    if Slope(-3, 1) in t:
        a, b = t.without(Slope(-3, 1))
        return TwoBlock(
            (_TWO, Slope(a.p + a.q, a.p + 2 * a.q)),
            GL2Mat(1, 1, 0, -1),
            (_TWO, Slope(b.p + b.q, b.p + 2 * b.q)),
        )
    if Slope(-2, 1) in t:
        a, b = t.without(Slope(-2, 1))
        return OneBlock((Slope(3, 2), Slope(-2 * a.q - a.p, a.q), Slope(-2 * b.q - b.p, b.q)))
    if Slope(-1, 1) in t:
        a, b = t.without(Slope(-1, 1))
        return OneBlock((_TWO, Slope(-3 * a.q - a.p, a.q), Slope(-3 * b.q - b.p, b.q)))
    if ZERO in t:
        a, b = t.without(ZERO)
        return TwoBlock(
            (Slope(a.q, a.p + 2 * a.q), Slope(b.q, b.p + 2 * b.q)),
            GL2Mat(0, -1, 1, 1),
            (_TWO, Slope(3, 1)),
        )
    if t.count(ONE) >= 2:
        a, b = t.without(ONE)
        c = b if a == ONE else a
        return SelfGlued(Slope(-c.q, c.p + 2 * c.q), GL2Mat(1, -1, -1, 0))
    raise UnrecognizedFillingError(f"no graph-manifold description for {t}")


def require_hyperbolic(t):
    if not is_hyperbolic(t):
        raise NonHyperbolicError(f"{t} is not hyperbolic")
    return t
