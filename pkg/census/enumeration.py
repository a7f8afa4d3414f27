"""
Enumeration of the closed geometric manifolds of complexity at most 9.

The census is split into families (lens spaces, genuine Seifert manifolds,
torus bundles, hyperbolic chain-link fillings) and complexities; each
(family, complexity) job is independent so jobs can be sharded over Celery
workers and merged in a fixed order.
"""
import logging
from dataclasses import dataclass, field

from topology.chainlink import (
    DEFAULT_ORBIT_CAP, FillingTriple, explore_orbit, is_hyperbolic, listed_duplicates,
)
from topology.complexity import h_function, profile
from topology.descriptors import (
    L31, RP3, S3, ChainFilling, Exceptional, Lens, SeifertFibred, TorusBundle, lens_space,
)
from topology.exceptions import CensusIdentificationError, UnsupportedManifoldError
from topology.farey import Slope, slopes_by_complexity
from topology.gl2 import ConjClassKey, conj_norm, hyperbolic_classes
from topology.grammar import parse_manifold
from topology.invariants import homology_of
from topology.seifert import (
    BASES, Geometry, SeifertManifold, bundle_geometry, bundle_seifert_forms, coincidence,
    geometry_of,
)

logger = logging.getLogger(__name__)

MAX_COMPLEXITY = 9
HYPERBOLIC_MAX_COMPLEXITY = 10

ROW_ORDER = (
    Geometry.LENS,
    Geometry.ELLIPTIC,
    Geometry.FLAT,
    Geometry.NIL,
    Geometry.H2XR,
    Geometry.SL2,
    Geometry.SOL,
    Geometry.HYPERBOLIC,
)

ROW_LABELS = {
    Geometry.LENS: 'lens',
    Geometry.ELLIPTIC: 'other elliptic',
    Geometry.FLAT: 'flat',
    Geometry.NIL: 'Nil',
    Geometry.H2XR: 'H2xR',
    Geometry.SL2: 'SL2',
    Geometry.SOL: 'Sol',
    Geometry.HYPERBOLIC: 'hyperbolic',
}

FAMILIES = ('lens', 'seifert', 'bundles', 'hyperbolic')

GEOMETRY_FAMILIES = {
    Geometry.LENS: ('lens',),
    Geometry.ELLIPTIC: ('seifert',),
    Geometry.FLAT: ('seifert', 'bundles'),
    Geometry.NIL: ('seifert', 'bundles'),
    Geometry.H2XR: ('seifert',),
    Geometry.SL2: ('seifert',),
    Geometry.SOL: ('bundles',),
    Geometry.HYPERBOLIC: ('hyperbolic',),
}

FLAG_CONJECTURAL = 'conjecture-conditional'
FLAG_CAPPED = 'orbit-capped'

CAVEAT_SOL = 'Sol: interval-fibred members omitted, circle bundles only'
CAVEAT_HYPERBOLIC = (
    'hyperbolic: fillings identified under the conjecturally complete list of '
    'chain-link relations'
)
CAVEAT_CAPPED = 'hyperbolic: some orbits were cut at the height cap'


@dataclass(frozen=True)
class CensusItem:
    complexity: int
    geometry: Geometry
    descriptor: object
    homology: object
    flags: tuple = ()
    aliases: tuple = ()

    @property
    def manifold(self):
        return str(self.descriptor)

    def as_dict(self):
        return {
            'complexity': self.complexity,
            'geometry': self.geometry.value,
            'manifold': self.manifold,
            'homology': str(self.homology),
            'flags': list(self.flags),
            'aliases': list(self.aliases),
        }

    @classmethod
    def from_dict(cls, data):
        descriptor = parse_manifold(data['manifold'])
        return cls(
            complexity=data['complexity'],
            geometry=Geometry(data['geometry']),
            descriptor=descriptor,
            homology=homology_of(descriptor),
            flags=tuple(data.get('flags', ())),
            aliases=tuple(data.get('aliases', ())),
        )


_BUNDLE_KIND_ORDER = {'identity': 0, 'finite': 1, 'parabolic': 2, 'hyperbolic': 3}
_BASE_ORDER = {code: i for i, code in enumerate(BASES)}


def descriptor_sort_key(descriptor):
    """Total order used for every list in a report."""
    if isinstance(descriptor, Exceptional):
        return (0, ('s3', 'rp3', 'l31').index(descriptor.name))
    if isinstance(descriptor, Lens):
        return (1, (descriptor.p, descriptor.q))
    if isinstance(descriptor, SeifertFibred):
        M = descriptor.manifold
        return (2, (_BASE_ORDER[M.base.code], M.k, M.fibres, M.t))
    if isinstance(descriptor, TorusBundle):
        key = descriptor.key
        return (3, (_BUNDLE_KIND_ORDER[key.kind], -key.sign, key.data))
    return (4, descriptor.triple.sort_key)


def item_sort_key(item):
    return (item.complexity, ROW_ORDER.index(item.geometry), descriptor_sort_key(item.descriptor))


# Lens spaces

def _calkin_wilf_levels(depth):
    """Yield (d, pairs) for d = 0..depth; pairs at level d have |p,q| = d."""
    level = [(1, 1)]
    yield 0, level
    for d in range(1, depth + 1):
        level = [child for a, b in level for child in ((a, a + b), (a + b, b))]
        yield d, level


def enumerate_exceptional():
    return [CensusItem(0, Geometry.LENS, d, homology_of(d)) for d in (S3, RP3, L31)]


def enumerate_lens(c):
    """Lens spaces L(p,q) with |p,q| = c + 2, one per homeomorphism class."""
    if c == 0:
        return enumerate_exceptional()
    if not 1 <= c <= MAX_COMPLEXITY:
        return []
    level = dict(_calkin_wilf_levels(c + 2))[c + 2]
    spaces = {lens_space(p, q) for p, q in level if p > q}
    return [
        CensusItem(c, Geometry.LENS, lens, homology_of(lens))
        for lens in sorted(spaces, key=descriptor_sort_key)
    ]


# Seifert manifolds

def _fibres_by_cost(max_cost):
    """((p, q), |p,q| + 2) for p > q > 0 with cost <= max_cost, cheapest first."""
    pairs = []
    for depth, level in _calkin_wilf_levels(max(max_cost - 2, 0)):
        if depth == 0:
            continue
        pairs.extend(((a, b), depth + 2) for a, b in level if a > b)
    return sorted(pairs, key=lambda pair: (pair[1], pair[0]))


def _fibre_multisets(pairs, k, budget, start=0):
    """Non-decreasing index choices of k fibres with total cost <= budget."""
    if k == 0:
        yield ()
        return
    for i in range(start, len(pairs)):
        fibre, cost = pairs[i]
        if cost * k > budget:
            break
        for rest in _fibre_multisets(pairs, k - 1, budget - cost, i):
            yield ((fibre, cost),) + rest


def seifert_candidates(c):
    """Canonical forms whose generic formula is at most c + 2.

    The early-dropping family and the (2,1),(3,1),(p,q) family can lose up to
    two units from the generic value, so the search budget is c + 2.
    """
    bound = c + 2
    for base in BASES.values():
        budget = bound + 6 * (base.chi - 1)
        if budget < 0:
            continue
        # at least base.chi other fibres of cost >= 3 share the budget
        pairs = _fibres_by_cost(budget - 3 * base.chi)
        for k in range(base.chi + 1, budget // 3 + 1):
            for chosen in _fibre_multisets(pairs, k, budget):
                fibres = tuple(sorted(fibre for fibre, _ in chosen))
                room = budget - sum(cost for _, cost in chosen)
                for t in range(-(k // 2), room + 2 - base.chi):
                    M = SeifertManifold(base, fibres, t)
                    if M.canonical() == M:
                        yield M


def enumerate_seifert(c):
    """Genuine Seifert manifolds with c9 = c; torus bundles are left to enumerate_bundles."""
    if not 2 <= c <= MAX_COMPLEXITY:
        return []
    items = []
    for M in seifert_candidates(c):
        if coincidence(M) is not None:
            continue
        descriptor = SeifertFibred(M)
        if profile(descriptor).complexity != c:
            continue
        items.append(CensusItem(c, geometry_of(M), descriptor, homology_of(descriptor)))
    logger.debug(f"Seifert manifolds at complexity {c}: {len(items)}")
    return items


# Torus bundles

def _bundle_keys(c):
    yield ConjClassKey('identity', 1)
    yield ConjClassKey('identity', -1)
    for order in (3, 4, 6):
        yield ConjClassKey('finite', 1, (order,))
    for n in range(1, c - 3):
        for sign in (1, -1):
            yield ConjClassKey('parabolic', sign, (n,))
    # word length equals ||A|| on every class seen so far; conj_norm re-checks
    for length in range(2, c - 3):
        yield from hyperbolic_classes(length)


def _seifert_aliases(key):
    bundle = TorusBundle(key)
    forms = bundle_seifert_forms(key)
    if not forms:
        raise CensusIdentificationError(f"no Seifert expression recorded for {bundle}")
    for form in forms:
        if coincidence(form) != bundle:
            raise CensusIdentificationError(f"{form} does not match {bundle}")
    return tuple(str(form.canonical()) for form in forms)


def enumerate_bundles(c):
    """Torus bundles with max(||A|| + 5, 6) = c; flat and Nil ones carry their Seifert aliases."""
    if not 6 <= c <= MAX_COMPLEXITY:
        return []
    items = []
    for key in _bundle_keys(c):
        if max(conj_norm(key.representative()) + 5, 6) != c:
            continue
        bundle = TorusBundle(key)
        aliases = () if key.is_hyperbolic else _seifert_aliases(key)
        items.append(CensusItem(c, bundle_geometry(key), bundle, homology_of(bundle), (), aliases))
    return items


# Hyperbolic fillings of the chain link

def _shifted_slopes(budget):
    """(x, T(x)) with T(x) = |p+2q, q| <= budget, cheapest first."""
    shifted = []
    for level, slopes in slopes_by_complexity(budget).items():
        for y in slopes:
            if not y.is_infinite:
                shifted.append((Slope(y.p - 2 * y.q, y.q), level))
    return sorted(shifted, key=lambda pair: (pair[1], pair[0].sort_key))


def _candidate_triples(budget):
    slopes = _shifted_slopes(budget)
    for i, (x, a) in enumerate(slopes):
        if 3 * a > budget:
            break
        for j in range(i, len(slopes)):
            y, b = slopes[j]
            if a + 2 * b > budget:
                break
            for k in range(j, len(slopes)):
                z, d = slopes[k]
                if a + b + d > budget:
                    break
                yield FillingTriple.of(x, y, z)


def enumerate_hyperbolic(c, cap=DEFAULT_ORBIT_CAP):
    """Hyperbolic fillings with c9 = c, one per relation orbit."""
    if c > HYPERBOLIC_MAX_COMPLEXITY:
        raise UnsupportedManifoldError(f"the hyperbolic census stops at complexity {HYPERBOLIC_MAX_COMPLEXITY}")
    if c < 9:
        return []
    representative = {}
    found = {}
    for t in _candidate_triples(c - 2):
        if t in representative or not is_hyperbolic(t) or h_function(t) > c:
            continue
        members, capped = explore_orbit(t, cap)
        least = min(members, key=lambda m: m.sort_key)
        for member in members:
            representative[member] = least
        if least in found or min(h_function(m) for m in members) != c:
            continue
        flags = (FLAG_CONJECTURAL, FLAG_CAPPED) if capped else (FLAG_CONJECTURAL,)
        descriptor = ChainFilling(least)
        aliases = listed_duplicates(members)
        found[least] = CensusItem(c, Geometry.HYPERBOLIC, descriptor, homology_of(descriptor), flags, aliases)
    return sorted(found.values(), key=item_sort_key)


# Reports

def enumerate_family(family, c, cap=DEFAULT_ORBIT_CAP):
    if family == 'lens':
        return enumerate_lens(c)
    if family == 'seifert':
        return enumerate_seifert(c)
    if family == 'bundles':
        return enumerate_bundles(c)
    if family == 'hyperbolic':
        return enumerate_hyperbolic(c, cap)
    raise UnsupportedManifoldError(f"unknown census family {family!r}")


def census_jobs(c_max, geometry=None):
    """(family, complexity) jobs, in the order the merge expects."""
    if not 0 <= c_max <= HYPERBOLIC_MAX_COMPLEXITY:
        raise UnsupportedManifoldError(f"complexity {c_max} is outside 0..{HYPERBOLIC_MAX_COMPLEXITY}")
    families = GEOMETRY_FAMILIES[geometry] if geometry else FAMILIES
    if c_max > MAX_COMPLEXITY and families != ('hyperbolic',):
        raise UnsupportedManifoldError("complexity 10 is only listed for hyperbolic manifolds")
    return [(family, c) for c in range(c_max + 1) for family in families]


@dataclass(frozen=True)
class CensusRow:
    complexity: int
    geometry: Geometry
    items: tuple

    @property
    def count(self):
        return len(self.items)


@dataclass(frozen=True)
class CensusReport:
    c_max: int
    rows: tuple
    caveats: tuple = ()
    geometries: tuple = field(default=ROW_ORDER)

    @property
    def complexities(self):
        return range(self.c_max + 1)

    def row(self, c, geometry):
        for row in self.rows:
            if row.complexity == c and row.geometry == geometry:
                return row
        return CensusRow(c, geometry, ())

    def count(self, c, geometry):
        return self.row(c, geometry).count

    def total(self, c):
        return sum(row.count for row in self.rows if row.complexity == c)

    def items(self):
        return [item for row in self.rows for item in row.items]

    def only(self, geometry):
        items = [item for item in self.items() if item.geometry == geometry]
        return build_report(items, self.c_max, (geometry,))


def build_report(items, c_max, geometries=ROW_ORDER):
    """Merge items into rows; a manifold listed twice is an identification error."""
    seen = {}
    for item in items:
        if item.manifold in seen:
            raise CensusIdentificationError(
                f"{item.manifold} listed at complexity {seen[item.manifold]} and {item.complexity}"
            )
        seen[item.manifold] = item.complexity
    ordered = sorted(items, key=item_sort_key)
    rows = []
    for c in range(c_max + 1):
        for geometry in geometries:
            members = tuple(item for item in ordered if item.complexity == c and item.geometry == geometry)
            if members:
                rows.append(CensusRow(c, geometry, members))
    caveats = []
    if Geometry.SOL in geometries and c_max >= 6:
        caveats.append(CAVEAT_SOL)
    if any(FLAG_CONJECTURAL in item.flags for item in items):
        caveats.append(CAVEAT_HYPERBOLIC)
    if any(FLAG_CAPPED in item.flags for item in items):
        caveats.append(CAVEAT_CAPPED)
    return CensusReport(c_max, tuple(rows), tuple(caveats), tuple(geometries))


def full_census(c_max, cap=DEFAULT_ORBIT_CAP, geometry=None):
    items = []
    for family, c in census_jobs(c_max, geometry):
        found = enumerate_family(family, c, cap)
        logger.info(f"{family} at complexity {c}: {len(found)} manifolds")
        items.extend(found)
    if geometry:
        return build_report([item for item in items if item.geometry == geometry], c_max, (geometry,))
    return build_report(items, c_max)
