"""
Closed Seifert fibred spaces (F, (p1,q1), ..., (pk,qk), t).

Normalized form has every fibre with p > q > 0 (fibres with p = 1 folded
into t) and fibres sorted. Orientation reversal sends t to -t-k and each q
to p-q; `canonical()` picks a representative of the unoriented class.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .descriptors import SeifertFibred, TorusBundle, lens_space
from .exceptions import NotCoprimeError, UnsupportedManifoldError
from .gl2 import GL2Mat, ConjClassKey
from .homology import HomologyGroup


class Geometry(str, Enum):
    LENS = 'lens'
    ELLIPTIC = 'elliptic'
    FLAT = 'flat'
    NIL = 'Nil'
    H2XR = 'H2xR'
    SL2 = 'SL2'
    SOL = 'Sol'
    S2XR = 'S2xR'
    HYPERBOLIC = 'hyperbolic'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BaseSurface:
    code: str
    orientable: bool
    genus: int

    @property
    def chi(self):
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    def __str__(self):
        return self.code


S2 = BaseSurface('S2', True, 0)
P2 = BaseSurface('P2', False, 1)
T2 = BaseSurface('T2', True, 1)
K2 = BaseSurface('K2', False, 2)

BASES = {base.code: base for base in (S2, P2, T2, K2)}


@dataclass(frozen=True)
class SeifertManifold:
    base: BaseSurface
    fibres: tuple
    t: int

    @property
    def k(self):
        return len(self.fibres)

    @property
    def euler_number(self):
        return self.t + sum(Fraction(q, p) for p, q in self.fibres)

    @property
    def orbifold_euler_characteristic(self):
        return self.base.chi - sum(1 - Fraction(1, p) for p, _ in self.fibres)

    def reverse_orientation(self):
        fibres = tuple(sorted((p, p - q) for p, q in self.fibres))
        return SeifertManifold(self.base, fibres, -self.t - self.k)

    def canonical(self):
        """Keep t >= -k/2; on the tie take the smaller fibre list."""
        balance = 2 * self.t + self.k
        if balance > 0:
            return self
        mirror = self.reverse_orientation()
        if balance < 0:
            return mirror
        return min(self, mirror, key=lambda m: m.fibres)

    def __str__(self):
        fibres = ','.join(f'({p},{q})' for p, q in self.fibres)
        return f'sfs({self.base};{fibres};{self.t})'


def normalize(base, fibres, t=0):
    total = t
    reduced = []
    for p, q in fibres:
        if gcd(p, q) != 1:
            raise NotCoprimeError(p, q)
        if p == 0:
            raise UnsupportedManifoldError(f"({p},{q}) is not a fibre invariant")
        size = abs(p)
        signed_q = q if p > 0 else -q
        remainder = signed_q % size
        total += (signed_q - remainder) // size
        if size > 1:
            reduced.append((size, remainder))
    return SeifertManifold(base, tuple(sorted(reduced)), total)


def seifert(base, fibres=(), t=0):
    """Build and normalize from a base code such as 'S2'."""
    if isinstance(base, str):
        try:
            base = BASES[base]
        except KeyError:
            raise UnsupportedManifoldError(f"unknown base surface {base!r}") from None
    return normalize(base, fibres, t)


# Coincidences with lens spaces and torus bundles

def _bezout(a, b):
    """(u, v) with a*u + b*v = 1."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_u, u = u, old_u - quotient * u
        old_v, v = v, old_v - quotient * v
    if old_r < 0:
        old_u, old_v = -old_u, -old_v
    return old_u, old_v


def _two_fibre_lens(M):
    (a1, b1), (a2, b2) = list(M.fibres) + [(1, 0)] * (2 - M.k)
    b2 += M.t * a2
    p = a1 * b2 + a2 * b1
    if p == 0:
        raise UnsupportedManifoldError(f"{M} is not irreducible")
    u, v = _bezout(a1, b1)
    # y = u, x = -v solves a1*y - b1*x = 1
    q = a2 * u - b2 * v
    return lens_space(p, q)


_S2_BUNDLES = {
    (((2, 1), (3, 1), (6, 1)), -1): ConjClassKey('finite', 1, (6,)),
    (((2, 1), (4, 1), (4, 1)), -1): ConjClassKey('finite', 1, (4,)),
    (((3, 1), (3, 1), (3, 1)), -1): ConjClassKey('finite', 1, (3,)),
    (((2, 1), (2, 1), (2, 1), (2, 1)), -2): ConjClassKey('identity', -1),
}


def projective_as_sphere(M):
    """(P2,(p,q),t) is (S2,(2,1),(2,-1),(q+tp,p)) up to orientation."""
    p, q = M.fibres[0] if M.fibres else (1, 0)
    n = q + M.t * p
    if n == 0:
        raise UnsupportedManifoldError(f"{M} is RP3 # RP3, which is not irreducible")
    return seifert('S2', [(2, 1), (2, -1), (n, p)])


def coincidence(M):
    """
    The lens space or torus bundle M equals, or None for a genuine form.

    A P2 base with at most one fibre gives the S2 expression instead (or
    the lens space that expression collapses to).
    """
    if M.base == S2 and M.k <= 2:
        return _two_fibre_lens(M)
    if M.base == P2 and M.k <= 1:
        other = projective_as_sphere(M)
        return coincidence(other) or SeifertFibred(other.canonical())
    if M.base in (T2, K2) and M.k == 0:
        sign = 1 if M.base == T2 else -1
        return TorusBundle.of_matrix(GL2Mat(1, M.t, 0, 1).scaled(sign))
    canonical = M.canonical()
    if canonical.base == S2:
        key = _S2_BUNDLES.get((canonical.fibres, canonical.t))
        if key is not None:
            return TorusBundle(key)
    return None


def is_genuine(M):
    return M.k - M.base.chi > 0 and coincidence(M) is None


def geometry_of(M):
    if not is_genuine(M):
        raise UnsupportedManifoldError(f"{M} is not a genuine Seifert form: use coincidence first")
    chi = M.orbifold_euler_characteristic
    e = M.euler_number
    if chi > 0:
        return Geometry.ELLIPTIC if e else Geometry.S2XR
    if chi == 0:
        return Geometry.NIL if e else Geometry.FLAT
    return Geometry.SL2 if e else Geometry.H2XR


def bundle_geometry(key):
    if key.kind in ('identity', 'finite'):
        return Geometry.FLAT
    if key.kind == 'parabolic':
        return Geometry.NIL
    return Geometry.SOL


def bundle_seifert_forms(key):
    """Seifert expressions of a bundle with |trace| <= 2; empty for Sol."""
    if key.kind == 'identity':
        if key.sign > 0:
            return [seifert('T2')]
        return [seifert('K2'), seifert('S2', [(2, 1)] * 4, -2)]
    if key.kind == 'finite':
        fibres = {6: [(2, 1), (3, 1), (6, 1)], 4: [(2, 1), (4, 1), (4, 1)], 3: [(3, 1)] * 3}
        return [seifert('S2', fibres[key.data[0]], -1)]
    if key.kind == 'parabolic':
        return [seifert('T2' if key.sign > 0 else 'K2', (), key.data[0])]
    return []


# The small-complexity family (S2,(2,1),(n,1),(m,1),-1)

@dataclass(frozen=True)
class MStarInfo:
    family: str
    indices: tuple
    c_star: int

    def __str__(self):
        return f"{self.family}_{','.join(str(i) for i in self.indices)}"


_MSTAR_EXCLUDED = {(3, 6), (4, 4)}


def mstar_info(M):
    """Membership in the family whose complexity drops early, else None."""
    M = M.canonical()
    if M.base != S2 or M.k != 3 or M.t != -1:
        return None
    (p1, q1), (n, q2), (m, q3) = M.fibres
    if (p1, q1) != (2, 1) or q2 != 1 or q3 != 1 or (n, m) in _MSTAR_EXCLUDED:
        return None
    if n == 3 and m >= 5:
        return MStarInfo('E', (m - 5,), m)
    return MStarInfo('C', (n - 1, m - 1), n + m - 2)


def mstar_member(family, *indices):
    """Inverse of mstar_info: E_k or C_{i,j} as a Seifert manifold."""
    if family == 'E':
        (k,) = indices
        if k < 0 or k == 1:
            raise UnsupportedManifoldError(f"E_{k} is not in the family")
        return seifert('S2', [(2, 1), (3, 1), (k + 5, 1)], -1)
    i, j = indices
    if not 1 <= i <= j or (i, j) == (3, 3) or (i == 2 and j not in (2, 3)):
        raise UnsupportedManifoldError(f"C_{i},{j} is not in the family")
    return seifert('S2', [(2, 1), (i + 1, 1), (j + 1, 1)], -1)


def homology(M):
    """H1 from generators c_i, h and the base generators."""
    crosscaps = 0 if M.base.orientable else M.base.genus
    free = 2 * M.base.genus if M.base.orientable else 0
    k = M.k
    columns = k + 1 + crosscaps
    h = k
    rows = []
    for i, (p, q) in enumerate(M.fibres):
        row = [0] * columns
        row[i] = p
        row[h] = q
        rows.append(row)
    total = [1] * k + [-M.t] + [2] * crosscaps
    rows.append(total)
    if not M.base.orientable:
        row = [0] * columns
        row[h] = 2
        rows.append(row)
    return HomologyGroup.from_relations(rows, columns).with_free_rank(free)
