"""
Manifold descriptors accepted by the complexity and census routines.

Every descriptor is a frozen dataclass with a `kind` tag and a `__str__`
that the grammar parses back to an equal descriptor.
"""
from dataclasses import dataclass
from math import gcd
from typing import TYPE_CHECKING

from .exceptions import NotCoprimeError, UnsupportedManifoldError
from .gl2 import ConjClassKey, conj_class_key

if TYPE_CHECKING:
    from .chainlink import FillingTriple
    from .seifert import SeifertManifold


EXCEPTIONAL_NAMES = {'s3': 's3', 'rp3': 'rp3', 'l31': 'lens(3,1)'}


@dataclass(frozen=True)
class Exceptional:
    """S^3, RP^3 and L(3,1): the complexity-zero manifolds."""

    name: str
    kind = 'exceptional'

    def __post_init__(self):
        if self.name not in EXCEPTIONAL_NAMES:
            raise UnsupportedManifoldError(f"unknown exceptional manifold {self.name!r}")

    def __str__(self):
        return EXCEPTIONAL_NAMES[self.name]


S3 = Exceptional('s3')
RP3 = Exceptional('rp3')
L31 = Exceptional('l31')


@dataclass(frozen=True)
class Lens:
    """L(p,q) with p >= 4 and q the least of q, -q, q^-1, -q^-1 mod p."""

    p: int
    q: int
    kind = 'lens'

    def __str__(self):
        return f'lens({self.p},{self.q})'


def lens_space(p, q):
    if gcd(p, q) != 1:
        raise NotCoprimeError(p, q)
    p = abs(p)
    if p == 0:
        raise UnsupportedManifoldError("lens(0,1) is S2xS1, which is not irreducible")
    if p <= 3:
        return (S3, RP3, L31)[p - 1]
    q %= p
    inverse = pow(q, -1, p)
    return Lens(p, min(q, p - q, inverse, p - inverse))


@dataclass(frozen=True)
class TorusBundle:
    key: ConjClassKey
    kind = 'torus_bundle'

    @classmethod
    def of_matrix(cls, A):
        return cls(conj_class_key(A))

    @property
    def monodromy(self):
        return self.key.representative()

    def __str__(self):
        return f'tb{self.monodromy}'


@dataclass(frozen=True)
class SeifertFibred:
    manifold: 'SeifertManifold'
    kind = 'seifert'

    def __str__(self):
        return str(self.manifold)


@dataclass(frozen=True)
class ChainFilling:
    triple: 'FillingTriple'
    kind = 'chain'

    def __str__(self):
        return str(self.triple)
