"""
First homology groups, read off the Smith form of a relation matrix.
"""
from dataclasses import dataclass
from math import prod

from .gl2 import IDENTITY, smith_normal_form


@dataclass(frozen=True)
class HomologyGroup:
    """Z^rank + Z_{d1} + ... with d1 | d2 | ... and every di > 1."""

    torsion: tuple = ()
    rank: int = 0

    @classmethod
    def from_relations(cls, rows, generators):
        if not rows:
            return cls((), generators)
        nonzero = [d for d in smith_normal_form(rows) if d]
        return cls(tuple(d for d in nonzero if d > 1), generators - len(nonzero))

    @classmethod
    def cyclic(cls, order):
        if order == 0:
            return cls((), 1)
        return cls((order,) if order > 1 else (), 0)

    @property
    def order(self):
        """Size of the group, None when infinite."""
        if self.rank:
            return None
        return prod(self.torsion)

    def with_free_rank(self, extra):
        return HomologyGroup(self.torsion, self.rank + extra)

    def __str__(self):
        parts = ['Z'] * self.rank + [f'Z_{d}' for d in self.torsion]
        return ' + '.join(parts) if parts else '0'


def torus_bundle_homology(A):
    """H1(T_A) = Z + coker(A - I)."""
    shifted = [[A.a - IDENTITY.a, A.b], [A.c, A.d - IDENTITY.d]]
    return HomologyGroup.from_relations(shifted, 2).with_free_rank(1)
