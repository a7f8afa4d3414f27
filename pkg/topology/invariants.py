"""
Descriptor-level invariants: canonical form, homology and geometry.
"""
from . import chainlink, seifert
from .chainlink import DEFAULT_ORBIT_CAP, canonical_triple, is_hyperbolic
from .descriptors import ChainFilling, Exceptional, Lens, SeifertFibred, TorusBundle
from .exceptions import UnsupportedManifoldError
from .homology import HomologyGroup, torus_bundle_homology
from .seifert import Geometry, bundle_geometry, coincidence, geometry_of

_EXCEPTIONAL_HOMOLOGY = {'s3': 1, 'rp3': 2, 'l31': 3}


def canonical_form(descriptor, cap=DEFAULT_ORBIT_CAP):
    """Collapse Seifert coincidences and pick the least member of a chain-link orbit."""
    if isinstance(descriptor, SeifertFibred):
        M = descriptor.manifold
        other = coincidence(M)
        if other is not None:
            return other
        return SeifertFibred(M.canonical())
    if isinstance(descriptor, ChainFilling) and is_hyperbolic(descriptor.triple):
        return ChainFilling(canonical_triple(descriptor.triple, cap))
    return descriptor


def homology_of(descriptor):
    if isinstance(descriptor, Exceptional):
        return HomologyGroup.cyclic(_EXCEPTIONAL_HOMOLOGY[descriptor.name])
    if isinstance(descriptor, Lens):
        return HomologyGroup.cyclic(descriptor.p)
    if isinstance(descriptor, TorusBundle):
        return torus_bundle_homology(descriptor.monodromy)
    if isinstance(descriptor, SeifertFibred):
        return seifert.homology(descriptor.manifold)
    if isinstance(descriptor, ChainFilling):
        return chainlink.homology(descriptor.triple)
    raise UnsupportedManifoldError(f"no homology routine for {descriptor!r}")


def geometry_of_descriptor(descriptor):
    if isinstance(descriptor, (Exceptional, Lens)):
        return Geometry.LENS
    if isinstance(descriptor, TorusBundle):
        return bundle_geometry(descriptor.key)
    if isinstance(descriptor, SeifertFibred):
        other = coincidence(descriptor.manifold)
        if other is not None:
            return geometry_of_descriptor(other)
        return geometry_of(descriptor.manifold)
    if isinstance(descriptor, ChainFilling):
        if is_hyperbolic(descriptor.triple):
            return Geometry.HYPERBOLIC
        raise UnsupportedManifoldError(f"{descriptor} is a graph manifold")
    raise UnsupportedManifoldError(f"no geometry routine for {descriptor!r}")
