from math import gcd

from django.test import SimpleTestCase

from topology.descriptors import Lens, RP3, SeifertFibred, TorusBundle
from topology.exceptions import NotCoprimeError, UnsupportedManifoldError
from topology.gl2 import IDENTITY, ConjClassKey, GL2Mat
from topology.homology import HomologyGroup, torus_bundle_homology
from topology.invariants import geometry_of_descriptor, homology_of
from topology.seifert import (
    S2, Geometry, bundle_seifert_forms, coincidence, geometry_of, homology, is_genuine,
    mstar_info, mstar_member, normalize, projective_as_sphere, seifert,
)

POINCARE = seifert('S2', [(2, 1), (3, 1), (5, 1)], -1)


class NormalizeTest(SimpleTestCase):
    def test_folds_integer_parts_into_t(self):
        M = normalize(S2, [(2, -1), (3, 1)], 0)
        self.assertEqual(M.fibres, ((2, 1), (3, 1)))
        self.assertEqual(M.t, -1)

    def test_drops_regular_fibres(self):
        M = seifert('S2', [(1, 2), (-3, 1), (2, 1)])
        self.assertEqual(M.fibres, ((2, 1), (3, 2)))
        self.assertEqual(M.t, 1)

    def test_normalized_input_unchanged(self):
        self.assertEqual(normalize(S2, POINCARE.fibres, POINCARE.t), POINCARE)

    def test_rejects_bad_pairs(self):
        with self.assertRaises(NotCoprimeError):
            seifert('S2', [(4, 2)])
        with self.assertRaises(UnsupportedManifoldError):
            seifert('S3', [(2, 1)])

    def test_euler_number_is_additive(self):
        M = seifert('S2', [(2, 1), (3, 1), (5, 1)], -1)
        self.assertEqual(M.euler_number * 30, 1)
        self.assertEqual(M.orbifold_euler_characteristic * 30, 1)


class OrientationTest(SimpleTestCase):
    def test_reverse_orientation(self):
        mirror = POINCARE.reverse_orientation()
        self.assertEqual(mirror.fibres, ((2, 1), (3, 2), (5, 4)))
        self.assertEqual(mirror.t, -2)
        self.assertEqual(mirror.reverse_orientation(), POINCARE)

    def test_canonical_picks_one_of_the_pair(self):
        self.assertEqual(POINCARE.reverse_orientation().canonical(), POINCARE)
        tie = seifert('S2', [(2, 1), (2, 1), (2, 1), (3, 2)], -2)
        self.assertEqual(tie.canonical(), tie.reverse_orientation())
        self.assertEqual(tie.canonical().fibres, ((2, 1), (2, 1), (2, 1), (3, 1)))

    def test_str(self):
        self.assertEqual(str(POINCARE), 'sfs(S2;(2,1),(3,1),(5,1);-1)')
        self.assertEqual(str(seifert('T2', (), 1)), 'sfs(T2;;1)')


class CoincidenceTest(SimpleTestCase):
    def test_torus_bundles(self):
        self.assertEqual(
            coincidence(seifert('S2', [(2, 1), (3, 1), (6, 1)], -1)),
            TorusBundle.of_matrix(GL2Mat(0, 1, -1, 1)),
        )
        self.assertEqual(
            coincidence(seifert('S2', [(2, 1)] * 4, -2)),
            TorusBundle.of_matrix(-IDENTITY),
        )
        self.assertEqual(coincidence(seifert('T2', (), 0)), TorusBundle.of_matrix(IDENTITY))
        self.assertEqual(coincidence(seifert('K2', (), 1)), TorusBundle.of_matrix(GL2Mat(-1, -1, 0, -1)))

    def test_mirror_of_a_bundle_form_is_recognised(self):
        mirror = seifert('S2', [(3, 1), (3, 1), (3, 1)], -1).reverse_orientation()
        self.assertEqual(coincidence(mirror), TorusBundle(ConjClassKey('finite', 1, (3,))))

    def test_lens_spaces(self):
        self.assertEqual(coincidence(seifert('S2', [(2, 1), (2, 1)], 0)), Lens(4, 1))
        self.assertEqual(coincidence(seifert('S2', [(3, 1), (3, 1)], 0)), Lens(6, 1))
        self.assertEqual(coincidence(seifert('S2', [(5, 2)], 0)), RP3)
        with self.assertRaises(UnsupportedManifoldError):
            coincidence(seifert('S2', [(2, 1), (2, 1)], -1))

    def test_projective_plane_with_at_most_one_fibre(self):
        self.assertEqual(coincidence(seifert('P2', (), 1)), Lens(4, 1))
        self.assertEqual(coincidence(seifert('P2', (), -1)), Lens(4, 1))
        self.assertEqual(coincidence(seifert('P2', [(2, 1)], 0)), Lens(8, 3))
        self.assertEqual(coincidence(seifert('P2', [(3, 1)], 0)), Lens(12, 5))
        prism = seifert('P2', [(2, 1)], 1)
        self.assertEqual(coincidence(prism), SeifertFibred(seifert('S2', [(2, 1), (2, 1), (3, 2)], -1)))
        self.assertEqual(projective_as_sphere(prism), seifert('S2', [(2, 1), (2, 1), (3, 2)], -1))
        self.assertEqual(geometry_of_descriptor(SeifertFibred(prism)), Geometry.ELLIPTIC)
        self.assertFalse(is_genuine(prism))

    def test_projective_plane_without_fibres_and_zero_twist(self):
        with self.assertRaises(UnsupportedManifoldError):
            coincidence(seifert('P2', (), 0))

    def test_projective_plane_homology_is_kept(self):
        for p in range(2, 9):
            for q in range(1, p):
                if gcd(p, q) != 1:
                    continue
                for t in range(-3, 4):
                    M = seifert('P2', [(p, q)], t)
                    self.assertEqual(homology_of(coincidence(M)), homology(M), M)
        for t in (-4, -3, -2, -1, 1, 2, 3, 4):
            M = seifert('P2', (), t)
            self.assertEqual(homology_of(coincidence(M)), homology(M), M)
            self.assertEqual(homology(M).order, 4)

    def test_genuine(self):
        self.assertIsNone(coincidence(POINCARE))
        self.assertTrue(is_genuine(POINCARE))
        self.assertTrue(is_genuine(seifert('P2', [(2, 1), (2, 1)], -1)))

    def test_bundle_forms_match(self):
        keys = [
            ConjClassKey('identity', 1),
            ConjClassKey('identity', -1),
            ConjClassKey('finite', 1, (3,)),
            ConjClassKey('finite', 1, (4,)),
            ConjClassKey('finite', 1, (6,)),
            ConjClassKey('parabolic', 1, (3,)),
            ConjClassKey('parabolic', -1, (2,)),
        ]
        for key in keys:
            for form in bundle_seifert_forms(key):
                self.assertEqual(coincidence(form), TorusBundle(key))
        self.assertEqual(bundle_seifert_forms(ConjClassKey('hyperbolic', 1, (1, 1))), [])


class GeometryTest(SimpleTestCase):
    def test_classification(self):
        self.assertEqual(geometry_of(POINCARE), Geometry.ELLIPTIC)
        self.assertEqual(geometry_of(seifert('S2', [(3, 1), (3, 1), (3, 2)], -1)), Geometry.NIL)
        self.assertEqual(geometry_of(seifert('S2', [(2, 1), (2, 1), (2, 1), (3, 1)], -2)), Geometry.SL2)
        self.assertEqual(geometry_of(seifert('P2', [(2, 1), (2, 1)], -1)), Geometry.FLAT)
        self.assertEqual(geometry_of(seifert('S2', [(2, 1), (3, 1), (7, 1)], 0)), Geometry.SL2)

    def test_zero_euler_number(self):
        M = seifert('S2', [(2, 1), (2, 1), (3, 1), (3, 2)], -2)
        self.assertEqual(M.euler_number, 0)
        self.assertEqual(geometry_of(M), Geometry.H2XR)

    def test_bundle_forms_need_coincidence_first(self):
        flat = seifert('S2', [(3, 1), (3, 1), (3, 1)], -1)
        with self.assertRaises(UnsupportedManifoldError):
            geometry_of(flat)
        self.assertEqual(geometry_of_descriptor(SeifertFibred(flat)), Geometry.FLAT)


class MStarTest(SimpleTestCase):
    def test_membership(self):
        self.assertEqual(mstar_info(POINCARE).c_star, 5)
        self.assertEqual(str(mstar_info(POINCARE)), 'E_0')
        self.assertEqual(mstar_info(seifert('S2', [(2, 1), (3, 1), (7, 1)], -1)).c_star, 7)
        self.assertEqual(mstar_info(seifert('S2', [(2, 1)] * 3, -1)).c_star, 2)
        self.assertEqual(mstar_info(seifert('S2', [(2, 1), (3, 1), (4, 1)], -1)).c_star, 5)

    def test_non_members(self):
        self.assertIsNone(mstar_info(seifert('S2', [(2, 1), (3, 1), (6, 1)], -1)))
        self.assertIsNone(mstar_info(seifert('S2', [(2, 1), (4, 1), (4, 1)], -1)))
        self.assertIsNone(mstar_info(seifert('S2', [(2, 1), (2, 1), (3, 2)], -1)))
        self.assertIsNone(mstar_info(seifert('S2', [(2, 1)] * 3, 0)))

    def test_members_round_trip(self):
        for k in (0, 2, 3, 5):
            M = mstar_member('E', k)
            self.assertEqual(mstar_info(M).indices, (k,))
        for i, j in ((1, 1), (1, 4), (2, 2), (2, 3), (3, 4)):
            M = mstar_member('C', i, j)
            info = mstar_info(M)
            self.assertEqual((info.family, info.indices, info.c_star), ('C', (i, j), i + j))

    def test_both_descriptions_agree(self):
        found = {}
        for n in range(2, 51):
            for m in range(n, 51):
                M = seifert('S2', [(2, 1), (n, 1), (m, 1)], -1)
                info = mstar_info(M)
                if (n, m) in ((3, 6), (4, 4)):
                    self.assertIsNone(info)
                    continue
                self.assertNotIn((info.family, info.indices), found)
                found[info.family, info.indices] = M
                self.assertEqual(mstar_member(info.family, *info.indices), M)
                self.assertEqual(info.c_star, m if info.family == 'E' else n + m - 2)
        listed = {('E', (k,)) for k in range(46) if k != 1}
        listed |= {
            ('C', (i, j))
            for i in range(1, 50)
            for j in range(i, 50)
            if (i, j) != (3, 3) and (i != 2 or j in (2, 3))
        }
        self.assertEqual(set(found), listed)
        self.assertEqual(len(found), 1223)

    def test_rejects_outside_family(self):
        for family, indices in (('E', (1,)), ('C', (3, 3)), ('C', (2, 4)), ('C', (2, 1))):
            with self.assertRaises(UnsupportedManifoldError):
                mstar_member(family, *indices)


class HomologyTest(SimpleTestCase):
    def test_homology_spheres_and_lens_spaces(self):
        self.assertEqual(homology(POINCARE), HomologyGroup())
        self.assertEqual(str(homology(seifert('S2', [(2, 1), (2, 1)], 0))), 'Z_4')

    def test_order_is_euler_number_times_fibres(self):
        M = seifert('S2', [(2, 1), (3, 2), (5, 3)], -1)
        self.assertEqual(homology(M).order, abs(M.euler_number) * 30)

    def test_agrees_with_torus_bundle_formula(self):
        for key in (ConjClassKey('identity', 1), ConjClassKey('identity', -1), ConjClassKey('parabolic', -1, (3,))):
            expected = torus_bundle_homology(key.representative())
            for form in bundle_seifert_forms(key):
                self.assertEqual(homology(form), expected)
        self.assertEqual(str(homology(seifert('T2'))), 'Z + Z + Z')
