from django.test import SimpleTestCase

from topology.chainlink import (
    KNOWN_DUPLICATES, FillingTriple, OneBlock, ProductFilling, SelfGlued, TwoBlock, canonical_triple,
    explore_orbit, homology, identified_images, is_hyperbolic, listed_duplicates, m221_exceptional,
    nonhyperbolic_identity, relation_images, require_hyperbolic, triple,
)
from topology.exceptions import NonHyperbolicError, OrbitCapExceeded, UnrecognizedFillingError
from topology.farey import INFINITY, ONE, Slope, slopes_by_complexity
from topology.gl2 import GL2Mat


def small_slopes(height):
    found = {INFINITY}
    for p in range(-height, height + 1):
        for q in range(1, height + 1):
            try:
                found.add(Slope(p, q))
            except ValueError:
                continue
    return sorted(found)


class FillingTripleTest(SimpleTestCase):
    def test_unordered(self):
        self.assertEqual(triple(1, -4, '-3/2'), triple('-3/2', 1, -4))
        self.assertEqual(str(triple(1, -4, '-3/2')), 'chain(-4,1,-3/2)')

    def test_needs_three_slopes(self):
        with self.assertRaises(UnrecognizedFillingError):
            FillingTriple((ONE, ONE))

    def test_pairs(self):
        t = triple(1, 1, -4)
        self.assertTrue(t.contains_pair(ONE, ONE))
        self.assertTrue(t.contains_pair(ONE, Slope(-4, 1)))
        self.assertFalse(triple(1, 2, -4).contains_pair(ONE, ONE))
        self.assertEqual(t.without(Slope(-4, 1)), (ONE, ONE))


class HyperbolicityTest(SimpleTestCase):
    def test_examples(self):
        self.assertTrue(is_hyperbolic(triple(-4, '-3/2', 1)))
        self.assertFalse(is_hyperbolic(triple(1, 2, 2)))
        self.assertFalse(is_hyperbolic(triple(-3, '7/2', '22/7')))
        self.assertFalse(is_hyperbolic(triple(-4, '-1/2', 7)))
        self.assertFalse(is_hyperbolic(triple('-8/3', '-3/2', '-3/2')))

    def test_require_hyperbolic(self):
        t = triple(-4, 1, 2)
        self.assertIs(require_hyperbolic(t), t)
        with self.assertRaises(NonHyperbolicError):
            require_hyperbolic(triple(0, 1, 2))

    def test_sister_manifold_fillings(self):
        self.assertTrue(m221_exceptional(Slope(-1, 3)))
        self.assertFalse(m221_exceptional(Slope(5, 2)))
        for s in small_slopes(50):
            self.assertEqual(is_hyperbolic(triple(1, -4, s)), not m221_exceptional(s), s)


class HomologyTest(SimpleTestCase):
    def test_small_census(self):
        cases = {
            (-4, '-3/2', 1): 'Z_5 + Z_5',
            (-4, 1, 2): 'Z_5',
            (-5, '-1/2', 1): 'Z_3 + Z_6',
            ('-3/2', '-3/2', 1): 'Z_5 + Z_5',
            (-4, '-4/3', 1): 'Z_35',
            (-5, '-1/3', 1): 'Z_2 + Z_12',
        }
        for values, expected in cases.items():
            self.assertEqual(str(homology(triple(*values))), expected)


class RelationTest(SimpleTestCase):
    def test_relations(self):
        # -1/2 shifts the other two slopes by -4
        self.assertIn(triple('-1/2', -5, -5), relation_images(triple('-1/2', 1, 1)))
        # -3/2 trades for -4
        self.assertIn(triple(-4, '-2/3', 1), relation_images(triple('-3/2', 1, -4)))
        # {1,2,x} and {1,2,2-x}
        self.assertIn(triple(1, 2, -5), relation_images(triple(1, 2, 7)))
        # {1,-4,x} and {1,-4,1/x}
        self.assertIn(triple(1, -4, '1/2'), relation_images(triple(1, -4, 2)))

    def test_relations_preserve_hyperbolicity_and_homology(self):
        slopes = [s for level in slopes_by_complexity(2).values() for s in level]
        slopes += [Slope(-3, 2), Slope(-5, 2), Slope(-1, 2), Slope(-4, 1)]
        for i, x in enumerate(slopes):
            for y in slopes[i:]:
                for anchor in (Slope(-3, 2), Slope(-5, 2), Slope(-1, 2), Slope(-4, 1), ONE):
                    t = FillingTriple.of(anchor, x, y)
                    for image in relation_images(t):
                        self.assertEqual(is_hyperbolic(image), is_hyperbolic(t), (t, image))
                        self.assertEqual(homology(image), homology(t), (t, image))

    def test_orbit_is_closed(self):
        t = triple(-4, '-3/2', 1)
        members, capped = explore_orbit(t)
        self.assertFalse(capped)
        for member in members:
            self.assertTrue(identified_images(member) <= members)

    def test_canonical_is_orbit_invariant(self):
        self.assertEqual(canonical_triple(triple(-5, -5, '-1/2')), canonical_triple(triple(1, 1, '-1/2')))
        t = triple(-4, '-3/2', 1)
        for member in explore_orbit(t)[0]:
            self.assertEqual(canonical_triple(member), canonical_triple(t))

    def test_listed_duplicates_join_orbits(self):
        extra, known = triple(-4, 1, '3/2'), triple(-4, 1, 2)
        self.assertIn(extra, KNOWN_DUPLICATES)
        self.assertNotIn(extra, relation_images(known))
        self.assertIn(extra, identified_images(known))
        self.assertEqual(canonical_triple(extra), canonical_triple(known))
        self.assertEqual(homology(extra), homology(known))
        members, _ = explore_orbit(known)
        self.assertEqual(listed_duplicates(members), ('chain(-4,1,3/2)',))
        self.assertEqual(listed_duplicates(explore_orbit(triple(-4, '-3/2', 1))[0]), ())

    def test_listed_duplicates_are_hyperbolic(self):
        for extra, known in KNOWN_DUPLICATES.items():
            self.assertTrue(is_hyperbolic(extra), extra)
            self.assertTrue(is_hyperbolic(known), known)
            self.assertEqual(homology(extra), homology(known))

    def test_cap_exceeded(self):
        t = triple('-3/2', 5, 7)
        with self.assertRaises(OrbitCapExceeded) as raised:
            canonical_triple(t, cap=8)
        self.assertIn(t, raised.exception.partial_orbit)
        self.assertEqual(raised.exception.cap, 8)


class NonHyperbolicIdentityTest(SimpleTestCase):
    def test_patterns(self):
        self.assertEqual(
            nonhyperbolic_identity(triple(-1, '1/2', 3)),
            OneBlock((Slope(2, 1), Slope(-6, 1), Slope(-7, 2))),
        )
        self.assertEqual(
            nonhyperbolic_identity(triple(-2, '1/2', 3)),
            OneBlock((Slope(3, 2), Slope(-5, 1), Slope(-5, 2))),
        )
        self.assertEqual(
            nonhyperbolic_identity(triple(1, 1, 5)),
            SelfGlued(Slope(-1, 7), GL2Mat(1, -1, -1, 0)),
        )
        self.assertIsInstance(nonhyperbolic_identity(triple('inf', 2, 3)), ProductFilling)
        self.assertIsInstance(nonhyperbolic_identity(triple(-3, 2, 3)), TwoBlock)
        self.assertIsInstance(nonhyperbolic_identity(triple(0, 2, 3)), TwoBlock)

    def test_unrecognised(self):
        with self.assertRaises(UnrecognizedFillingError):
            nonhyperbolic_identity(triple(1, 2, 2))
