import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue().splitlines()


class PQCommandTest(SimpleTestCase):
    def test_prints_value(self):
        self.assertEqual(run('pq', '5', '2'), ['3'])

    def test_not_coprime(self):
        with self.assertRaises(CommandError) as raised:
            run('pq', '4', '2')
        self.assertEqual(raised.exception.returncode, 2)


class NormCommandTest(SimpleTestCase):
    def test_norm_and_conjugacy_norm(self):
        self.assertEqual(run('norm', '[[1,3],[0,1]]')[0], '3')
        lines = run('norm', '--conj', '[[3,-1],[1,0]]')
        self.assertEqual(lines[0], '2')
        self.assertTrue(lines[1].startswith('decomposition: '))

    def test_bad_determinant(self):
        with self.assertRaises(CommandError) as raised:
            run('norm', '[[2,0],[0,1]]')
        self.assertEqual(raised.exception.returncode, 2)


class BricksCommandTest(SimpleTestCase):
    def test_lists_eleven_bricks(self):
        lines = run('bricks')
        self.assertEqual(len(lines), 11)
        self.assertTrue(lines[0].startswith('B0'))


class CNCommandTest(SimpleTestCase):
    def test_lens_space(self):
        lines = run('cn', 'lens(7,2)')
        self.assertEqual(lines[0], 'lens(7,2)')
        self.assertEqual(lines[1], 'c0..c9 = [inf,2,2,2,2,2,2,2,2,2]')
        self.assertIn('c = 2', lines)
        self.assertIn('H1 = Z_7', lines)

    def test_hyperbolic_filling(self):
        lines = run('cn', 'chain(-4,-3/2,1)')
        self.assertIn('c = 9', lines)
        self.assertIn('H1 = Z_5 + Z_5', lines)
        self.assertIn('conjecture-conditional', lines[2])

    def test_graph_manifold_filling(self):
        lines = run('cn', 'chain(-1,2,3)')
        self.assertIn('is not hyperbolic', lines[0])
        self.assertEqual(lines[-1], 'c9 <= 11 (upper-bound)')

    def test_product_filling_has_no_bound(self):
        lines = run('cn', 'chain(inf,1,2)')
        self.assertIn('is not hyperbolic', lines[0])
        self.assertFalse(any(line.startswith('c9 <=') for line in lines))

    def test_projective_plane_form(self):
        lines = run('cn', 'sfs(P2;(2,1);1)')
        self.assertIn('c = 4', lines)
        self.assertIn('H1 = Z_8', lines)

    def test_json_profile(self):
        data = json.loads(run('cn', 'lens(7,2)', '--format', 'json')[0])
        self.assertEqual(data['manifold'], 'lens(7,2)')
        self.assertEqual(data['values'], [None] + [2] * 9)
        self.assertEqual(data['tags'], ['exact'] * 10)
        self.assertEqual(data['complexity'], 2)
        self.assertEqual(data['homology'], 'Z_7')

    def test_json_graph_bound(self):
        data = json.loads(run('cn', 'chain(-1,2,3)', '--format', 'json')[0])
        self.assertFalse(data['hyperbolic'])
        self.assertEqual(data['c9_upper_bound'], 11)
        data = json.loads(run('cn', 'chain(inf,1,2)', '--format', 'json')[0])
        self.assertIsNone(data['c9_upper_bound'])

    def test_syntax_error(self):
        with self.assertRaises(CommandError) as raised:
            run('cn', 'lens(4,2)')
        self.assertEqual(raised.exception.returncode, 1)
