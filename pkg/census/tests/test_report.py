import json

from django.test import SimpleTestCase

from census.enumeration import CAVEAT_SOL, full_census
from census.report import EMPTY_CELL, render, render_csv, render_jsonl, render_table
from topology.seifert import Geometry


class RenderTest(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.small = full_census(1)

    def test_csv(self):
        self.assertEqual(render_csv(self.small), 'complexity,geometry,count\n0,lens,3\n1,lens,2\n')

    def test_jsonl(self):
        lines = render_jsonl(full_census(0)).splitlines()
        self.assertEqual(len(lines), 3)
        records = [json.loads(line) for line in lines]
        self.assertEqual([r['manifold'] for r in records], ['s3', 'rp3', 'lens(3,1)'])
        self.assertEqual([r['homology'] for r in records], ['0', 'Z_2', 'Z_3'])
        self.assertEqual({r['geometry'] for r in records}, {'lens'})

    def test_table(self):
        lines = render_table(self.small).splitlines()
        width = len('other elliptic') + 2
        self.assertEqual(lines[0], 'complexity'.ljust(width) + '     0     1')
        self.assertEqual(lines[1], 'lens'.ljust(width) + '     3     2')
        self.assertEqual(lines[2], 'other elliptic'.ljust(width) + f'     {EMPTY_CELL}     {EMPTY_CELL}')
        self.assertEqual(lines[-1], 'total'.ljust(width) + '     3     2')

    def test_caveats_follow_the_table(self):
        report = full_census(6, geometry=Geometry.SOL)
        self.assertEqual(report.caveats, (CAVEAT_SOL,))
        self.assertEqual(render_table(report).splitlines()[-1], f'* {CAVEAT_SOL}')

    def test_single_geometry_table_has_no_total(self):
        report = full_census(3, geometry=Geometry.LENS)
        lines = render_table(report).splitlines()
        self.assertEqual(len(lines), 2)
        self.assertTrue(lines[1].startswith('lens'))

    def test_render_dispatch(self):
        self.assertEqual(render(self.small, 'csv'), render_csv(self.small))
        with self.assertRaises(KeyError):
            render(self.small, 'xml')
