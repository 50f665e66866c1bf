import os
import shutil
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from grid.images import is_simple_closed_curve

from .fixtures import REGISTRY, FixtureError, build_registry, get_fixture, resolve_image
from .reproduce import FAIL, PARTIAL, PASS, REFUTED, TARGETS, certificate_path, reproduce


class FixtureTest(SimpleTestCase):
    def test_registry_builds(self):
        images = build_registry()
        self.assertEqual(set(images), set(REGISTRY))
        self.assertEqual(len(images['mss6']), 8)
        self.assertEqual(get_fixture('genus0'), get_fixture('mss6'))
        self.assertEqual(len(images['msc6-wedge']), 11)
        self.assertEqual(len(images['theta']), 15)

    def test_declared_properties(self):
        self.assertTrue(is_simple_closed_curve(get_fixture('msc4')))
        self.assertFalse(is_simple_closed_curve(get_fixture('msc4-8')))
        theta = get_fixture('theta')
        self.assertEqual(theta.neighbors((2, 1)), {(2, 0), (2, 2)})
        self.assertEqual(theta.label((4, 4)), 'a9')
        self.assertEqual(get_fixture('mss6').label((1, 0, 0)), 'p0')

    def test_references(self):
        self.assertEqual(len(resolve_image('@interval3')), 4)
        with self.assertRaisesMessage(FixtureError, 'no fixture named @torus'):
            resolve_image('@torus')
        with self.assertRaises(OSError):
            resolve_image('/nonexistent/image.txt')


class ReproduceTest(SimpleTestCase):
    expected = {
        'prop2.2': PASS, 'ex3.1': PASS, 'ex3.2': PASS, 'ex3.3': REFUTED, 'thm3.4': REFUTED,
        'ex3.5': REFUTED, 'cor3.6': REFUTED, 'ex3.7': PARTIAL, 'cor3.8': PASS,
    }

    def test_statuses(self):
        self.assertEqual(set(TARGETS), set(self.expected))
        for name, status in self.expected.items():
            report = reproduce(name)
            self.assertEqual(report.status, status, report.render())
            self.assertNotEqual(report.status, FAIL)

    def test_cohomology_lines(self):
        report = reproduce('prop2.2')
        self.assertEqual(report.lines[:3], ['H^0 = Z', 'H^1 = Z^5', 'H^2 = 0'])
        self.assertIn('rank Ker δ^1 = 12', report.lines)
        self.assertIn('rank Im δ^0 = 7', report.lines)

    def test_theta_bounds(self):
        lines = reproduce('ex3.3').lines
        self.assertIn('b_1 = 2', lines)
        self.assertIn('TC <= 4 certified by the four arc products', lines)
        self.assertIn('cat <= 2 certified by the committed arc contractions', lines)

    def test_theta_is_not_contractible_by_retraction(self):
        lines = reproduce('ex3.3').lines
        self.assertTrue(any(l.startswith('collapsing the second ring onto (2, 2) retracts onto an 8-point curve')
                            for l in lines), lines)

    def test_contractible_curves_and_cube(self):
        self.assertIn('b_1(MSC_4) = 1, yet it contracts to (0, 0) in 2 steps: global section, TC = 1',
                      reproduce('thm3.4').lines)
        self.assertIn("MSS'_6 contracts to (0, 0, 0) in 3 steps: global section, TC = 1",
                      reproduce('cor3.8').lines)
        for name in TARGETS:
            self.assertFalse([l for l in reproduce(name).lines if 'b_1 > 0' in l], name)

    def test_partial_cup_length(self):
        report = reproduce('ex3.2', budget=1)
        self.assertEqual(report.status, PARTIAL)
        self.assertIn("cup length of MSS'_6 >= 1: the product budget ran out", report.lines)

    def test_unknown_target(self):
        with self.assertRaises(ValueError):
            reproduce('ex9.9')

    def test_searches(self):
        report = reproduce('cor3.6', search=True)
        self.assertIn('tc_is_one(MSC_4, 4): yes', report.lines)
        self.assertEqual(report.status, REFUTED)


class CommandTest(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, name, text):
        path = os.path.join(self.tmp, name)
        with open(path, 'w') as fh:
            fh.write(text)
        return path

    def run_command(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def assertExits(self, status, *args, **options):
        with self.assertRaises(CommandError) as caught:
            self.run_command(*args, **options)
        self.assertEqual(caught.exception.returncode, status)
        return caught.exception

    def test_info(self):
        out = self.run_command('info', '@mss6')
        self.assertIn('points: 8', out)
        self.assertIn('adjacency: 6', out)
        self.assertIn('closed surface: yes', out)

    def test_components(self):
        path = self.write('two.txt', 'dim 2 adjacency 4\n0 0\n5 5\n')
        out = self.run_command('components', path)
        self.assertIn('component 2: 1 points', out)

    def test_betti_and_homology(self):
        self.assertEqual(self.run_command('betti', '@theta', degree=1), 'b_1 = 2\n')
        out = self.run_command('homology', '@msc4-8', coeff='int')
        self.assertIn('simplices: 4 6 4 1', out)
        self.assertIn('H_0 = Z', out)
        self.assertIn('H_1 = 0', out)

    def test_cohomology_in_proof_order(self):
        out = self.run_command('cohomology', '@mss6', coeff='int', order='p7,p4,p6,p5,p0,p3,p1,p2')
        self.assertIn('H^1 = Z^5', out)
        self.assertIn('rank Z^1 = 12, rank B^1 = 7', out)
        self.assertExits(2, 'cohomology', '@mss6', order='p7,p9')

    def test_cup(self):
        out = self.run_command('cup', '@mss6')
        self.assertIn('generators: 5 in degree 1, 5 in degree 1', out)
        self.assertIn('cup length: 1', out)
        self.assertNotIn('nonzero', out)
        self.assertIn('cup length: >= 1', self.run_command('cup', '@mss6', budget=1))

    def test_induced_map(self):
        path = self.write('diagonal.txt', 'homotopy 0\nt 0\n0 -> 0 0 0\n1 -> 1 1 1\n')
        err = self.assertExits(2, 'induced_map', '@interval1', '@mss6', path, degree=[1])
        self.assertIn('not continuous', str(err))
        out = self.run_command('induced_map', '@interval1', '@mss6', path, degree=[1], allow_discontinuous=True)
        self.assertEqual(out, 'H^1: 5 -> 0, rank 0, kernel rank 5 (continuity not checked)\n')

        edge = self.write('edge.txt', 'homotopy 0\nt 0\n0 -> 0 0 0\n1 -> 1 0 0\n')
        out = self.run_command('induced_map', '@interval1', '@mss6', edge, degree=[1])
        self.assertEqual(out, 'H^1: 5 -> 0, rank 0, kernel rank 5\n')

    def test_genus(self):
        self.assertEqual(self.run_command('genus', '@genus2'), 'M3 = 8\nM4 = 174\nM5 = 16\nM6 = 0\n2\n')
        self.assertEqual(self.run_command('genus', '@genus1'), 'M3 = 8\nM4 = 112\nM5 = 8\nM6 = 0\n1\n')
        self.assertEqual(self.run_command('genus', '@genus0'), 'M3 = 8\nM4 = 0\nM5 = 0\nM6 = 0\n0\n')
        self.assertExits(2, 'genus', '@msc4')

    def test_surface_check(self):
        self.assertEqual(self.run_command('surface_check', '@genus1'), 'closed surface\n')
        block = self.write('block.txt', 'dim 3 adjacency 6\n' + ''.join(
            '{} {} {}\n'.format(x, y, z) for x in range(3) for y in range(3) for z in range(3)))
        self.assertExits(1, 'surface_check', block)

    def test_product_and_wedge(self):
        out = self.run_command('product', '@interval1', '@interval1')
        self.assertTrue(out.startswith('dim 2 adjacency product\n'))
        self.assertEqual(out.count('edge'), 6)
        left = self.write('left.txt', 'dim 1 adjacency 2\n-1\n0\n')
        out = self.run_command('wedge', left, '@interval1', at=[0])
        self.assertEqual(out, 'dim 1 adjacency 2\n-1\n0\n1\n')
        err = self.assertExits(2, 'wedge', '@interval2', '@interval1', at=[0])
        self.assertIn('share exactly the wedge point', str(err))

    def test_verify_homotopy(self):
        path = certificate_path('square01_contraction.txt')
        out = self.run_command('verify_homotopy', '@interval01-squared', path, contraction=True)
        self.assertEqual(out, 'contraction to (0, 0) in 2 steps verified\n')

        jump = self.write('jump.txt', 'homotopy 1\nt 0\n0 -> 0\n1 -> 1\n2 -> 2\nt 1\n0 -> 2\n1 -> 1\n2 -> 2\n')
        self.assertExits(1, 'verify_homotopy', '@interval2', jump)

    def test_committed_contractions(self):
        out = self.run_command('verify_homotopy', '@msc4', certificate_path('msc4_contraction.txt'), contraction=True)
        self.assertEqual(out, 'contraction to (0, 0) in 2 steps verified\n')
        out = self.run_command('verify_homotopy', '@mss6', certificate_path('mss6_contraction.txt'), contraction=True)
        self.assertEqual(out, 'contraction to (0, 0, 0) in 3 steps verified\n')

    def test_contract_search(self):
        output = os.path.join(self.tmp, 'found.txt')
        out = self.run_command('contract_search', '@interval3', output=output)
        self.assertIn('contractible after', out)
        self.run_command('verify_homotopy', '@interval3', output, contraction=True)
        out = self.run_command('contract_search', '@msc4', output=output)
        self.assertTrue(out.startswith('contractible after'), out)
        self.assertIn(' in 2 steps', out)
        self.run_command('verify_homotopy', '@msc4', output, contraction=True)
        self.assertTrue(self.run_command('contract_search', '@msc6').startswith('not_contractible after'))
        self.assertIn('unknown', self.run_command('contract_search', '@interval3', max_steps=1))

    def test_committed_certificates(self):
        out = self.run_command('tc_bound', '@msc4', certificate_path('msc4_tc2.txt'))
        self.assertEqual(out, 'TC <= 2\n')
        out = self.run_command('tcn_verify', '@interval1', certificate_path('interval01_tc3.txt'), n=3)
        self.assertEqual(out, 'TC_3 <= 1\n')
        out = self.run_command('cat_verify', '@theta', certificate_path('theta_arcs_cover.txt'),
                               certificate_path('theta_alpha_contraction.txt'),
                               certificate_path('theta_beta_contraction.txt'))
        self.assertEqual(out, 'cat <= 2\n')
        out = self.run_command('verify_cover', '@theta', certificate_path('theta_arcs_cover.txt'), n=1)
        self.assertEqual(out, '2 parts cover all 15 points\n')
        out = self.run_command('verify_section', '@msc4', certificate_path('msc4_tc2.txt'), part=2)
        self.assertEqual(out, 'section over part 2 (8 members) verified\n')
        out = self.run_command('verify_section', '@interval1', certificate_path('interval01_tc3.txt'), n=3)
        self.assertIn('verified', out)

    def test_refuted_witness(self):
        witness = 'cover 1\npart 1\n0,0 0,1 1,0 1,1\nrule 1\n(0,0) -> path: 0\n(0,1) -> path: 0 1\n' \
                  '(1,0) -> path: 1 0\n(1,1) -> path: {}\n'
        self.assertEqual(self.run_command('tc_bound', '@interval1', self.write('good.txt', witness.format('1'))),
                         'TC <= 1\n')
        bad = self.write('bad.txt', witness.format('1 0'))
        self.assertExits(1, 'tc_bound', '@interval1', bad)
        uncovered = self.write('partial.txt', 'cover 1\npart 1\n0,0 0,1\n')
        self.assertExits(1, 'verify_cover', '@interval1', uncovered)

    def test_tc1_decide(self):
        self.assertTrue(self.run_command('tc1_decide', '@msc4-8').startswith('yes\n'))
        self.assertTrue(self.run_command('tc1_decide', '@msc4').startswith('yes\n'))
        self.assertTrue(self.run_command('tc1_decide', '@msc6').startswith('no\n'))

    def test_groups(self):
        table = certificate_path('xor_group.txt')
        out = self.run_command('group_check', '@interval1', table)
        self.assertEqual(out, 'group law with continuous multiplication and inversion\n')

        cover = self.write('square.txt', 'cover 1\npart 1\n0,0 0,1 1,0 1,1\n')
        out = self.run_command('group_check', '@interval1', table, n=3, cover=cover,
                               contraction=[certificate_path('square01_contraction.txt')])
        self.assertIn('TC_3(H) = cat(H^2) <= 1', out)
        self.assertTrue(out.endswith('TC_3 <= 1\n'))

        mod3 = self.write('mod3.txt', 'group\n' + ''.join(
            '{} * {} = {}\n'.format(a, b, (a + b) % 3) for a in range(3) for b in range(3)))
        self.assertExits(1, 'group_check', '@interval2', mod3)

    def test_synthesize_section(self):
        output = os.path.join(self.tmp, 'section.txt')
        out = self.run_command('synthesize_section', '@interval2', output=output)
        self.assertTrue(out.startswith('found after'))
        self.assertEqual(self.run_command('tc_bound', '@interval2', output), 'TC <= 1\n')
        out = self.run_command('synthesize_section', '@msc4', output=output)
        self.assertTrue(out.startswith('found after'), out)
        self.assertEqual(self.run_command('tc_bound', '@msc4', output), 'TC <= 1\n')
        out = self.run_command('synthesize_section', '@msc4', max_detour=0)
        self.assertTrue(out.startswith('none after'), out)
        self.assertIn('at most 0 steps longer than a shortest path', out)
        self.assertIn('not contractible', self.run_command('synthesize_section', '@msc6'))

    def test_export(self):
        out = self.run_command('export_obj', '@mss6')
        self.assertEqual(out.count('\nf '), 48)
        out = self.run_command('export_obj', '@msc4', csv=True)
        self.assertTrue(out.startswith('x0,x1,label\n'))

    def test_reproduce(self):
        out = self.run_command('reproduce', 'prop2.2')
        self.assertIn('H^0 = Z\n', out)
        self.assertIn('H^1 = Z^5\n', out)
        self.assertTrue(out.endswith('PASS\n'))
        self.assertEqual(self.run_command('reproduce', all=True), self.run_command('reproduce', all=True))
        self.assertExits(2, 'reproduce')
        self.assertExits(2, 'reproduce', 'ex9.9')

    def test_malformed_image(self):
        path = self.write('bad.txt', 'dim 2 adjacency 4\n0 0\n1 2 3\n')
        err = self.assertExits(2, 'info', path)
        self.assertIn('{}:3: point (1, 2, 3) does not have 2 coordinates'.format(path), str(err))
        err = self.assertExits(2, 'info', '@nothing')
        self.assertIn('no fixture named @nothing', str(err))
