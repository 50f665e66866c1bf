import random

from django.test import SimpleTestCase

from grid.images import DigitalImage, interval, power
from helpers.parsing import FormatError
from homotopy.scripts import fold_chain
from homotopy.search import find_contraction

from .groups import (
    GroupAxiomError, GroupTable, cyclic_group, dump_group, group_check, parse_group, tcn_upper_via_group,
)
from .paths import DigitalPath, PathError, Spider, endpoints, path_as_spider, paths_adjacent, synchronize
from .search import Answer, SectionOutcome, candidate_paths, synthesize_section, tc_is_one
from .sections import (
    full_row_obstruction, reverse_section, sections_from_contractions, verify_cat_witness, verify_section,
    verify_spider_section, verify_tc_witness, verify_tcn_witness,
)
from .witnesses import CoverWitness, SectionWitness, WitnessError, dump_witness, parse_witness


CYCLE = [(0, 0), (1, 0), (1, 1), (0, 1)]
HEXAGON = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)]
A = {
    1: (0, 0), 2: (1, 0), 3: (2, 0), 4: (2, 1), 5: (2, 2), 6: (2, 3), 7: (2, 4), 8: (3, 4),
    9: (4, 4), 10: (4, 3), 11: (4, 2), 12: (3, 2), 13: (1, 2), 14: (0, 2), 15: (0, 1),
}
ALPHA = [A[i] for i in (1, 15, 14, 13, 5, 6, 7, 8, 9)]
BETA = [A[i] for i in (1, 2, 3, 4, 5, 12, 11, 10, 9)]


def theta():
    return DigitalImage.from_points(A.values(), 4)


def pairs(first, second):
    return {x + y for x in first for y in second}


def four_cycle_witness():
    """TC(C_4) <= 2: stay or step forward on one part, step back once or twice on the other."""
    image = DigitalImage.from_points(CYCLE, 4)
    v = lambda i: CYCLE[i % 4]
    near, far = {}, {}
    for i in range(4):
        near[v(i) + v(i)] = DigitalPath(image, [v(i)])
        near[v(i) + v(i + 1)] = DigitalPath(image, [v(i), v(i + 1)])
        far[v(i) + v(i - 1)] = DigitalPath(image, [v(i), v(i - 1)])
        far[v(i) + v(i + 2)] = DigitalPath(image, [v(i), v(i - 1), v(i - 2)])
    cover = CoverWitness(power(image, 2), [near.keys(), far.keys()])
    return image, cover, SectionWitness([near, far])


def arc_products():
    image = theta()
    arcs = {'alpha': fold_chain(image, ALPHA), 'beta': fold_chain(image, BETA)}
    parts, rules = [], []
    for a in ('alpha', 'beta'):
        for b in ('alpha', 'beta'):
            rule = sections_from_contractions(image, arcs[a], arcs[b])
            parts.append(rule.keys())
            rules.append(rule)
    return image, CoverWitness(power(image, 2), parts), SectionWitness(rules)


class PathTest(SimpleTestCase):
    def setUp(self):
        self.x = interval(4)

    def path(self, *values):
        return DigitalPath(self.x, [(v,) for v in values])

    def test_endpoints(self):
        self.assertEqual(endpoints(DigitalPath.constant(self.x, (2,))), ((2,), (2,)))
        self.assertEqual(endpoints(DigitalPath(interval(1), [(0,), (1,)])), ((0,), (1,)))

    def test_jump(self):
        with self.assertRaises(PathError):
            self.path(0, 2)
        with self.assertRaises(PathError):
            self.path(0, 9)

    def test_synchronize(self):
        a, b = synchronize(self.path(0, 1, 2), self.path(4, 3, 2, 1, 0))
        self.assertEqual(a.values, ((0,), (1,), (2,), (2,), (2,)))
        self.assertEqual(b.length, 4)
        c, d = synchronize(self.path(3), self.path(0, 1, 2, 3))
        self.assertEqual(c.values, ((3,),) * 4)
        self.assertEqual(synchronize(a, b), (a, b))
        e, f = synchronize(self.path(1, 2), self.path(2, 3))
        self.assertEqual((e.values, f.values), (((1,), (2,)), ((2,), (3,))))

    def test_synchronize_keeps_endpoints(self):
        rng = random.Random(40)
        for _ in range(50):
            a = self.path(*range(rng.randint(0, 4) + 1))
            b = self.path(*range(4, 4 - rng.randint(0, 4) - 1, -1))
            a2, b2 = synchronize(a, b)
            self.assertEqual((endpoints(a2), endpoints(b2)), (endpoints(a), endpoints(b)))
            self.assertEqual(synchronize(a2, b2), (a2, b2))

    def test_adjacent(self):
        a = self.path(0, 1, 2)
        self.assertTrue(paths_adjacent(a, a))
        cycle = DigitalImage.from_points(CYCLE, 4)
        bottom = DigitalPath(cycle, [(0, 0), (1, 0)])
        top = DigitalPath(cycle, [(0, 1), (1, 1)])
        self.assertTrue(paths_adjacent(bottom, top))
        self.assertFalse(paths_adjacent(self.path(0, 1), self.path(2, 3)))
        self.assertTrue(paths_adjacent(self.path(0, 1), self.path(2, 3), mode='connected'))
        with self.assertRaises(PathError):
            paths_adjacent(a, a, mode='close')

    def test_spider(self):
        spider = Spider.from_values(self.x, [[(0,)], [(0,), (1,)]])
        self.assertEqual(spider.ends, ((0,), (1,)))
        with self.assertRaises(PathError):
            Spider.from_values(self.x, [[(0,)], [(1,), (2,)]])


class SectionTest(SimpleTestCase):
    def test_interval_straight_paths(self):
        x = interval(3)
        rule = {}
        for p in x.points:
            for q in x.points:
                step = 1 if q[0] >= p[0] else -1
                rule[p + q] = DigitalPath(x, [(i,) for i in range(p[0], q[0] + step, step)])
        self.assertTrue(verify_section(rule.keys(), rule, x))

    def test_endpoint_mismatch(self):
        x = interval(1)
        rule = {(0, 1): DigitalPath(x, [(0,)])}
        verdict = verify_section([(0, 1)], rule, x)
        self.assertFalse(verdict)
        self.assertIn('ends at (0,), not (1,)', verdict.reason)

    def test_not_total(self):
        x = interval(1)
        with self.assertRaises(WitnessError):
            verify_section([(0, 1)], {}, x)

    def test_four_cycle_witness(self):
        image, cover, sections = four_cycle_witness()
        bound = verify_tc_witness(image, cover, sections)
        self.assertTrue(bound)
        self.assertEqual(bound.value, 2)

    def test_non_cover(self):
        image, cover, sections = four_cycle_witness()
        partial = CoverWitness(cover.base, [cover.parts[0], set(cover.parts[1]) - {(0, 0, 0, 1)}])
        bound = verify_tc_witness(image, partial, sections)
        self.assertFalse(bound)
        self.assertIsNone(bound.value)

    def test_tc_and_tc2_agree(self):
        rng = random.Random(41)
        image, cover, sections = four_cycle_witness()
        everything = [dict(sections[0]), dict(sections[1])]
        for _ in range(50):
            rules = [dict(r) for r in everything]
            for rule in rules:
                for u in list(rule):
                    if rng.random() < 0.2:
                        rule[u] = rule[u].extended(rule[u].length + 1)
                    x, y = u[:2], u[2:]
                    if y not in image.closed_neighbors(x) and rng.random() < 0.3:
                        # the other way round the square
                        middle = next(p for p in image.neighbors(x) if p != rule[u](1))
                        rule[u] = DigitalPath(image, [x, middle, y])
            spiders = [{u: path_as_spider(p) for u, p in rule.items()} for rule in rules]
            self.assertEqual(verify_tc_witness(image, cover, rules), verify_tcn_witness(image, 2, cover, spiders))

    def test_interval_tc3(self):
        x = interval(1)
        base = power(x, 3)
        rule = {}
        for u in base.points:
            x1, x2, x3 = (u[0],), (u[1],), (u[2],)
            rule[u] = Spider.from_values(x, [[x1], [x1, x2], [x1, x3]])
        bound = verify_tcn_witness(x, 3, CoverWitness(base, [base.points]), [rule])
        self.assertEqual(bound.value, 1)

    def test_spider_leg_mismatch(self):
        x = interval(1)
        rule = {(0, 1, 1): Spider.from_values(x, [[(0,)], [(0,), (1,)], [(0,)]])}
        verdict = verify_spider_section(rule.keys(), rule, x, 3)
        self.assertIn('leg 3', verdict.reason)

    def test_cat(self):
        x = interval(3)
        cover = CoverWitness(x, [x.points])
        self.assertEqual(verify_cat_witness(x, cover, [fold_chain(x, sorted(x.points))]).value, 1)

        square = power(interval(1), 2)
        certificate = find_contraction(square).certificate
        self.assertEqual(verify_cat_witness(square, CoverWitness(square, [square.points]), [certificate]).value, 1)

        cycle = DigitalImage.from_points(CYCLE, 4)
        identity_only = fold_chain(cycle, [(0, 0)])
        bound = verify_cat_witness(cycle, CoverWitness(cycle, [cycle.points]), [identity_only])
        self.assertFalse(bound)

    def test_cat_cover_of_cycle_by_arcs(self):
        cycle = DigitalImage.from_points(CYCLE, 4)
        arcs = [[(0, 0), (1, 0), (1, 1)], [(0, 1), (0, 0)]]
        cover = CoverWitness(cycle, arcs)
        bound = verify_cat_witness(cycle, cover, [fold_chain(cycle, a) for a in arcs])
        self.assertEqual(bound.value, 2)

    def test_reversal(self):
        image, cover, sections = four_cycle_witness()
        for rule in sections:
            reversed_rule = reverse_section(rule)
            self.assertTrue(verify_section(reversed_rule.keys(), reversed_rule, image))
            for u, path in reversed_rule.items():
                self.assertEqual(endpoints(path), (u[:2], u[2:]))


class ThetaTest(SimpleTestCase):
    def test_arc_products(self):
        image, cover, sections = arc_products()
        self.assertTrue(cover.is_cover)
        bound = verify_tc_witness(image, cover, sections)
        self.assertEqual(bound.value, 4)

    def test_example_cover_first_part_is_obstructed(self):
        image = theta()
        first = pairs(BETA, BETA) | pairs(BETA, ALPHA) | pairs(ALPHA, BETA)
        obstruction = full_row_obstruction(first, image, contractible=False)
        self.assertEqual(obstruction.kind, 'row')
        self.assertEqual(obstruction.point, (0, 0))
        self.assertIsNone(full_row_obstruction(pairs(ALPHA, ALPHA), image, contractible=False))

    def test_arm_section_search(self):
        image = theta()
        result = synthesize_section(pairs(ALPHA, ALPHA), image)
        self.assertEqual(result.outcome, SectionOutcome.FOUND)
        self.assertTrue(verify_section(pairs(ALPHA, ALPHA), result.rule, image))

    def test_single_pair(self):
        image = theta()
        result = synthesize_section([A[1] + A[9]], image)
        self.assertEqual(result.rule[A[1] + A[9]].length, 8)


class SearchTest(SimpleTestCase):
    def test_tc_is_one(self):
        self.assertEqual(tc_is_one(interval(1)).answer, Answer.YES)
        full = DigitalImage.from_points(CYCLE, 8)
        decision = tc_is_one(full)
        self.assertEqual(decision.answer, Answer.YES)
        self.assertTrue(verify_section(decision.rule.keys(), decision.rule, full))
        self.assertEqual(len(decision.rule), 16)

        cycle = DigitalImage.from_points(CYCLE, 4)
        decision = tc_is_one(cycle)
        self.assertEqual(decision.answer, Answer.YES)
        self.assertTrue(verify_section(decision.rule.keys(), decision.rule, cycle))
        self.assertEqual(len(decision.rule), 16)

        hexagon = DigitalImage.from_points(HEXAGON, 6)
        self.assertEqual(tc_is_one(hexagon).answer, Answer.NO)

    def test_walks_may_wait_and_turn_back(self):
        line = interval(2)
        walks = [p.values for p in candidate_paths(line, (0,), (1,), 3, 2)]
        self.assertEqual(walks, [
            ((0,), (1,)), ((0,), (0,), (1,)),
            ((0,), (0,), (0,), (1,)), ((0,), (1,), (0,), (1,)), ((0,), (1,), (2,), (1,)),
        ])
        self.assertEqual([p.values for p in candidate_paths(line, (0,), (1,), 3, 0)], [((0,), (1,))])
        self.assertEqual([p.values for p in candidate_paths(line, (1,), (1,), 2, 2)],
                         [((1,),), ((1,), (0,), (1,)), ((1,), (2,), (1,))])

    def test_cycle_section_needs_waiting(self):
        cycle = DigitalImage.from_points(CYCLE, 4)
        everything = pairs(CYCLE, CYCLE)
        geodesic = synthesize_section(everything, cycle, max_detour=0, check_rows=False)
        self.assertEqual(geodesic.outcome, SectionOutcome.NONE)
        self.assertIn('at most 0 steps longer', geodesic.reason)

        result = synthesize_section(everything, cycle, max_path_len=4)
        self.assertEqual(result.outcome, SectionOutcome.FOUND)
        self.assertTrue(verify_section(everything, result.rule, cycle))
        self.assertTrue(any(len(set(p.values)) < len(p.values) for p in result.rule.values()))

    def test_hexagon_row_is_obstructed(self):
        hexagon = DigitalImage.from_points(HEXAGON, 6)
        row = pairs(HEXAGON, [HEXAGON[0]])
        result = synthesize_section(row, hexagon)
        self.assertEqual(result.outcome, SectionOutcome.NONE)
        self.assertIn('contains the row through (0, 0, 0)', result.reason)

    def test_found_sections_verify(self):
        rng = random.Random(42)
        for _ in range(20):
            points = {(rng.randint(0, 3), rng.randint(0, 2)) for _ in range(6)}
            image = DigitalImage.from_points(points, rng.choice([4, 8]))
            U = {x + y for x in image.points for y in image.points if rng.random() < 0.3}
            result = synthesize_section(U, image, budget=20000)
            if result.outcome == SectionOutcome.FOUND:
                self.assertTrue(verify_section(U, result.rule, image))


class GroupTest(SimpleTestCase):
    def test_xor(self):
        x = interval(1)
        table = GroupTable.from_function(x, lambda a, b: (0,) if a == b else (1,))
        self.assertTrue(group_check(x, table))
        self.assertEqual(table.identity, (0,))
        self.assertEqual(table.inv((1,)), (1,))

    def test_mod_three(self):
        table = cyclic_group(3)
        verdict = group_check(table.image, table)
        self.assertFalse(verdict)
        self.assertIn('multiplication is not continuous', verdict.reason)

    def test_axiom_failures(self):
        x = interval(1)
        with self.assertRaises(GroupAxiomError):
            group_check(x, GroupTable.from_function(x, lambda a, b: (0,)))
        with self.assertRaises(GroupAxiomError):
            GroupTable(x, {((0,), (0,)): (0,)})

    def test_tcn_via_group(self):
        x = interval(1)
        table = cyclic_group(2)
        square = power(x, 2)
        certificate = find_contraction(square).certificate
        bound = tcn_upper_via_group(x, table, 3, CoverWitness(square, [square.points]), [certificate])
        self.assertEqual(bound.value, 1)
        self.assertIn('TC_3(H) = cat(H^2) <= 1', bound.certificate)

        line = fold_chain(x, [(0,), (1,)])
        self.assertEqual(tcn_upper_via_group(x, table, 2, CoverWitness(x, [x.points]), [line]).value, 1)

    def test_tcn_via_non_group(self):
        x = interval(1)
        with self.assertRaises(GroupAxiomError):
            tcn_upper_via_group(x, GroupTable.from_function(x, lambda a, b: (1,)), 2,
                                CoverWitness(x, [x.points]), [fold_chain(x, [(0,), (1,)])])

    def test_group_file(self):
        x = interval(1)
        table = parse_group('group\n0 * 0 = 0\n0 * 1 = 1\n1 * 0 = 1\n1 * 1 = 0\n', x)
        self.assertTrue(group_check(x, table))
        self.assertEqual(parse_group(dump_group(table), x).multiplication, table.multiplication)
        with self.assertRaisesMessage(FormatError, 'g:2: expected "a * b = c"'):
            parse_group('group\n0 * 0 0\n', x, source='g')


class WitnessFormatTest(SimpleTestCase):
    def test_round_trip(self):
        image, cover, sections = four_cycle_witness()
        text = dump_witness(cover, sections)
        parsed_cover, parsed_sections = parse_witness(text, cover.base, image)
        self.assertEqual(parsed_cover, cover)
        self.assertEqual(parsed_sections, sections)
        self.assertEqual(verify_tc_witness(image, parsed_cover, parsed_sections).value, 2)

    def test_spider_round_trip(self):
        x = interval(1)
        base = power(x, 3)
        rule = {u: Spider.from_values(x, [[u[:1]], [u[:1], u[1:2]], [u[:1], u[2:]]]) for u in base.points}
        cover = CoverWitness(base, [base.points])
        parsed_cover, parsed_sections = parse_witness(dump_witness(cover, [rule]), base, x)
        self.assertEqual(verify_tcn_witness(x, 3, parsed_cover, parsed_sections).value, 1)

    def test_cover_only(self):
        x = interval(2)
        cover, sections = parse_witness('cover 2\npart 1\n0 1\npart 2\n2\n', x, x)
        self.assertIsNone(sections)
        self.assertEqual(cover.parts, (frozenset([(0,), (1,)]), frozenset([(2,)])))

    def test_errors(self):
        x = interval(1)
        base = power(x, 2)
        with self.assertRaisesMessage(FormatError, 'w:3: (0, 7) is not a point of the base'):
            parse_witness('cover 1\npart 1\n0,7\n', base, x, source='w')
        with self.assertRaisesMessage(FormatError, 'w:5: (3,) is not a point of the image'):
            parse_witness('cover 1\npart 1\n0,1\nrule 1\n(0,1) -> path: 0 3\n', base, x, source='w')
        with self.assertRaisesMessage(FormatError, 'w:1: found 2 parts, header promises 3'):
            parse_witness('cover 3\npart 1\n0,1\npart 2\n1,1\n', base, x, source='w')
        with self.assertRaisesMessage(FormatError, 'w:2: expected "part 1"'):
            parse_witness('cover 1\npart 2\n', base, x, source='w')
