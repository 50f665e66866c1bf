import random
from collections import deque

from django.test import SimpleTestCase

from grid.images import DigitalImage, DigitalMap, interval, permute_axes, product
from helpers.parsing import FormatError

from .formats import dump_script, parse_certificate, parse_script
from .scripts import (
    ContractionCertificate, HomotopyScript, ScriptError, concatenate, fold_chain, reverse, verify_contraction,
    verify_homotopy,
)
from .search import Outcome, find_contraction, one_step_moves


SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
HEXAGON = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)]


def unit_square():
    x = interval(1)
    return product(x, x)


def square_contraction():
    square = unit_square()
    f1 = {p: (0, 0) for p in square.points}
    f1[(1, 1)] = (1, 0)
    script = HomotopyScript.from_tables(square, square, [
        {p: p for p in square.points}, f1, {p: (0, 0) for p in square.points},
    ])
    return ContractionCertificate(script, (0, 0))


def shortest_contraction(image):
    """Fewest steps from the identity to a constant map, by breadth-first search."""
    identity = tuple(image.sorted_points)
    seen = {identity}
    frontier = deque([(identity, 0)])
    while frontier:
        state, depth = frontier.popleft()
        if len(set(state)) == 1:
            return depth
        for move in one_step_moves(image, state):
            if move not in seen:
                seen.add(move)
                frontier.append((move, depth + 1))
    return None


class VerifyTest(SimpleTestCase):
    def test_identity_script(self):
        cube = DigitalImage.from_points(HEXAGON, 6)
        identity = DigitalMap.identity(cube)
        self.assertTrue(verify_homotopy(HomotopyScript(cube, cube, (identity, identity))))

    def test_square_contraction(self):
        certificate = square_contraction()
        self.assertTrue(verify_homotopy(certificate.script))
        self.assertTrue(verify_contraction(certificate))

    def test_jump(self):
        pair = DigitalImage.from_points([(0, 0, 0), (1, 1, 1)], 6)
        script = HomotopyScript.from_tables(pair, pair, [
            {(0, 0, 0): (0, 0, 0), (1, 1, 1): (1, 1, 1)},
            {(0, 0, 0): (1, 1, 1), (1, 1, 1): (1, 1, 1)},
        ])
        verdict = verify_homotopy(script)
        self.assertFalse(verdict)
        self.assertIn('(0, 0, 0) jumps from (0, 0, 0) to (1, 1, 1)', verdict.reason)

    def test_discontinuous_stage(self):
        x = interval(2)
        script = HomotopyScript.from_tables(x, x, [
            {(0,): (0,), (1,): (1,), (2,): (2,)},
            {(0,): (0,), (1,): (0,), (2,): (2,)},
        ])
        self.assertIn('f_1 is not continuous', verify_homotopy(script).reason)

    def test_interval_fold(self):
        x = interval(5)
        certificate = fold_chain(x, sorted(x.points))
        self.assertEqual(certificate.length, 5)
        self.assertTrue(verify_contraction(certificate))

    def test_first_map_not_identity(self):
        x = interval(1)
        script = HomotopyScript.from_tables(x, x, [{(0,): (0,), (1,): (0,)}, {(0,): (0,), (1,): (0,)}])
        verdict = verify_contraction(ContractionCertificate(script, (0,)))
        self.assertFalse(verdict)
        self.assertIn('f_0', verdict.reason)

    def test_wrong_target(self):
        certificate = square_contraction()
        self.assertFalse(verify_contraction(ContractionCertificate(certificate.script, (1, 1))))

    def test_partial_map(self):
        x = interval(1)
        with self.assertRaises(ScriptError):
            HomotopyScript.from_tables(x, x, [{(0,): (0,)}])

    def test_time_reversal(self):
        rng = random.Random(30)
        x = interval(3)
        for _ in range(100):
            tables = [{p: (rng.randint(0, 3),) for p in x.points} for _ in range(3)]
            script = HomotopyScript.from_tables(x, x, tables)
            self.assertEqual(bool(verify_homotopy(script)), bool(verify_homotopy(reverse(script))))

    def test_concatenation(self):
        certificate = square_contraction()
        script = certificate.script
        there_and_back = concatenate(script, script.reversed())
        self.assertEqual(there_and_back.length, 4)
        self.assertTrue(verify_homotopy(there_and_back))
        with self.assertRaises(ScriptError):
            concatenate(script, script)

    def test_fold_into_larger_image(self):
        square = DigitalImage.from_points(SQUARE, 4)
        arc = fold_chain(square, [(0, 0), (1, 0), (1, 1)])
        self.assertEqual(arc.domain.points, {(0, 0), (1, 0), (1, 1)})
        self.assertTrue(verify_contraction(arc))


class SearchTest(SimpleTestCase):
    def test_interval(self):
        result = find_contraction(interval(1))
        self.assertEqual(result.outcome, Outcome.CONTRACTIBLE)
        self.assertEqual(result.certificate.length, 1)

    def test_singleton(self):
        result = find_contraction(DigitalImage.from_points([(4, 4)], 8))
        self.assertEqual(result.outcome, Outcome.CONTRACTIBLE)
        self.assertEqual(result.certificate.length, 0)
        self.assertTrue(verify_contraction(result.certificate))

    def test_four_cycle_folds_onto_an_edge(self):
        cycle = DigitalImage.from_points(SQUARE, 4)
        fold = HomotopyScript.from_tables(cycle, cycle, [
            {p: p for p in SQUARE},
            {(0, 0): (0, 0), (1, 0): (1, 0), (1, 1): (1, 0), (0, 1): (0, 0)},
            {p: (0, 0) for p in SQUARE},
        ])
        self.assertTrue(verify_contraction(ContractionCertificate(fold, (0, 0))))

        result = find_contraction(cycle)
        self.assertEqual(result.outcome, Outcome.CONTRACTIBLE)
        self.assertEqual(result.certificate.length, 2)
        self.assertTrue(verify_contraction(result.certificate))
        swapped = permute_axes(cycle, (1, 0))
        self.assertEqual(find_contraction(swapped).outcome, Outcome.CONTRACTIBLE)

    def test_cube_corners_contract(self):
        corners = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
        cube = DigitalImage.from_points(corners, 6)
        result = find_contraction(cube)
        self.assertEqual(result.outcome, Outcome.CONTRACTIBLE)
        self.assertLessEqual(result.certificate.length, 3)
        self.assertTrue(verify_contraction(result.certificate))

    def test_hexagon_only_rotates(self):
        hexagon = DigitalImage.from_points(HEXAGON, 6)
        moves = set(one_step_moves(hexagon, tuple(hexagon.sorted_points)))
        self.assertEqual(len(moves), 3)
        self.assertEqual(find_contraction(hexagon).outcome, Outcome.NOT_CONTRACTIBLE)

    def test_searched_certificates_verify(self):
        images = [
            DigitalImage.from_points(SQUARE, 8), unit_square(), interval(4),
            DigitalImage.from_points([(0, 0), (1, 0), (2, 0), (1, 1), (1, 2)], 4),
            DigitalImage.from_points([(0, 0, 0), (1, 1, 1), (2, 2, 1)], 26),
        ]
        for image in images:
            result = find_contraction(image)
            self.assertEqual(result.outcome, Outcome.CONTRACTIBLE)
            self.assertTrue(verify_contraction(result.certificate))

    def test_limits(self):
        cycle = DigitalImage.from_points(SQUARE, 4)
        self.assertEqual(find_contraction(cycle, budget=3).outcome, Outcome.UNKNOWN)
        self.assertEqual(find_contraction(cycle, max_steps=1).outcome, Outcome.UNKNOWN)
        with self.assertRaises(ScriptError):
            find_contraction(cycle, max_steps=0)

    def test_step_limit_matches_breadth_first_depth(self):
        images = [
            DigitalImage.from_points(SQUARE, 4), unit_square(), interval(4),
            DigitalImage.from_points([(0, 0), (1, 0), (2, 0), (1, 1), (1, 2)], 4),
            DigitalImage.from_points([(x, y) for x in range(3) for y in range(2)], 4),
            DigitalImage.from_points([(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2)], 8),
        ]
        for image in images:
            steps = shortest_contraction(image)
            result = find_contraction(image, max_steps=steps)
            self.assertEqual(result.outcome, Outcome.CONTRACTIBLE, image)
            self.assertLessEqual(result.certificate.length, steps)
            self.assertTrue(verify_contraction(result.certificate))
            if steps > 1:
                self.assertEqual(find_contraction(image, max_steps=steps - 1).outcome, Outcome.UNKNOWN)

    def test_disconnected(self):
        far = DigitalImage.from_points([(0, 0), (5, 5)], 4)
        self.assertEqual(find_contraction(far).outcome, Outcome.NOT_CONTRACTIBLE)


class ScriptFormatTest(SimpleTestCase):
    def test_round_trip(self):
        certificate = square_contraction()
        text = dump_script(certificate.script)
        self.assertTrue(text.startswith('homotopy 2\nt 0\n0 0 -> 0 0\n'))
        parsed = parse_certificate(text, unit_square())
        self.assertEqual(parsed.script, certificate.script)
        self.assertEqual(parsed.target, (0, 0))
        self.assertTrue(verify_contraction(parsed))

    def test_errors(self):
        x = interval(1)
        with self.assertRaisesMessage(FormatError, 's:2: block t=0 has no value for (1,)'):
            parse_script('homotopy 1\nt 0\n0 -> 0\nt 1\n0 -> 0\n1 -> 0\n', x, source='s')
        with self.assertRaisesMessage(FormatError, 's:3: (5,) is not a point of the domain'):
            parse_script('homotopy 0\nt 0\n5 -> 0\n', x, source='s')
        with self.assertRaisesMessage(FormatError, 's:1: header promises 3 maps'):
            parse_script('homotopy 2\nt 0\n0 -> 0\n1 -> 1\n', x, source='s')
        with self.assertRaisesMessage(FormatError, 's:2: expected "t 0"'):
            parse_script('homotopy 0\nt 1\n', x, source='s')
