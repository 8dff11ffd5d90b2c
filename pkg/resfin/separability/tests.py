import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from config.exceptions import InputError
from words.models import Ball, FreeWord, SLWord
from words.utils import word_growth

from .utils import (check_basic_inequality, check_girth_inequality, divisibility, max_divisibility, normal_divisibility,
                    residual_girth, separates, smallest_nondivisor)


def word(text, rank=2):
    return FreeWord.parse(rank, text)


class DivisibilityTestCase(SimpleTestCase):

    def test_subgroup_divisibility(self):
        result = divisibility(word('a'))
        self.assertEqual(result.value, 2)
        self.assertTrue(separates(result.witness, word('a')))
        self.assertEqual(divisibility(word('aa')).value, 3)
        self.assertFalse(divisibility(word('aa'), cap=2).resolved)

    def test_normal_divisibility(self):
        result = normal_divisibility(word('abAB'))
        self.assertEqual(result.value, 6)
        self.assertTrue(result.witness.regular)
        self.assertFalse(result.witness.eval_word(word('abAB')).is_identity())
        self.assertIsNone(normal_divisibility(word('abAB'), cap=5).value)

    def test_powers_need_an_order_not_dividing_the_exponent(self):
        self.assertEqual(normal_divisibility(word('aaaaaa')).value, 4)
        self.assertFalse(normal_divisibility(word('aaaaaa'), cap=3).resolved)

    def test_integers_closed_form(self):
        for k in range(1, 65):
            self.assertEqual(divisibility(word('a' * k, rank=1)).value, smallest_nondivisor(k))
            self.assertEqual(normal_divisibility(word('a' * k, rank=1)).value, smallest_nondivisor(k))
        self.assertEqual(normal_divisibility(SLWord.generator(1, 1) ** 60).value, 7)

    def test_identity_is_rejected(self):
        with self.assertRaises(InputError):
            divisibility(word(''))
        x = SLWord.generator(2, 1)
        with self.assertRaises(InputError):
            normal_divisibility((x ** (10 ** 5)) * (x ** -(10 ** 5)), cap=4)
        with self.assertRaises(InputError):
            smallest_nondivisor(0)

    def test_max_divisibility(self):
        row = max_divisibility(1, 6)
        self.assertEqual((row['value'], row['argmax']), (4, 'aaaaaa'))
        self.assertTrue(row['resolved'])
        self.assertEqual(max_divisibility(2, 1)['value'], 2)
        self.assertEqual(max_divisibility(2, 2)['value'], 3)

    def test_unresolved_maximum_names_a_missing_word(self):
        row = max_divisibility(2, 4, cap=5)
        self.assertFalse(row['resolved'])
        self.assertIsNone(row['value'])
        self.assertEqual(len(row['argmax']), 4)

    def test_normal_divisibility_dominates(self):
        for gamma in Ball(2, 2, exclude_identity=True):
            self.assertGreaterEqual(normal_divisibility(gamma).value, divisibility(gamma).value, str(gamma))
        for k in (1, 2, 6, 12):
            gamma = word('a' * k + 'b')
            self.assertGreaterEqual(normal_divisibility(gamma).value, divisibility(gamma).value)

    def test_max_divisibility_is_monotone(self):
        for rank, radius in ((1, 8), (2, 3)):
            values = [max_divisibility(rank, n)['value'] for n in range(1, radius + 1)]
            self.assertEqual(values, sorted(values))
            self.assertGreaterEqual(min(values), 2)


class GirthTestCase(SimpleTestCase):

    def test_free_group_girth(self):
        result = residual_girth(2, 1)
        self.assertEqual(result.value, 5)
        self.assertTrue(result.witness.regular)

    def test_integers_girth(self):
        for n in range(1, 6):
            self.assertEqual(residual_girth(1, n).value, 2 * n + 1)
        self.assertFalse(residual_girth(1, 6, cap=12).resolved)
        self.assertEqual(residual_girth(2, 0).value, 1)

    def test_girth_is_monotone_and_dominates_growth(self):
        for rank, radius in ((1, 5), (2, 1)):
            values = [residual_girth(rank, n).value for n in range(radius + 1)]
            self.assertEqual(values, sorted(values))
            for n, value in enumerate(values):
                self.assertGreaterEqual(value, word_growth(rank, n))


class InequalityTestCase(SimpleTestCase):

    def test_basic_inequality(self):
        for rank, n in ((1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2)):
            report = check_basic_inequality(rank, n)
            self.assertTrue(report.resolved and report.passed, (rank, n, report.links))
        report = check_basic_inequality(1, 2)
        self.assertEqual(report.links['dmax'], 3)
        self.assertEqual(report.links['girth_source'], 'search')
        report = check_basic_inequality(2, 1)
        self.assertTrue(report.passed)
        self.assertEqual(report.links['normal_growth'], 8)

    def test_girth_chain_for_integers(self):
        report = check_girth_inequality(1, 4)
        self.assertTrue(report.passed)
        self.assertEqual(report.links['delta_length'], 12)
        self.assertEqual(report.links['dnormal_delta'], 5)
        self.assertEqual(report.links['smallest_nondivisor'], 5)

    def test_girth_chain_for_free_group(self):
        report = check_girth_inequality(2, 2, cap=12)
        self.assertTrue(report.resolved)
        self.assertTrue(report.passed)
        self.assertEqual(report.links['girth'], 5)
        self.assertLessEqual(report.links['delta_length'], report.links['declared_bound'])
        self.assertIsNone(report.links['dnormal_delta'])
        self.assertEqual(report.links['dnormal_lower'], 13)

    def test_odd_radius_is_rejected(self):
        with self.assertRaises(InputError):
            check_girth_inequality(2, 3)


class SeparabilityCommandTestCase(SimpleTestCase):

    def run_command(self, *args):
        out = StringIO()
        call_command(*args, stdout=out)
        return json.loads(out.getvalue())['rows']

    def test_dmax_command(self):
        rows = self.run_command('dmax', '--rank', '1', '--radius', '6', '--normal')
        self.assertEqual([row['value'] for row in rows], [2, 3, 3, 3, 3, 4])
        self.assertEqual(rows[-1]['argmax'], 'aaaaaa')

    def test_single_word(self):
        row = self.run_command('dmax', '--rank', '2', '--word', 'aa')[0]
        self.assertEqual((row['n'], row['value'], row['normal']), (2, 3, False))

    def test_unresolved_word_exits_two(self):
        with self.assertRaises(CommandError) as raised:
            call_command('dmax', '--rank', '2', '--word', 'abAB', '--normal', '--cap', '5', stdout=StringIO())
        self.assertEqual(raised.exception.returncode, 2)

    def test_girth_command(self):
        rows = self.run_command('girth', '--rank', '1', '--radius', '3')
        self.assertEqual([row['value'] for row in rows], [3, 5, 7])
        self.assertEqual([row['closed_form'] for row in rows], [3, 5, 7])

    def test_ineq_command(self):
        row = self.run_command('ineq', '--which', '2', '--rank', '1', '--n', '2')[0]
        self.assertTrue(row['passed'])
        self.assertEqual(row['links']['girth'], 3)
