import json
import math
from io import StringIO

from django.core.management import call_command
from django.test import SimpleTestCase

from config.exceptions import InputError
from lowindex.utils import enumerate_subgroups
from permrep.models import Permutation, PermQuotient

from .utils import (analyze_cover, chebyshev, chebyshev_rows, chebyshev_window, inductive_step_scan, lift_closed,
                    obstruction_scan, theorem4_experiment)


class CoverAnalysisTestCase(SimpleTestCase):

    def test_cycles_are_read_off_x(self):
        analysis = analyze_cover(PermQuotient.parse(['(1 2 3)(4 5)', '(3 4)']))
        self.assertEqual(analysis.x_cycle_lengths, [3, 2])
        self.assertEqual(analysis.cycles, ((1, 2, 3), (4, 5)))
        self.assertEqual(analysis.basepoint_length, 3)
        self.assertEqual(analysis.cycle_of(5), (4, 5))

    def test_trivial_x(self):
        analysis = analyze_cover(PermQuotient.parse(['1 2 3', '2 3 1']))
        self.assertEqual(analysis.x_cycle_lengths, [1, 1, 1])

    def test_input_errors(self):
        with self.assertRaises(InputError):
            analyze_cover(PermQuotient([Permutation.identity(3), Permutation.identity(3)]))
        with self.assertRaises(InputError):
            analyze_cover(PermQuotient.parse(['2 3 1']))

    def test_cycle_sum_law(self):
        for degree in range(1, 9):
            for q in enumerate_subgroups(2, degree):
                self.assertEqual(sum(analyze_cover(q).x_cycle_lengths), degree)


class LiftTestCase(SimpleTestCase):

    def test_examples(self):
        q = PermQuotient.parse(['(1 2 3)(4 5)', '(3 4)'])
        self.assertTrue(lift_closed(q, 1, 6))
        self.assertFalse(lift_closed(q, 1, 4))
        self.assertTrue(lift_closed(q, 4, 4))
        self.assertTrue(lift_closed(q, 2, 0))
        with self.assertRaises(InputError):
            lift_closed(q, 6, 1)

    def test_lift_closure_law(self):
        for degree in range(1, 7):
            for q in enumerate_subgroups(2, degree, up_to_conjugacy=True):
                for point in range(1, degree + 1):
                    for exponent in range(25):
                        self.assertEqual(lift_closed(q, point, exponent), (q.gens[0] ** exponent)(point) == point)


class ScanTestCase(SimpleTestCase):

    def test_obstruction_scan(self):
        for m in (1, 2, 3):
            report = obstruction_scan(m, 6)
            self.assertEqual(report['violations'], [])
            self.assertEqual(report['exponent'], math.lcm(*range(1, m + 1)))
        report = obstruction_scan(2, 4)
        self.assertGreater(report['nonclosing'], 0)
        self.assertEqual(report['covers'], sum(1 for degree in range(1, 5)
                                                for _ in enumerate_subgroups(2, degree, up_to_conjugacy=True)))

    def test_inductive_step_scan(self):
        for marked in (0, 1, 2):
            self.assertEqual(inductive_step_scan(2, marked, 5)['violations'], [])
        self.assertLess(inductive_step_scan(1, 1, 4)['nonclosing'], obstruction_scan(1, 4)['nonclosing'])


class ChebyshevTestCase(SimpleTestCase):

    def test_lcm_values(self):
        value, logarithm = chebyshev(10)
        self.assertEqual(value, 2520)
        self.assertEqual(round(logarithm, 3), 7.832)
        self.assertEqual(chebyshev(1), (1, 0.0))
        self.assertTrue(0.5 <= chebyshev(100)[1] / 100 <= 1.5)

    def test_prime_powers_agree_with_running_lcm(self):
        for row in chebyshev_rows(60):
            self.assertEqual(chebyshev(row['n'])[0], row['lcm'])

    def test_window_threshold(self):
        self.assertEqual(chebyshev_window(512), 3)
        self.assertTrue(all(row['in_window'] for row in chebyshev_rows(512) if row['n'] >= 7))


class Theorem4TestCase(SimpleTestCase):

    def test_lower_bounds(self):
        for n, lcm in ((1, 1), (2, 2), (3, 6)):
            row = theorem4_experiment(n, cap=6)
            self.assertEqual(row['lcm'], lcm)
            self.assertTrue(row['resolved'])
            self.assertGreaterEqual(row['dnormal_lower'], lcm + 1)
        self.assertEqual(theorem4_experiment(3, cap=6)['witness_bound'], 2304)

    def test_cap_below_lcm_is_unresolved(self):
        self.assertFalse(theorem4_experiment(3, cap=4)['resolved'])


class CoversCommandTestCase(SimpleTestCase):

    def test_pnt_command(self):
        out = StringIO()
        call_command('pnt', '--max', '10', stdout=out)
        row = json.loads(out.getvalue())['rows'][-1]
        self.assertEqual((row['n'], row['lcm'], row['log']), (10, 2520, 7.832))

    def test_pnt_csv(self):
        out = StringIO()
        call_command('pnt', '--max', '2', '--format', 'csv', stdout=out)
        self.assertEqual(out.getvalue(), 'n,lcm,log,ratio,in_window\n1,1,0.000,0.000,false\n2,2,0.693,0.347,false\n')

    def test_covers_scan_command(self):
        out = StringIO()
        call_command('covers_scan', '--m', '2', '--max-degree', '4', '--marked', '1', stdout=out)
        rows = json.loads(out.getvalue())['rows']
        self.assertEqual([row['scan'] for row in rows], ['obstruction', 'inductive'])
        self.assertEqual([row['violations'] for row in rows], [0, 0])

    def test_theorem4_command(self):
        out = StringIO()
        call_command('theorem4', '--n', '2', '--cap', '6', '--format', 'csv', stdout=out)
        self.assertEqual(out.getvalue().splitlines()[0], 'n,lcm,witness_bound,dnormal_lower,resolved')
