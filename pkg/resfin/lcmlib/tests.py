import json
import os
import random
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from config.exceptions import InputError
from words.models import FreeWord, SLWord
from words.utils import reduce_word, sl_flatten

from .models import NO, UNKNOWN, YES, WitnessCertificate
from .serializers import dump_certificate, load_certificate
from .utils import (check_noncommuting_property, closure_membership, exact_lcm_small, lcm_ball_witness, lcm_witness,
                    length_recursion, power_set_witness, verify_certificate)


def word(text):
    return FreeWord.parse(2, text)


def flat(certificate):
    return sl_flatten(certificate.delta, certificate.bound)


class LcmWitnessTestCase(SimpleTestCase):

    def test_commutator_of_generators(self):
        certificate = lcm_witness([word('a'), word('b')])
        self.assertEqual(str(flat(certificate)), 'abAB')
        self.assertEqual(certificate.bound, 24)
        self.assertEqual(certificate.conjugators, [0])
        self.assertEqual(certificate.evidence, {'flat': 'abAB'})
        self.assertTrue(verify_certificate(certificate, order_cap=6))

    def test_derivations_follow_the_commutator(self):
        certificate = lcm_witness([word('a'), word('b')])
        rules = [[step['rule'] for step in entry['steps']] for entry in certificate.derivations]
        self.assertEqual(rules, [['generator', 'commutator-left'], ['generator', 'commutator-right']])

    def test_commuting_pair_is_conjugated(self):
        index, candidate, evidence = check_noncommuting_property(word('a'), word('a'))
        self.assertEqual(index, 2)
        self.assertEqual(evidence, {'flat': 'abaBAbAB'})
        self.assertEqual(str(sl_flatten(candidate, 64)), 'abaBAbAB')

    def test_powers_of_one_generator(self):
        certificate = lcm_witness([word('a'), word('aa')])
        self.assertEqual(certificate.conjugators, [2])
        self.assertTrue(verify_certificate(certificate, order_cap=8))

    def test_singleton(self):
        certificate = lcm_witness([word('aB')])
        self.assertEqual(certificate.depth, 0)
        self.assertEqual(str(flat(certificate)), 'aB')
        self.assertEqual(certificate.bound, 12)

    def test_ball_witness(self):
        certificate = lcm_ball_witness(2, 1)
        self.assertEqual(len(certificate.S), 4)
        self.assertEqual(certificate.depth, 2)
        self.assertEqual(certificate.bound, 96)
        self.assertLessEqual(len(flat(certificate)), 96)
        self.assertTrue(verify_certificate(certificate, order_cap=6))

    def test_random_sets(self):
        rng = random.Random(7)
        for _ in range(200):
            S, size = [], rng.randint(1, 8)
            while len(S) < size:
                candidate = reduce_word(2, [rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(rng.randint(1, 4))])
                if not candidate.is_identity():
                    S.append(candidate)
            certificate = lcm_witness(S)
            delta = flat(certificate)
            self.assertFalse(delta.is_identity())
            self.assertLessEqual(len(delta), certificate.bound)
            report = verify_certificate(certificate, order_cap=8)
            self.assertTrue(report, report.diagnostics)

    def test_input_errors(self):
        with self.assertRaises(InputError):
            lcm_witness([word('a'), word('')])
        with self.assertRaises(InputError):
            lcm_witness([])
        with self.assertRaises(InputError):
            lcm_witness([FreeWord.parse(1, 'a'), FreeWord.parse(1, 'aa')])
        with self.assertRaises(InputError):
            lcm_ball_witness(1, 2)

    def test_length_recursion(self):
        recursion = length_recursion(4, d=3)
        self.assertEqual(recursion['values'], [0, 8, 40, 168, 680])
        self.assertEqual(recursion['closed_form'], recursion['values'])
        for link in recursion['chain']:
            self.assertLessEqual(link['length'], link['bound'])


class VerificationTestCase(SimpleTestCase):

    def test_bogus_certificate_is_rejected(self):
        bogus = WitnessCertificate(
            S=[word('b')],
            delta=SLWord.generator(2, 1),
            bound=1,
            derivations=[{'gamma': 0, 'steps': [{'node': 0, 'rule': 'generator', 'from': []}]}],
            evidence={'flat': 'a'},
        )
        report = verify_certificate(bogus, order_cap=2)
        self.assertFalse(report)
        self.assertTrue(any('kills an element of S' in message for message in report.diagnostics))

    def test_missing_derivation_is_rejected(self):
        certificate = lcm_witness([word('a'), word('b')])
        certificate.derivations = certificate.derivations[:1]
        self.assertIn('S[1]: no derivation', verify_certificate(certificate, order_cap=2).diagnostics)

    def test_understated_bound_is_rejected(self):
        certificate = lcm_witness([word('a'), word('b')])
        certificate.bound = 3
        self.assertFalse(verify_certificate(certificate, order_cap=2))

    def test_serialized_certificate_verifies(self):
        certificate = lcm_witness([word('a'), word('aa'), word('b')])
        loaded = load_certificate(dump_certificate(certificate))
        self.assertEqual(loaded.S, certificate.S)
        self.assertTrue(loaded.delta.same_construction(certificate.delta))
        self.assertEqual(loaded.bound, certificate.bound)
        self.assertTrue(verify_certificate(loaded, order_cap=4))

    def test_long_intermediate_singleton_verifies(self):
        x = SLWord.generator(2, 1)
        certificate = lcm_witness([(x ** 1000) * (x ** -999)])
        self.assertEqual(certificate.evidence, {'flat': 'a'})
        report = verify_certificate(certificate, order_cap=6)
        self.assertTrue(report, report.diagnostics)

    def test_malformed_documents(self):
        for text in ('not json', '[]', '{}', '{"rank": 2, "S": ["q"], "delta": {"rank": 2, "nodes": [["gen", 1]]}, '
                                             '"bound": 1, "derivations": [], "evidence": {}}'):
            with self.assertRaises(InputError):
                load_certificate(text)


class PowerSetTestCase(SimpleTestCase):

    def test_small_quotients_kill_delta(self):
        for n in (2, 3, 4):
            _, report = power_set_witness(n, cap=6)
            self.assertTrue(report['resolved'])
            self.assertGreaterEqual(report['killed_through'], n)
            self.assertGreaterEqual(report['lower'], n + 1)
            self.assertTrue(report['injective'])

    def test_cap_below_n_is_inconclusive(self):
        _, report = power_set_witness(4, cap=3)
        self.assertFalse(report['resolved'])


class MembershipTestCase(SimpleTestCase):

    def test_semi_decision(self):
        self.assertEqual(closure_membership(word('abAB'), word('a')), YES)
        self.assertEqual(closure_membership(word('aa'), word('aa')), YES)
        self.assertEqual(closure_membership(word('a'), word('abAB')), NO)
        self.assertEqual(closure_membership(word('a'), word('b')), NO)
        self.assertEqual(closure_membership(word('abABabAB'), word('a'), budget=0, order_cap=2), UNKNOWN)

    def test_certificate_confirms_membership(self):
        certificate = lcm_witness([word('a'), word('b')])
        self.assertEqual(closure_membership(certificate.delta, word('b'), budget=0, order_cap=2,
                                            certificate=certificate), YES)

    def test_exact_lcm(self):
        value, witness = exact_lcm_small([word('a'), word('b')], 4)
        self.assertEqual(value, 4)
        self.assertEqual(len(witness), 4)
        self.assertLessEqual(value, len(flat(lcm_witness([word('a'), word('b')]))))
        self.assertEqual(exact_lcm_small([word('a')], 3), (1, word('a')))
        self.assertEqual(exact_lcm_small([word('aa')], 3), (2, word('aa')))

    def test_exact_lcm_limits(self):
        with self.assertRaises(InputError):
            exact_lcm_small([word('a')], 13)
        with self.assertRaises(InputError):
            exact_lcm_small([word('a'), word('b'), word('aB'), word('Ab')], 4)


class LcmCommandTestCase(SimpleTestCase):

    def test_lcm_witness_command(self):
        out = StringIO()
        call_command('lcm_witness', '--set', 'a,b', '--verify-cap', '4', stdout=out)
        row = json.loads(out.getvalue())['rows'][0]
        self.assertEqual(row['delta_length'], 4)
        self.assertEqual(row['bound'], 24)
        self.assertTrue(row['verified'])

    def test_saved_certificate_verifies(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'certificate.json')
            call_command('lcm_witness', '--set', 'a,aa', '--verify-cap', '2', '--save', path, stdout=StringIO())
            out = StringIO()
            call_command('verify', '--certificate', path, '--verify-cap', '4', '--format', 'csv', stdout=out)
            header, row = out.getvalue().splitlines()
            self.assertEqual(header, 'certificate,size,bound,quotients_checked,ok,diagnostics')
            self.assertIn(',true,', row)

    def test_failed_verification_exits_one(self):
        bogus = {'rank': 2, 'S': ['b'], 'delta': {'rank': 2, 'root': 0, 'nodes': [['gen', 1]]}, 'bound': 1,
                 'derivations': [{'gamma': 0, 'steps': [{'node': 0, 'rule': 'generator', 'from': []}]}],
                 'evidence': {'flat': 'a'}}
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'bogus.json')
            with open(path, 'w') as handle:
                json.dump(bogus, handle)
            with self.assertRaises(CommandError) as raised:
                call_command('verify', '--certificate', path, '--verify-cap', '2', stdout=StringIO())
        self.assertEqual(raised.exception.returncode, 1)

    def test_power_witness_command(self):
        out = StringIO()
        call_command('power_witness', '--n', '2', '--cap', '4', '--format', 'csv', stdout=out)
        self.assertEqual(out.getvalue().splitlines()[0],
                         'n,cap,witness_bound,stated_lower,lower,killed_through,injective,resolved')
