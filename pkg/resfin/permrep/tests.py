import random

from django.test import SimpleTestCase
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from config.exceptions import InputError
from words.models import Overflow, SLWord
from words.utils import enumerate_ball, parse_word, reduce_word

from .models import Permutation, PermQuotient
from .serializers import PermQuotientSerializer
from .utils import (canonical_key, eval_word, image_order, is_regular, is_transitive, orbit, parse_permutation,
                    parse_quotient, trace)


def random_quotient(rng, rank, degree):
    gens = []
    for _ in range(rank):
        images = list(range(degree))
        rng.shuffle(images)
        gens.append(Permutation(images))
    return PermQuotient(gens)


def random_word(rng, rank, length):
    return reduce_word(rank, [rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length)])


class PermutationTestCase(SimpleTestCase):

    def test_parse_formats(self):
        self.assertEqual(parse_permutation('2 3 1 5 4'), parse_permutation('(1 2 3)(4 5)'))
        self.assertEqual(parse_permutation('(1 2)', degree=3).to_list(), [2, 1, 3])
        self.assertTrue(parse_permutation('()', degree=4).is_identity())
        self.assertEqual(str(parse_permutation('(1 3)(2)')), '3 2 1')

    def test_parse_errors(self):
        for text in ('1 1 2', '2 3', '(1 2', '(1 2)(2 3)', 'a b'):
            with self.assertRaises(InputError):
                parse_permutation(text)
        with self.assertRaises(InputError):
            parse_permutation('2 1', degree=3)

    def test_right_action(self):
        p, q = parse_permutation('(1 2)', 3), parse_permutation('(2 3)', 3)
        # p first, then q: 1 -> 2 -> 3
        self.assertEqual((p * q)(1), 3)
        self.assertEqual((q * p)(1), 2)

    def test_power_matches_repeated_product(self):
        rng = random.Random(3)
        for _ in range(20):
            images = list(range(7))
            rng.shuffle(images)
            p = Permutation(images)
            for exponent in range(-7, 8):
                expected = Permutation.identity(7)
                for _ in range(abs(exponent)):
                    expected = expected * (p if exponent > 0 else ~p)
                self.assertEqual(p ** exponent, expected)
            self.assertTrue((p ** p.order).is_identity())


class PermQuotientTestCase(SimpleTestCase):

    def test_eval_examples(self):
        q = parse_quotient(['(1 2)', '()'], degree=2)
        self.assertTrue(eval_word(q, parse_word(2, 'aa')).is_identity())
        q = parse_quotient(['(1 2 3)', '()'], degree=3)
        self.assertEqual(eval_word(q, parse_word(2, 'a'))(1), 2)
        self.assertEqual(trace(q, parse_word(2, 'aab'), 1), 3)
        q = parse_quotient(['(1 2 3)(4 5)', '(3 4)'], degree=5)
        self.assertFalse(eval_word(q, parse_word(2, 'abAB')).is_identity())

    def test_rank_mismatch(self):
        q = parse_quotient(['(1 2)'], degree=2)
        with self.assertRaises(InputError):
            eval_word(q, parse_word(2, 'b'))

    def test_homomorphism(self):
        rng = random.Random(5)
        for _ in range(300):
            q = random_quotient(rng, 2, rng.randint(1, 8))
            u, v = random_word(rng, 2, rng.randint(0, 10)), random_word(rng, 2, rng.randint(0, 10))
            self.assertEqual(eval_word(q, u * v), eval_word(q, u) * eval_word(q, v))
            self.assertEqual(trace(q, u * v, 1), eval_word(q, v)(eval_word(q, u)(1)))

    def test_straight_line_evaluation_uses_powers(self):
        q = parse_quotient(['(1 2 3)', '(1 2)'], degree=3)
        x = SLWord.generator(2, 1)
        self.assertTrue(eval_word(q, x ** (3 * 10 ** 12)).is_identity())
        self.assertEqual(eval_word(q, x ** (3 * 10 ** 12 + 1)), eval_word(q, parse_word(2, 'a')))

    def test_orbit(self):
        self.assertEqual(orbit(parse_quotient(['(1 2)', '()'], degree=3), 1), {1, 2})
        self.assertEqual(orbit(parse_quotient(['()', '()'], degree=3), 1), {1})
        q = parse_quotient(['(1 2 3 4 5)', '(2 4)'], degree=5)
        self.assertEqual(orbit(q, 1), {1, 2, 3, 4, 5})
        self.assertTrue(is_transitive(q))

    def test_image_order(self):
        self.assertEqual(image_order(parse_quotient(['(1 2)', '()'], degree=2), 10), 2)
        self.assertEqual(image_order(parse_quotient(['(1 2 3)', '(1 2)'], degree=3), 10), 6)
        self.assertEqual(image_order(parse_quotient(['()', '()'], degree=3), 10), 1)
        self.assertEqual(image_order(parse_quotient(['(1 2 3 4 5)', '(1 2)'], degree=5), 50), Overflow(50))

    def test_image_order_against_sympy(self):
        rng = random.Random(17)
        for _ in range(40):
            q = random_quotient(rng, 2, rng.randint(1, 6))
            oracle = PermutationGroup([SympyPermutation(list(gen.images)) for gen in q.gens]).order()
            self.assertEqual(image_order(q, 720), oracle)

    def test_is_regular(self):
        self.assertTrue(is_regular(parse_quotient(['(1 2)', '()'], degree=2)))
        self.assertFalse(is_regular(parse_quotient(['(1 2 3)', '(1 2)'], degree=3)))
        self.assertTrue(is_regular(parse_quotient(['1', '1'])))
        self.assertTrue(is_regular(parse_quotient(['(1 2 3)(4 5 6)', '(1 4)(2 5)(3 6)'], degree=6)))

    def test_stabilizer_has_index_degree(self):
        rng = random.Random(23)
        for _ in range(20):
            q = random_quotient(rng, 2, rng.randint(1, 5))
            if not is_transitive(q):
                continue
            endpoints = {trace(q, word, 1) for word in enumerate_ball(2, q.degree)}
            self.assertEqual(len(endpoints), q.degree)

    def test_regular_kernel_is_stabilizer(self):
        q = parse_quotient(['(1 2 3)(4 5 6)', '(1 4)(2 5)(3 6)'], degree=6)
        for word in enumerate_ball(2, 4):
            self.assertEqual(trace(q, word, 1) == 1, eval_word(q, word).is_identity())

    def test_canonical_key(self):
        q = parse_quotient(['(1 2)', '()'], degree=2)
        self.assertEqual(canonical_key(q), canonical_key(q.relabeled({1: 1, 2: 2})))
        self.assertNotEqual(canonical_key(q), canonical_key(parse_quotient(['()', '(1 2)'], degree=2)))
        q = parse_quotient(['(1 2 3)', '(2 3)'], degree=3)
        self.assertEqual(canonical_key(q), canonical_key(q.relabeled({1: 1, 2: 3, 3: 2})))
        with self.assertRaises(InputError):
            canonical_key(parse_quotient(['(1 2)', '()'], degree=3))

    def test_canonical_key_relabeling_invariance(self):
        rng = random.Random(29)
        for _ in range(50):
            q = random_quotient(rng, 2, rng.randint(2, 7))
            if not is_transitive(q):
                continue
            others = list(range(2, q.degree + 1))
            shuffled = others[:]
            rng.shuffle(shuffled)
            mapping = {1: 1, **dict(zip(others, shuffled))}
            self.assertEqual(canonical_key(q), canonical_key(q.relabeled(mapping)))

    def test_conjugacy_key_ignores_basepoint(self):
        q = parse_quotient(['(1 2 3)', '(1 2)'], degree=3)
        moved = q.relabeled({1: 2, 2: 1, 3: 3})
        self.assertNotEqual(canonical_key(q), canonical_key(moved))
        self.assertEqual(q.conjugacy_key(), moved.conjugacy_key())

    def test_serializer(self):
        data = PermQuotientSerializer(parse_quotient(['(1 2)', '()'], degree=2)).data
        self.assertEqual(dict(data), {'degree': 2, 'gens': [[2, 1], [1, 2]], 'transitive': True, 'regular': True,
                                      'order': 2})
