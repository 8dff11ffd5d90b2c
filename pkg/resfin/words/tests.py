import random
from io import StringIO

from django.core.management import call_command
from django.test import SimpleTestCase

from config.exceptions import InputError

from .models import Ball, FreeWord, Overflow, SLWord
from .utils import (commutator, conjugate, cyclic_reduce, enumerate_ball, inverse, multiply, parse_word, power,
                    reduce_word, sl_build, sl_flatten, sl_length_bound, word_growth, word_length)


def random_word(rng, rank, length):
    return reduce_word(rank, [rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length)])


class FreeWordTestCase(SimpleTestCase):

    def test_reduce_cancels_adjacent_inverses(self):
        self.assertEqual(str(reduce_word(2, [1, 2, -2, 1])), 'aa')
        self.assertTrue(reduce_word(2, []).is_identity())
        self.assertEqual(str(reduce_word(2, [1, 2, -1, -2])), 'abAB')

    def test_reduce_rejects_out_of_range_letters(self):
        with self.assertRaises(InputError):
            reduce_word(2, [3])
        with self.assertRaises(InputError):
            reduce_word(2, [0])

    def test_parse_and_format(self):
        self.assertEqual(parse_word(2, 'abBa').letters, (1, 1))
        self.assertEqual(str(parse_word(3, 'cAb')), 'cAb')
        self.assertEqual(str(parse_word(2, '')), '')
        with self.assertRaises(InputError):
            parse_word(2, 'abc')
        with self.assertRaises(InputError):
            parse_word(2, 'a1')

    def test_arithmetic(self):
        x, y = parse_word(2, 'a'), parse_word(2, 'b')
        self.assertEqual(str(commutator(x, y)), 'abAB')
        self.assertTrue(commutator(x, power(x, 2)).is_identity())
        self.assertEqual(word_length(power(x, 3)), 3)
        self.assertEqual(str(conjugate(x, y)), 'baB')
        self.assertEqual(str(power(parse_word(2, 'baB'), 3)), 'baaaB')
        self.assertEqual(str(power(x, -2)), 'AA')
        self.assertTrue(power(y, 0).is_identity())

    def test_rank_mismatch(self):
        with self.assertRaises(InputError):
            multiply(parse_word(2, 'a'), parse_word(3, 'a'))
        with self.assertRaises(InputError):
            commutator(parse_word(2, 'a'), parse_word(3, 'c'))

    def test_cyclic_reduce(self):
        conjugator, core = cyclic_reduce(parse_word(2, 'baaB'))
        self.assertEqual(str(conjugator), 'b')
        self.assertEqual(str(core), 'aa')
        conjugator, core = cyclic_reduce(parse_word(2, 'abAB'))
        self.assertTrue(conjugator.is_identity())
        self.assertEqual(len(core), 4)

    def test_sampled_properties(self):
        rng = random.Random(7)
        for _ in range(300):
            rank = rng.randint(1, 3)
            u = random_word(rng, rank, rng.randint(0, 12))
            v = random_word(rng, rank, rng.randint(0, 12))
            self.assertEqual(reduce_word(rank, u.letters), u)
            self.assertTrue(multiply(u, inverse(u)).is_identity())
            self.assertLessEqual(word_length(multiply(u, v)), word_length(u) + word_length(v))
            self.assertEqual(multiply(u, v), reduce_word(rank, u.letters + v.letters))

    def test_shortlex_sort_key(self):
        words = [parse_word(2, text) for text in ('b', 'A', 'aa', 'a', '', 'B')]
        self.assertEqual([str(word) for word in sorted(words, key=FreeWord.sort_key)], ['', 'a', 'A', 'b', 'B', 'aa'])


class BallTestCase(SimpleTestCase):

    def test_word_growth_values(self):
        self.assertEqual([word_growth(2, n) for n in range(5)], [1, 5, 17, 53, 161])
        self.assertEqual(word_growth(1, 6), 13)
        self.assertEqual(word_growth(2, 4, cap=100), Overflow(100))

    def test_enumeration_matches_closed_form(self):
        for rank in (1, 2, 3):
            for n in range(9):
                words = list(enumerate_ball(rank, n))
                self.assertEqual(len(words), word_growth(rank, n))
                self.assertEqual(len(set(words)), len(words))

    def test_enumeration_order(self):
        self.assertEqual([str(word) for word in enumerate_ball(1, 2)], ['', 'a', 'A', 'aa', 'AA'])
        words = list(enumerate_ball(2, 2))
        self.assertTrue(words[0].is_identity())
        self.assertEqual(words, sorted(words, key=FreeWord.sort_key))

    def test_punctured_ball(self):
        ball = Ball(2, 1, exclude_identity=True)
        self.assertEqual(len(ball), 4)
        self.assertEqual([str(word) for word in ball], ['a', 'A', 'b', 'B'])
        self.assertNotIn(FreeWord.identity(2), ball)
        self.assertIn(parse_word(2, 'B'), ball)


class SLWordTestCase(SimpleTestCase):

    def test_flatten_commutator(self):
        x, y = SLWord.generator(2, 1), SLWord.generator(2, 2)
        self.assertEqual(str(sl_flatten(x.commutator(y), 100)), 'abAB')
        self.assertEqual(str(sl_flatten(x.conjugate(y), 100)), 'baB')

    def test_flatten_overflow(self):
        huge = SLWord.generator(2, 1) ** (10 ** 6)
        result = sl_flatten(huge, 10)
        self.assertIsInstance(result, Overflow)
        self.assertEqual(sl_length_bound(huge), 10 ** 6)

    def test_flatten_cancelling_powers(self):
        x = SLWord.generator(2, 1)
        self.assertTrue(sl_flatten((x ** 50) * (x ** -50), 10).is_identity())

    def test_long_intermediates_within_the_flat_budget(self):
        x, y = SLWord.generator(2, 1), SLWord.generator(2, 2)
        big = 10 ** 6
        self.assertTrue(sl_flatten((x ** big) * (x ** -big), 10).is_identity())
        self.assertEqual(str(sl_flatten((x ** big) * (x ** (1 - big)), 1)), 'a')
        self.assertTrue(sl_flatten(x * y ** big * ~x * x * y ** -big * ~x, 10).is_identity())
        self.assertIsInstance(sl_flatten((x ** big) * (x ** big), 10), Overflow)

    def test_work_budget_is_never_below_cap(self):
        x = SLWord.generator(2, 1)
        self.assertEqual(len(sl_flatten(x ** 300, 300, work=10)), 300)
        self.assertIsInstance(sl_flatten((x ** 300) * (x ** -299), 1, work=10), Overflow)

    def test_flatten_inverts_build(self):
        rng = random.Random(11)
        for _ in range(200):
            word = random_word(rng, 2, rng.randint(0, 15))
            program = sl_build(word)
            self.assertEqual(sl_flatten(program, 100), word)
            self.assertGreaterEqual(sl_length_bound(program), len(word))

    def test_evaluate_in_free_group(self):
        x, y = parse_word(2, 'a'), parse_word(2, 'b')
        program = (SLWord.generator(2, 1) ** 3).commutator(SLWord.generator(2, 2).conjugate(SLWord.generator(2, 1)))
        self.assertEqual(program.evaluate([x, y], FreeWord.identity(2)), sl_flatten(program, 1000))

    def test_rejects_forward_references(self):
        with self.assertRaises(InputError):
            SLWord(2, [('gen', 1), ('mul', 0, 2), ('gen', 2)])
        with self.assertRaises(InputError):
            SLWord(2, [('gen', 3)])
        with self.assertRaises(InputError):
            SLWord(2, [('gen', 1), ('twist', 0)])

    def test_node_sharing_and_construction_equality(self):
        x = SLWord.generator(2, 1)
        program = (x ** 2) * (x ** 2)
        self.assertEqual(len(program.nodes), 3)
        listing = SLWord.from_listing(2, program.listing())
        self.assertTrue(listing.same_construction(program))
        self.assertFalse(program.same_construction(x ** 4))


class GrowthCommandTestCase(SimpleTestCase):

    def test_csv_table(self):
        out = StringIO()
        call_command('growth', '--rank', '2', '--max', '3', '--format', 'csv', stdout=out)
        self.assertEqual(out.getvalue(), 'n,omega\n0,1\n1,5\n2,17\n3,53\n')

    def test_json_table(self):
        out = StringIO()
        call_command('growth', '--rank', '1', '--max', '1', '--check', stdout=out)
        self.assertEqual(out.getvalue(), '{"command":"growth","rows":[{"n":0,"omega":1},{"n":1,"omega":3}]}\n')
