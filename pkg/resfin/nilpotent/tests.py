import json
from io import StringIO

from django.core.management import call_command
from django.test import SimpleTestCase

from config.exceptions import InputError
from words.models import FreeWord, SLWord
from words.utils import enumerate_ball

from .models import UnipotentMatrix
from .utils import (analytic_entry_bound, entry_bound, girth_upper_bound_nilpotent, heisenberg_ball, heisenberg_eval,
                    homomorphism_failures, reduce_mod)


def word(text):
    return FreeWord.parse(2, text)


class UnipotentMatrixTestCase(SimpleTestCase):

    def test_heisenberg_images(self):
        self.assertTrue(heisenberg_eval(word('')).is_identity())
        self.assertEqual(heisenberg_eval(word('abAB')).key(), (0, 1, 0))
        self.assertEqual(heisenberg_eval(word('aaa')).key(), (3, 0, 0))
        self.assertEqual(heisenberg_eval(word('aabb')).key(), (2, 4, 2))

    def test_straight_line_words(self):
        self.assertEqual(heisenberg_eval(SLWord.generator(2, 1) ** 1000).key(), (1000, 0, 0))
        program = SLWord.from_word(word('abAAB'))
        self.assertEqual(heisenberg_eval(program), heisenberg_eval(word('abAAB')))

    def test_inverse_and_powers(self):
        matrix = heisenberg_eval(word('abaBB'))
        self.assertTrue((matrix * ~matrix).is_identity())
        self.assertEqual(matrix ** 3, matrix * matrix * matrix)
        self.assertEqual(matrix ** -2, ~(matrix * matrix))

    def test_reduction(self):
        self.assertEqual(reduce_mod(heisenberg_eval(word('A')), 3).key(), (2, 0, 0))
        self.assertEqual(heisenberg_eval(word('A'), 3), reduce_mod(heisenberg_eval(word('A')), 3))
        self.assertEqual(homomorphism_failures(5, 1000, 1), [])

    def test_rejects_other_matrices(self):
        with self.assertRaises(InputError):
            UnipotentMatrix([[1, 0], [1, 1]])
        with self.assertRaises(InputError):
            UnipotentMatrix([[2, 0], [0, 1]])
        with self.assertRaises(InputError):
            heisenberg_eval(FreeWord.parse(1, 'a'))


class HeisenbergBallTestCase(SimpleTestCase):

    def test_ball_is_the_image_of_the_word_ball(self):
        for n in range(5):
            ball, sizes = heisenberg_ball(n)
            self.assertEqual(ball, {heisenberg_eval(w).key() for w in enumerate_ball(2, n)})
            self.assertEqual(sizes[-1], len(ball))
        self.assertEqual(heisenberg_ball(2)[1], [1, 5, 17])

    def test_growth_is_strict(self):
        sizes = heisenberg_ball(8)[1]
        self.assertTrue(all(left < right for left, right in zip(sizes, sizes[1:])))

    def test_entry_bound(self):
        self.assertEqual([entry_bound(n) for n in range(1, 7)], [1, 2, 3, 4, 6, 9])
        for n in range(1, 11):
            self.assertLessEqual(entry_bound(n), analytic_entry_bound(n))


class NilpotentGirthTestCase(SimpleTestCase):

    def test_small_radii(self):
        row = girth_upper_bound_nilpotent(1)
        self.assertEqual((row['modulus'], row['bound'], row['injective']), (3, 27, True))
        row = girth_upper_bound_nilpotent(2)
        self.assertEqual((row['modulus'], row['bound'], row['ball_size']), (5, 125, 17))
        row = girth_upper_bound_nilpotent(4)
        self.assertEqual((row['modulus'], row['bound'], row['stated_bound']), (9, 729, 9 ** 9))

    def test_polynomial_envelope(self):
        for n in range(2, 17):
            self.assertLessEqual(girth_upper_bound_nilpotent(n)['bound'], (n * n + 3) ** 3)

    def test_command(self):
        out = StringIO()
        call_command('nilpotent_girth', '--n', '2', '--samples', '20', stdout=out)
        rows = json.loads(out.getvalue())['rows']
        self.assertEqual([(row['modulus'], row['bound']) for row in rows], [(3, 27), (5, 125)])
        self.assertEqual([row['homomorphism_failures'] for row in rows], [0, 0])
