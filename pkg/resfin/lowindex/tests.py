from itertools import permutations, product

from django.test import SimpleTestCase, override_settings

from config.exceptions import ResourceLimitError
from permrep.models import Permutation, PermQuotient
from words.utils import enumerate_ball

from .utils import (count_normal, count_subgroups, enumerate_normal, enumerate_subgroups, kernel_fingerprint,
                    normal_subgroup_growth)


def brute_force(rank, degree):
    everything = [Permutation(images) for images in permutations(range(degree))]
    subgroups, normal = set(), set()
    for gens in product(everything, repeat=rank):
        q = PermQuotient(gens)
        if not q.transitive:
            continue
        subgroups.add(q.canonical_key())
        if q.regular:
            normal.add(q.canonical_key())
    return subgroups, normal


class SubgroupSearchTestCase(SimpleTestCase):

    def test_small_counts(self):
        self.assertEqual(count_subgroups(2, 1), 1)
        self.assertEqual(count_subgroups(2, 2), 3)
        self.assertEqual(count_subgroups(1, 3), 1)
        self.assertEqual(str(next(enumerate_subgroups(1, 3)).gens[0]), '2 3 1')

    def test_free_group_subgroup_counts(self):
        self.assertEqual([count_subgroups(2, degree) for degree in range(1, 6)], [1, 3, 13, 71, 461])

    def test_actions_are_transitive_and_distinct(self):
        quotients = list(enumerate_subgroups(2, 4))
        self.assertTrue(all(q.transitive for q in quotients))
        self.assertEqual(len({q.canonical_key() for q in quotients}), len(quotients))

    def test_tables_are_in_canonical_labelling(self):
        for q in enumerate_subgroups(2, 4):
            self.assertEqual(q.canonical_key(), bytes([q.degree] + [image for gen in q.gens for image in gen.images]))

    def test_matches_brute_force(self):
        for degree in range(1, 5):
            subgroups, normal = brute_force(2, degree)
            self.assertEqual({q.canonical_key() for q in enumerate_subgroups(2, degree)}, subgroups)
            self.assertEqual({q.canonical_key() for q in enumerate_normal(2, degree)}, normal)

    def test_up_to_conjugacy(self):
        classes = list(enumerate_subgroups(2, 3, up_to_conjugacy=True))
        self.assertEqual(len(classes), 7)
        self.assertEqual(len({q.conjugacy_key() for q in classes}), 7)
        self.assertEqual(len(list(enumerate_subgroups(2, 3))), 13)

    def test_threads_do_not_change_output(self):
        single = [q.to_lists() for q in enumerate_subgroups(2, 4)]
        self.assertEqual([q.to_lists() for q in enumerate_subgroups(2, 4, threads=3)], single)
        self.assertEqual(list(enumerate_normal(2, 6, threads=4)), list(enumerate_normal(2, 6)))

    def test_degree_ceiling(self):
        with self.assertRaises(ResourceLimitError):
            list(enumerate_subgroups(2, 17))

    @override_settings(MAX_DEGREE=5)
    def test_environment_lowers_ceiling(self):
        with self.assertRaises(ResourceLimitError):
            list(enumerate_normal(2, 6))


class NormalSearchTestCase(SimpleTestCase):

    def test_normal_counts(self):
        self.assertEqual([count_normal(2, order) for order in range(1, 7)], [1, 3, 4, 7, 6, 15])
        self.assertEqual(count_normal(1, 5), 1)

    def test_normal_subgroup_growth(self):
        self.assertEqual(normal_subgroup_growth(2, 1), 1)
        self.assertEqual(normal_subgroup_growth(2, 2), 4)
        self.assertEqual(normal_subgroup_growth(2, 3), 8)
        self.assertEqual(normal_subgroup_growth(2, 6), 36)

    def test_actions_are_regular(self):
        for order in range(1, 9):
            for q in enumerate_normal(2, order):
                self.assertTrue(q.regular)
                self.assertEqual(q.image_order(order), order)

    def test_kernels_are_distinct(self):
        for order in range(2, 5):
            fingerprints = [kernel_fingerprint(q) for q in enumerate_normal(2, order)]
            self.assertEqual(len(set(fingerprints)), len(fingerprints))

    def test_prime_order_kernels_factor_through_abelianization(self):
        for q in enumerate_normal(2, 3):
            for word in enumerate_ball(2, 4):
                sums = [sum(1 if letter > 0 else -1 for letter in word.letters if abs(letter) == index)
                        for index in (1, 2)]
                self.assertEqual(q.eval_word(word), (q.gens[0] ** sums[0]) * (q.gens[1] ** sums[1]))
