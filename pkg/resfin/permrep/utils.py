from .models import Permutation, PermQuotient


def parse_permutation(text, degree=None):
    return Permutation.parse(text, degree)


def parse_quotient(texts, degree=None):
    return PermQuotient.parse(texts, degree)


def eval_word(q, word):
    return q.eval_word(word)


def trace(q, word, point=1):
    return q.trace(word, point)


def orbit(q, point=1):
    return q.orbit(point)


def is_transitive(q):
    return q.transitive


def image_order(q, cap):
    return q.image_order(cap)


def is_regular(q):
    return q.regular


def canonical_key(q):
    return q.canonical_key(1)
