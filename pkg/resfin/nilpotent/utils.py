import logging
import random
from functools import lru_cache

from config.exceptions import InputError, InvariantViolation
from words.models import SLWord
from words.utils import reduce_word

from .models import UnipotentMatrix

logger = logging.getLogger(f'resfin.{__name__}')

DIMENSION = 3
HOMOMORPHISM_SAMPLE_LENGTH = 24


def heisenberg_generators(modulus=None):
    return [UnipotentMatrix.elementary(1, 2, DIMENSION, modulus), UnipotentMatrix.elementary(2, 3, DIMENSION, modulus)]


def heisenberg_eval(word, modulus=None):
    """
    Image of a rank-2 word under x -> E12, y -> E23, optionally reduced modulo `modulus`.
    """
    if word.rank != 2:
        raise InputError(f'the Heisenberg representation takes rank 2 words, got rank {word.rank}')
    gens = heisenberg_generators(modulus)
    identity = UnipotentMatrix.identity(DIMENSION, modulus)
    if isinstance(word, SLWord):
        return word.evaluate(gens, identity)
    result = identity
    for letter in word.letters:
        gen = gens[abs(letter) - 1]
        result = result * (gen if letter > 0 else ~gen)
    return result


def letter_images():
    gens = heisenberg_generators()
    return [image for gen in gens for image in (gen, ~gen)]


@lru_cache(maxsize=None)
def heisenberg_spheres(n):
    """
    Spheres of radius 0..n in the Cayley graph of the Heisenberg group, as sets of matrix keys. Neighbours of the
    sphere of radius r lie in radii r - 1, r and r + 1.
    """
    if n < 0:
        raise InputError(f'radius must be nonnegative, got {n}')
    if n == 0:
        return (frozenset({UnipotentMatrix.identity(DIMENSION).key()}),)
    spheres = heisenberg_spheres(n - 1)
    previous = spheres[-2] if len(spheres) > 1 else frozenset()
    images = letter_images()
    grown = set()
    for key in spheres[-1]:
        element = UnipotentMatrix.from_key(key, DIMENSION)
        for image in images:
            grown.add((element * image).key())
    return spheres + (frozenset(grown - spheres[-1] - previous),)


def heisenberg_ball(n):
    """
    Keys of the Heisenberg images of Ball(2, n), with the cumulative ball size for each radius.
    """
    spheres = heisenberg_spheres(n)
    sizes, total = [], 0
    for sphere in spheres:
        total += len(sphere)
        sizes.append(total)
    return frozenset().union(*spheres), sizes


def analytic_entry_bound(n):
    return n * (n + 1) // 2 + 1


def entry_bound(n):
    """
    Largest absolute matrix entry over the Heisenberg image of Ball(2, n).
    """
    ball, _ = heisenberg_ball(n)
    exact = max(max(abs(value) for value in key) for key in ball)
    if exact > analytic_entry_bound(n):
        raise InvariantViolation(f'entry bound {exact} exceeds n(n+1)/2 + 1 at radius {n}')
    return exact


def girth_upper_bound_nilpotent(n):
    """
    Reduction modulo M = 2 * entry_bound(n) + 1 is injective on the Heisenberg image of Ball(2, n), so the
    Heisenberg group has a quotient of order M^3 injective on its n-ball.
    """
    if n < 1:
        raise InputError(f'n must be positive, got {n}')
    bound = entry_bound(n)
    modulus = 2 * bound + 1
    ball, sizes = heisenberg_ball(n)
    reduced = {tuple(value % modulus for value in key) for key in ball}
    if len(reduced) != len(ball):
        raise InvariantViolation(f'reduction modulo {modulus} is not injective on the ball of radius {n}')
    logger.info('Heisenberg radius %s: modulus %s, %s ball elements', n, modulus, len(ball))
    return {
        'n': n,
        'entry_bound': bound,
        'analytic_entry_bound': analytic_entry_bound(n),
        'modulus': modulus,
        'bound': modulus ** (DIMENSION * (DIMENSION - 1) // 2),
        'stated_bound': modulus ** (DIMENSION * DIMENSION),
        'ball_size': sizes[-1],
        'injective': True,
    }


def reduce_mod(matrix, modulus):
    return matrix.reduce_mod(modulus)


def homomorphism_failures(modulus, samples, seed, length=HOMOMORPHISM_SAMPLE_LENGTH):
    """
    Random words whose image computed modulo `modulus` differs from the reduced integer image.
    """
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        word = reduce_word(2, [rng.choice((1, -1)) * rng.randint(1, 2) for _ in range(rng.randint(0, length))])
        if heisenberg_eval(word, modulus) != reduce_mod(heisenberg_eval(word), modulus):
            failures.append(str(word))
    return failures

