import logging

from config.exceptions import InputError
from config.limits import get_flat_budget

from .models import COMM, CONJ, GEN, INV, MUL, POW, FreeWord, Overflow, SLWord, alphabet, check_rank

logger = logging.getLogger(f'resfin.{__name__}')


def reduce_word(rank, raw):
    return FreeWord.reduce(rank, raw)


def parse_word(rank, text):
    return FreeWord.parse(rank, text)


def format_word(word):
    return str(word)


def multiply(u, v):
    return u * v


def inverse(u):
    return ~u


def conjugate(u, v):
    """
    v u v^-1
    """
    u.same_rank(v)
    return u.conjugate(v)


def commutator(u, v):
    """
    u v u^-1 v^-1
    """
    u.same_rank(v)
    return u.commutator(v)


def power(u, exponent):
    return u ** exponent


def word_length(u):
    return len(u)


def cyclic_reduce(u):
    return u.cyclic_reduce()


def word_growth(rank, n, cap=None):
    """
    Number of elements of the radius-n ball of F_rank: 1 + sum_{k=1..n} 2m(2m-1)^(k-1).
    With a cap, values above it come back as Overflow instead.
    """
    check_rank(rank)
    if n < 0:
        raise InputError(f'radius must be nonnegative, got {n}')
    total, sphere = 1, 2 * rank
    for _ in range(n):
        total += sphere
        if cap is not None and total > cap:
            return Overflow(cap)
        sphere *= 2 * rank - 1
    return total


def enumerate_ball(rank, n):
    """
    Yield the reduced words of length <= n, by length and then lexicographically with x < X < y < Y < ...
    """
    check_rank(rank)
    if n < 0:
        raise InputError(f'radius must be nonnegative, got {n}')
    letters = alphabet(rank)
    level = [()]
    yield FreeWord(rank, ())
    for _ in range(n):
        following = []
        for prefix in level:
            last = prefix[-1] if prefix else 0
            for letter in letters:
                if letter == -last:
                    continue
                word = prefix + (letter,)
                following.append(word)
                yield FreeWord(rank, word)
        level = following


def sl_build(word):
    return SLWord.from_word(word)


def sl_length_bound(program):
    return program.length_bound()


def sl_flatten(program, cap, work=None):
    """
    Flat reduced form of a straight-line word if its length is at most cap, else Overflow.
    Intermediate values are limited by the work budget, which defaults to the configured flat length budget
    and is never below cap; powers are sized exactly from the cyclically reduced core before they are expanded.
    """
    if cap < 0:
        raise InputError(f'cap must be nonnegative, got {cap}')
    work = max(get_flat_budget() if work is None else work, cap)
    bound = program.length_bound()
    marked = program.reachable()
    values = [None] * len(program.nodes)
    for position, (op, *args) in enumerate(program.nodes):
        if not marked[position]:
            continue
        if op == GEN:
            value = FreeWord(program.rank, (args[0],))
        elif op == INV:
            value = ~values[args[0]]
        elif op == MUL:
            value = values[args[0]] * values[args[1]]
        elif op == POW:
            base, exponent = values[args[0]], args[1]
            conjugator, core = base.cyclic_reduce()
            if core.letters and 2 * len(conjugator) + abs(exponent) * len(core) > work:
                logger.debug('power node %s exceeds the work budget %s', position, work)
                return Overflow(cap, bound)
            value = base ** exponent
        elif op == CONJ:
            outer = values[args[1]]
            value = outer * values[args[0]] * ~outer
        elif op == COMM:
            left, right = values[args[0]], values[args[1]]
            value = left * right * ~left * ~right
        if len(value) > work:
            logger.debug('node %s exceeds the work budget %s', position, work)
            return Overflow(cap, bound)
        values[position] = value
    result = values[program.root]
    if len(result) > cap:
        return Overflow(cap, bound)
    return result

