import logging
import math

from config.exceptions import InputError, InvariantViolation
from config.limits import get_flat_budget, get_normal_order_cap, get_subgroup_index_cap
from lcmlib.utils import lcm_ball_witness
from lowindex.utils import count_normal, enumerate_normal, enumerate_subgroups
from words.models import Ball, FreeWord, Overflow, SLWord
from words.utils import sl_flatten, word_growth

from .models import InequalityReport, SepResult

logger = logging.getLogger(f'resfin.{__name__}')


def describe(word):
    if isinstance(word, SLWord):
        return f'slp[{len(word.nodes)} nodes]'
    return str(word)


def check_nontrivial(word):
    if isinstance(word, SLWord):
        flat = sl_flatten(word, min(get_flat_budget(), word.length_bound()))
        if isinstance(flat, FreeWord) and flat.is_identity():
            raise InputError('the identity has no divisibility value')
    elif word.is_identity():
        raise InputError('the identity has no divisibility value')


def separates(q, word):
    """
    Whether the point 1 moves under word; for a regular action this is the same as word surviving in the quotient.
    """
    if isinstance(word, SLWord):
        return q.eval_word(word)(1) != 1
    return q.trace(word, 1) != 1


def actions(rank, degree, normal, threads=1):
    if normal:
        return enumerate_normal(rank, degree, threads)
    return enumerate_subgroups(rank, degree, threads)


def first_separating(words, cap, normal, threads=1):
    """
    For every word, the least degree <= cap of a pointed transitive (or regular) action moving 1 under it,
    with the first such action in enumeration order. Words missing from the result are unresolved within cap.
    """
    pending = list(words)
    found = {}
    for degree in range(2, cap + 1):
        if not pending:
            break
        for q in actions(pending[0].rank, degree, normal, threads):
            remaining = []
            for word in pending:
                if separates(q, word):
                    found[id(word)] = (degree, q)
                else:
                    remaining.append(word)
            pending = remaining
            if not pending:
                break
        logger.debug('degree %s: %s words still unseparated', degree, len(pending))
    return found


def divisibility(word, cap=None, threads=1):
    """
    D(word): least index of a subgroup not containing word.
    """
    cap = get_subgroup_index_cap() if cap is None else cap
    check_nontrivial(word)
    found = first_separating([word], cap, False, threads).get(id(word))
    if found is None:
        return SepResult(None, None, cap, describe(word))
    return SepResult(found[0], found[1], cap, describe(word))


def normal_divisibility(word, cap=None, threads=1):
    """
    D^normal(word): least order of a finite quotient in which word survives.
    """
    cap = get_normal_order_cap() if cap is None else cap
    check_nontrivial(word)
    found = first_separating([word], cap, True, threads).get(id(word))
    if found is None:
        return SepResult(None, None, cap, describe(word))
    return SepResult(found[0], found[1], cap, describe(word))


def max_divisibility(rank, n, cap=None, normal=True, threads=1):
    """
    Largest divisibility value over the punctured n-ball, with the first word attaining it.
    """
    if n < 1:
        raise InputError(f'radius must be positive, got {n}')
    if cap is None:
        cap = get_normal_order_cap() if normal else get_subgroup_index_cap()
    words = list(Ball(rank, n, exclude_identity=True))
    found = first_separating(words, cap, normal, threads)
    row = {'rank': rank, 'n': n, 'normal': normal, 'cap': cap, 'value': None, 'argmax': None, 'witness': None,
           'resolved': len(found) == len(words)}
    if not row['resolved']:
        missing = next(word for word in words if id(word) not in found)
        row['argmax'] = str(missing)
        return row
    best = None
    for word in words:
        value, witness = found[id(word)]
        if best is None or value > best[0]:
            best = value, word, witness
    row.update(value=best[0], argmax=str(best[1]), witness=best[2])
    return row


def residual_girth(rank, n, cap=None, threads=1):
    """
    G(n): least order of a finite quotient injective on the n-ball. Both characterisations are evaluated for every
    candidate (distinct images of the n-ball, no nontrivial element of the 2n-ball in the kernel) and must agree.
    """
    cap = get_normal_order_cap() if cap is None else cap
    if n < 0:
        raise InputError(f'radius must be nonnegative, got {n}')
    ball = list(Ball(rank, n))
    doubled = list(Ball(rank, 2 * n, exclude_identity=True))
    for order in range(max(1, word_growth(rank, n)), cap + 1):
        for q in enumerate_normal(rank, order, threads):
            injective = len({q.trace(word, 1) for word in ball}) == len(ball)
            faithful = all(q.trace(word, 1) != 1 for word in doubled)
            if injective != faithful:
                raise InvariantViolation('girth predicates disagree', params={'gens': q.to_lists(), 'n': n})
            if injective:
                logger.info('G(%s) = %s for rank %s', n, order, rank)
                return SepResult(order, q, cap, f'ball({rank},{n})')
    return SepResult(None, None, cap, f'ball({rank},{n})')


def smallest_nondivisor(k):
    if k < 1:
        raise InputError(f'k must be positive, got {k}')
    candidate = 2
    while k % candidate == 0:
        candidate += 1
    return candidate


def omega_bound(rank, n, cap=None, threads=1, dmax=None):
    """
    Order of the product of all quotients of order at most D_max(2n); every nontrivial element of the 2n-ball
    survives in one of them, so the diagonal quotient is injective on the n-ball. None when D_max(2n) is unknown.
    """
    row = dmax or max_divisibility(rank, 2 * n, cap, True, threads)
    if not row['resolved']:
        return None
    bound = 1
    for order in range(2, row['value'] + 1):
        bound *= order ** count_normal(rank, order, threads)
    return bound


def check_basic_inequality(rank, n, cap=None, threads=1):
    """
    log omega(n) <= s(D) log D and log G(n) <= s(D) log D with D = D_max(2n) over quotients.
    G(n) comes from the girth search when it resolves and from omega_bound otherwise.
    """
    report = InequalityReport(1, rank, n)
    dmax = max_divisibility(rank, 2 * n, cap, True, threads)
    omega = word_growth(rank, n)
    report.links = {'omega': omega, 'dmax': dmax['value'], 'dmax_argmax': dmax['argmax'], 'cap': dmax['cap']}
    if not dmax['resolved']:
        return report
    value = dmax['value']
    growth = sum(count_normal(rank, order, threads) for order in range(1, value + 1))
    right = growth * math.log(value)
    girth = residual_girth(rank, n, cap, threads)
    if girth.resolved:
        log_girth, source = math.log(girth.value), 'search'
    else:
        bound = omega_bound(rank, n, cap, threads, dmax)
        log_girth, source = math.log(bound), 'omega_bound'
    report.links.update({
        'normal_growth': growth,
        'rhs': right,
        'log_omega': math.log(omega),
        'girth': girth.value,
        'log_girth': log_girth,
        'girth_source': source,
    })
    report.resolved = True
    report.passed = math.log(omega) <= right and log_girth <= right
    return report


def check_girth_inequality(rank, n, cap=None, threads=1):
    """
    Chain G(n/2) <= D^normal(delta) <= D_max(|delta|) with |delta| <= 6n omega(n)^2, where delta is a common
    multiple of the punctured n-ball. An unresolved D^normal(delta) contributes the lower bound cap + 1.
    """
    if n < 2 or n % 2:
        raise InputError(f'n must be even and positive, got {n}')
    cap = get_normal_order_cap() if cap is None else cap
    report = InequalityReport(2, rank, n)
    omega = word_growth(rank, n)
    target = 6 * n * omega ** 2
    girth = residual_girth(rank, n // 2, cap, threads)
    if rank == 1:
        exponent = math.lcm(*range(1, n + 1))
        delta = FreeWord.generator(1, 1) ** exponent
        length = exponent
        declared = exponent
    else:
        certificate = lcm_ball_witness(rank, n)
        delta = certificate.delta
        flat = sl_flatten(delta, min(get_flat_budget(), certificate.bound))
        length = certificate.bound if isinstance(flat, Overflow) else len(flat)
        declared = certificate.bound
    separated = normal_divisibility(delta, cap, threads)
    lower = separated.value if separated.resolved else cap + 1
    report.links = {
        'girth': girth.value,
        'dnormal_delta': separated.value,
        'dnormal_lower': lower,
        'delta_length': length,
        'declared_bound': declared,
        'target': target,
        'cap': cap,
    }
    if rank == 1:
        report.links['smallest_nondivisor'] = smallest_nondivisor(length)
    report.resolved = girth.resolved
    report.passed = girth.resolved and girth.value <= lower and length <= target
    return report
