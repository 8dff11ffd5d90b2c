import logging
import math

from sympy import primerange

from config.exceptions import InputError, InvariantViolation
from lcmlib.utils import lcm_witness
from lowindex.utils import enumerate_subgroups
from separability.utils import normal_divisibility
from words.models import SLWord

from .models import CoverAnalysis

logger = logging.getLogger(f'resfin.{__name__}')

PNT_WINDOW = (0.5, 1.5)


def analyze_cover(q):
    if q.rank != 2:
        raise InputError(f'covers of the figure eight have rank 2, got {q.rank}')
    if not q.transitive:
        raise InputError('cover analysis needs a transitive action')
    cycles = [tuple(point + 1 for point in cycle) for cycle in q.gens[0].cycles()]
    cycles.sort(key=lambda cycle: (-len(cycle), cycle[0]))
    return CoverAnalysis(q, tuple(cycles), q.gens[0].cycle_length(1))


def lift_closed(q, point, exponent):
    """
    Whether the lift of x^exponent starting at point closes up, i.e. the x-cycle length through point divides it.
    """
    if not 1 <= point <= q.degree:
        raise InputError(f'point {point} out of range 1..{q.degree}')
    if exponent == 0:
        return True
    return exponent % q.gens[0].cycle_length(point) == 0


def covers(max_degree, threads=1):
    for degree in range(1, max_degree + 1):
        yield from enumerate_subgroups(2, degree, threads, up_to_conjugacy=True)


def obstruction_scan(m, max_degree, threads=1):
    """
    For every cover of degree <= max_degree (one per conjugacy class, all points scanned), every lift of
    x^lcm(1..m) that fails to close must sit on an x-cycle longer than m.
    """
    if m < 1:
        raise InputError(f'm must be positive, got {m}')
    exponent = math.lcm(*range(1, m + 1))
    report = {'scan': 'obstruction', 'm': m, 'marked': 0, 'max_degree': max_degree, 'exponent': exponent,
              'covers': 0, 'points_checked': 0, 'nonclosing': 0, 'violations': []}
    for q in covers(max_degree, threads):
        report['covers'] += 1
        for point in range(1, q.degree + 1):
            report['points_checked'] += 1
            if lift_closed(q, point, exponent):
                continue
            report['nonclosing'] += 1
            if q.gens[0].cycle_length(point) <= m:
                report['violations'].append({'gens': q.to_lists(), 'point': point})
    logger.info('obstruction scan m=%s: %s covers, %s non-closing lifts', m, report['covers'], report['nonclosing'])
    return report


def inductive_step_scan(m, marked, max_degree, threads=1):
    """
    Mark the `marked` longest x-cycles of each cover and take l = lcm(1..m) times their lengths: every lift of x^l
    closes on a marked cycle, and every lift that does not close lies on an unmarked cycle longer than m.
    """
    if m < 1 or marked < 0:
        raise InputError('m must be positive and the number of marked cycles nonnegative')
    base = math.lcm(*range(1, m + 1))
    report = {'scan': 'inductive', 'm': m, 'marked': marked, 'max_degree': max_degree, 'exponent': base,
              'covers': 0, 'points_checked': 0, 'nonclosing': 0, 'violations': []}
    for q in covers(max_degree, threads):
        report['covers'] += 1
        analysis = analyze_cover(q)
        chosen = analysis.cycles[:marked]
        exponent = base * math.prod(len(cycle) for cycle in chosen)
        on_marked = {point for cycle in chosen for point in cycle}
        for point in range(1, q.degree + 1):
            report['points_checked'] += 1
            if lift_closed(q, point, exponent):
                continue
            report['nonclosing'] += 1
            if point in on_marked or len(analysis.cycle_of(point)) <= m:
                report['violations'].append({'gens': q.to_lists(), 'point': point})
    return report


def chebyshev(n):
    """
    lcm(1..n) from the prime powers up to n, and its natural logarithm.
    """
    if n < 1:
        raise InputError(f'n must be positive, got {n}')
    value = 1
    for prime in primerange(2, n + 1):
        power = prime
        while power * prime <= n:
            power *= prime
        value *= power
    return value, math.log(value)


def chebyshev_rows(max_n):
    if max_n < 1:
        raise InputError(f'max must be positive, got {max_n}')
    value = 1
    for n in range(1, max_n + 1):
        value = math.lcm(value, n)
        logarithm = math.log(value)
        ratio = logarithm / n
        yield {'n': n, 'lcm': value, 'log': logarithm, 'ratio': ratio,
               'in_window': PNT_WINDOW[0] <= ratio <= PNT_WINDOW[1]}


def chebyshev_window(max_n):
    """
    Least N with log lcm(1..n) / n inside the window for every N <= n <= max_n.
    """
    threshold = 1
    for row in chebyshev_rows(max_n):
        if not row['in_window']:
            threshold = row['n'] + 1
    return threshold


def theorem4_experiment(n, cap=None, threads=1):
    """
    delta_n = lcm of {x, x^2, ..., x^lcm(1..n)} with powers kept symbolic. A quotient keeping delta_n is injective
    on that set, so D^normal(delta_n) >= lcm(1..n) + 1; the row reports the exact value or the lower bound cap + 1.
    """
    if n < 1:
        raise InputError(f'n must be positive, got {n}')
    exponent = chebyshev(n)[0]
    x = SLWord.generator(2, 1)
    certificate = lcm_witness([x ** power for power in range(1, exponent + 1)])
    result = normal_divisibility(certificate.delta, cap, threads)
    lower = result.value if result.resolved else result.cap + 1
    if result.resolved and result.value <= exponent:
        raise InvariantViolation(f'delta_{n} survives in a quotient of order {result.value} <= {exponent}',
                                 params={'gens': result.witness.to_lists()})
    return {
        'n': n,
        'lcm': exponent,
        'witness_bound': certificate.bound,
        'dnormal_lower': lower,
        'resolved': lower >= exponent + 1,
    }
