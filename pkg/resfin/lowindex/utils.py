import logging
import math
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

from config.exceptions import InputError, InvariantViolation
from config.limits import check_degree
from words.models import check_rank
from words.utils import enumerate_ball

from .search import CosetTableSearch, search_tables

logger = logging.getLogger(f'resfin.{__name__}')


def check_search(rank, degree):
    check_rank(rank)
    if not isinstance(degree, int) or degree < 1:
        raise InputError(f'index must be a positive integer, got {degree!r}')
    check_degree(degree)


def run_search(rank, degree, normal, threads=1):
    """
    Yield the completed tables in search order. With several threads the first branching level is searched
    concurrently; branch results are concatenated in branch order, so the stream does not depend on threads.
    """
    branches = CosetTableSearch(rank, degree, normal).branches()
    if threads > 1 and len(branches) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(lambda target: search_tables(rank, degree, normal, target), branches))
        for tables in results:
            yield from tables
        return
    for target in branches:
        yield from CosetTableSearch(rank, degree, normal).search_branch(target)


def deduplicated(quotients, key):
    seen = set()
    for q in quotients:
        fingerprint = key(q)
        if fingerprint in seen:
            raise InvariantViolation('the coset table search produced the same action twice',
                                     params={'gens': q.to_lists()})
        seen.add(fingerprint)
        yield q


def enumerate_subgroups(rank, degree, threads=1, up_to_conjugacy=False):
    """
    One pointed transitive action per subgroup of index `degree` in F_rank (the subgroup is the stabilizer of 1),
    in deterministic order. With up_to_conjugacy only the action whose pointed key is least among all basepoints
    is kept, giving one action per conjugacy class of subgroups.
    """
    check_search(rank, degree)
    quotients = deduplicated(run_search(rank, degree, False, threads), lambda q: q.canonical_key())
    for q in quotients:
        if up_to_conjugacy and q.canonical_key() != q.conjugacy_key():
            continue
        yield q


@lru_cache(maxsize=None)
def normal_tables(rank, degree, threads=1):
    tables = tuple(deduplicated(run_search(rank, degree, True, threads), lambda q: q.canonical_key()))
    for q in tables:
        if not q.regular:
            raise InvariantViolation('normal search completed a table that is not a regular action',
                                     params={'gens': q.to_lists()})
    logger.debug('rank %s: %s normal subgroups of index %s', rank, len(tables), degree)
    return tables


def enumerate_normal(rank, order, threads=1):
    """
    One regular action per normal subgroup of index `order` (the kernel), in deterministic order.
    """
    check_search(rank, order)
    yield from normal_tables(rank, order, threads)


def count_subgroups(rank, degree, threads=1):
    return sum(1 for _ in enumerate_subgroups(rank, degree, threads))


def count_normal(rank, order, threads=1):
    return sum(1 for _ in enumerate_normal(rank, order, threads))


def normal_subgroup_growth(rank, n, threads=1):
    """
    s(n): the number of normal subgroups of index at most n.
    """
    if n < 1:
        raise InputError(f'n must be positive, got {n}')
    return sum(count_normal(rank, order, threads) for order in range(1, n + 1))


def battery_radius(order):
    return 2 * math.ceil(math.log2(order)) + 2 if order > 1 else 2


def kernel_fingerprint(q, radius=None):
    """
    Which words of the ball of the given radius (default 2*ceil(log2 order) + 2) lie in the kernel of q.
    """
    radius = battery_radius(q.degree) if radius is None else radius
    return tuple(q.eval_word(word).is_identity() for word in enumerate_ball(q.rank, radius))
