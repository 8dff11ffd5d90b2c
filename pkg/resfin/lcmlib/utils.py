import logging
import random

from config.exceptions import InputError, InvariantViolation, ResourceLimitError, ToolkitError
from config.limits import (get_flat_budget, get_membership_budget, get_membership_order_cap, get_nontriviality_battery,
                           get_normal_order_cap, get_verify_order_cap)
from lowindex.utils import enumerate_normal
from permrep.models import Permutation, PermQuotient
from words.models import COMM, CONJ, INV, MUL, POW, Ball, FreeWord, SLWord
from words.utils import sl_flatten, word_growth

from .models import NO, UNKNOWN, YES, VerificationReport, WitnessCertificate

logger = logging.getLogger(f'resfin.{__name__}')

# Degrees of the random permutation quotients used when a word is too long to flatten.
BATTERY_DEGREES = (5, 12)
MAX_SET_SIZE = 4096
UNARY_RULES = {CONJ: 'conjugate', INV: 'inverse', POW: 'power'}


def as_program(word):
    return word if isinstance(word, SLWord) else SLWord.from_word(word)


def word_size(word):
    return word.length_bound() if isinstance(word, SLWord) else len(word)


def flatten_within_budget(program):
    return sl_flatten(program, min(get_flat_budget(), program.length_bound()))


def is_trivial(word):
    if isinstance(word, SLWord):
        flat = flatten_within_budget(word)
        return isinstance(flat, FreeWord) and flat.is_identity()
    return word.is_identity()


def nontriviality_evidence(program):
    """
    Proof that program is not the identity: its nonempty flat form, or else a permutation quotient in which it
    survives, drawn from a seeded random battery. None when neither is found.
    """
    flat = flatten_within_budget(program)
    if isinstance(flat, FreeWord):
        return None if flat.is_identity() else {'flat': str(flat)}
    battery, seed = get_nontriviality_battery()
    rng = random.Random(seed)
    for _ in range(battery):
        degree = rng.randint(*BATTERY_DEGREES)
        gens = []
        for _ in range(program.rank):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(Permutation(images))
        q = PermQuotient(gens)
        if not q.eval_word(program).is_identity():
            return {'quotient': q.to_lists()}
    return None


def check_noncommuting_property(u, v):
    """
    First conjugator mu in (identity, x, y, ...) with [u, mu v mu^-1] nontrivial. Returns the generator index
    (0 for the identity), the commutator and its nontriviality evidence.
    """
    u, v = as_program(u), as_program(v)
    if u.rank != v.rank:
        raise InputError(f'rank mismatch: {u.rank} != {v.rank}')
    for index in range(u.rank + 1):
        conjugated = v if index == 0 else v.conjugate(SLWord.generator(u.rank, index))
        candidate = u.commutator(conjugated)
        evidence = nontriviality_evidence(candidate)
        if evidence is not None:
            return index, candidate, evidence
    raise InvariantViolation('no conjugator gives a nontrivial commutator', params={'rank': u.rank})


def derive_memberships(delta, programs):
    """
    For each input element, derivation steps over delta's nodes showing that delta lies in its normal closure.
    """
    table = {}
    positions = {}
    for position, ident in enumerate(delta.intern(table)):
        positions.setdefault(ident, position)
    inputs = {}
    for index, program in enumerate(programs):
        ident = program.intern(table)[program.root]
        if ident in positions:
            inputs.setdefault(positions[ident], []).append(index)

    rules = []
    for position, (op, *args) in enumerate(delta.nodes):
        found = {index: ('generator', ()) for index in inputs.get(position, ())}
        if op in UNARY_RULES:
            for index in rules[args[0]]:
                found.setdefault(index, (UNARY_RULES[op], (args[0],)))
        elif op == COMM:
            for index in rules[args[0]]:
                found.setdefault(index, ('commutator-left', (args[0],)))
            for index in rules[args[1]]:
                found.setdefault(index, ('commutator-right', (args[1],)))
        elif op == MUL:
            for index in rules[args[0]].keys() & rules[args[1]].keys():
                found.setdefault(index, ('product', (args[0], args[1])))
        rules.append(found)

    derivations = []
    for index in range(len(programs)):
        if index not in rules[delta.root]:
            raise InvariantViolation(f'delta is not derivable from S[{index}]')
        needed, stack = set(), [delta.root]
        while stack:
            position = stack.pop()
            if position not in needed:
                needed.add(position)
                stack.extend(rules[position][index][1])
        derivations.append({'gamma': index, 'steps': [
            {'node': position, 'rule': rules[position][index][0], 'from': list(rules[position][index][1])}
            for position in sorted(needed)
        ]})
    return derivations


def lcm_witness(S):
    """
    Common multiple of the nontrivial elements of S. The set is padded with x up to 2^k elements, then paired off
    level by level: each pair (u, v) becomes [u, mu v mu^-1] for the first conjugator mu keeping it nontrivial.
    The result has length at most 6 d 4^k, d the longest element.
    """
    S = list(S)
    if not S:
        raise InputError('the set must not be empty')
    rank = S[0].rank
    for gamma in S:
        if gamma.rank != rank:
            raise InputError(f'rank mismatch: {gamma.rank} != {rank}')
        if is_trivial(gamma):
            raise InputError('every element of the set must be nontrivial')
    if len(S) > MAX_SET_SIZE:
        raise ResourceLimitError(f'sets larger than {MAX_SET_SIZE} elements are not supported',
                                 params={'size': len(S)})
    programs = [as_program(gamma) for gamma in S]
    max_length = max(word_size(gamma) for gamma in S)
    conjugators = []
    if len(S) == 1:
        depth, delta = 0, programs[0]
        evidence = nontriviality_evidence(delta)
        if evidence is None:
            raise InvariantViolation('could not certify the single element as nontrivial')
    else:
        if rank < 2:
            raise InputError('pairing needs a free group of rank at least 2')
        depth = (len(S) - 1).bit_length()
        level = programs + [SLWord.generator(rank, 1)] * (2 ** depth - len(S))
        while len(level) > 1:
            following = []
            for u, v in zip(level[0::2], level[1::2]):
                index, candidate, evidence = check_noncommuting_property(u, v)
                conjugators.append(index)
                following.append(candidate)
            level = following
        delta = level[0]
    bound = 6 * max_length * 4 ** depth
    logger.debug('witness for %s elements: depth %s, %s nodes, bound %s', len(S), depth, len(delta.nodes), bound)
    return WitnessCertificate(S, delta, bound, derive_memberships(delta, programs), evidence, depth, max_length,
                              conjugators)


def same_element(left, right):
    left_flat, right_flat = flatten_within_budget(left), flatten_within_budget(right)
    if isinstance(left_flat, FreeWord) and isinstance(right_flat, FreeWord):
        return left_flat == right_flat
    return left.same_construction(right)


def replay_derivation(delta, program, steps, label, report):
    members = set()
    for step in steps:
        if not isinstance(step, dict):
            report.fail(f'{label}: malformed step {step!r}')
            return
        node, rule = step.get('node'), step.get('rule')
        if not isinstance(node, int) or not 0 <= node < len(delta.nodes):
            report.fail(f'{label}: step refers to missing node {node!r}')
            return
        op, *args = delta.nodes[node]
        if rule == 'generator':
            valid = same_element(delta.subword(node), program)
        elif rule in ('conjugate', 'inverse', 'power'):
            valid = UNARY_RULES.get(op) == rule and args[0] in members
        elif rule == 'product':
            valid = op == MUL and args[0] in members and args[1] in members
        elif rule == 'commutator-left':
            valid = op == COMM and args[0] in members
        elif rule == 'commutator-right':
            valid = op == COMM and args[1] in members
        else:
            report.fail(f'{label}: unknown rule {rule!r} at node {node}')
            return
        if not valid:
            report.fail(f'{label}: rule {rule} does not apply at node {node}')
            return
        members.add(node)
    if delta.root not in members:
        report.fail(f'{label}: derivation does not reach the root')


def check_evidence(certificate, report):
    evidence, delta = certificate.evidence or {}, certificate.delta
    try:
        if 'flat' in evidence:
            flat = FreeWord.parse(delta.rank, evidence['flat'])
            if flat.is_identity() or sl_flatten(delta, len(flat)) != flat:
                report.fail('evidence: the flat form does not match delta')
            elif len(flat) > certificate.bound:
                report.fail(f'evidence: flat length {len(flat)} exceeds the declared bound {certificate.bound}')
        elif 'quotient' in evidence:
            q = PermQuotient([Permutation.from_images(images) for images in evidence['quotient']])
            if q.eval_word(delta).is_identity():
                report.fail('evidence: delta is trivial in the supplied quotient')
        else:
            report.fail('evidence: missing')
    except ToolkitError as exc:
        report.fail(f'evidence: {exc.message}')


def verify_certificate(certificate, quotients=None, order_cap=None, threads=1):
    """
    Replay every derivation, check the nontriviality evidence and the length bound, and check that every
    quotient killing some element of S also kills delta (default: all quotients of order up to order_cap,
    itself defaulting to the verify cap).
    """
    report = VerificationReport()
    delta = certificate.delta
    programs = [as_program(gamma) for gamma in certificate.S]
    covered = {entry.get('gamma') for entry in certificate.derivations}
    for index in range(len(programs)):
        if index not in covered:
            report.fail(f'S[{index}]: no derivation')
    for entry in certificate.derivations:
        index = entry.get('gamma')
        if not isinstance(index, int) or not 0 <= index < len(programs):
            report.fail(f'derivation for unknown element {index!r}')
            continue
        replay_derivation(delta, programs[index], entry.get('steps', []), f'S[{index}]', report)
    if delta.length_bound() > certificate.bound:
        report.fail(f'length bound {delta.length_bound()} exceeds the declared bound {certificate.bound}')
    check_evidence(certificate, report)
    if quotients is None:
        order_cap = order_cap or get_verify_order_cap()
        quotients = (q for order in range(2, order_cap + 1) for q in enumerate_normal(delta.rank, order, threads))
    for q in quotients:
        report.quotients_checked += 1
        if any(q.eval_word(gamma).is_identity() for gamma in certificate.S) and not q.eval_word(delta).is_identity():
            report.fail(f'quotient {q.to_lists()} kills an element of S but not delta')
    return report


def lcm_ball_witness(rank, n):
    """
    Common multiple of the punctured n-ball, of length at most 6n 4^k with k = ceil(log2(omega(n) - 1)).
    """
    if rank < 2:
        raise InputError('ball witnesses need rank at least 2')
    if n < 1:
        raise InputError(f'n must be positive, got {n}')
    return lcm_witness(Ball(rank, n, exclude_identity=True))


def ball_stated_bound(rank, n):
    return 6 * n * word_growth(rank, n) ** 2


def power_set_witness(n, cap=None, threads=1):
    """
    Common multiple delta of {x, x^2, ..., x^n} in F_2 and a separation report: every quotient of order at most n
    must kill delta, and every quotient keeping delta must be injective on the set.
    """
    if n < 1:
        raise InputError(f'n must be positive, got {n}')
    cap = get_normal_order_cap() if cap is None else cap
    x = FreeWord.generator(2, 1)
    certificate = lcm_witness([x ** exponent for exponent in range(1, n + 1)])
    report = {'n': n, 'cap': cap, 'stated_lower': n, 'lower': None, 'killed_through': 0, 'injective': True,
              'resolved': False, 'witness_bound': certificate.bound}
    killed_through = 0
    for order in range(1, cap + 1):
        killed = True
        for q in enumerate_normal(2, order, threads):
            if q.eval_word(certificate.delta).is_identity():
                continue
            killed = False
            points = {(q.gens[0] ** exponent)(1) for exponent in range(1, n + 1)}
            if len(points) != n:
                report['injective'] = False
        if killed and killed_through == order - 1:
            killed_through = order
    report['killed_through'] = killed_through
    report['lower'] = killed_through + 1
    report['resolved'] = cap >= n and killed_through >= n
    return certificate, report


def rotations(letters):
    return {letters[start:] + letters[:start] for start in range(len(letters))}


def reduce_cyclic(rank, letters):
    return FreeWord.reduce(rank, letters).cyclic_reduce()[1].letters


def conjugate_products(delta, gamma, budget):
    """
    Whether some cyclic conjugate of delta reduces to the identity in at most `budget` moves, each replacing a
    piece u of a cyclic conjugate r = u v of gamma^(+-1) (|v| <= |u|) by v^-1. Every move removes one conjugate
    of gamma^(+-1), so success proves delta is a product of at most `budget` of them.
    """
    core = gamma.cyclic_reduce()[1].letters
    relators = rotations(core) | rotations(tuple(-letter for letter in reversed(core)))
    pieces = set()
    for relator in relators:
        for cut in range((len(relator) + 1) // 2, len(relator) + 1):
            pieces.add((relator[:cut], tuple(-letter for letter in reversed(relator[cut:]))))
    failed = set()

    def search(letters, depth):
        if not letters:
            return True
        if depth == 0 or (letters, depth) in failed:
            return False
        for start in range(len(letters)):
            rotated = letters[start:] + letters[:start]
            for piece, replacement in pieces:
                if rotated[:len(piece)] == piece:
                    following = reduce_cyclic(gamma.rank, replacement + rotated[len(piece):])
                    if search(following, depth - 1):
                        return True
        failed.add((letters, depth))
        return False

    start = delta.cyclic_reduce()[1].letters
    return any(search(start, depth) for depth in range(1, budget + 1))


def closure_membership(delta, gamma, budget=None, order_cap=None, certificate=None, threads=1):
    """
    Semi-decision of delta in the normal closure of gamma: 'no' when a quotient of order <= order_cap kills gamma
    but not delta, 'yes' when delta is a product of at most `budget` conjugates of gamma^(+-1) or a certificate
    derives it, 'unknown' otherwise.
    """
    budget = get_membership_budget() if budget is None else budget
    order_cap = get_membership_order_cap() if order_cap is None else order_cap
    if is_trivial(gamma):
        raise InputError('gamma must be nontrivial')
    if certificate is not None and same_element(as_program(delta), certificate.delta):
        for entry in certificate.derivations:
            if same_element(as_program(gamma), as_program(certificate.S[entry['gamma']])):
                report = VerificationReport()
                replay_derivation(certificate.delta, as_program(gamma), entry['steps'], 'membership', report)
                if report:
                    return YES
    if is_trivial(delta):
        return YES
    for order in range(2, order_cap + 1):
        for q in enumerate_normal(gamma.rank, order, threads):
            if q.eval_word(gamma).is_identity() and not q.eval_word(delta).is_identity():
                return NO
    if isinstance(delta, FreeWord) and isinstance(gamma, FreeWord) and conjugate_products(delta, gamma, budget):
        return YES
    return UNKNOWN


def exact_lcm_small(S, length_cap, budget=None, order_cap=None, threads=1):
    """
    Length of the shortest nontrivial word lying in every normal closure, scanning the ball in enumeration order.
    Returns (value, word); value is None when a needed membership query stays unknown or nothing is found.
    """
    S = list(S)
    if not 1 <= len(S) <= 3:
        raise InputError('exact lcm search supports sets of one to three elements')
    if not 0 < length_cap <= 12:
        raise InputError(f'length cap must lie in 1..12, got {length_cap}')
    for word in Ball(S[0].rank, length_cap, exclude_identity=True):
        verdicts = []
        for gamma in S:
            verdicts.append(closure_membership(word, gamma, budget, order_cap, threads=threads))
            if verdicts[-1] == NO:
                break
        if NO in verdicts:
            continue
        if all(verdict == YES for verdict in verdicts):
            return len(word), word
        logger.info('membership of %s stays unknown; exact lcm unresolved', word)
        return None, word
    return None, None


def length_recursion(k, d=1):
    """
    a_j = 4(a_{j-1} + 2) with a_0 = 0, its closed form 2 sum_{l=1..j} 4^l, and the length chain
    4^j d + a_j <= 6 d 4^j.
    """
    values = [0]
    for _ in range(k):
        values.append(4 * (values[-1] + 2))
    closed = [2 * sum(4 ** power for power in range(1, j + 1)) for j in range(k + 1)]
    chain = [{'j': j, 'length': 4 ** j * d + values[j], 'bound': 6 * d * 4 ** j} for j in range(k + 1)]
    return {'values': values, 'closed_form': closed, 'chain': chain}
