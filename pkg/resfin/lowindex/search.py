import logging

from permrep.models import Permutation, PermQuotient

logger = logging.getLogger(f'resfin.{__name__}')

UNDEFINED = -1


def reduce_columns(columns):
    stack = []
    for column in columns:
        if stack and stack[-1] == column ^ 1:
            stack.pop()
        else:
            stack.append(column)
    start, end = 0, len(stack)
    while end - start > 1 and stack[start] == stack[end - 1] ^ 1:
        start += 1
        end -= 1
    return tuple(stack[start:end])


def inverse_columns(columns):
    return tuple(column ^ 1 for column in reversed(columns))


class CosetTableSearch:
    """
    Backtracking over partial coset tables of F_rank with exactly `degree` cosets. The first undefined entry
    in row-major order (columns x, x^-1, y, y^-1, ...) is filled next, either with an existing coset whose
    inverse entry is free or with the next new coset. Completed tables come out in standard form, so each
    subgroup of index `degree` appears once and its generators are already canonically labelled.

    In normal mode every edge outside the spanning tree contributes its Schreier generator as a relator that
    must close at every coset; relators are scanned to deduce entries and to cut inconsistent branches.
    """

    def __init__(self, rank, degree, normal=False):
        self.rank = rank
        self.degree = degree
        self.normal = normal
        self.columns = 2 * rank
        self.table = [[UNDEFINED] * self.columns for _ in range(degree)]
        self.count = 1
        self.representatives = [()]
        self.relators = []
        self.trail = []
        self.nodes = 0

    def mark(self):
        return len(self.trail), self.count, len(self.relators)

    def rollback(self, mark):
        trail_size, count, relator_count = mark
        while len(self.trail) > trail_size:
            coset, column, target = self.trail.pop()
            self.table[coset][column] = UNDEFINED
            self.table[target][column ^ 1] = UNDEFINED
        del self.representatives[count:]
        self.count = count
        del self.relators[relator_count:]

    def define(self, coset, column, target):
        self.table[coset][column] = target
        self.table[target][column ^ 1] = coset
        self.trail.append((coset, column, target))

    def first_undefined(self):
        for coset in range(self.count):
            row = self.table[coset]
            for column in range(self.columns):
                if row[column] == UNDEFINED:
                    return coset, column
        return None

    def candidates(self, coset, column):
        found = [target for target in range(self.count) if self.table[target][column ^ 1] == UNDEFINED]
        if self.count < self.degree:
            found.append(self.count)
        return found

    def add_schreier_relator(self, coset, column, target):
        relator = reduce_columns(
            self.representatives[coset] + (column,) + inverse_columns(self.representatives[target])
        )
        if relator:
            self.relators.append(relator)

    def assign(self, coset, column, target):
        self.nodes += 1
        if target == self.count:
            self.count += 1
            self.representatives.append(self.representatives[coset] + (column,))
            self.define(coset, column, target)
            return self.deduce() if self.normal else True
        self.define(coset, column, target)
        if not self.normal:
            return True
        self.add_schreier_relator(coset, column, target)
        return self.deduce()

    def scan(self, relator, coset):
        """
        Trace relator forward and backward from coset. Returns False on a conflict, a deduction
        (coset, column, target) when exactly one entry is missing, and True otherwise.
        """
        table = self.table
        forward, position, length = coset, 0, len(relator)
        while position < length and table[forward][relator[position]] != UNDEFINED:
            forward = table[forward][relator[position]]
            position += 1
        if position == length:
            return forward == coset
        backward, last = coset, length - 1
        while last > position and table[backward][relator[last] ^ 1] != UNDEFINED:
            backward = table[backward][relator[last] ^ 1]
            last -= 1
        if last > position:
            return True
        column = relator[position]
        if table[backward][column ^ 1] != UNDEFINED:
            return False
        return forward, column, backward

    def deduce(self):
        changed = True
        while changed:
            changed = False
            index = 0
            while index < len(self.relators):
                relator = self.relators[index]
                for coset in range(self.count):
                    result = self.scan(relator, coset)
                    if result is False:
                        return False
                    if result is not True:
                        self.define(*result)
                        self.add_schreier_relator(*result)
                        changed = True
                index += 1
        return True

    def quotient(self):
        return PermQuotient([
            Permutation(self.table[coset][2 * index] for coset in range(self.degree)) for index in range(self.rank)
        ])

    def search(self):
        position = self.first_undefined()
        if position is None:
            if self.count == self.degree:
                yield self.quotient()
            return
        coset, column = position
        for target in self.candidates(coset, column):
            mark = self.mark()
            if self.assign(coset, column, target):
                yield from self.search()
            self.rollback(mark)

    def branches(self):
        """
        Choices for the first entry (coset 0, column x); searching them in order reproduces search().
        """
        return self.candidates(0, 0)

    def search_branch(self, target):
        if not self.assign(0, 0, target):
            return
        yield from self.search()


def search_tables(rank, degree, normal=False, target=None):
    searcher = CosetTableSearch(rank, degree, normal)
    if target is None:
        tables = list(searcher.search())
    else:
        tables = list(searcher.search_branch(target))
    logger.debug('rank %s degree %s normal %s branch %s: %s tables, %s nodes',
                 rank, degree, normal, target, len(tables), searcher.nodes)
    return tables
