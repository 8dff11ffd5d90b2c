import string
from dataclasses import dataclass

from config.exceptions import InputError

LETTERS = string.ascii_lowercase

GEN, INV, MUL, POW, CONJ, COMM = 'gen', 'inv', 'mul', 'pow', 'conj', 'comm'
OPERATIONS = (GEN, INV, MUL, POW, CONJ, COMM)


@dataclass(frozen=True)
class Overflow:
    """
    Marker returned instead of a value when a computation hits its cap.
    """
    cap: int
    bound: int = None

    def __str__(self):
        return f'overflow(cap={self.cap})'


def alphabet(rank):
    """
    Signed letters in enumeration order: x < x^-1 < y < y^-1 < ...
    """
    return [sign * index for index in range(1, rank + 1) for sign in (1, -1)]


def letter_key(letter):
    return abs(letter), letter < 0


def check_rank(rank):
    if not isinstance(rank, int) or rank < 1:
        raise InputError(f'rank must be a positive integer, got {rank!r}', params={'rank': rank})
    return rank


class FreeWord:
    """
    Freely reduced word in F_rank. Letters are signed generator indices (+i for the i-th generator,
    -i for its inverse). Use FreeWord.reduce for untrusted letter sequences.
    """
    __slots__ = ('rank', 'letters')

    def __init__(self, rank, letters=()):
        self.rank = rank
        self.letters = tuple(letters)

    @classmethod
    def reduce(cls, rank, raw):
        check_rank(rank)
        stack = []
        for letter in raw:
            if not isinstance(letter, int) or letter == 0 or abs(letter) > rank:
                raise InputError(f'letter {letter!r} out of range for rank {rank}',
                                 params={'letter': letter, 'rank': rank})
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        return cls(rank, stack)

    @classmethod
    def identity(cls, rank):
        return cls(check_rank(rank), ())

    @classmethod
    def generator(cls, rank, index):
        return cls.reduce(rank, [index])

    @classmethod
    def parse(cls, rank, text):
        """
        Lowercase letters a, b, c, ... are generators, uppercase letters their inverses; '' is the identity.
        """
        check_rank(rank)
        raw = []
        for char in text.strip():
            if char.isspace():
                continue
            index = LETTERS.find(char.lower()) + 1
            if index == 0 or index > rank:
                raise InputError(f'unknown letter {char!r} for rank {rank}', params={'text': text})
            raw.append(index if char.islower() else -index)
        return cls.reduce(rank, raw)

    def __str__(self):
        if self.rank > len(LETTERS):
            raise InputError(f'text syntax supports rank up to {len(LETTERS)}')
        return ''.join(
            LETTERS[letter - 1] if letter > 0 else LETTERS[-letter - 1].upper() for letter in self.letters
        )

    def __repr__(self):
        return f'FreeWord({self.rank}, {str(self)!r})'

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self):
        return hash((self.rank, self.letters))

    def sort_key(self):
        return len(self.letters), tuple(letter_key(letter) for letter in self.letters)

    def is_identity(self):
        return not self.letters

    def same_rank(self, other):
        if self.rank != other.rank:
            raise InputError(f'rank mismatch: {self.rank} != {other.rank}',
                             params={'left': self.rank, 'right': other.rank})

    def __mul__(self, other):
        self.same_rank(other)
        left, right = self.letters, other.letters
        cut = 0
        limit = min(len(left), len(right))
        while cut < limit and left[-1 - cut] == -right[cut]:
            cut += 1
        return FreeWord(self.rank, left[:len(left) - cut] + right[cut:])

    def __invert__(self):
        return FreeWord(self.rank, tuple(-letter for letter in reversed(self.letters)))

    def __pow__(self, exponent):
        if exponent < 0:
            return (~self) ** -exponent
        if exponent == 0 or not self.letters:
            return FreeWord(self.rank)
        conjugator, core = self.cyclic_reduce()
        return FreeWord(self.rank, conjugator.letters + core.letters * exponent + (~conjugator).letters)

    def conjugate(self, other):
        """
        other * self * other^-1
        """
        return other * self * ~other

    def commutator(self, other):
        """
        [self, other] = self * other * self^-1 * other^-1
        """
        return self * other * ~self * ~other

    def cyclic_reduce(self):
        """
        Split self as c * core * c^-1 with core cyclically reduced.
        """
        letters = self.letters
        start, end = 0, len(letters)
        while end - start > 1 and letters[start] == -letters[end - 1]:
            start += 1
            end -= 1
        return FreeWord(self.rank, letters[:start]), FreeWord(self.rank, letters[start:end])


class Ball:
    """
    The radius-n ball of F_rank for the symmetric generating set. With exclude_identity it is the
    punctured ball B•(n).
    """

    def __init__(self, rank, radius, exclude_identity=False):
        if radius < 0:
            raise InputError(f'radius must be nonnegative, got {radius}')
        self.rank = check_rank(rank)
        self.radius = radius
        self.exclude_identity = exclude_identity

    def __iter__(self):
        from .utils import enumerate_ball

        words = enumerate_ball(self.rank, self.radius)
        if self.exclude_identity:
            next(words)
        return words

    def __len__(self):
        from .utils import word_growth

        return word_growth(self.rank, self.radius) - (1 if self.exclude_identity else 0)

    def __contains__(self, word):
        return (word.rank == self.rank and len(word) <= self.radius
                and not (self.exclude_identity and word.is_identity()))

    def __repr__(self):
        return f'Ball(rank={self.rank}, radius={self.radius}, exclude_identity={self.exclude_identity})'


class _Assembler:
    """
    Collects instructions of a new straight-line program, sharing identical instructions.
    """

    def __init__(self, rank):
        self.rank = rank
        self.nodes = []
        self.index = {}

    def add(self, instruction):
        found = self.index.get(instruction)
        if found is None:
            found = len(self.nodes)
            self.nodes.append(instruction)
            self.index[instruction] = found
        return found

    def absorb(self, word):
        if word.rank != self.rank:
            raise InputError(f'rank mismatch: {self.rank} != {word.rank}')
        mapping = []
        for instruction in word.nodes:
            op = instruction[0]
            if op == GEN:
                mapping.append(self.add(instruction))
            elif op == POW:
                mapping.append(self.add((POW, mapping[instruction[1]], instruction[2])))
            else:
                mapping.append(self.add((op,) + tuple(mapping[ref] for ref in instruction[1:])))
        return mapping[word.root]

    def build(self, root):
        return SLWord(self.rank, self.nodes, root)


class SLWord:
    """
    Straight-line word program. Each node is an instruction tuple referring to earlier nodes only:
    ('gen', i), ('inv', a), ('mul', a, b), ('pow', a, k), ('conj', a, b) = b a b^-1,
    ('comm', a, b) = a b a^-1 b^-1.
    """
    __slots__ = ('rank', 'nodes', 'root')

    def __init__(self, rank, nodes, root=None):
        check_rank(rank)
        nodes = tuple(tuple(node) for node in nodes)
        if not nodes:
            raise InputError('straight-line word needs at least one node')
        for position, node in enumerate(nodes):
            op = node[0] if node else None
            if op not in OPERATIONS:
                raise InputError(f'node {position}: unknown instruction {node!r}')
            if op == GEN:
                if len(node) != 2 or not isinstance(node[1], int) or not 1 <= node[1] <= rank:
                    raise InputError(f'node {position}: bad generator {node!r}')
                continue
            refs = node[1:2] if op in (INV, POW) else node[1:3]
            if len(node) != (2 if op == INV else 3):
                raise InputError(f'node {position}: bad arity {node!r}')
            if op == POW and not isinstance(node[2], int):
                raise InputError(f'node {position}: exponent must be an integer')
            for ref in refs:
                if not isinstance(ref, int) or not 0 <= ref < position:
                    raise InputError(f'node {position}: reference {ref!r} is not an earlier node')
        root = len(nodes) - 1 if root is None else root
        if not 0 <= root < len(nodes):
            raise InputError(f'root {root} out of range')
        self.rank = rank
        self.nodes = nodes
        self.root = root

    @classmethod
    def generator(cls, rank, index):
        return cls(rank, [(GEN, index)])

    @classmethod
    def from_word(cls, word):
        assembler = _Assembler(word.rank)
        if word.is_identity():
            return assembler.build(assembler.add((POW, assembler.add((GEN, 1)), 0)))
        current = None
        for letter in word.letters:
            node = assembler.add((GEN, abs(letter)))
            if letter < 0:
                node = assembler.add((INV, node))
            current = node if current is None else assembler.add((MUL, current, node))
        return assembler.build(current)

    @classmethod
    def coerce(cls, word):
        return word if isinstance(word, SLWord) else cls.from_word(word)

    def _combine(self, op, other):
        other = SLWord.coerce(other)
        assembler = _Assembler(self.rank)
        left = assembler.absorb(self)
        right = assembler.absorb(other)
        return assembler.build(assembler.add((op, left, right)))

    def _unary(self, op, *extra):
        assembler = _Assembler(self.rank)
        node = assembler.absorb(self)
        return assembler.build(assembler.add((op, node) + extra))

    def __mul__(self, other):
        return self._combine(MUL, other)

    def __invert__(self):
        return self._unary(INV)

    def __pow__(self, exponent):
        return self._unary(POW, exponent)

    def conjugate(self, other):
        """
        other * self * other^-1
        """
        return self._combine(CONJ, other)

    def commutator(self, other):
        return self._combine(COMM, other)

    def subword(self, node):
        return SLWord(self.rank, self.nodes[:node + 1], node)

    def reachable(self):
        marked = [False] * len(self.nodes)
        marked[self.root] = True
        for position in range(self.root, -1, -1):
            if not marked[position]:
                continue
            node = self.nodes[position]
            if node[0] == GEN:
                continue
            refs = node[1:2] if node[0] in (INV, POW) else node[1:3]
            for ref in refs:
                marked[ref] = True
        return marked

    def length_bound(self):
        bounds = []
        for op, *args in self.nodes:
            if op == GEN:
                bounds.append(1)
            elif op == INV:
                bounds.append(bounds[args[0]])
            elif op == MUL:
                bounds.append(bounds[args[0]] + bounds[args[1]])
            elif op == POW:
                bounds.append(abs(args[1]) * bounds[args[0]])
            elif op == CONJ:
                bounds.append(bounds[args[0]] + 2 * bounds[args[1]])
            else:
                bounds.append(2 * bounds[args[0]] + 2 * bounds[args[1]])
        return bounds[self.root]

    def evaluate(self, images, identity):
        """
        Image under the homomorphism sending generator i to images[i - 1]. Values must support
        *, ~ and ** (powers are expected to be computed in logarithmic or better time).
        """
        marked = self.reachable()
        values = [None] * len(self.nodes)
        for position, (op, *args) in enumerate(self.nodes):
            if not marked[position]:
                continue
            if op == GEN:
                values[position] = images[args[0] - 1]
            elif op == INV:
                values[position] = ~values[args[0]]
            elif op == MUL:
                values[position] = values[args[0]] * values[args[1]]
            elif op == POW:
                values[position] = identity if args[1] == 0 else values[args[0]] ** args[1]
            elif op == CONJ:
                outer = values[args[1]]
                values[position] = outer * values[args[0]] * ~outer
            else:
                left, right = values[args[0]], values[args[1]]
                values[position] = left * right * ~left * ~right
        return values[self.root]

    def intern(self, table):
        """
        Node ids under a shared interning table; two programs denote the same construction iff
        their roots intern to the same id.
        """
        ids = []
        for op, *args in self.nodes:
            if op == GEN:
                key = (GEN, args[0])
            elif op == POW:
                key = (POW, ids[args[0]], args[1])
            else:
                key = (op,) + tuple(ids[ref] for ref in args)
            ids.append(table.setdefault(key, len(table)))
        return ids

    def same_construction(self, other):
        table = {}
        return self.intern(table)[self.root] == other.intern(table)[other.root]

    def listing(self):
        return [list(node) for node in self.nodes]

    @classmethod
    def from_listing(cls, rank, listing, root=None):
        try:
            nodes = [tuple(node) for node in listing]
        except TypeError:
            raise InputError('straight-line listing must be a list of instructions')
        return cls(rank, nodes, root)

    def __repr__(self):
        return f'SLWord(rank={self.rank}, nodes={len(self.nodes)}, root={self.root})'
