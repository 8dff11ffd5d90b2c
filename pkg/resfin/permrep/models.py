import math
import re
from collections import deque
from functools import cached_property

from config.exceptions import InputError
from words.models import Overflow, SLWord

CYCLE_RE = re.compile(r'\(([^()]*)\)')


class Permutation:
    """
    Bijection of {1..d}, stored 0-based. Permutations act on the right: p * q applies p first, then q,
    so the image of a word is the product of its letter images read left to right.
    """
    __slots__ = ('images', '_inverse')

    def __init__(self, images):
        self.images = tuple(images)
        self._inverse = None

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_images(cls, images):
        """
        From a 1-based image list.
        """
        degree = len(images)
        if degree < 1:
            raise InputError('a permutation needs at least one point')
        points = []
        for image in images:
            if not isinstance(image, int) or not 1 <= image <= degree:
                raise InputError(f'image {image!r} out of range 1..{degree}')
            points.append(image - 1)
        if len(set(points)) != degree:
            raise InputError(f'{list(images)} is not a bijection')
        return cls(points)

    @classmethod
    def from_cycles(cls, cycles, degree):
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise InputError(f'point {point} out of range 1..{degree}')
                if point in seen:
                    raise InputError(f'point {point} appears twice in cycle notation')
                seen.add(point)
            for position, point in enumerate(cycle):
                images[point - 1] = cycle[(position + 1) % len(cycle)] - 1
        return cls(images)

    @classmethod
    def parse(cls, text, degree=None):
        """
        Accepts a 1-based image list '2 3 1 5 4' or cycle notation '(1 2 3)(4 5)'; '()' is the identity.
        """
        text = text.strip()
        try:
            if text.startswith('('):
                if CYCLE_RE.sub('', text).strip():
                    raise InputError(f'cannot parse cycle notation {text!r}')
                cycles = [
                    [int(point) for point in body.replace(',', ' ').split()] for body in CYCLE_RE.findall(text)
                ]
                largest = max((point for cycle in cycles for point in cycle), default=1)
                return cls.from_cycles(cycles, degree or largest)
            permutation = cls.from_images([int(image) for image in text.replace(',', ' ').split()])
        except ValueError:
            raise InputError(f'cannot parse permutation {text!r}')
        if degree is not None and permutation.degree != degree:
            raise InputError(f'permutation {text!r} has degree {permutation.degree}, expected {degree}')
        return permutation

    @property
    def degree(self):
        return len(self.images)

    def __str__(self):
        return ' '.join(str(image + 1) for image in self.images)

    def __repr__(self):
        return f'Permutation({str(self)!r})'

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __call__(self, point):
        return self.images[point - 1] + 1

    def to_list(self):
        return [image + 1 for image in self.images]

    def is_identity(self):
        return all(image == point for point, image in enumerate(self.images))

    def __mul__(self, other):
        if self.degree != other.degree:
            raise InputError(f'degree mismatch: {self.degree} != {other.degree}')
        after = other.images
        return Permutation(after[image] for image in self.images)

    def __invert__(self):
        if self._inverse is None:
            inverse = [0] * self.degree
            for point, image in enumerate(self.images):
                inverse[image] = point
            self._inverse = Permutation(inverse)
        return self._inverse

    def cycles(self):
        """
        Cycles as 0-based point tuples, each starting at its smallest point, ordered by that point.
        """
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = []
            point = start
            while not seen[point]:
                seen[point] = True
                cycle.append(point)
                point = self.images[point]
            result.append(tuple(cycle))
        return result

    def cycle_length(self, point):
        length, current = 1, self.images[point - 1]
        while current != point - 1:
            current = self.images[current]
            length += 1
        return length

    def __pow__(self, exponent):
        images = [0] * self.degree
        for cycle in self.cycles():
            shift = exponent % len(cycle)
            for position, point in enumerate(cycle):
                images[point] = cycle[(position + shift) % len(cycle)]
        return Permutation(images)

    @property
    def order(self):
        return math.lcm(*(len(cycle) for cycle in self.cycles()))


class PermQuotient:
    """
    Homomorphism F_rank -> Sym(d) given by generator images, pointed at 1. A transitive one encodes the
    subgroup stabilizing 1 (index d), a regular one the normal subgroup that is its kernel (quotient order d).
    """

    def __init__(self, gens):
        gens = [gen if isinstance(gen, Permutation) else Permutation(gen) for gen in gens]
        if not gens:
            raise InputError('a permutation quotient needs at least one generator')
        degrees = {gen.degree for gen in gens}
        if len(degrees) != 1:
            raise InputError(f'generator images have different degrees {sorted(degrees)}')
        self.gens = tuple(gens)

    @classmethod
    def parse(cls, texts, degree=None):
        gens = [Permutation.parse(text, degree) for text in texts]
        if degree is None and any(text.strip().startswith('(') for text in texts):
            degree = max(gen.degree for gen in gens)
            gens = [Permutation.parse(text, degree) for text in texts]
        return cls(gens)

    @property
    def rank(self):
        return len(self.gens)

    @property
    def degree(self):
        return self.gens[0].degree

    def __eq__(self, other):
        if not isinstance(other, PermQuotient):
            return NotImplemented
        return self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f'PermQuotient({[str(gen) for gen in self.gens]})'

    def to_lists(self):
        return [gen.to_list() for gen in self.gens]

    def check_rank(self, word):
        if word.rank != self.rank:
            raise InputError(f'word of rank {word.rank} evaluated in a quotient of rank {self.rank}',
                             params={'word': word.rank, 'quotient': self.rank})

    def letter_image(self, letter):
        gen = self.gens[abs(letter) - 1]
        return gen if letter > 0 else ~gen

    def eval_word(self, word):
        self.check_rank(word)
        identity = Permutation.identity(self.degree)
        if isinstance(word, SLWord):
            return word.evaluate(self.gens, identity)
        images = list(range(self.degree))
        for letter in word.letters:
            after = self.letter_image(letter).images
            images = [after[image] for image in images]
        return Permutation(images)

    def trace(self, word, point=1):
        """
        Endpoint of the path that starts at point and reads word letter by letter.
        """
        self.check_rank(word)
        if isinstance(word, SLWord):
            return self.eval_word(word)(point)
        current = point - 1
        for letter in word.letters:
            current = self.letter_image(letter).images[current]
        return current + 1

    def orbit(self, point=1):
        start = point - 1
        seen = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for gen in self.gens:
                for image in (gen.images[current], (~gen).images[current]):
                    if image not in seen:
                        seen.add(image)
                        queue.append(image)
        return {member + 1 for member in seen}

    @cached_property
    def transitive(self):
        return len(self.orbit(1)) == self.degree

    def image_order(self, cap):
        """
        Order of the image group if at most cap, else Overflow; closure enumeration from the identity.
        """
        if cap < 1:
            raise InputError(f'cap must be positive, got {cap}')
        identity = tuple(range(self.degree))
        seen = {identity}
        queue = deque([identity])
        generators = [gen.images for gen in self.gens]
        while queue:
            element = queue.popleft()
            for gen in generators:
                product = tuple(gen[image] for image in element)
                if product not in seen:
                    if len(seen) >= cap:
                        return Overflow(cap)
                    seen.add(product)
                    queue.append(product)
        return len(seen)

    @cached_property
    def regular(self):
        return self.transitive and self.image_order(self.degree) == self.degree

    def relabeled(self, mapping):
        """
        Conjugate by a relabeling of points (1-based mapping old -> new).
        """
        inverse = {new: old for old, new in mapping.items()}
        return PermQuotient([
            Permutation.from_images([mapping[gen(inverse[point])] for point in range(1, self.degree + 1)])
            for gen in self.gens
        ])

    def canonical_key(self, basepoint=1):
        """
        Relabel points in breadth-first order from the basepoint, scanning x, x^-1, y, y^-1, ... at each point,
        and encode the relabeled generator images. Equal keys iff the pointed actions are isomorphic.
        """
        labels = {basepoint - 1: 0}
        order = [basepoint - 1]
        columns = []
        for gen in self.gens:
            columns.append(gen.images)
            columns.append((~gen).images)
        position = 0
        while position < len(order):
            current = order[position]
            for column in columns:
                image = column[current]
                if image not in labels:
                    labels[image] = len(order)
                    order.append(image)
            position += 1
        if len(order) != self.degree:
            raise InputError('canonical keys are only defined for transitive actions')
        encoded = [self.degree]
        for gen in self.gens:
            encoded.extend(labels[gen.images[old]] for old in order)
        return bytes(encoded)

    def conjugacy_key(self):
        """
        Key of the conjugacy class of the stabilizer subgroup: the least pointed key over all basepoints.
        """
        return min(self.canonical_key(point) for point in range(1, self.degree + 1))
