import numpy as np

from config.exceptions import InputError


class UnipotentMatrix:
    """
    Upper triangular integer matrix with unit diagonal, optionally with entries reduced modulo `modulus`.
    """
    __slots__ = ('entries', 'modulus')

    def __init__(self, entries, modulus=None):
        entries = np.array(entries, dtype=np.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InputError(f'expected a square matrix, got shape {entries.shape}')
        if modulus is not None:
            if modulus < 2:
                raise InputError(f'modulus must be at least 2, got {modulus}')
            entries %= modulus
        if np.any(np.diag(entries) != 1) or np.any(np.tril(entries, -1)):
            raise InputError('matrix is not upper unitriangular')
        self.entries = entries
        self.modulus = modulus

    @classmethod
    def identity(cls, dimension=3, modulus=None):
        return cls(np.eye(dimension, dtype=np.int64), modulus)

    @classmethod
    def elementary(cls, row, column, dimension=3, modulus=None):
        """
        Identity plus the unit entry at (row, column), 1-based with row < column.
        """
        if not 1 <= row < column <= dimension:
            raise InputError(f'no elementary unipotent matrix at ({row}, {column})')
        entries = np.eye(dimension, dtype=np.int64)
        entries[row - 1, column - 1] = 1
        return cls(entries, modulus)

    @classmethod
    def from_key(cls, key, dimension=3, modulus=None):
        entries = np.eye(dimension, dtype=np.int64)
        entries[np.triu_indices(dimension, 1)] = key
        return cls(entries, modulus)

    @property
    def dimension(self):
        return self.entries.shape[0]

    def key(self):
        """
        Entries above the diagonal, row by row.
        """
        return tuple(int(value) for value in self.entries[np.triu_indices(self.dimension, 1)])

    def __eq__(self, other):
        if not isinstance(other, UnipotentMatrix):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.modulus, self.key()))

    def __repr__(self):
        return f'UnipotentMatrix({self.entries.tolist()}, modulus={self.modulus})'

    def __mul__(self, other):
        if self.dimension != other.dimension or self.modulus != other.modulus:
            raise InputError('matrices of different dimension or modulus')
        return UnipotentMatrix(self.entries @ other.entries, self.modulus)

    def __invert__(self):
        # (I + N)^-1 = I - N + N^2 - ... for nilpotent N
        nilpotent = self.entries - np.eye(self.dimension, dtype=np.int64)
        term = np.eye(self.dimension, dtype=np.int64)
        total = term.copy()
        for _ in range(1, self.dimension):
            term = -term @ nilpotent
            total += term
        return UnipotentMatrix(total, self.modulus)

    def __pow__(self, exponent):
        base = ~self if exponent < 0 else self
        result = UnipotentMatrix.identity(self.dimension, self.modulus)
        exponent = abs(exponent)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_identity(self):
        return not np.any(np.triu(self.entries, 1))

    def max_entry(self):
        return int(np.abs(np.triu(self.entries, 1)).max(initial=0))

    def reduce_mod(self, modulus):
        return UnipotentMatrix(self.entries, modulus)
