from dataclasses import dataclass

from permrep.models import PermQuotient


@dataclass(frozen=True)
class CoverAnalysis:
    """
    x-cycles of a cover of the figure eight: 1-based point tuples, longest first, ties by least point.
    """
    cover: PermQuotient
    cycles: tuple
    basepoint_length: int

    @property
    def x_cycle_lengths(self):
        return [len(cycle) for cycle in self.cycles]

    def cycle_of(self, point):
        return next(cycle for cycle in self.cycles if point in cycle)
