from dataclasses import dataclass, field

from permrep.models import PermQuotient


@dataclass(frozen=True)
class SepResult:
    """
    Least index (or quotient order) separating a query within cap; value None means unknown.
    """
    value: int = None
    witness: PermQuotient = None
    cap: int = 0
    query: str = ''

    @property
    def resolved(self):
        return self.value is not None


@dataclass
class InequalityReport:
    which: int
    rank: int
    n: int
    resolved: bool = False
    passed: bool = False
    links: dict = field(default_factory=dict)
