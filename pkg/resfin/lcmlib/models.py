from dataclasses import dataclass, field

from words.models import SLWord

# Closure rules a derivation step may use. 'generator' marks a node that is the input element itself.
RULES = ('generator', 'conjugate', 'inverse', 'product', 'power', 'commutator-left', 'commutator-right')

YES, NO, UNKNOWN = 'yes', 'no', 'unknown'


@dataclass
class WitnessCertificate:
    """
    A common multiple delta of the elements of S, with one membership derivation per element
    (steps over delta's nodes, ending at its root) and evidence that delta is nontrivial.
    """
    S: list
    delta: SLWord
    bound: int
    derivations: list
    evidence: dict
    depth: int = 0
    max_length: int = 0
    conjugators: list = field(default_factory=list)

    @property
    def rank(self):
        return self.delta.rank

    @property
    def stated_bound(self):
        return 6 * self.max_length * len(self.S) ** 2


@dataclass
class VerificationReport:
    diagnostics: list = field(default_factory=list)
    quotients_checked: int = 0

    def fail(self, message):
        self.diagnostics.append(message)

    def __bool__(self):
        return not self.diagnostics

    @property
    def ok(self):
        return bool(self)
