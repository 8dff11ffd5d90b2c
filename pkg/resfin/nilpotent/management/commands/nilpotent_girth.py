from cli.base import ReportCommand
from config.exceptions import InvariantViolation
from nilpotent.serializers import NilpotentGirthRowSerializer
from nilpotent.utils import girth_upper_bound_nilpotent, homomorphism_failures


class Command(ReportCommand):
    help = 'Residual girth upper bounds of the integer Heisenberg group from reduction modulo M'
    serializer_class = NilpotentGirthRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--samples', type=int, default=0, help='random words for the reduction homomorphism check')

    def get_rows(self, options):
        for n in range(1, options['n'] + 1):
            row = girth_upper_bound_nilpotent(n)
            failures = homomorphism_failures(row['modulus'], options['samples'], options['seed'] + n)
            row.update(samples=options['samples'], homomorphism_failures=len(failures))
            yield row

    def finish(self, data):
        if any(row['homomorphism_failures'] for row in data):
            raise InvariantViolation('reduction modulo M is not a homomorphism')
