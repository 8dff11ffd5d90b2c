from cli.base import ReportCommand
from separability.serializers import GirthRowSerializer
from separability.utils import residual_girth


class Command(ReportCommand):
    help = 'Residual girth of the free group for radius 1..N'
    serializer_class = GirthRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--rank', type=int, required=True)
        parser.add_argument('--radius', type=int, required=True)
        parser.add_argument('--cap', type=int, default=None)

    def get_rows(self, options):
        rank = options['rank']
        for n in range(1, options['radius'] + 1):
            result = residual_girth(rank, n, options['cap'], options['threads'])
            yield {
                'rank': rank,
                'n': n,
                'cap': result.cap,
                'value': result.value,
                'closed_form': 2 * n + 1 if rank == 1 else None,
                'witness': result.witness,
                'resolved': result.resolved,
            }
