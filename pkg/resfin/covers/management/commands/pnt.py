from cli.base import ReportCommand
from covers.serializers import ChebyshevRowSerializer
from covers.utils import chebyshev_rows


class Command(ReportCommand):
    help = 'log lcm(1..n) and its ratio to n for n = 1..max'
    serializer_class = ChebyshevRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--max', type=int, required=True)

    def get_rows(self, options):
        return chebyshev_rows(options['max'])
