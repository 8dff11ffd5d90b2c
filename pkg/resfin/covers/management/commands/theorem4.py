from cli.base import ReportCommand
from covers.serializers import Theorem4RowSerializer
from covers.utils import theorem4_experiment


class Command(ReportCommand):
    help = 'Lower bounds for the divisibility of the common multiple of {x, ..., x^lcm(1..n)}'
    serializer_class = Theorem4RowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--cap', type=int, default=None)

    def get_rows(self, options):
        for n in range(1, options['n'] + 1):
            yield theorem4_experiment(n, options['cap'], options['threads'])
