from cli.base import ReportCommand
from config.exceptions import InvariantViolation
from covers.serializers import ScanRowSerializer
from covers.utils import inductive_step_scan, obstruction_scan


class Command(ReportCommand):
    help = 'Scan covers of the figure eight for lifts of x^lcm(1..m) that fail to close'
    serializer_class = ScanRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--m', type=int, required=True)
        parser.add_argument('--max-degree', type=int, required=True)
        parser.add_argument('--marked', type=int, default=None, help='also run the inductive step')

    def get_rows(self, options):
        yield obstruction_scan(options['m'], options['max_degree'], options['threads'])
        if options['marked'] is not None:
            yield inductive_step_scan(options['m'], options['marked'], options['max_degree'], options['threads'])

    def finish(self, data):
        if any(row['violations'] for row in data):
            raise InvariantViolation('non-closing lift on a short x-cycle')
