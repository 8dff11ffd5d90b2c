from cli.base import ReportCommand
from lcmlib.serializers import PowerWitnessRowSerializer
from lcmlib.utils import power_set_witness


class Command(ReportCommand):
    help = 'Common multiple of {x, ..., x^n} and the orders of the quotients it survives in'
    serializer_class = PowerWitnessRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--cap', type=int, default=None)

    def get_rows(self, options):
        _, report = power_set_witness(options['n'], options['cap'], options['threads'])
        yield report
