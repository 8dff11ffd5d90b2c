from dataclasses import asdict

from cli.base import ReportCommand
from config.exceptions import InvariantViolation
from separability.serializers import InequalityRowSerializer
from separability.utils import check_basic_inequality, check_girth_inequality


class Command(ReportCommand):
    help = 'Check the growth inequality (1) or the girth chain (2) at a given radius'
    serializer_class = InequalityRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--which', type=int, choices=(1, 2), required=True)
        parser.add_argument('--rank', type=int, required=True)
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--cap', type=int, default=None)

    def get_rows(self, options):
        check = check_basic_inequality if options['which'] == 1 else check_girth_inequality
        yield asdict(check(options['rank'], options['n'], options['cap'], options['threads']))

    def finish(self, data):
        if any(row['resolved'] and not row['passed'] for row in data):
            raise InvariantViolation('inequality violated')
        super().finish(data)
