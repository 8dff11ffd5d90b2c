from cli.base import ReportCommand
from config.exceptions import InvariantViolation
from words.serializers import GrowthRowSerializer
from words.utils import enumerate_ball, word_growth


class Command(ReportCommand):
    help = 'Word growth of the free group: ball sizes for radius 0..max'
    serializer_class = GrowthRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--rank', type=int, required=True)
        parser.add_argument('--max', type=int, required=True)
        parser.add_argument('--check', action='store_true', help='cross-check the closed form by enumeration')

    def get_rows(self, options):
        rank, top = options['rank'], options['max']
        counted = None
        if options['check']:
            counted = [0] * (top + 1)
            for word in enumerate_ball(rank, top):
                counted[len(word)] += 1
        for n in range(top + 1):
            omega = word_growth(rank, n)
            if counted is not None and sum(counted[:n + 1]) != omega:
                raise InvariantViolation(f'ball enumeration disagrees with the closed form at radius {n}')
            yield {'n': n, 'omega': omega}
