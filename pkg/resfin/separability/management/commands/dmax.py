from cli.base import ReportCommand
from separability.serializers import DivisibilityRowSerializer
from separability.utils import divisibility, max_divisibility, normal_divisibility
from words.models import FreeWord


class Command(ReportCommand):
    help = 'Largest divisibility value over the punctured ball, or the divisibility of a single word'
    serializer_class = DivisibilityRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--rank', type=int, required=True)
        parser.add_argument('--radius', type=int, default=None)
        parser.add_argument('--cap', type=int, default=None)
        parser.add_argument('--normal', action='store_true', help='separate by finite quotients instead of subgroups')
        parser.add_argument('--word', default=None, help='report D(word) instead of the ball maximum')

    def get_rows(self, options):
        rank, normal, threads = options['rank'], options['normal'], options['threads']
        if options['word'] is not None:
            word = FreeWord.parse(rank, options['word'])
            separate = normal_divisibility if normal else divisibility
            result = separate(word, options['cap'], threads)
            yield {'rank': rank, 'n': len(word), 'normal': normal, 'cap': result.cap, 'value': result.value,
                   'argmax': str(word), 'witness': result.witness, 'resolved': result.resolved}
            return
        for n in range(1, (options['radius'] or 1) + 1):
            yield max_divisibility(rank, n, options['cap'], normal, threads)
