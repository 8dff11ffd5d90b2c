import logging

from cli.base import ReportCommand
from config.exceptions import InputError, InvariantViolation
from config.limits import get_flat_budget
from lcmlib.serializers import LcmWitnessRowSerializer, dump_certificate
from lcmlib.utils import lcm_witness, verify_certificate
from words.models import FreeWord
from words.utils import sl_flatten

logger = logging.getLogger(f'resfin.{__name__}')


class Command(ReportCommand):
    help = 'Common multiple of a finite set of words, with a verified certificate'
    serializer_class = LcmWitnessRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--set', dest='words', required=True, help='comma-separated words, e.g. "a,b,aB"')
        parser.add_argument('--rank', type=int, default=2)
        parser.add_argument('--verify-cap', type=int, default=None)
        parser.add_argument('--save', default=None, help='write the certificate JSON to this path')

    def get_rows(self, options):
        texts = [text for text in options['words'].split(',') if text.strip()]
        if not texts:
            raise InputError('--set needs at least one word')
        words = [FreeWord.parse(options['rank'], text) for text in texts]
        certificate = lcm_witness(words)
        report = verify_certificate(certificate, order_cap=options['verify_cap'], threads=options['threads'])
        if options['save']:
            with open(options['save'], 'w', encoding='utf-8') as handle:
                handle.write(dump_certificate(certificate))
            logger.info('certificate written to %s', options['save'])
        flat = sl_flatten(certificate.delta, min(get_flat_budget(), certificate.bound))
        yield {
            'rank': certificate.rank,
            'size': len(words),
            'max_length': certificate.max_length,
            'depth': certificate.depth,
            'conjugators': certificate.conjugators,
            'bound': certificate.bound,
            'stated_bound': certificate.stated_bound,
            'delta_nodes': len(certificate.delta.nodes),
            'delta_length': flat if not isinstance(flat, FreeWord) else len(flat),
            'quotients_checked': report.quotients_checked,
            'verified': report.ok,
            'diagnostics': report.diagnostics,
        }

    def finish(self, data):
        failed = [message for row in data if not row['verified'] for message in row['diagnostics']]
        if failed:
            raise InvariantViolation('; '.join(failed))
