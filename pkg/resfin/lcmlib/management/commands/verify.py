from cli.base import ReportCommand
from config.exceptions import InputError
from lcmlib.serializers import VerifyRowSerializer, load_certificate
from lcmlib.utils import verify_certificate


class Command(ReportCommand):
    help = 'Re-verify a serialized witness certificate'
    serializer_class = VerifyRowSerializer

    def add_report_arguments(self, parser):
        parser.add_argument('--certificate', required=True)
        parser.add_argument('--verify-cap', type=int, default=None)

    def get_rows(self, options):
        try:
            with open(options['certificate'], encoding='utf-8') as handle:
                certificate = load_certificate(handle.read())
        except OSError as exc:
            raise InputError(f'cannot read certificate: {exc}')
        report = verify_certificate(certificate, order_cap=options['verify_cap'], threads=options['threads'])
        yield {
            'certificate': options['certificate'],
            'size': len(certificate.S),
            'bound': certificate.bound,
            'quotients_checked': report.quotients_checked,
            'ok': report.ok,
            'diagnostics': report.diagnostics,
        }

    def finish(self, data):
        failed = [message for row in data if not row['ok'] for message in row['diagnostics']]
        if failed:
            raise InputError('; '.join(failed))
