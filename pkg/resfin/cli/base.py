import logging
import time

from django.core.management.base import BaseCommand, CommandError

from config.exceptions import InconclusiveError, ToolkitError
from words.serializers import UNKNOWN

from .renderers import FORMATS, render_csv, render_json

logger = logging.getLogger(f'resfin.{__name__}')


class ReportCommand(BaseCommand):
    """
    Base class for table-emitting commands. Subclasses declare a serializer_class and implement get_rows;
    rows whose serialized form is unresolved make the command exit with code 2 after the table is written.
    """
    serializer_class = None
    command_name = None

    def create_parser(self, prog_name, subcommand, **kwargs):
        self.command_name = self.command_name or subcommand.replace('_', '-')
        return super().create_parser(prog_name, subcommand, **kwargs)

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=FORMATS, default='json')
        parser.add_argument('--out', default=None)
        parser.add_argument('--threads', type=int, default=1)
        parser.add_argument('--seed', type=int, default=0)
        self.add_report_arguments(parser)

    def add_report_arguments(self, parser):
        pass

    def get_rows(self, options):
        raise NotImplementedError('subclasses of ReportCommand must provide a get_rows() method')

    def get_serializer(self, rows):
        return self.serializer_class(rows, many=True)

    def is_unresolved(self, row):
        return row.get('resolved') is False or row.get('value') == UNKNOWN

    def render(self, rows, fmt):
        if fmt == 'csv':
            return render_csv(list(self.serializer_class().fields.keys()), rows)
        return render_json(self.command_name, rows) + '\n'

    def emit(self, text, out):
        if out:
            with open(out, 'w', encoding='utf-8', newline='') as handle:
                handle.write(text)
        else:
            self.stdout.write(text, ending='')

    def handle(self, *args, **options):
        if options['threads'] < 1:
            raise CommandError('--threads must be at least 1')
        started = time.monotonic()
        logger.info('%s: %s', self.command_name, {
            key: value for key, value in options.items() if key not in ('stdout', 'stderr', 'skip_checks')
        })
        try:
            rows = list(self.get_rows(options))
            data = self.get_serializer(rows).data
            self.emit(self.render(data, options['format']), options['out'])
            logger.info('%s: %s rows in %.3fs', self.command_name, len(data), time.monotonic() - started)
            self.finish(data)
        except ToolkitError as exc:
            raise CommandError(exc.message, returncode=exc.exit_code)

    def finish(self, data):
        unresolved = sum(1 for row in data if self.is_unresolved(row))
        if unresolved:
            raise InconclusiveError(f'{unresolved} row(s) unresolved within caps', params={'rows': unresolved})
