import argparse
import sys

from django.core.management.base import BaseCommand

from cli.runner import SUBCOMMANDS, run


class Command(BaseCommand):
    help = f'Run a toolkit subcommand by its hyphenated name ({", ".join(SUBCOMMANDS)}) and exit with its code'

    def add_arguments(self, parser):
        parser.add_argument('argv', nargs=argparse.REMAINDER)

    def handle(self, *args, **options):
        code = run(options['argv'])
        if code:
            sys.exit(code)
