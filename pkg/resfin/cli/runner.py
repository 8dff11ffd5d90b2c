import sys

from django.core.management import call_command
from django.core.management.base import CommandError

from config.exceptions import ToolkitError

SUBCOMMANDS = (
    'growth', 'dmax', 'girth', 'lcm-witness', 'power-witness', 'covers-scan', 'theorem4', 'nilpotent-girth',
    'ineq', 'pnt', 'verify',
)


def run(argv, stdout=None, stderr=None):
    """
    Run one toolkit subcommand and return its exit code: 0 success, 1 input error, 2 inconclusive within caps,
    3 internal invariant violation.
    """
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write(f'usage: resfin {{{",".join(SUBCOMMANDS)}}} [options]\n')
        return 1
    name, arguments = argv[0].replace('-', '_'), list(argv[1:])
    try:
        call_command(name, *arguments, stdout=stdout or sys.stdout, stderr=stderr)
    except CommandError as exc:
        stderr.write(f'{argv[0]}: {exc}\n')
        return exc.returncode
    except ToolkitError as exc:
        stderr.write(f'{argv[0]}: {exc.message}\n')
        return exc.exit_code
    return 0
