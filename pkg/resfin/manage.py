#!/usr/bin/env python
"""
Entry point of the toolkit: `python manage.py <subcommand> [options]` runs one table-emitting command,
`python manage.py test` runs the test suite.
"""
import os
import sys


if __name__ == "__main__":
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    os.environ.setdefault('DJANGO_CONFIGURATION', 'Local')

    try:
        from configurations.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import django-configurations. Install the packages listed in requirements.txt "
            "and activate the virtual environment first."
        ) from exc
    execute_from_command_line(sys.argv)
