#!/usr/bin/env python
"""Entry point of the r11 batch commands (verify, transform, dump) and the test runner."""
import os
import sys


def main():
    """Run a management command."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install requirements.txt into the active "
            "environment before running the r11 commands."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
