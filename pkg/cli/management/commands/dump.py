# cli/management/commands/dump.py - Kernel and geometry sample dumps
from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from cli.exceptions import JobError
from cli.jobs import load_job, run_job
from cli.serializers import DUMP_COMMANDS
from cli.writers import write_csv


class Command(BaseCommand):
    help = 'Write kernel (branch, t, p1, p2) or geometry (branch, t, sheet, u1, u2) samples; exit 2 on schema violations'

    def add_arguments(self, parser):
        parser.add_argument('--kind', required=True, choices=sorted(DUMP_COMMANDS))
        parser.add_argument('--job', required=True, help='JSON job file')
        parser.add_argument('--param', action='append', default=[], metavar='KEY=VALUE',
                            help='Override params (dotted keys, JSON values)')

    def handle(self, *args, **options):
        try:
            job = load_job(options['job'], options['param'], expected=(DUMP_COMMANDS[options['kind']],))
        except (JobError, serializers.ValidationError) as exc:
            raise CommandError(f"Invalid job: {exc}", returncode=2) from exc

        output = run_job(job)
        path = write_csv(job.params['output'], output.header, output.rows)
        self.stdout.write(self.style.SUCCESS(f"{job.command}: {len(output.rows)} row(s) -> {path}"))
