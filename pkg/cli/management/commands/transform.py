# cli/management/commands/transform.py - Evaluate a transform or Taylor job file
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from cli.exceptions import JobError
from cli.jobs import load_job, run_job
from cli.serializers import TRANSFORM_COMMANDS
from cli.writers import write_csv

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Run a cauchy-disk, cauchy-r11 or taylor job and write its CSV; exit 3 when every row fails'

    def add_arguments(self, parser):
        parser.add_argument('--job', required=True, help='JSON job file')
        parser.add_argument('--param', action='append', default=[], metavar='KEY=VALUE',
                            help='Override params (dotted keys, JSON values)')

    def handle(self, *args, **options):
        try:
            job = load_job(options['job'], options['param'], expected=TRANSFORM_COMMANDS)
        except (JobError, serializers.ValidationError) as exc:
            raise CommandError(f"Invalid job: {exc}", returncode=2) from exc

        output = run_job(job)
        path = write_csv(job.params['output'], output.header, output.rows)
        self.stdout.write(f"{job.command}: {len(output.rows)} row(s), {output.failed} failed -> {path}")
        if output.all_failed:
            raise CommandError(f"All {output.failed} row(s) of {job.command} failed", returncode=3)
        self.stdout.write(self.style.SUCCESS('Done'))
