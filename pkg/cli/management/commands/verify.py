# cli/management/commands/verify.py - Run the invariant suites
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from cli.exceptions import JobError, UnknownSuite
from cli.jobs import load_job
from cli.suites import ALL, run_verify
from cli.writers import write_report

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Run one invariant suite (or all) and write a JSON report; exit 1 on failed checks, 2 on an unknown suite'

    def add_arguments(self, parser):
        parser.add_argument('--suite', default=ALL, help='Suite name or "all"')
        parser.add_argument('--seed', type=int, default=0, help='Seed of every randomized check')
        parser.add_argument('--samples', type=int, default=None, help='Override the sample count of each suite')
        parser.add_argument('--report', default=None, help='Report path (default verify-<suite>-<seed>.json)')
        parser.add_argument('--job', default=None, help='Verify job file; its params override the flags')

    def handle(self, *args, **options):
        suite, seed = options['suite'], options['seed']
        samples, report_path = options['samples'], options['report']
        if options['job']:
            try:
                job = load_job(options['job'], expected=('verify',))
            except (JobError, serializers.ValidationError) as exc:
                raise CommandError(f"Invalid job: {exc}", returncode=2) from exc
            suite = job.params['suite']
            seed = job.seed
            samples = job.params.get('samples', samples)
            report_path = job.params.get('report', report_path)

        try:
            report = run_verify(suite, seed, samples)
        except UnknownSuite as exc:
            raise CommandError(str(exc), returncode=2) from exc

        path = write_report(report_path or f'verify-{suite}-{seed}.json', report)
        summary = report['summary']
        self.stdout.write(f"{suite}: {summary['pass']} passed, {summary['fail']} failed, "
                          f"{summary['logged']} logged -> {path}")
        if report['status'] != 'pass':
            failed = [entry['name'] for entry in report['checks'] if entry['status'] == 'fail']
            logger.error(f"Failed checks: {', '.join(failed)}")
            raise CommandError(f"{len(failed)} check(s) failed: {', '.join(failed)}", returncode=1)
        self.stdout.write(self.style.SUCCESS('All checks passed'))
