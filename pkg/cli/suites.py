# cli/suites.py - Registry of the invariant suites run by `verify`
import logging

from clifford import checks as clifford_checks
from core.numerics import make_rng
from moebius import checks as moebius_checks
from operators import checks as operators_checks
from representations import checks as representations_checks
from taylor import checks as taylor_checks
from transforms import checks as transforms_checks
from .exceptions import UnknownSuite

logger = logging.getLogger(__name__)

SUITES = {
    'clifford': clifford_checks.run,
    'moebius': moebius_checks.run,
    'representations': representations_checks.run,
    'transforms': transforms_checks.run,
    'operators': operators_checks.run,
    'taylor': taylor_checks.run,
}

ALL = 'all'


def resolve_suites(name):
    """Suite names to run for `name` ('all' expands in dependency order)"""
    if name == ALL:
        return list(SUITES)
    if name not in SUITES:
        raise UnknownSuite(f"Unknown suite '{name}'", available=', '.join([*SUITES, ALL]))
    return [name]


def run_verify(name, seed, samples=None):
    """
    Run one suite or all of them

    Every suite gets its own generator seeded with `seed`, so a suite's
    results do not depend on which other suites ran before it.

    Returns:
        dict: report with per-check entries and a pass/fail summary

    Raises:
        UnknownSuite: name is neither a suite nor 'all'
    """
    names = resolve_suites(name)
    checks = []
    for suite in names:
        kwargs = {'samples': samples} if samples else {}
        results = SUITES[suite](make_rng(seed), **kwargs)
        for entry in results:
            entry['suite'] = suite
        failed = sum(entry['status'] == 'fail' for entry in results)
        logger.info(f"Suite {suite}: {len(results) - failed}/{len(results)} check(s) without failure")
        checks.extend(results)
    return build_report(name, seed, checks)


def build_report(name, seed, checks):
    summary = {status: sum(entry['status'] == status for entry in checks) for status in ('pass', 'fail', 'logged')}
    return {
        'suite': name,
        'seed': seed,
        'status': 'fail' if summary['fail'] else 'pass',
        'summary': summary,
        'checks': checks,
    }
