import csv
import json
import math
import tempfile
from io import StringIO
from pathlib import Path

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings
from rest_framework import serializers

from .exceptions import JobError, UnknownSuite
from .jobs import apply_overrides, load_job, parse_override, run_rows
from .suites import build_report, resolve_suites
from .writers import format_cell, make_json_safe, write_csv


class CommandTestCase(SimpleTestCase):
    """Jobs and artifacts live in a temporary OUTPUT_DIR"""

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)
        self.settings_override = override_settings(R11_SETTINGS={'OUTPUT_DIR': str(self.tmp), 'THREADS': 2})
        self.settings_override.enable()

    def tearDown(self):
        self.settings_override.disable()
        self._tmp.cleanup()

    def write_job(self, command, params, name='job.json', seed=0):
        path = self.tmp / name
        path.write_text(json.dumps({'command': command, 'seed': seed, 'params': params}), encoding='utf-8')
        return str(path)

    def read_csv(self, name):
        with (self.tmp / name).open(encoding='utf-8', newline='') as handle:
            return list(csv.DictReader(handle))

    def call(self, *args):
        out = StringIO()
        call_command(*args, stdout=out)
        return out.getvalue()


class WriterTests(SimpleTestCase):

    def test_format_cell(self):
        self.assertEqual(format_cell(0.1), '0.10000000000000001')
        self.assertEqual(format_cell(np.float64(2.0)), '2')
        self.assertEqual(format_cell(float('nan')), 'nan')
        self.assertEqual(format_cell(True), 'true')
        self.assertEqual(format_cell(np.int64(7)), '7')
        self.assertEqual(format_cell(('a', 'b')), 'a; b')
        self.assertEqual(format_cell(()), '')

    def test_json_safe(self):
        safe = make_json_safe({'z': 1 + 2j, 'x': np.array([1.0, np.inf]), 'n': np.int32(3)})
        self.assertEqual(safe, {'z': [1.0, 2.0], 'x': [1.0, None], 'n': 3})

    def test_write_csv_line_endings(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_csv(Path(tmp) / 'out.csv', ('a', 'b'), [(1, 0.5), (2, 0.25)])
            self.assertEqual(path.read_bytes(), b'a,b\n1,0.5\n2,0.25\n')


class JobLoadingTests(CommandTestCase):

    def test_override_parsing(self):
        self.assertEqual(parse_override('quadrature.n=64'), (['quadrature', 'n'], 64))
        self.assertEqual(parse_override('output=run.csv'), (['output'], 'run.csv'))
        with self.assertRaises(serializers.ValidationError):
            parse_override('no-equals-sign')

    def test_apply_overrides_copies(self):
        params = {'quadrature': {'n': 32}}
        updated = apply_overrides(params, ['quadrature.n=64', 'function.kind="zero"'])
        self.assertEqual(params['quadrature']['n'], 32)
        self.assertEqual(updated, {'quadrature': {'n': 64}, 'function': {'kind': 'zero'}})

    def test_missing_file(self):
        with self.assertRaises(JobError):
            load_job(self.tmp / 'missing.json')

    def test_invalid_json(self):
        path = self.tmp / 'broken.json'
        path.write_text('{"command": ', encoding='utf-8')
        with self.assertRaises(JobError):
            load_job(path)

    def test_unexpected_command(self):
        path = self.write_job('geometry-dump', {'lam': -0.5, 'output': 'g.csv'})
        with self.assertRaises(serializers.ValidationError):
            load_job(path, expected=('taylor',))

    def test_disk_point_outside(self):
        path = self.write_job('cauchy-disk', {'function': {'kind': 'monomial', 'k': 1},
                                              'points': [[1.0, 0.0]], 'output': 'd.csv'})
        with self.assertRaises(serializers.ValidationError):
            load_job(path)

    def test_run_rows_keeps_order(self):
        results = run_rows(lambda index, item: (index, item * item), range(50), threads=4)
        self.assertEqual(results, [(i, i * i) for i in range(50)])
        self.assertEqual(run_rows(lambda index, item: item, []), [])


class SuiteRegistryTests(SimpleTestCase):

    def test_all_in_dependency_order(self):
        self.assertEqual(resolve_suites('all'),
                         ['clifford', 'moebius', 'representations', 'transforms', 'operators', 'taylor'])

    def test_unknown(self):
        with self.assertRaises(UnknownSuite):
            resolve_suites('nope')

    def test_report_status(self):
        report = build_report('x', 3, [{'status': 'pass'}, {'status': 'logged'}, {'status': 'fail'}])
        self.assertEqual(report['status'], 'fail')
        self.assertEqual(report['summary'], {'pass': 1, 'fail': 1, 'logged': 1})


class VerifyCommandTests(CommandTestCase):

    def test_clifford_suite_passes(self):
        output = self.call('verify', '--suite', 'clifford', '--seed', '7', '--samples', '50')
        self.assertIn('All checks passed', output)
        report = json.loads((self.tmp / 'verify-clifford-7.json').read_text(encoding='utf-8'))
        self.assertEqual(report['status'], 'pass')
        self.assertEqual(report['seed'], 7)
        self.assertTrue(all(entry['suite'] == 'clifford' for entry in report['checks']))

    def test_reports_are_reproducible(self):
        self.call('verify', '--suite', 'moebius', '--samples', '20', '--report', 'a.json')
        self.call('verify', '--suite', 'moebius', '--samples', '20', '--report', 'b.json')
        self.assertEqual((self.tmp / 'a.json').read_bytes(), (self.tmp / 'b.json').read_bytes())

    def test_unknown_suite(self):
        with self.assertRaises(CommandError) as caught:
            self.call('verify', '--suite', 'nope')
        self.assertEqual(caught.exception.returncode, 2)

    def test_job_file(self):
        job = self.write_job('verify', {'suite': 'clifford', 'samples': 20, 'report': 'from-job.json'}, seed=3)
        self.call('verify', '--job', job)
        report = json.loads((self.tmp / 'from-job.json').read_text(encoding='utf-8'))
        self.assertEqual(report['seed'], 3)


class TransformCommandTests(CommandTestCase):

    def disk_job(self, points, **extra):
        params = {'function': {'kind': 'monomial', 'k': 3}, 'points': points,
                  'quadrature': {'n': 512}, 'output': 'disk.csv', **extra}
        return self.write_job('cauchy-disk', params)

    def test_disk_monomial(self):
        rng = np.random.default_rng(5)
        points = [complex(r * np.cos(a), r * np.sin(a))
                  for r, a in zip(rng.uniform(0, 0.9, 10), rng.uniform(0, 2 * np.pi, 10))]
        self.call('transform', '--job', self.disk_job([[p.real, p.imag] for p in points]))
        rows = self.read_csv('disk.csv')
        self.assertEqual(len(rows), 10)
        for row, a in zip(rows, points):
            value = complex(float(row['value_re']), float(row['value_im']))
            self.assertAlmostEqual(abs(value - a ** 3), 0.0, places=10)
            self.assertEqual(row['flags'], '')

    def test_empty_points_give_header_only(self):
        self.call('transform', '--job', self.disk_job([]))
        self.assertEqual((self.tmp / 'disk.csv').read_text(encoding='utf-8'),
                         'index,a_re,a_im,value_re,value_im,raw_re,raw_im,error_estimate,flags\n')

    def test_param_override(self):
        job = self.disk_job([[0.1, 0.2]])
        self.call('transform', '--job', job, '--param', 'output=renamed.csv', '--param', 'function.k=1')
        rows = self.read_csv('renamed.csv')
        self.assertAlmostEqual(float(rows[0]['value_re']), 0.1, places=10)
        self.assertAlmostEqual(float(rows[0]['value_im']), 0.2, places=10)

    def test_reruns_are_byte_identical(self):
        job = self.disk_job([[0.3, -0.4], [0.0, 0.5]])
        self.call('transform', '--job', job, '--param', 'output=first.csv')
        self.call('transform', '--job', job, '--param', 'output=second.csv')
        self.assertEqual((self.tmp / 'first.csv').read_bytes(), (self.tmp / 'second.csv').read_bytes())

    def test_schema_violation(self):
        job = self.write_job('cauchy-disk', {'points': [], 'output': 'x.csv'})
        with self.assertRaises(CommandError) as caught:
            self.call('transform', '--job', job)
        self.assertEqual(caught.exception.returncode, 2)

    def test_dump_command_rejected(self):
        job = self.write_job('geometry-dump', {'lam': -0.5, 'output': 'g.csv'})
        with self.assertRaises(CommandError) as caught:
            self.call('transform', '--job', job)
        self.assertEqual(caught.exception.returncode, 2)

    def test_all_rows_failing(self):
        # sigma = 1 at u = 2 e1 meets a double pole at t = log 2 on branch 1
        params = {
            'function': {'kind': 'gaussian', 'branches': [1], 'center': math.log(2.0),
                         'width': math.sqrt(0.5), 'n': 801, 't_max': 8.0},
            'sigma': 1.0,
            'points': [{'sheet': 'plus', 'u1': 2.0, 'u2': 0.0}],
            'quadrature': {'t_max': 8.0},
            'output': 'r11.csv',
        }
        with self.assertRaises(CommandError) as caught:
            self.call('transform', '--job', self.write_job('cauchy-r11', params))
        self.assertEqual(caught.exception.returncode, 3)
        rows = self.read_csv('r11.csv')
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['value_p1'], 'nan')
        self.assertTrue(rows[0]['flags'].startswith('error: PVDivergence'))

    def test_r11_regular_point(self):
        params = {
            'function': {'kind': 'gaussian', 'branches': [0], 'width': math.sqrt(0.5), 'n': 801, 't_max': 8.0},
            'points': [{'sheet': 'plus', 'u1': 2.0, 'u2': 0.0}],
            'quadrature': {'t_max': 8.0},
            'output': 'r11.csv',
        }
        self.call('transform', '--job', self.write_job('cauchy-r11', params))
        row = self.read_csv('r11.csv')[0]
        self.assertAlmostEqual(float(row['value_p1']), float(row['normalized_p1']) * math.sqrt(3.0), places=12)

    def test_taylor_classical(self):
        params = {'mode': 'classical', 'N': 4, 'output': 'taylor.csv',
                  'function': {'kind': 'monomial', 'k': 2, 'coefficient': [2.0, 0.0]}}
        self.call('transform', '--job', self.write_job('taylor', params))
        rows = self.read_csv('taylor.csv')
        self.assertEqual([row['n'] for row in rows], ['1', '2', '3', '4'])
        self.assertAlmostEqual(float(rows[2]['re']), 4.0 * math.pi, places=10)
        self.assertAlmostEqual(float(rows[0]['re']), 0.0, places=10)

    def test_taylor_expand(self):
        params = {'mode': 'expand', 'pairs': [[2.0, 0.0, 0.2], [0.0, 0.0, 0.0]], 'output': 'expand.csv'}
        self.call('transform', '--job', self.write_job('taylor', params))
        first, second = self.read_csv('expand.csv')
        self.assertAlmostEqual(float(first['p1']), 1.0 / (math.exp(0.2) + 2.0), places=12)
        self.assertEqual(first['flags'], 'p1: continued; p2: continued')
        self.assertTrue(second['flags'].startswith('error: ConvergenceError'))

    def test_taylor_mode_needs_function(self):
        job = self.write_job('taylor', {'mode': 'mellin', 'output': 'm.csv'})
        with self.assertRaises(CommandError) as caught:
            self.call('transform', '--job', job)
        self.assertEqual(caught.exception.returncode, 2)


class DumpCommandTests(CommandTestCase):

    def test_geometry(self):
        job = self.write_job('geometry-dump', {'lam': -0.5, 'n': 100, 'output': 'geometry.csv'})
        self.call('dump', '--kind', 'geometry', '--job', job)
        rows = self.read_csv('geometry.csv')
        self.assertEqual(len(rows), 400)
        self.assertEqual({row['branch'] for row in rows}, {'0', '1', '2', '3'})
        for row in rows:
            u1, u2 = float(row['u1']), float(row['u2'])
            expected = -0.25 if row['sheet'] == 'plus' else 1.0 / -0.25
            self.assertAlmostEqual((-u1 * u1 + u2 * u2) / expected, 1.0, places=9)

    def test_kernel(self):
        job = self.write_job('kernel-dump', {'u': [2.0, 0.0], 'n': 41, 't_max': 2.0, 'branches': [0],
                                             'output': 'kernel.csv'})
        self.call('dump', '--kind', 'kernel', '--job', job)
        rows = self.read_csv('kernel.csv')
        self.assertEqual(len(rows), 41)
        for row in rows:
            t = float(row['t'])
            self.assertAlmostEqual(float(row['p1']), 1.0 / (math.exp(t) + 2.0), places=14)

    def test_kind_mismatch(self):
        job = self.write_job('kernel-dump', {'u': [2.0, 0.0], 'output': 'kernel.csv'})
        with self.assertRaises(CommandError) as caught:
            self.call('dump', '--kind', 'geometry', '--job', job)
        self.assertEqual(caught.exception.returncode, 2)

    def test_lambda_range(self):
        job = self.write_job('geometry-dump', {'lam': 0.5, 'output': 'g.csv'})
        with self.assertRaises(CommandError) as caught:
            self.call('dump', '--kind', 'geometry', '--job', job)
        self.assertEqual(caught.exception.returncode, 2)
