# cli/jobs.py - Job loading and the row producers behind transform and dump
"""
Batch job execution.

- load_job: read a JSON job file, apply --param overrides, validate the
  envelope and the command's params
- run_rows: evaluate rows concurrently on a thread pool capped by THREADS,
  returning them in input order
- one producer per job command returning (header, rows, failed count)

Library failures of a single row are caught, logged and written as a
flagged row with NaN values.
"""

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from rest_framework import serializers

from clifford.algebra import Vector11
from core.conf import r11_setting
from core.exceptions import R11Error
from moebius.geometry import BranchCoord, branch_sign, circle_point
from representations.boundary import BoundaryFunction
from taylor.classical import classical_coefficients
from taylor.hyperbolic import hyperbolic_expand, mellin_coefficients
from transforms.cauchy import bergman, cauchy_disk
from transforms.hyperbolic import cauchy_tilde_pv, kernel_values
from .exceptions import JobError
from .serializers import (
    PARAMS_SERIALIZERS, CircleFunctionSerializer, JobSpecSerializer, QuadratureSerializer,
    TildeFunctionSerializer, TildePointSerializer,
)

logger = logging.getLogger(__name__)

NAN = float('nan')


@dataclass(frozen=True)
class Job:
    command: str
    params: dict
    seed: int


@dataclass(frozen=True)
class JobOutput:
    """Rows of one artifact and how many of them failed"""

    header: tuple
    rows: list
    failed: int = 0

    @property
    def all_failed(self):
        return bool(self.rows) and self.failed == len(self.rows)


# ----------------------------------------------------------------------
# Loading
# ----------------------------------------------------------------------

def parse_override(text):
    """'a.b=1' -> (['a', 'b'], 1); values are JSON when they parse, strings otherwise"""
    key, sep, raw = text.partition('=')
    if not sep or not key:
        raise serializers.ValidationError({'param': f"Expected key=value, got '{text}'"})
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key.split('.'), value


def apply_overrides(params, overrides):
    """Set dotted keys in a copy of params"""
    params = json.loads(json.dumps(params))
    for text in overrides or ():
        keys, value = parse_override(text)
        target = params
        for key in keys[:-1]:
            if not isinstance(target.get(key), dict):
                target[key] = {}
            target = target[key]
        target[keys[-1]] = value
    return params


def load_job(path, overrides=None, expected=None):
    """
    Read and validate a job file

    Args:
        path: JSON job file
        overrides: --param strings applied to params before validation
        expected: allowed commands, or None for any

    Returns:
        Job: command, validated params and seed

    Raises:
        JobError: unreadable file or invalid JSON
        serializers.ValidationError: schema violation
    """
    try:
        raw = json.loads(Path(path).read_text(encoding='utf-8'))
    except OSError as exc:
        raise JobError("Cannot read job file", path=str(path), reason=exc.strerror) from exc
    except json.JSONDecodeError as exc:
        raise JobError("Job file is not valid JSON", path=str(path), line=exc.lineno) from exc

    envelope = JobSpecSerializer(data=raw)
    envelope.is_valid(raise_exception=True)
    command = envelope.validated_data['command']
    if expected is not None and command not in expected:
        raise serializers.ValidationError({'command': f"'{command}' is not one of {list(expected)}"})

    params = PARAMS_SERIALIZERS[command](data=apply_overrides(envelope.validated_data['params'], overrides))
    params.is_valid(raise_exception=True)
    logger.debug(f"Loaded {command} job from {path}")
    return Job(command, params.validated_data, envelope.validated_data['seed'])


# ----------------------------------------------------------------------
# Execution
# ----------------------------------------------------------------------

def run_rows(evaluate, items, threads=None):
    """
    evaluate(index, item) for every item, in input order

    Returns:
        list: the results, result i belonging to items[i]
    """
    items = list(items)
    if not items:
        return []
    workers = max(1, min(threads or r11_setting('THREADS'), len(items)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(evaluate, index, item) for index, item in enumerate(items)]
        return [future.result() for future in futures]


def _guarded(label, evaluate, width):
    """Wrap a row evaluator: R11Error -> (NaN row, True)"""
    def run(index, item):
        try:
            return evaluate(index, item), False
        except R11Error as exc:
            logger.error(f"{label} row {index} failed: {type(exc).__name__}: {exc}")
            return (index, *_inputs(item), *([NAN] * width), (f"error: {type(exc).__name__}: {exc}",)), True
    return run


def _inputs(item):
    if isinstance(item, complex):
        return item.real, item.imag
    if hasattr(item, 'sheet'):
        return item.sheet.value, item.u.u1, item.u.u2
    return tuple(item)


def _collect(header, results):
    rows = [row for row, _ in results]
    return JobOutput(tuple(header), rows, sum(failed for _, failed in results))


def _quadrature(params):
    return QuadratureSerializer().create(dict(params.get('quadrature') or {}))


def cauchy_disk_job(params):
    """Cauchy (or Bergman with m) transform at disk points"""
    header = ('index', 'a_re', 'a_im', 'value_re', 'value_im', 'raw_re', 'raw_im', 'error_estimate', 'flags')
    on_circle, on_disk = CircleFunctionSerializer().create(params['function'])
    n = (params.get('quadrature') or {}).get('n') or r11_setting('CIRCLE_POINTS')
    boundary = BoundaryFunction.on_circle(on_circle, n)
    m = params.get('m')

    def evaluate(index, a):
        result = bergman(m, on_disk, a) if m else cauchy_disk(boundary, a)
        value, raw = complex(result.normalized), complex(result.value)
        return (index, a.real, a.imag, value.real, value.imag, raw.real, raw.imag,
                result.quadrature_error_estimate, result.flags)

    return _collect(header, run_rows(_guarded('cauchy-disk', evaluate, 5), params['points']))


def cauchy_r11_job(params):
    """Hyperbolic transform W_sigma at points of the conformal disk"""
    header = ('index', 'sheet', 'u1', 'u2', 'value_p1', 'value_p2', 'normalized_p1', 'normalized_p2',
              'error_estimate', 'pv_epsilon', 'flags')
    f = TildeFunctionSerializer().create(params['function'])
    q = _quadrature(params)
    sigma = params['sigma']
    points = [TildePointSerializer().create(point) for point in params['points']]

    def evaluate(index, point):
        result = cauchy_tilde_pv(sigma, f, point, q)
        return (index, point.sheet.value, point.u.u1, point.u.u2, *result.components,
                float(result.normalized.a1), float(result.normalized.a2),
                result.quadrature_error_estimate, result.pv_epsilon, result.flags)

    return _collect(header, run_rows(_guarded('cauchy-r11', evaluate, 6), points))


def taylor_job(params):
    """Classical or Mellin coefficients, or kernel decompositions at (u1, u2, t)"""
    mode = params['mode']
    if mode == 'classical':
        on_circle, _ = params['function'].save()
        coefficients = classical_coefficients(BoundaryFunction.on_circle(on_circle), params['N'])
        return JobOutput(('n', 're', 'im'), coefficients.rows())
    if mode == 'mellin':
        p_grid = np.linspace(0.0, params['p_max'], params['count'])
        coefficients = mellin_coefficients(params['function'].save(), p_grid)
        return JobOutput(('p', 'p1', 'p2'), coefficients.rows())

    def evaluate(index, triple):
        u1, u2, t = triple
        value, flags = hyperbolic_expand(Vector11(u1, u2), t, with_flags=True)
        return index, u1, u2, t, float(value.a1), float(value.a2), flags

    header = ('index', 'u1', 'u2', 't', 'p1', 'p2', 'flags')
    return _collect(header, run_rows(_guarded('taylor', evaluate, 2), params['pairs']))


def kernel_dump(params):
    """Kernel samples on the requested branches; singular samples are written as nan"""
    u, sigma = params['u'], params['sigma']
    t = np.linspace(-params['t_max'], params['t_max'], params['n'])

    def evaluate(_, branch):
        values = kernel_values(u, branch_sign(branch), t, sigma)
        p1 = np.broadcast_to(values.a1, t.shape)
        p2 = np.broadcast_to(values.a2, t.shape)
        return [(branch, float(s), float(x), float(y)) for s, x, y in zip(t, p1, p2)]

    blocks = run_rows(evaluate, params['branches'])
    return JobOutput(('branch', 't', 'p1', 'p2'), [row for block in blocks for row in block])


def geometry_dump(params):
    """Points of T_lambda, n per branch"""
    lam = params['lam']
    t = np.linspace(-params['t_max'], params['t_max'], params['n'])

    def evaluate(_, branch):
        rows = []
        for s in t:
            point = circle_point(lam, BranchCoord(branch, float(s)))
            rows.append((branch, float(s), point.sheet.value, float(point.u.u1), float(point.u.u2)))
        return rows

    blocks = run_rows(evaluate, (0, 1, 2, 3))
    return JobOutput(('branch', 't', 'sheet', 'u1', 'u2'), [row for block in blocks for row in block])


PRODUCERS = {
    'cauchy-disk': cauchy_disk_job,
    'cauchy-r11': cauchy_r11_job,
    'taylor': taylor_job,
    'kernel-dump': kernel_dump,
    'geometry-dump': geometry_dump,
}


def run_job(job):
    """Produce the rows of a transform or dump job"""
    output = PRODUCERS[job.command](job.params)
    if output.failed:
        logger.warning(f"{job.command}: {output.failed} of {len(output.rows)} row(s) failed")
    return output
