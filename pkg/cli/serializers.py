# cli/serializers.py - Job file validation for the batch commands
"""
Serializers for JSON job files.

A job file is an envelope validated by JobSpecSerializer:

    {"command": "cauchy-disk", "seed": 0, "params": {...}}

whose params are then validated by the serializer registered for the
command in PARAMS_SERIALIZERS. Function and quadrature descriptions are
nested serializers whose create() builds the library objects.
"""

import math

import numpy as np
from rest_framework import serializers

from clifford.algebra import EvenNumber, Vector11
from core.numerics import smooth_bump
from moebius.geometry import BRANCHES, Sheet, TildePoint
from representations.boundary import BoundaryFunction
from transforms.quadrature import RULES, QuadratureSpec

COMMANDS = ('verify', 'cauchy-disk', 'cauchy-r11', 'taylor', 'kernel-dump', 'geometry-dump')
TRANSFORM_COMMANDS = ('cauchy-disk', 'cauchy-r11', 'taylor')
DUMP_COMMANDS = {'kernel': 'kernel-dump', 'geometry': 'geometry-dump'}

CIRCLE_KINDS = ('monomial', 'polynomial')
TILDE_KINDS = ('gaussian', 'bump', 'zero')
TAYLOR_MODES = ('classical', 'mellin', 'expand')


class JobSpecSerializer(serializers.Serializer):
    """Envelope of every job file"""

    command = serializers.ChoiceField(choices=COMMANDS)
    params = serializers.DictField(required=False, default=dict)
    seed = serializers.IntegerField(required=False, default=0, min_value=0)


class QuadratureSerializer(serializers.Serializer):
    """Overrides of QuadratureSpec.from_settings()"""

    n = serializers.IntegerField(required=False, min_value=16)
    t_max = serializers.FloatField(required=False)
    pv_epsilon0 = serializers.FloatField(required=False)
    pv_levels = serializers.IntegerField(required=False, min_value=0, max_value=20)
    rule = serializers.ChoiceField(choices=RULES, required=False)
    order = serializers.IntegerField(required=False, min_value=2, max_value=64)

    def validate_t_max(self, value):
        if value <= 0:
            raise serializers.ValidationError("Branch truncation must be positive.")
        return value

    def validate_pv_epsilon0(self, value):
        if value <= 0:
            raise serializers.ValidationError("Excision radius must be positive.")
        return value

    def create(self, validated_data):
        return QuadratureSpec.from_settings(**validated_data)


class ComplexField(serializers.ListField):
    """[re, im] pair"""

    child = serializers.FloatField()

    def __init__(self, **kwargs):
        kwargs.setdefault('min_length', 2)
        kwargs.setdefault('max_length', 2)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        re, im = super().to_internal_value(data)
        return complex(re, im)

    def run_validators(self, value):
        # The inherited length validators apply to the [re, im] pair, not the complex result
        super().run_validators([value.real, value.imag])


class DiskPointField(ComplexField):

    def to_internal_value(self, data):
        value = super().to_internal_value(data)
        if abs(value) >= 1.0:
            raise serializers.ValidationError(f"Point {data} is not inside the unit disk.")
        return value


class TildePointSerializer(serializers.Serializer):
    sheet = serializers.ChoiceField(choices=[sheet.value for sheet in Sheet])
    u1 = serializers.FloatField()
    u2 = serializers.FloatField()

    def create(self, validated_data):
        return TildePoint.from_coordinates(validated_data['sheet'], validated_data['u1'], validated_data['u2'])


class CircleFunctionSerializer(serializers.Serializer):
    """
    Boundary data on the circle

    monomial: coefficient * e^{i k phi}
    polynomial: sum_k coefficients[k] e^{i k phi}
    Both extend to the disk as the same polynomial in w.
    """

    kind = serializers.ChoiceField(choices=CIRCLE_KINDS)
    k = serializers.IntegerField(required=False, default=0)
    coefficient = ComplexField(required=False, default=1.0 + 0.0j)
    coefficients = serializers.ListField(child=ComplexField(), required=False, default=list)

    def validate(self, attrs):
        if attrs['kind'] == 'polynomial' and not attrs['coefficients']:
            raise serializers.ValidationError("A polynomial needs at least one coefficient.")
        return attrs

    @staticmethod
    def terms(validated_data):
        """(power, coefficient) pairs"""
        if validated_data['kind'] == 'monomial':
            return [(validated_data['k'], validated_data['coefficient'])]
        return list(enumerate(validated_data['coefficients']))

    def create(self, validated_data):
        """Callable on complex arguments: phi on the circle or w on the disk via `on_disk`"""
        terms = self.terms(validated_data)

        def on_circle(phi):
            return sum(c * np.exp(1j * k * np.asarray(phi)) for k, c in terms)

        def on_disk(w):
            return sum(c * np.asarray(w, dtype=complex) ** k for k, c in terms)

        return on_circle, on_disk


class TildeFunctionSerializer(serializers.Serializer):
    """
    Boundary data on tilde-T

    gaussian: weights * exp(-(t - center)^2 / (2 width^2)) on the listed branches
    bump: p1 supported on (centers[0] - width, centers[0] + width), p2 on
        (centers[1] - width, centers[1] + width), smooth and compactly supported
    zero: identically zero
    """

    kind = serializers.ChoiceField(choices=TILDE_KINDS)
    branches = serializers.ListField(child=serializers.ChoiceField(choices=BRANCHES), required=False,
                                     default=list(BRANCHES))
    center = serializers.FloatField(required=False, default=0.0)
    centers = serializers.ListField(child=serializers.FloatField(), required=False, default=[0.0, 0.0],
                                    min_length=2, max_length=2)
    width = serializers.FloatField(required=False, default=1.0)
    weights = serializers.ListField(child=serializers.FloatField(), required=False, default=[1.0, 1.0],
                                    min_length=2, max_length=2)
    n = serializers.IntegerField(required=False, min_value=16)
    t_max = serializers.FloatField(required=False)

    def validate_width(self, value):
        if value <= 0:
            raise serializers.ValidationError("Width must be positive.")
        return value

    def validate_t_max(self, value):
        if value <= 0:
            raise serializers.ValidationError("Branch truncation must be positive.")
        return value

    def create(self, validated_data):
        kind = validated_data['kind']
        branches = set(validated_data['branches'])
        width = validated_data['width']
        w1, w2 = validated_data['weights']

        def profile(branch, t):
            if kind == 'zero' or branch not in branches:
                return EvenNumber(np.zeros_like(t), np.zeros_like(t))
            if kind == 'gaussian':
                g = np.exp(-0.5 * ((t - validated_data['center']) / width) ** 2)
                return EvenNumber(w1 * g, w2 * g)
            return EvenNumber(w1 * smooth_bump((t - validated_data['centers'][0]) / width),
                              w2 * smooth_bump((t - validated_data['centers'][1]) / width))

        return BoundaryFunction.on_tilde(profile, validated_data.get('n'), validated_data.get('t_max'))


class OutputMixin(serializers.Serializer):
    output = serializers.CharField(max_length=500)


class CauchyDiskParamsSerializer(OutputMixin):
    """Cauchy transform on the disk, or the Bergman transform of weight m"""

    function = CircleFunctionSerializer()
    points = serializers.ListField(child=DiskPointField(), allow_empty=True)
    m = serializers.IntegerField(required=False, min_value=2)
    quadrature = QuadratureSerializer(required=False)


class CauchyR11ParamsSerializer(OutputMixin):
    """Hyperbolic transform W_sigma at points of the conformal disk"""

    function = TildeFunctionSerializer()
    sigma = serializers.FloatField(required=False, default=0.0)
    points = TildePointSerializer(many=True, allow_empty=True)
    quadrature = QuadratureSerializer(required=False)

    def validate_sigma(self, value):
        if not math.isfinite(value):
            raise serializers.ValidationError("sigma must be finite.")
        return value


class TaylorParamsSerializer(OutputMixin):
    """
    classical: coefficients f_n, n = 1..N, of circle data
    mellin: coefficients f_p of tilde data on p = 0..p_max (count points)
    expand: integer-part decomposition of the kernel at (u1, u2, t) triples
    """

    mode = serializers.ChoiceField(choices=TAYLOR_MODES)
    function = serializers.DictField(required=False)
    N = serializers.IntegerField(required=False, min_value=1, default=16)
    p_max = serializers.FloatField(required=False, default=8.0, min_value=0.0)
    count = serializers.IntegerField(required=False, default=33, min_value=1)
    pairs = serializers.ListField(child=serializers.ListField(child=serializers.FloatField(),
                                                              min_length=3, max_length=3),
                                  required=False, default=list)

    def validate(self, attrs):
        mode = attrs['mode']
        if mode in ('classical', 'mellin'):
            nested = CircleFunctionSerializer if mode == 'classical' else TildeFunctionSerializer
            if 'function' not in attrs:
                raise serializers.ValidationError({'function': f"Mode '{mode}' needs a function."})
            function = nested(data=attrs['function'])
            if not function.is_valid():
                raise serializers.ValidationError({'function': function.errors})
            attrs['function'] = function
        return attrs


class KernelDumpParamsSerializer(OutputMixin):
    """Kernel samples (branch, t, p1, p2) at one point u"""

    u = serializers.ListField(child=serializers.FloatField(), min_length=2, max_length=2)
    sigma = serializers.FloatField(required=False, default=0.0)
    n = serializers.IntegerField(required=False, default=201, min_value=2)
    t_max = serializers.FloatField(required=False, default=4.0)
    branches = serializers.ListField(child=serializers.ChoiceField(choices=BRANCHES), required=False,
                                     default=list(BRANCHES))

    def validate_t_max(self, value):
        if value <= 0:
            raise serializers.ValidationError("Branch truncation must be positive.")
        return value

    def validate_u(self, value):
        return Vector11(*value)


class GeometryDumpParamsSerializer(OutputMixin):
    """Samples of the circle T_lambda on all four branches"""

    lam = serializers.FloatField()
    n = serializers.IntegerField(required=False, default=100, min_value=2)
    t_max = serializers.FloatField(required=False, default=2.0)

    def validate_lam(self, value):
        if not -1.0 <= value < 0.0:
            raise serializers.ValidationError("lambda must lie in [-1, 0).")
        return value

    def validate_t_max(self, value):
        if value <= 0:
            raise serializers.ValidationError("Branch truncation must be positive.")
        return value


class VerifyParamsSerializer(serializers.Serializer):
    suite = serializers.CharField(required=False, default='all')
    samples = serializers.IntegerField(required=False, min_value=1)
    report = serializers.CharField(required=False, max_length=500)


PARAMS_SERIALIZERS = {
    'verify': VerifyParamsSerializer,
    'cauchy-disk': CauchyDiskParamsSerializer,
    'cauchy-r11': CauchyR11ParamsSerializer,
    'taylor': TaylorParamsSerializer,
    'kernel-dump': KernelDumpParamsSerializer,
    'geometry-dump': GeometryDumpParamsSerializer,
}
