from core.exceptions import R11Error


class LightConeError(R11Error):
    """Vector on the light cone has no Kelvin inverse"""


class DomainError(R11Error):
    """Scalar function undefined at an idempotent component"""
