from core.exceptions import R11Error


class LightConeSingularity(R11Error):
    """Hyperbolic kernel evaluated at one of its singular points"""


class PVDivergence(R11Error):
    """Symmetric-excision sequence of a principal value does not settle"""
