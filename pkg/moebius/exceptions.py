from core.exceptions import R11Error


class NotUnimodular(R11Error):
    """Determinant or pseudodeterminant differs from 1"""


class OutOfDomain(R11Error):
    """Point outside the domain of the requested map"""


class DegenerateElement(R11Error):
    """Group element has a non-invertible entry where one is needed"""


class SingularDenominator(R11Error):
    """Moebius denominator is not invertible at the point"""


class BadRadius(R11Error):
    """Circle parameter outside [-1, 0)"""
