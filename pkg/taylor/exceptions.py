from core.exceptions import R11Error


class ConvergenceError(R11Error):
    """Series or integer-part integral outside its region of convergence"""


class NonInvertible(R11Error):
    """Idempotent component of e1 u equals 1, so e1 u - 1 has no inverse"""
