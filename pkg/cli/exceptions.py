from core.exceptions import R11Error


class UnknownSuite(R11Error):
    """Verify suite name not in the registry"""


class JobError(R11Error):
    """Job file missing, unreadable or not valid JSON"""
