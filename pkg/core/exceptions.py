# core/exceptions.py - Base exception for every r11 app
"""
Root of the r11 exception hierarchy.

Each app defines its own subclasses in <app>/exceptions.py; the management
commands catch R11Error to turn library failures into exit codes.
"""


class R11Error(Exception):
    """Base class for all r11 library errors"""

    def __init__(self, message='', **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __str__(self):
        if not self.context:
            return self.message
        details = ', '.join(f"{key}={value}" for key, value in self.context.items())
        return f"{self.message} ({details})"
