class ChebkitError(Exception):
    pass


class DomainError(ChebkitError, ValueError):
    """A parameter lies outside the range where a bound is stated."""


class TheoremViolation(ChebkitError):
    """A proven inequality failed on a concrete instance.

    This is a falsification event, the offending instance is kept on
    ``instance`` so it can be reported verbatim.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance


class ScanLimitExceeded(ChebkitError):
    def __init__(self, message, field=None, label=None, cap=None):
        super().__init__(message)
        self.field = field
        self.label = label
        self.cap = cap
