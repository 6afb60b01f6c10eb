"""Exception types shared across the package."""


class GhilbError(Exception):
    """Base class; every error here is an input or precondition problem."""


class NonCommuting(GhilbError):
    pass


class MembershipViolation(GhilbError):
    pass


class NotStandardForm(GhilbError):
    pass


class NotInCentralizer(GhilbError):
    pass


class SplitFieldRequired(GhilbError):
    pass


class NotCyclic(GhilbError):
    pass


class NotInChart(GhilbError):
    pass


class ChartBoundary(GhilbError):
    pass


class DegenerateConfiguration(GhilbError):
    pass


class NotInP(GhilbError):
    pass
