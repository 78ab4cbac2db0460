"""Exceptions raised when a structure cannot even be checked.

Law failures are never raised; they are collected into a Report.  These
exceptions cover inputs that are structurally unusable (dangling ids,
missing table entries) or requests the engine refuses to honour.
"""


class WorkbenchError(Exception):
    pass


class MalformedInput(WorkbenchError):
    pass


class ShapeMismatch(WorkbenchError):
    pass


class VariantMismatch(WorkbenchError):
    pass


class NotASemilattice(WorkbenchError):
    pass


class ClosureBound(WorkbenchError):
    pass


class SearchBound(WorkbenchError):
    pass


class NonStrictGrading(WorkbenchError):
    pass


class PairingMismatch(WorkbenchError):
    pass


class NotIdentityCarrier(WorkbenchError):
    pass


class IllTyped(Exception):
    """Internal: a diagram leg tried to compose non-composable morphisms."""
