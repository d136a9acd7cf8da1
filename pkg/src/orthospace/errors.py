class OrthoError(Exception):
    """Base class for library errors."""


class DimensionMismatch(OrthoError, ValueError):
    pass


class UnsupportedInstance(OrthoError, ValueError):
    """The instance lies outside the representable class (e.g. a lexicographic codomain)."""


class UnverifiedProduct(OrthoError, ValueError):
    """An operation that relies on the product axioms got a product that was never verified."""


class AxiomViolation(OrthoError, ValueError):
    def __init__(self, report):
        super().__init__(f"product fails the axioms: {report.summary()}")
        self.report = report


class EnumerationBoundExceeded(OrthoError, ValueError):
    pass


class NoAdjointError(OrthoError, ValueError):
    pass


class NotPositive(OrthoError, ValueError):
    pass
