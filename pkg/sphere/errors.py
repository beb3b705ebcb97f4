"""
Exception hierarchy for the sphere toolkit.

Library code raises these; only the command layer turns them into exit
codes. Every class is a ValueError so callers that only care about
"bad input" can keep catching ValueError.
"""

# --- Exit codes (mapped at the CLI boundary) ---
EXIT_OK = 0
EXIT_NOT_GENERAL_POSITION = 3
EXIT_CHECK_FAILED = 4
EXIT_NOT_SEMIGENERAL = 5
EXIT_BAD_INPUT = 6
EXIT_INCONSISTENT = 7


class GeometryError(ValueError):
    """Base class. `exit_code` is what the CLI returns for this failure."""

    exit_code = EXIT_BAD_INPUT

    def details(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class ConfigParseError(GeometryError):
    pass


class PoleProjection(GeometryError):
    def __init__(self, message="The projection pole (0,0,1) has no planar image."):
        super().__init__(message)


class UnsupportedSize(GeometryError):
    pass


class SizeMismatch(GeometryError):
    pass


class IndexOutOfRange(GeometryError):
    pass


class WrongOrder(GeometryError):
    pass


class NotGeneralPosition(GeometryError):
    exit_code = EXIT_NOT_GENERAL_POSITION

    def __init__(self, quadruple, message=None):
        self.quadruple = tuple(quadruple)
        labels = ", ".join(str(i + 1) for i in self.quadruple)
        super().__init__(message or f"Dots {{{labels}}} are cocircular; configuration is not in general position.")

    def details(self) -> dict:
        payload = super().details()
        payload["quadruple"] = [i + 1 for i in self.quadruple]
        return payload


class InternalInconsistency(GeometryError):
    exit_code = EXIT_INCONSISTENT


class NonLocalChange(InternalInconsistency):
    pass


class IdenticallyDegeneratePath(GeometryError):
    def __init__(self, quadruple):
        self.quadruple = tuple(quadruple)
        labels = ", ".join(str(i + 1) for i in self.quadruple)
        super().__init__(f"Dots {{{labels}}} stay cocircular along the whole path; perturb an endpoint.")


class NotSemigeneral(GeometryError):
    exit_code = EXIT_NOT_SEMIGENERAL

    def __init__(self, quadruples, message=None):
        self.quadruples = [tuple(q) for q in quadruples]
        super().__init__(message or "Two walls are crossed at the same instant; the family is not semigeneral.")

    def details(self) -> dict:
        payload = super().details()
        payload["quadruples"] = [[i + 1 for i in q] for q in self.quadruples]
        return payload


class RetriesExhausted(GeometryError):
    exit_code = EXIT_NOT_SEMIGENERAL
