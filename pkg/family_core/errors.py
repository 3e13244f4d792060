"""
Exception hierarchy shared by every package in the toolkit.
"""


class UnionFreeError(Exception):
    """Base class for all domain errors."""


class FamilyParseError(UnionFreeError, ValueError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class InvalidMaskError(UnionFreeError, ValueError):
    pass


class GroundSetMismatch(UnionFreeError, ValueError):
    pass


class NotAMemberError(UnionFreeError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class NotUnionFreeError(UnionFreeError, ValueError):
    pass


class SpecValidationError(UnionFreeError, ValueError):
    pass


class CapacityExceeded(UnionFreeError, RuntimeError):
    pass


class SearchRefused(UnionFreeError, ValueError):
    pass


class ApproxDomainError(UnionFreeError, ValueError):
    pass
