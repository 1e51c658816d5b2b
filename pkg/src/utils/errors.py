from typing import List, Optional


class NilHermError(Exception):
    """Base error. Carries a process exit code the way an HTTP error carries a status."""

    exit_code: int = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code

    def __str__(self) -> str:
        return self.detail


class ParseError(NilHermError):
    exit_code = 2

    def __init__(self, detail: str, position: Optional[int] = None):
        if position is not None:
            detail = f"{detail} (at position {position})"
        super().__init__(detail)
        self.position = position


class SemanticError(NilHermError):
    exit_code = 3


class DimensionMismatch(SemanticError):
    pass


class NotPositiveDefinite(SemanticError):
    pass


class JacobiViolation(SemanticError):
    def __init__(self, triple, residual):
        super().__init__(f"Jacobi identity fails at {triple}: residual {[str(c) for c in residual]}")
        self.triple = triple
        self.residual = residual


class NotNilpotent(SemanticError):
    pass


class NotComplexStructure(SemanticError):
    pass


class PreconditionError(SemanticError):
    pass


class DataValidationError(SemanticError):
    """Constructive data failed one or more named clauses."""

    def __init__(self, kind: str, violations: List[str]):
        super().__init__(f"invalid {kind}: " + "; ".join(violations))
        self.violations = violations


class ExtractionError(SemanticError):
    pass


class NotIrreducible(SemanticError):
    pass


class NoInvariantComplexStructure(SemanticError):
    pass


class NoInvariantTriple(SemanticError):
    pass


class VerificationFailure(NilHermError):
    exit_code = 4
