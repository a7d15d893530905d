"""Exception hierarchy shared by every module.

Each error carries a short machine-readable ``code`` plus an optional
``path`` (a tuple of child indices from the root of a derivation) and a
free-form ``detail`` string.  The CLI renders them as
``CODE path=... detail=...`` records.
"""

from __future__ import annotations


class GS4Error(Exception):
    code = "GS4_ERROR"

    def __init__(self, detail: str = "", path: tuple[int, ...] = ()):
        super().__init__(detail)
        self.detail = detail
        self.path = tuple(path)

    def at(self, prefix: tuple[int, ...]) -> "GS4Error":
        """Return a copy of this error whose path is prefixed by ``prefix``."""
        err = type(self)(self.detail, tuple(prefix) + self.path)
        return err

    def record(self) -> str:
        path = "/".join(str(i) for i in self.path) or "."
        return f"{self.code} path={path} detail={self.detail}"

    def __str__(self) -> str:
        return self.record()


class ParseError(GS4Error):
    code = "PARSE_ERROR"


# syntax
class NameNotFound(GS4Error):
    code = "NAME_NOT_FOUND"


class NotSharingFree(GS4Error):
    code = "NOT_SHARING_FREE"


class NotInjective(GS4Error):
    code = "NOT_INJECTIVE"


class DomainTooSmall(GS4Error):
    code = "DOMAIN_TOO_SMALL"


# derivation
class DerivationError(GS4Error):
    code = "INVALID_DERIVATION"


class RuleMismatch(DerivationError):
    code = "RULE_MISMATCH"


class ContextMismatch(DerivationError):
    code = "CONTEXT_MISMATCH"


class AxiomPairInvalid(DerivationError):
    code = "AXIOM_PAIR_INVALID"


class DerivationNotSharingFree(DerivationError, NotSharingFree):
    code = "NOT_SHARING_FREE"


# transform
class TransformError(GS4Error):
    code = "TRANSFORM_ERROR"


class TargetNotInConclusion(TransformError):
    code = "TARGET_NOT_IN_CONCLUSION"


class TargetNotDisjunction(TransformError):
    code = "TARGET_NOT_DISJUNCTION"


class TargetNotConjunction(TransformError):
    code = "TARGET_NOT_CONJUNCTION"


class TargetAtomic(TransformError):
    code = "TARGET_ATOMIC"


class DeltaNotSharingFree(TransformError):
    code = "DELTA_NOT_SHARING_FREE"


class DeltaSharesNamesWithConclusion(TransformError):
    code = "DELTA_SHARES_NAMES"


class NotEquivalentPair(TransformError):
    code = "NOT_EQUIVALENT_PAIR"


# graphs and normalization
class PairInvalid(GS4Error):
    code = "PAIR_INVALID"


class EmptyComposite(GS4Error):
    code = "EMPTY_COMPOSITE"


class PreconditionViolated(GS4Error):
    code = "PRECONDITION_VIOLATED"


class InternalStuck(GS4Error):
    code = "INTERNAL_STUCK"


class ShapeMismatch(GS4Error):
    code = "SHAPE_MISMATCH"


# BLG
class TotalityError(GS4Error):
    code = "NOT_TOTAL"


class MissingBranch(TotalityError):
    code = "MISSING_BRANCH"


class ExcessBranches(TotalityError):
    code = "EXCESS_BRANCHES"


class VertexMismatch(TotalityError):
    code = "VERTEX_MISMATCH"


class NonDualEdge(TotalityError):
    code = "NON_DUAL_EDGE"


class NotTotal(TotalityError):
    code = "NOT_TOTAL"
