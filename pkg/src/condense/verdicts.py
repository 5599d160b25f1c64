"""Three-valued checker verdicts and the shared error types.

Every semi-decidable check in the package returns a ``Verdict``.  A
``holds``/``fails`` verdict always carries enough data to re-verify the
claim by direct recomputation; ``unknown`` always carries the search
bound that was exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

HOLDS = "holds"
FAILS = "fails"
UNKNOWN = "unknown"


class DomainMismatchError(ValueError):
    """Operands belong to different rings."""


class PreconditionError(ValueError):
    """A documented precondition of an operation is not met."""


class UnsupportedOperationError(ValueError):
    """The operation is not defined for this representation."""


class ParseError(ValueError):
    """A literal does not match the documented grammar."""


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same fact disagreed.

    This always signals an implementation bug, never a mathematical
    outcome.
    """


@dataclass(frozen=True)
class Verdict:
    kind: str
    witness: tuple = ()
    counterexample: tuple = ()
    bound: int | None = None
    reason: str = ""

    @classmethod
    def holds(cls, *witness, reason: str = "") -> "Verdict":
        return cls(HOLDS, witness=tuple(witness), reason=reason)

    @classmethod
    def fails(cls, *counterexample, reason: str = "") -> "Verdict":
        return cls(FAILS, counterexample=tuple(counterexample), reason=reason)

    @classmethod
    def unknown(cls, bound: int | None = None, reason: str = "") -> "Verdict":
        return cls(UNKNOWN, bound=bound, reason=reason)

    @property
    def is_holds(self) -> bool:
        return self.kind == HOLDS

    @property
    def is_fails(self) -> bool:
        return self.kind == FAILS

    @property
    def is_unknown(self) -> bool:
        return self.kind == UNKNOWN

    def payload(self) -> tuple:
        return self.witness if self.is_holds else self.counterexample
