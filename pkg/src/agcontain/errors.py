"""Exception hierarchy for the agcontain toolkit.

Domain findings (axiom violations, containment verdicts) are returned as
data, never raised. Exceptions are reserved for malformed inputs and
broken preconditions.
"""

from __future__ import annotations


class AgcError(Exception):
    """Base class for all toolkit errors."""


class UnknownCode(AgcError):
    """A concept code does not parse or does not denote a known concept."""


class InvalidGraph(AgcError):
    """A concept graph breaks structural rules (cycles, edge mismatches)."""


class NonMonotonicSequence(AgcError):
    """Trace events do not carry strictly increasing sequence numbers."""


class SimulationError(AgcError):
    """Base class for event-application failures in the simulator."""

    #: short token used when the error is recorded in a serialized trace
    kind = "simulation_error"

    def __init__(self, seq: int, message: str):
        super().__init__(f"event {seq}: {message}")
        self.seq = seq
        self.message = message


class InvalidWorld(AgcError):
    """World configuration failed axiom validation at simulation start."""

    kind = "invalid_world"

    def __init__(self, violations):
        super().__init__(f"world failed validation with {len(violations)} violation(s)")
        self.violations = list(violations)


class OrderingViolation(SimulationError):
    """Active event applied in a phase that does not permit it."""

    kind = "ordering_violation"


class SelfDefense(SimulationError):
    """Defend initiated by the same agent that mounted the pending attack."""

    kind = "self_defense"


class PreemptiveDefense(SimulationError):
    """Defend carrying preemptive intent; rejected as an attack in disguise."""

    kind = "preemptive_defense"


class StaleSequence(SimulationError):
    """Event sequence number does not exceed all previously applied ones."""

    kind = "stale_sequence"


class TargetMismatch(SimulationError):
    """Defend targets a policy other than the pending attack's target."""

    kind = "target_mismatch"


class MalformedEvent(SimulationError):
    """Event is structurally incomplete (e.g. attack without an intent)."""

    kind = "malformed_event"


class DanglingReference(SimulationError):
    """Event references an agent or policy absent from the world."""

    kind = "dangling_reference"


class DocumentError(AgcError):
    """Aggregate of all issues found while parsing a document.

    Parsing never fails fast: every line is inspected and every issue is
    collected so independent errors on other lines still get reported.
    """

    def __init__(self, issues):
        self.issues = sorted(issues, key=lambda i: (i.line, i.column))
        head = self.issues[0] if self.issues else None
        summary = f"{len(self.issues)} issue(s)"
        if head is not None:
            summary += f"; first at line {head.line}: {head.message}"
        super().__init__(summary)


class EmptyCorpus(AgcError):
    """Concept selection was asked to run over an empty corpus."""


class DecodeError(AgcError):
    """Corpus input is not valid UTF-8."""
