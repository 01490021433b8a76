"""Axiom catalogue and validation over agents, worlds, and event traces.

All checks are pure: violations come back as sorted data, never as
exceptions, and the same input always yields the same report. The
catalogue is closed; there are exactly nine axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NonMonotonicSequence
from .model import (
    ACTIVE_KINDS,
    Agent,
    AgentKind,
    Attack,
    CyberWorld,
    Defend,
    Grouping,
    Intent,
    IntelligenceComposition,
    Matter,
    PassiveExistence,
    PassivePolicy,
    RelationshipEvent,
    Space,
)


class Axiom(str, Enum):
    AX1 = "AX1"
    AX2 = "AX2"
    AX3 = "AX3"
    AX4 = "AX4"
    AX5 = "AX5"
    AX6 = "AX6"
    AX7 = "AX7"
    AX8 = "AX8"
    AX9 = "AX9"

    @property
    def description(self) -> str:
        return AXIOM_DESCRIPTIONS[self]


AXIOM_DESCRIPTIONS: dict[Axiom, str] = {
    Axiom.AX1: "agent sorts are discrete; human and agi traits must not mix",
    Axiom.AX2: "containment requires the cyber space, so every world includes it",
    Axiom.AX3: "autonomy is boolean, with no intermediate degrees",
    Axiom.AX4: "intelligent agents carry populated physical attributes",
    Axiom.AX5: "security logic and uncertainty lie within [0, 1]",
    Axiom.AX6: "active events require prior existence and policy events",
    Axiom.AX7: "attack events carry both an initiator and an intent",
    Axiom.AX8: "defend events are responsive; preemptive intent is rejected",
    Axiom.AX9: "society groups humans and swarm groups agi agents",
}


@dataclass(frozen=True)
class Violation:
    axiom: Axiom
    subject: str
    message: str


def _subject_key(subject: str) -> tuple[int, int, str]:
    # Event subjects are sequence numbers and must sort numerically.
    if subject.isdigit():
        return (0, int(subject), "")
    return (1, 0, subject)


def _sort(violations: list[Violation]) -> list[Violation]:
    return sorted(
        violations, key=lambda v: (v.axiom.value, _subject_key(v.subject), v.message)
    )


def validate_agent(agent: Agent) -> list[Violation]:
    """Check AX1, AX3, AX4, AX5, and AX9 for a single agent."""
    found: list[Violation] = []
    intel = agent.abstract.intelligence

    if agent.kind is AgentKind.HUMAN:
        if agent.physical.matter is Matter.INORGANIC:
            found.append(
                Violation(Axiom.AX1, agent.id, "human agent has inorganic matter")
            )
        if intel is not None and intel.composition is IntelligenceComposition.ARTIFICIAL:
            found.append(
                Violation(
                    Axiom.AX1, agent.id, "human agent has artificial intelligence composition"
                )
            )
    elif agent.kind is AgentKind.AGI:
        if intel is not None and intel.composition is IntelligenceComposition.ORGANIC:
            found.append(
                Violation(
                    Axiom.AX1, agent.id, "agi agent has organic intelligence composition"
                )
            )

    if not isinstance(agent.abstract.autonomy, bool):
        found.append(
            Violation(
                Axiom.AX3,
                agent.id,
                f"autonomy must be a boolean, got {agent.abstract.autonomy!r}",
            )
        )

    if intel is not None:
        if agent.physical.matter is None:
            found.append(
                Violation(Axiom.AX4, agent.id, "intelligence requires matter to be set")
            )
        if agent.physical.locality is None:
            found.append(
                Violation(Axiom.AX4, agent.id, "intelligence requires locality to be set")
            )

    security = agent.abstract.security
    if security is not None:
        for name, value in (("logic", security.logic), ("uncertainty", security.uncertainty)):
            if not isinstance(value, (int, float)) or not 0.0 <= float(value) <= 1.0:
                found.append(
                    Violation(
                        Axiom.AX5, agent.id, f"security {name} {value!r} outside [0, 1]"
                    )
                )

    if agent.grouping is Grouping.SOCIETY and agent.kind is not AgentKind.HUMAN:
        found.append(
            Violation(Axiom.AX9, agent.id, "society grouping requires a human agent")
        )
    if agent.grouping is Grouping.SWARM and agent.kind is not AgentKind.AGI:
        found.append(
            Violation(Axiom.AX9, agent.id, "swarm grouping requires an agi agent")
        )

    return _sort(found)


def validate_world(world: CyberWorld) -> list[Violation]:
    """Per-agent checks plus AX2 and world/policy referential integrity."""
    found: list[Violation] = []
    if Space.CYBER not in world.spaces:
        found.append(
            Violation(Axiom.AX2, world.id, "world does not include the cyber space")
        )
    for policy in world.policies:
        if policy.world != world.id:
            found.append(
                Violation(
                    Axiom.AX2,
                    policy.id,
                    f"policy references world {policy.world}, not {world.id}",
                )
            )
    for agent_id in sorted(world.agents):
        found.extend(validate_agent(world.agents[agent_id]))
    return _sort(found)


def validate_trace(events: list[RelationshipEvent]) -> list[Violation]:
    """Check AX6, AX7, and AX8 over an ordered event list.

    Raises NonMonotonicSequence if the sequence numbers are not strictly
    increasing; everything else is reported as violation data.
    """
    last_seq = 0
    for event in events:
        if event.seq <= last_seq:
            raise NonMonotonicSequence(
                f"event seq {event.seq} does not exceed previous seq {last_seq}"
            )
        last_seq = event.seq

    found: list[Violation] = []
    existence_seen = False
    policy_seen = False
    for event in events:
        if isinstance(event, PassiveExistence):
            existence_seen = True
        elif isinstance(event, PassivePolicy):
            policy_seen = True
        elif isinstance(event, ACTIVE_KINDS):
            if not (existence_seen and policy_seen):
                found.append(
                    Violation(
                        Axiom.AX6,
                        str(event.seq),
                        "active event before both passive kinds were recorded",
                    )
                )
        if isinstance(event, Attack):
            if event.initiator is None:
                found.append(
                    Violation(Axiom.AX7, str(event.seq), "attack lacks an initiator")
                )
            if event.intent is None:
                found.append(
                    Violation(Axiom.AX7, str(event.seq), "attack lacks an intent")
                )
        if isinstance(event, Defend) and event.intent is Intent.PREEMPTIVE:
            found.append(
                Violation(Axiom.AX8, str(event.seq), "defend carries preemptive intent")
            )
    return _sort(found)


def text_report(violations: list[Violation]) -> str:
    """Line-oriented report, one `AXn subject: message` line per violation."""
    return "".join(f"{v.axiom.value} {v.subject}: {v.message}\n" for v in violations)


def records_report(violations: list[Violation]) -> str:
    """Tab-separated machine-readable report: axiom, subject, message."""
    return "".join(f"{v.axiom.value}\t{v.subject}\t{v.message}\n" for v in violations)
