"""Event-sourced containment state machine.

Passive existence and policy events establish the environment; an attack
disturbs it and advances the world's knowledge counter k by exactly one;
a defend by a different agent restores equilibrium. A world handles one
pending attack at a time: overlapping attacks are rejected, not queued.

The machine is single-writer: apply_event folds one event at a time into
a fresh immutable snapshot, so traces and snapshots can be handed to
concurrent readers, and independent runs share no mutable state.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .axioms import validate_world
from .errors import (
    DanglingReference,
    InvalidWorld,
    MalformedEvent,
    OrderingViolation,
    PreemptiveDefense,
    SelfDefense,
    SimulationError,
    StaleSequence,
    TargetMismatch,
)
from .model import (
    Attack,
    CyberWorld,
    Defend,
    Intent,
    PassiveExistence,
    PassivePolicy,
    RelationshipEvent,
)


class Phase(str, Enum):
    DORMANT = "dormant"
    ESTABLISHED = "established"
    DISTURBED = "disturbed"
    DEFENDED = "defended"


@dataclass(frozen=True)
class WorldState:
    """Snapshot of the world between events."""

    world: CyberWorld
    phase: Phase = Phase.DORMANT
    pending_attack: Attack | None = None
    violated_policies: frozenset[str] = frozenset()
    equilibrium: bool = False
    existence_seen: bool = False
    policy_seen: bool = False
    last_seq: int = 0

    @property
    def k(self) -> int:
        return self.world.k


@dataclass(frozen=True)
class TraceAnnotation:
    """Terminal error recorded when a run stops early."""

    seq: int
    kind: str
    message: str


@dataclass(frozen=True)
class Trace:
    """Applied events plus one state snapshot per event."""

    events: tuple[RelationshipEvent, ...]
    states: tuple[WorldState, ...]
    error: TraceAnnotation | None = None

    @property
    def final_state(self) -> WorldState | None:
        return self.states[-1] if self.states else None


class Clause(str, Enum):
    PREVENTION = "Prevention"
    EQUILIBRIUM = "Equilibrium"
    NONE = "None"


@dataclass(frozen=True)
class ContainmentVerdict:
    holds: bool
    clause: Clause
    explanation: str


def init_world(world: CyberWorld) -> WorldState:
    """Start a simulation: k reset to 0, phase dormant, no equilibrium.

    Raises InvalidWorld carrying the violation list if the configuration
    fails axiom validation.
    """
    violations = validate_world(world)
    if violations:
        raise InvalidWorld(violations)
    return WorldState(world=replace(world, k=0))


def _require_agent(state: WorldState, event_seq: int, agent_id: str | None) -> None:
    if agent_id is not None and agent_id not in state.world.agents:
        raise DanglingReference(event_seq, f"unknown agent {agent_id}")


def _require_policy(state: WorldState, event_seq: int, policy_id: str | None) -> None:
    if policy_id is not None and policy_id not in state.world.policy_ids():
        raise DanglingReference(event_seq, f"unknown policy {policy_id}")


def apply_event(state: WorldState, event: RelationshipEvent) -> WorldState:
    """Fold one event into a new snapshot, enforcing the sequencing rules."""
    if event.seq <= state.last_seq:
        raise StaleSequence(
            event.seq, f"sequence number must exceed {state.last_seq}"
        )

    if isinstance(event, PassiveExistence):
        _require_agent(state, event.seq, event.agent)
        next_state = replace(state, existence_seen=True, last_seq=event.seq)
        return _maybe_establish(next_state)

    if isinstance(event, PassivePolicy):
        _require_policy(state, event.seq, event.policy)
        next_state = replace(state, policy_seen=True, last_seq=event.seq)
        return _maybe_establish(next_state)

    if isinstance(event, Attack):
        if event.initiator is None or event.intent is None or event.target is None:
            raise MalformedEvent(
                event.seq, "attack requires initiator, intent, and target"
            )
        _require_agent(state, event.seq, event.initiator)
        _require_policy(state, event.seq, event.target)
        if state.phase not in (Phase.ESTABLISHED, Phase.DEFENDED):
            raise OrderingViolation(
                event.seq, f"attack not permitted in phase {state.phase.value}"
            )
        return replace(
            state,
            world=replace(state.world, k=state.world.k + 1),
            phase=Phase.DISTURBED,
            pending_attack=event,
            violated_policies=state.violated_policies | {event.target},
            equilibrium=False,
            last_seq=event.seq,
        )

    if isinstance(event, Defend):
        if event.intent is Intent.PREEMPTIVE:
            raise PreemptiveDefense(
                event.seq, "defend carries preemptive intent and is an attack"
            )
        if event.initiator is None or event.target is None:
            raise MalformedEvent(event.seq, "defend requires initiator and target")
        _require_agent(state, event.seq, event.initiator)
        _require_policy(state, event.seq, event.target)
        if state.phase is not Phase.DISTURBED:
            raise OrderingViolation(
                event.seq, f"defend not permitted in phase {state.phase.value}"
            )
        pending = state.pending_attack
        assert pending is not None  # guaranteed by phase invariant
        if event.initiator == pending.initiator:
            raise SelfDefense(
                event.seq, f"defender {event.initiator} mounted the pending attack"
            )
        if event.target != pending.target:
            raise TargetMismatch(
                event.seq,
                f"defend targets {event.target} but the pending attack targets "
                f"{pending.target}",
            )
        return replace(
            state,
            phase=Phase.DEFENDED,
            pending_attack=None,
            violated_policies=state.violated_policies - {event.target},
            equilibrium=True,
            last_seq=event.seq,
        )

    raise MalformedEvent(event.seq, f"unsupported event type {type(event).__name__}")


def _maybe_establish(state: WorldState) -> WorldState:
    # The establishment transition fires only out of the dormant phase;
    # later passive events record facts without touching the phase.
    if state.phase is Phase.DORMANT and state.existence_seen and state.policy_seen:
        return replace(state, phase=Phase.ESTABLISHED, equilibrium=True)
    return state


def run(world: CyberWorld, events: list[RelationshipEvent]) -> Trace:
    """Fold events from a fresh world; stop at the first error.

    A rejected event (or an invalid world) terminates the run and is
    recorded in the trace tail rather than raised.
    """
    try:
        state = init_world(world)
    except InvalidWorld as exc:
        return Trace(
            events=(),
            states=(),
            error=TraceAnnotation(seq=0, kind=exc.kind, message=str(exc)),
        )
    applied: list[RelationshipEvent] = []
    states: list[WorldState] = []
    annotation: TraceAnnotation | None = None
    for event in events:
        try:
            state = apply_event(state, event)
        except SimulationError as exc:
            annotation = TraceAnnotation(seq=exc.seq, kind=exc.kind, message=exc.message)
            break
        applied.append(event)
        states.append(state)
    return Trace(events=tuple(applied), states=tuple(states), error=annotation)


def containment_verdict(trace: Trace) -> ContainmentVerdict:
    """Decide whether containment held over a finished run.

    Prevention: no attack ever mutated the world. Equilibrium: attacks
    landed but the final state is back in equilibrium with no violated
    policies. Anything else fails.
    """
    successful_attacks = [e for e in trace.events if isinstance(e, Attack)]
    if not successful_attacks:
        detail = "no attack altered the world state"
        if trace.error is not None:
            detail += f"; event {trace.error.seq} rejected ({trace.error.kind})"
        return ContainmentVerdict(True, Clause.PREVENTION, detail)

    final = trace.final_state
    assert final is not None  # successful attacks imply at least one state
    if final.equilibrium and not final.violated_policies:
        return ContainmentVerdict(
            True,
            Clause.EQUILIBRIUM,
            f"{len(successful_attacks)} attack(s) resolved; equilibrium restored "
            "with no violated policies",
        )

    detail = f"final phase {final.phase.value}"
    if final.pending_attack is not None:
        detail += f"; attack {final.pending_attack.seq} pending"
    if final.violated_policies:
        detail += "; violated policies: " + ",".join(sorted(final.violated_policies))
    return ContainmentVerdict(False, Clause.NONE, detail)
