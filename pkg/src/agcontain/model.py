"""Domain data types: agents, cyber worlds, policies, relationship events.

These are plain immutable values. Constructors do not enforce the axiom
constraints; inconsistent values are representable on purpose so the
axiom engine can report them as violations instead of refusing to build
the model at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class AgentKind(str, Enum):
    HUMAN = "human"
    AGI = "agi"


class Grouping(str, Enum):
    INDIVIDUAL = "individual"
    SOCIETY = "society"
    SWARM = "swarm"


class Matter(str, Enum):
    ORGANIC = "organic"
    INORGANIC = "inorganic"


class Visibility(str, Enum):
    VISIBLE = "visible"
    INVISIBLE = "invisible"


class IntelligenceQuality(str, Enum):
    NARROW = "narrow"
    GENERAL = "general"


class IntelligenceComposition(str, Enum):
    ORGANIC = "organic"
    ARTIFICIAL = "artificial"


class Space(str, Enum):
    CYBER = "cyber"
    PHYSICAL = "physical"
    SOCIAL = "social"
    MENTAL = "mental"


class Intent(str, Enum):
    PREEMPTIVE = "preemptive"
    RESPONSIVE = "responsive"


@dataclass(frozen=True)
class Locality:
    """Temporal and spatial reference point: an abstract tick and a world id."""

    time: int
    space: str


@dataclass(frozen=True)
class PhysicalAttributes:
    matter: Matter | None = None
    visibility: Visibility | None = None
    hardware: tuple[str, ...] = ()
    software: tuple[str, ...] = ()
    locality: Locality | None = None


@dataclass(frozen=True)
class SecuritySpectrum:
    """Security as positions on the logic and uncertainty spectra."""

    logic: float
    uncertainty: float


@dataclass(frozen=True)
class Intelligence:
    quality: IntelligenceQuality
    composition: IntelligenceComposition


@dataclass(frozen=True)
class AbstractAttributes:
    security: SecuritySpectrum | None = None
    intelligence: Intelligence | None = None
    autonomy: bool = False


@dataclass(frozen=True)
class Agent:
    id: str
    kind: AgentKind
    grouping: Grouping
    physical: PhysicalAttributes = PhysicalAttributes()
    abstract: AbstractAttributes = AbstractAttributes()


@dataclass(frozen=True)
class Policy:
    """A declarative requirement: predicate name plus argument tokens."""

    id: str
    world: str
    predicate: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True)
class CyberWorld:
    """Container of spaces, agents, and policies, with knowledge counter k."""

    id: str
    spaces: frozenset[Space]
    agents: dict[str, Agent] = field(default_factory=dict)
    policies: tuple[Policy, ...] = ()
    k: int = 0

    def policy_ids(self) -> frozenset[str]:
        return frozenset(p.id for p in self.policies)


# --- relationship events -------------------------------------------------
#
# Attack must carry initiator, intent, and target; defend must carry
# initiator and target and no preemptive intent. The optional fields exist
# so that malformed shapes can be represented, validated against the axiom
# catalogue, and rejected by the simulator with a precise error.


@dataclass(frozen=True)
class PassiveExistence:
    seq: int
    agent: str


@dataclass(frozen=True)
class PassivePolicy:
    seq: int
    policy: str


@dataclass(frozen=True)
class Attack:
    seq: int
    initiator: str | None
    intent: Intent | None
    target: str | None


@dataclass(frozen=True)
class Defend:
    seq: int
    initiator: str | None
    target: str | None
    intent: Intent | None = None


RelationshipEvent = PassiveExistence | PassivePolicy | Attack | Defend

PASSIVE_KINDS = (PassiveExistence, PassivePolicy)
ACTIVE_KINDS = (Attack, Defend)


def event_kind(event: RelationshipEvent) -> str:
    """Short token naming the event kind, as used by the document format."""
    return {
        PassiveExistence: "existence",
        PassivePolicy: "policy",
        Attack: "attack",
        Defend: "defend",
    }[type(event)]
