"""Coded concept graph for the containment ontology.

The ontology is a tiered hierarchy of coded concepts. Codes are a tier
letter plus a positive index ("O2", "C7", "A1"); the object, class, and
attribute tiers have closed index ranges. The canonical instance wires
three agent objects, seven classes, two attribute trees, and the
passive/active relationship tree into a fixed, immutable graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidGraph, UnknownCode


class Tier(Enum):
    """Concept tiers, in canonical rank order."""

    OBJECT = "O"
    CLASS = "C"
    ATTRIBUTE = "A"
    SUB_ATTRIBUTE = "S"
    FEATURE = "F"
    RELATIONSHIP = "R"

    @property
    def rank(self) -> int:
        return _TIER_RANK[self]


_TIER_RANK = {tier: rank for rank, tier in enumerate(Tier)}

# Closed index ranges for the tiers whose codes are fixed by the taxonomy
# tables. Sub-attribute, feature, and relationship indices are open-ended.
_TIER_RANGES = {Tier.OBJECT: 3, Tier.CLASS: 7, Tier.ATTRIBUTE: 2}

_CODE_RE = re.compile(r"^([OCASFR])([1-9][0-9]*)$")


@dataclass(frozen=True, order=False)
class ConceptCode:
    """A tier letter plus positive index, e.g. O2 or C7."""

    tier: Tier
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise UnknownCode(f"concept index must be positive, got {self.index}")
        limit = _TIER_RANGES.get(self.tier)
        if limit is not None and self.index > limit:
            raise UnknownCode(
                f"{self.tier.value}{self.index} is outside the "
                f"{self.tier.value} tier's range 1..{limit}"
            )

    @classmethod
    def parse(cls, text: str) -> "ConceptCode":
        m = _CODE_RE.match(text)
        if not m:
            raise UnknownCode(f"malformed concept code {text!r}")
        return cls(Tier(m.group(1)), int(m.group(2)))

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.tier.rank, self.index)

    def __lt__(self, other: "ConceptCode") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.tier.value}{self.index}"


@dataclass(frozen=True)
class Concept:
    """A single node: code, descriptor, and its place in the hierarchy."""

    code: ConceptCode
    descriptor: str
    parent: ConceptCode | None = None
    children: tuple[ConceptCode, ...] = ()


@dataclass(frozen=True)
class ConceptGraph:
    """Immutable map of concepts plus the list of roots.

    Construction checks structural consistency: every parent edge has a
    matching child edge, edges are acyclic, and sibling descriptors are
    unique. Safe to share across threads once built.
    """

    concepts: dict[ConceptCode, Concept]
    roots: tuple[ConceptCode, ...] = field(init=False)

    def __post_init__(self):
        roots = tuple(c.code for c in self._sorted() if c.parent is None)
        object.__setattr__(self, "roots", roots)
        self._check_structure()

    def _sorted(self) -> list[Concept]:
        return sorted(self.concepts.values(), key=lambda c: c.code.sort_key)

    def _check_structure(self) -> None:
        for concept in self.concepts.values():
            if concept.parent is not None:
                parent = self.concepts.get(concept.parent)
                if parent is None:
                    raise InvalidGraph(
                        f"{concept.code} names missing parent {concept.parent}"
                    )
                if concept.code not in parent.children:
                    raise InvalidGraph(
                        f"{concept.code} is not listed among {parent.code}'s children"
                    )
            for child_code in concept.children:
                child = self.concepts.get(child_code)
                if child is None or child.parent != concept.code:
                    raise InvalidGraph(
                        f"{concept.code} lists child {child_code} that does not "
                        f"point back to it"
                    )
            siblings = [self.concepts[c].descriptor for c in concept.children]
            if len(set(siblings)) != len(siblings):
                raise InvalidGraph(f"duplicate descriptor among children of {concept.code}")
        # Acyclicity: walking parent edges from any node must terminate.
        for code in self.concepts:
            seen = set()
            cursor: ConceptCode | None = code
            while cursor is not None:
                if cursor in seen:
                    raise InvalidGraph(f"parent cycle through {cursor}")
                seen.add(cursor)
                cursor = self.concepts[cursor].parent

    def lookup(self, code: ConceptCode | str) -> Concept:
        """Return the concept for a code, raising UnknownCode if absent."""
        if isinstance(code, str):
            code = ConceptCode.parse(code)
        concept = self.concepts.get(code)
        if concept is None:
            raise UnknownCode(f"no concept coded {code}")
        return concept

    def children(self, code: ConceptCode | str) -> tuple[Concept, ...]:
        """Direct children in canonical order (ascending code)."""
        concept = self.lookup(code)
        return tuple(self.concepts[c] for c in concept.children)

    def tier_count(self, tier: Tier) -> int:
        return sum(1 for c in self.concepts.values() if c.code.tier is tier)

    def iter_concepts(self) -> list[Concept]:
        """All concepts in canonical order."""
        return self._sorted()

    def descriptor_vocabulary(self) -> frozenset[str]:
        """Lowercased descriptors of every concept in the graph."""
        return frozenset(c.descriptor.lower() for c in self.concepts.values())


# (code, descriptor, parent) triples for the canonical graph. Sub-attribute
# and feature indices follow the documented numbering convention: attribute
# sub-attributes S1-S6 and features F1-F10 first, then the relationship
# tree's S7-S10 and F11-F13.
_CANONICAL_TABLE: tuple[tuple[str, str, str | None], ...] = (
    ("O1", "human", None),
    ("O2", "AGI", None),
    ("O3", "cyberworld", None),
    ("C1", "individual", "O1"),
    ("C2", "society", "O1"),
    ("C3", "swarm", "O2"),
    ("C4", "physical", "O3"),
    ("C5", "social", "O3"),
    ("C6", "mental", "O3"),
    ("C7", "cyber", "O3"),
    ("A1", "physical", None),
    ("A2", "abstract", None),
    ("S1", "composition", "A1"),
    ("S2", "architecture", "A1"),
    ("S3", "locality", "A1"),
    ("S4", "security", "A2"),
    ("S5", "intelligence", "A2"),
    ("S6", "autonomy", "A2"),
    ("S7", "existence", "R1"),
    ("S8", "policy", "R1"),
    ("S9", "attack", "R2"),
    ("S10", "defend", "R2"),
    ("F1", "matter", "S1"),
    ("F2", "visibility", "S1"),
    ("F3", "hardware", "S2"),
    ("F4", "software", "S2"),
    ("F5", "temporal", "S3"),
    ("F6", "spatial", "S3"),
    ("F7", "logic", "S4"),
    ("F8", "uncertainty", "S4"),
    ("F9", "quality", "S5"),
    ("F10", "composition", "S5"),
    ("F11", "initiation", "S9"),
    ("F12", "intent", "S9"),
    ("F13", "initiation", "S10"),
    ("R1", "passive", None),
    ("R2", "active", None),
)


def build_graph(triples) -> ConceptGraph:
    """Assemble a ConceptGraph from (code, descriptor, parent-or-None) rows."""
    parents: dict[ConceptCode, ConceptCode | None] = {}
    descriptors: dict[ConceptCode, str] = {}
    for code_text, descriptor, parent_text in triples:
        code = ConceptCode.parse(code_text)
        if code in parents:
            raise InvalidGraph(f"duplicate concept code {code}")
        parents[code] = ConceptCode.parse(parent_text) if parent_text else None
        descriptors[code] = descriptor
    children: dict[ConceptCode, list[ConceptCode]] = {code: [] for code in parents}
    for code, parent in parents.items():
        if parent is not None:
            if parent not in parents:
                raise InvalidGraph(f"{code} names missing parent {parent}")
            children[parent].append(code)
    concepts = {
        code: Concept(
            code=code,
            descriptor=descriptors[code],
            parent=parents[code],
            children=tuple(sorted(children[code], key=lambda c: c.sort_key)),
        )
        for code in parents
    }
    return ConceptGraph(concepts=concepts)


def canonical_ontology() -> ConceptGraph:
    """The fixed containment ontology; every call yields an identical graph."""
    return build_graph(_CANONICAL_TABLE)
