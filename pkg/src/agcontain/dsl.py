"""Line-oriented document format: parser, canonical serializer, converters.

One record per line: ``record-type id key=value ...`` with single spaces,
UTF-8, LF endings. The grammar is closed; unknown record types, unknown
keys, and malformed values are errors. Every document starts (in
canonical form) with a ``version 1`` record and a ``doc <kind>`` record.

Canonical form sorts records by (record type rank, primary id), emits
keys in a fixed per-type order, normalizes numeric spellings, and omits
optional keys that are unset. List values are comma separated without
spaces; the empty list is the literal ``-``. parse and serialize are
inverse on canonical text, and canonicalization is idempotent.

The full grammar (record types, keys, value types) is documented in
docs/format.md.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import DocumentError
from .model import (
    AbstractAttributes,
    Agent,
    AgentKind,
    Attack,
    CyberWorld,
    Defend,
    Grouping,
    Intelligence,
    IntelligenceComposition,
    IntelligenceQuality,
    Intent,
    Locality,
    Matter,
    PassiveExistence,
    PassivePolicy,
    PhysicalAttributes,
    Policy,
    RelationshipEvent,
    SecuritySpectrum,
    Space,
    Visibility,
)
from .ontology import ConceptCode, ConceptGraph, build_graph
from .simulator import Trace

TOKEN_CHARS = frozenset(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.:-"
)

EMPTY = "-"


class DocKind(str, Enum):
    SCENARIO = "scenario"
    CONCEPTGRAPH = "conceptgraph"
    TRACE = "trace"
    CANDIDATE = "candidate"


@dataclass(frozen=True)
class ParseIssue:
    line: int
    column: int
    kind: str  # "syntax" | "duplicate-id" | "dangling-reference"
    message: str


@dataclass(frozen=True)
class Record:
    rtype: str
    rid: str
    fields: tuple[tuple[str, str], ...]
    line: int = field(default=0, compare=False)

    def get(self, key: str) -> str | None:
        for k, v in self.fields:
            if k == key:
                return v
        return None


@dataclass(frozen=True)
class Document:
    kind: DocKind
    records: tuple[Record, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "records", tuple(sorted(self.records, key=_record_sort_key))
        )

    def of_type(self, rtype: str) -> list[Record]:
        return [r for r in self.records if r.rtype == rtype]


# --- grammar tables -------------------------------------------------------

_TYPE_RANK = {
    "world": 0,
    "agent": 1,
    "policy": 2,
    "event": 3,
    "state": 4,
    "error": 5,
    "concept": 6,
    "term": 7,
    "relation": 8,
}

_ALLOWED_TYPES = {
    DocKind.SCENARIO: ("world", "agent", "policy", "event"),
    DocKind.CONCEPTGRAPH: ("concept",),
    DocKind.TRACE: ("event", "state", "error"),
    DocKind.CANDIDATE: ("term", "relation"),
}

_NUMERIC_ID_TYPES = ("event", "state", "error")

_SPACES = tuple(s.value for s in Space)

# key -> (value codec name, required). Key order here is the canonical
# emission order.
_KEYS: dict[str, tuple[tuple[str, str, bool], ...]] = {
    "world": (("spaces", "spaceset", True),),
    "agent": (
        ("kind", "enum:human,agi", True),
        ("grouping", "enum:individual,society,swarm", True),
        ("matter", "enum:organic,inorganic", False),
        ("visibility", "enum:visible,invisible", False),
        ("hardware", "list", False),
        ("software", "list", False),
        ("time", "int", False),
        ("space", "token", False),
        ("logic", "float", False),
        ("uncertainty", "float", False),
        ("quality", "enum:narrow,general", False),
        ("composition", "enum:organic,artificial", False),
        ("autonomy", "bool", False),
    ),
    "policy": (
        ("world", "token", True),
        ("predicate", "token", True),
        ("args", "list", False),
    ),
    "state": (
        ("phase", "enum:dormant,established,disturbed,defended", True),
        ("k", "int", True),
        ("equilibrium", "bool", True),
        ("pending", "posint", False),
        ("violated", "sortedlist", False),
    ),
    "error": (("kind", "token", True),),
    "concept": (
        ("descriptor", "token", True),
        ("parent", "code", False),
    ),
    "term": (
        ("freq", "posint", True),
        ("docs", "posint", True),
        ("parent", "lcterm", False),
    ),
    "relation": (("weight", "posint", True),),
}

# event records carry a kind discriminator and per-kind key sets
_EVENT_KEYS: dict[str, tuple[tuple[str, str, bool], ...]] = {
    "existence": (("agent", "token", True),),
    "policy": (("policy", "token", True),),
    "attack": (
        ("initiator", "token", True),
        ("intent", "enum:preemptive,responsive", False),
        ("target", "token", True),
    ),
    "defend": (
        ("initiator", "token", True),
        ("intent", "enum:preemptive,responsive", False),
        ("target", "token", True),
    ),
}

_EVENT_KEY_ORDER = ("kind", "agent", "policy", "initiator", "intent", "target")

# keys that must be set together on agent records
_AGENT_PAIRS = (("time", "space"), ("logic", "uncertainty"), ("quality", "composition"))


def _is_token(text: str) -> bool:
    return bool(text) and text != EMPTY and all(ch in TOKEN_CHARS for ch in text)


def _record_sort_key(record: Record):
    rank = {"version": -2, "doc": -1}.get(record.rtype)
    if rank is None:
        rank = _TYPE_RANK.get(record.rtype, 99)
    if record.rtype in _NUMERIC_ID_TYPES and record.rid.isdigit():
        return (rank, 0, int(record.rid), "", record.rid)
    if record.rtype == "concept":
        try:
            code = ConceptCode.parse(record.rid)
        except Exception:
            return (rank, 2, 0, record.rid, "")
        return (rank, 1, code.sort_key[0] * 1000 + code.sort_key[1], "", "")
    return (rank, 1, 0, record.rid, "")


class _Codec:
    """Validate a raw value and return its canonical spelling."""

    @staticmethod
    def normalize(kind: str, raw: str) -> str:
        if kind == "token":
            if not _is_token(raw):
                raise ValueError(f"invalid token {raw!r}")
            return raw
        if kind == "lcterm":
            if not raw or not all(c.islower() or c.isdigit() for c in raw):
                raise ValueError(f"term must be lowercase alphanumeric, got {raw!r}")
            return raw
        if kind == "int":
            if not raw.isdigit():
                raise ValueError(f"expected a non-negative integer, got {raw!r}")
            return str(int(raw))
        if kind == "posint":
            if not raw.isdigit() or int(raw) < 1:
                raise ValueError(f"expected a positive integer, got {raw!r}")
            return str(int(raw))
        if kind == "float":
            try:
                value = float(raw)
            except ValueError:
                raise ValueError(f"expected a real number, got {raw!r}") from None
            if not math.isfinite(value):
                raise ValueError(f"expected a finite real number, got {raw!r}")
            return repr(value)
        if kind == "bool":
            if raw not in ("true", "false"):
                raise ValueError(f"expected true or false, got {raw!r}")
            return raw
        if kind.startswith("enum:"):
            allowed = kind[5:].split(",")
            if raw not in allowed:
                raise ValueError(f"expected one of {'/'.join(allowed)}, got {raw!r}")
            return raw
        if kind == "list":
            return _Codec._normalize_items(raw, sort=False, unique=False)
        if kind == "sortedlist":
            return _Codec._normalize_items(raw, sort=True, unique=True)
        if kind == "spaceset":
            if raw == EMPTY:
                return EMPTY
            items = raw.split(",")
            for item in items:
                if item not in _SPACES:
                    raise ValueError(f"unknown space {item!r}")
            if len(set(items)) != len(items):
                raise ValueError("duplicate space in set")
            return ",".join(sorted(items))
        if kind == "code":
            return str(ConceptCode.parse(raw))
        raise AssertionError(f"unknown codec {kind}")

    @staticmethod
    def _normalize_items(raw: str, sort: bool, unique: bool) -> str:
        if raw == EMPTY:
            return EMPTY
        items = raw.split(",")
        for item in items:
            if not _is_token(item):
                raise ValueError(f"invalid list item {item!r}")
        if unique and len(set(items)) != len(items):
            raise ValueError("duplicate list item")
        return ",".join(sorted(items) if sort else items)


def _split_list(value: str | None) -> tuple[str, ...]:
    if value is None or value == EMPTY:
        return ()
    return tuple(value.split(","))


def _join_list(items) -> str | None:
    items = tuple(items)
    return ",".join(items) if items else None


# --- parsing ---------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.issues: list[ParseIssue] = []
        self.records: list[Record] = []
        self.version_lines: list[int] = []
        self.doc_kinds: list[tuple[str, int]] = []

    def fail(self, line: int, column: int, kind: str, message: str) -> None:
        self.issues.append(ParseIssue(line, column, kind, message))

    def parse(self) -> Document:
        for lineno, line in enumerate(self.lines, start=1):
            self._parse_line(lineno, line)
        kind = self._resolve_header()
        if kind is not None:
            self._check_types_allowed(kind)
            self._check_duplicates()
            self._cross_checks(kind)
        if self.issues:
            raise DocumentError(self.issues)
        assert kind is not None
        return Document(kind=kind, records=tuple(self.records))

    def _parse_line(self, lineno: int, line: str) -> None:
        if line == "":
            self.fail(lineno, 1, "syntax", "blank line")
            return
        parts = line.split(" ")
        columns: list[int] = []
        col = 1
        for part in parts:
            columns.append(col)
            col += len(part) + 1
        for part, pcol in zip(parts, columns):
            if part == "":
                self.fail(lineno, pcol, "syntax", "consecutive or trailing spaces")
                return
        rtype = parts[0]
        if rtype == "version":
            if len(parts) != 2 or parts[1] != "1":
                self.fail(lineno, 1, "syntax", "expected `version 1`")
            else:
                self.version_lines.append(lineno)
            return
        if rtype == "doc":
            if len(parts) != 2:
                self.fail(lineno, 1, "syntax", "expected `doc <kind>`")
                return
            try:
                DocKind(parts[1])
            except ValueError:
                self.fail(lineno, columns[1], "syntax", f"unknown document kind {parts[1]!r}")
                return
            self.doc_kinds.append((parts[1], lineno))
            return
        if rtype not in _TYPE_RANK:
            self.fail(lineno, 1, "syntax", f"unknown record type {rtype!r}")
            return
        if len(parts) < 2:
            self.fail(lineno, 1, "syntax", f"{rtype} record is missing its id")
            return
        rid = parts[1]
        raw_fields: dict[str, str] = {}
        ok = True
        for part, pcol in zip(parts[2:], columns[2:]):
            if "=" not in part:
                self.fail(lineno, pcol, "syntax", f"expected key=value, got {part!r}")
                ok = False
                continue
            key, _, value = part.partition("=")
            if key in raw_fields:
                self.fail(lineno, pcol, "syntax", f"duplicate key {key!r}")
                ok = False
                continue
            raw_fields[key] = value
        if not ok:
            return
        record = self._build_record(lineno, rtype, rid, raw_fields)
        if record is not None:
            self.records.append(record)

    def _build_record(
        self, lineno: int, rtype: str, rid: str, raw: dict[str, str]
    ) -> Record | None:
        if rtype in _NUMERIC_ID_TYPES:
            try:
                rid = _Codec.normalize("posint", rid)
            except ValueError:
                self.fail(lineno, 1, "syntax", f"{rtype} id must be a positive integer")
                return None
        elif rtype == "concept":
            try:
                rid = _Codec.normalize("code", rid)
            except Exception as exc:
                self.fail(lineno, 1, "syntax", str(exc))
                return None
        elif rtype == "term":
            try:
                rid = _Codec.normalize("lcterm", rid)
            except ValueError as exc:
                self.fail(lineno, 1, "syntax", str(exc))
                return None
        elif rtype == "relation":
            if rid.count(":") != 1:
                self.fail(lineno, 1, "syntax", "relation id must be termA:termB")
                return None
            a, b = rid.split(":")
            for part in (a, b):
                if not part or not all(c.islower() or c.isdigit() for c in part):
                    self.fail(lineno, 1, "syntax", f"invalid relation term {part!r}")
                    return None
            if not a < b:
                self.fail(
                    lineno, 1, "syntax", "relation terms must be in ascending order"
                )
                return None
        elif not _is_token(rid):
            self.fail(lineno, 1, "syntax", f"invalid id {rid!r}")
            return None

        if rtype == "event":
            return self._build_event(lineno, rid, raw)
        return self._apply_specs(lineno, rtype, rid, raw, _KEYS[rtype])

    def _build_event(self, lineno: int, rid: str, raw: dict[str, str]) -> Record | None:
        kind = raw.pop("kind", None)
        if kind is None:
            self.fail(lineno, 1, "syntax", "event record is missing required key kind")
            return None
        if kind not in _EVENT_KEYS:
            self.fail(lineno, 1, "syntax", f"unknown event kind {kind!r}")
            return None
        record = self._apply_specs(lineno, "event", rid, raw, _EVENT_KEYS[kind])
        if record is None:
            return None
        by_key = dict((("kind", kind),) + record.fields)
        ordered = tuple((k, by_key[k]) for k in _EVENT_KEY_ORDER if k in by_key)
        return Record(rtype="event", rid=rid, fields=ordered, line=lineno)

    def _apply_specs(self, lineno, rtype, rid, raw, specs) -> Record | None:
        listish = ("list", "sortedlist", "spaceset")
        known = {name for name, _, _ in specs}
        ok = True
        for key in raw:
            if key not in known:
                self.fail(lineno, 1, "syntax", f"unknown key {key!r} for {rtype} record")
                ok = False
        emitted: dict[str, str] = {}
        for name, codec, required in specs:
            value = raw.get(name)
            if value is None:
                if required:
                    self.fail(
                        lineno, 1, "syntax",
                        f"{rtype} record is missing required key {name}",
                    )
                    ok = False
                continue
            if value == EMPTY:
                # `-` is the empty list / unset marker; required list keys
                # keep it so the record still carries the key.
                if codec in listish:
                    if required:
                        emitted[name] = EMPTY
                elif required:
                    self.fail(
                        lineno, 1, "syntax",
                        f"{rtype} record requires a value for key {name}",
                    )
                    ok = False
                continue
            try:
                emitted[name] = _Codec.normalize(codec, value)
            except ValueError as exc:
                self.fail(lineno, 1, "syntax", f"bad value for {name}: {exc}")
                ok = False
        if not ok:
            return None
        if rtype == "agent":
            for left, right in _AGENT_PAIRS:
                if (left in emitted) != (right in emitted):
                    self.fail(
                        lineno, 1, "syntax",
                        f"keys {left} and {right} must be set together",
                    )
                    return None
        fields = tuple(
            (name, emitted[name]) for name, _, _ in specs if name in emitted
        )
        return Record(rtype=rtype, rid=rid, fields=fields, line=lineno)

    def _resolve_header(self) -> DocKind | None:
        if len(self.version_lines) != 1:
            line = self.version_lines[1] if len(self.version_lines) > 1 else 1
            self.fail(line, 1, "syntax", "document requires exactly one `version 1` record")
        if len(self.doc_kinds) != 1:
            line = self.doc_kinds[1][1] if len(self.doc_kinds) > 1 else 1
            self.fail(line, 1, "syntax", "document requires exactly one `doc <kind>` record")
            return None
        return DocKind(self.doc_kinds[0][0])

    def _check_types_allowed(self, kind: DocKind) -> None:
        allowed = _ALLOWED_TYPES[kind]
        kept = []
        for record in self.records:
            if record.rtype not in allowed:
                self.fail(
                    record.line, 1, "syntax",
                    f"{record.rtype} records are not allowed in a {kind.value} document",
                )
            else:
                kept.append(record)
        self.records = kept

    def _check_duplicates(self) -> None:
        seen: dict[tuple[str, str], int] = {}
        kept = []
        for record in self.records:
            key = (record.rtype, record.rid)
            if key in seen:
                self.fail(
                    record.line, 1, "duplicate-id",
                    f"duplicate {record.rtype} id {record.rid}",
                )
            else:
                seen[key] = record.line
                kept.append(record)
        self.records = kept

    def _cross_checks(self, kind: DocKind) -> None:
        if kind is DocKind.SCENARIO:
            self._check_scenario()
        elif kind is DocKind.CONCEPTGRAPH:
            self._check_conceptgraph()
        elif kind is DocKind.CANDIDATE:
            self._check_candidate()

    def _check_scenario(self) -> None:
        worlds = [r for r in self.records if r.rtype == "world"]
        if len(worlds) != 1:
            line = worlds[1].line if len(worlds) > 1 else 1
            self.fail(line, 1, "syntax", "scenario requires exactly one world record")
            return
        world_id = worlds[0].rid
        agent_ids = {r.rid for r in self.records if r.rtype == "agent"}
        policy_ids = {r.rid for r in self.records if r.rtype == "policy"}

        def dangle(record: Record, what: str, value: str) -> None:
            self.fail(
                record.line, 1, "dangling-reference",
                f"{what} {value} is not declared in this document",
            )

        for record in self.records:
            if record.rtype == "agent":
                space = record.get("space")
                if space is not None and space != world_id:
                    dangle(record, "world", space)
            elif record.rtype == "policy":
                if record.get("world") != world_id:
                    dangle(record, "world", record.get("world") or EMPTY)
            elif record.rtype == "event":
                ekind = record.get("kind")
                if ekind == "existence" and record.get("agent") not in agent_ids:
                    dangle(record, "agent", record.get("agent") or EMPTY)
                elif ekind == "policy" and record.get("policy") not in policy_ids:
                    dangle(record, "policy", record.get("policy") or EMPTY)
                elif ekind in ("attack", "defend"):
                    if record.get("initiator") not in agent_ids:
                        dangle(record, "agent", record.get("initiator") or EMPTY)
                    if record.get("target") not in policy_ids:
                        dangle(record, "policy", record.get("target") or EMPTY)

    def _check_conceptgraph(self) -> None:
        codes = {r.rid for r in self.records if r.rtype == "concept"}
        for record in self.records:
            if record.rtype != "concept":
                continue
            parent = record.get("parent")
            if parent is not None and parent not in codes:
                self.fail(
                    record.line, 1, "dangling-reference",
                    f"parent {parent} is not declared in this document",
                )

    def _check_candidate(self) -> None:
        terms = {r.rid for r in self.records if r.rtype == "term"}
        for record in self.records:
            if record.rtype == "term":
                freq = int(record.get("freq") or 0)
                docs = int(record.get("docs") or 0)
                if freq < docs:
                    self.fail(
                        record.line, 1, "syntax",
                        "term frequency must be at least its document count",
                    )
                parent = record.get("parent")
                if parent is not None and parent not in terms:
                    self.fail(
                        record.line, 1, "dangling-reference",
                        f"parent term {parent} is not declared in this document",
                    )
            elif record.rtype == "relation":
                a, b = record.rid.split(":")
                for term in (a, b):
                    if term not in terms:
                        self.fail(
                            record.line, 1, "dangling-reference",
                            f"relation term {term} is not declared in this document",
                        )


def parse_document(text: str) -> Document:
    """Parse text into a canonical Document or raise DocumentError.

    All issues are collected before raising, so one bad line does not
    suppress reports about the others.
    """
    return _Parser(text).parse()


def serialize_document(doc: Document) -> str:
    """Emit canonical text for a document. Stable under parse∘serialize."""
    lines = ["version 1", f"doc {doc.kind.value}"]
    for record in doc.records:
        parts = [record.rtype, record.rid]
        parts.extend(f"{k}={v}" for k, v in record.fields)
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


# --- typed views -----------------------------------------------------------


@dataclass(frozen=True)
class Scenario:
    world: CyberWorld
    events: tuple[RelationshipEvent, ...]


def scenario_from_document(doc: Document) -> Scenario:
    if doc.kind is not DocKind.SCENARIO:
        raise ValueError(f"expected a scenario document, got {doc.kind.value}")
    world_record = doc.of_type("world")[0]
    agents: dict[str, Agent] = {}
    for record in doc.of_type("agent"):
        agents[record.rid] = _agent_from_record(record)
    policies = tuple(
        Policy(
            id=record.rid,
            world=record.get("world") or "",
            predicate=record.get("predicate") or "",
            args=_split_list(record.get("args")),
        )
        for record in doc.of_type("policy")
    )
    spaces_value = world_record.get("spaces") or EMPTY
    world = CyberWorld(
        id=world_record.rid,
        spaces=frozenset(Space(s) for s in _split_list(spaces_value)),
        agents=agents,
        policies=policies,
    )
    events = tuple(_event_from_record(r) for r in doc.of_type("event"))
    return Scenario(world=world, events=events)


def _agent_from_record(record: Record) -> Agent:
    get = record.get
    locality = None
    if get("time") is not None:
        locality = Locality(time=int(get("time")), space=get("space") or "")
    security = None
    if get("logic") is not None:
        security = SecuritySpectrum(
            logic=float(get("logic")), uncertainty=float(get("uncertainty"))
        )
    intelligence = None
    if get("quality") is not None:
        intelligence = Intelligence(
            quality=IntelligenceQuality(get("quality")),
            composition=IntelligenceComposition(get("composition")),
        )
    return Agent(
        id=record.rid,
        kind=AgentKind(get("kind")),
        grouping=Grouping(get("grouping")),
        physical=PhysicalAttributes(
            matter=Matter(get("matter")) if get("matter") else None,
            visibility=Visibility(get("visibility")) if get("visibility") else None,
            hardware=_split_list(get("hardware")),
            software=_split_list(get("software")),
            locality=locality,
        ),
        abstract=AbstractAttributes(
            security=security,
            intelligence=intelligence,
            autonomy=get("autonomy") == "true",
        ),
    )


def _event_from_record(record: Record) -> RelationshipEvent:
    seq = int(record.rid)
    kind = record.get("kind")
    if kind == "existence":
        return PassiveExistence(seq=seq, agent=record.get("agent") or "")
    if kind == "policy":
        return PassivePolicy(seq=seq, policy=record.get("policy") or "")
    intent = Intent(record.get("intent")) if record.get("intent") else None
    if kind == "attack":
        return Attack(
            seq=seq,
            initiator=record.get("initiator"),
            intent=intent,
            target=record.get("target"),
        )
    return Defend(
        seq=seq,
        initiator=record.get("initiator"),
        target=record.get("target"),
        intent=intent,
    )


def scenario_document(world: CyberWorld, events=()) -> Document:
    records = [Record("world", world.id, (("spaces", _spaces_value(world)),))]
    for agent_id in sorted(world.agents):
        records.append(_agent_record(world.agents[agent_id]))
    for policy in world.policies:
        fields = [("world", policy.world), ("predicate", policy.predicate)]
        if policy.args:
            fields.append(("args", ",".join(policy.args)))
        records.append(Record("policy", policy.id, tuple(fields)))
    for event in events:
        records.append(_event_record(event))
    return Document(kind=DocKind.SCENARIO, records=tuple(records))


def _spaces_value(world: CyberWorld) -> str:
    names = sorted(s.value for s in world.spaces)
    return ",".join(names) if names else EMPTY


def _agent_record(agent: Agent) -> Record:
    fields: list[tuple[str, str]] = [
        ("kind", agent.kind.value),
        ("grouping", agent.grouping.value),
    ]
    phys = agent.physical
    if phys.matter is not None:
        fields.append(("matter", phys.matter.value))
    if phys.visibility is not None:
        fields.append(("visibility", phys.visibility.value))
    if phys.hardware:
        fields.append(("hardware", ",".join(phys.hardware)))
    if phys.software:
        fields.append(("software", ",".join(phys.software)))
    if phys.locality is not None:
        fields.append(("time", str(phys.locality.time)))
        fields.append(("space", phys.locality.space))
    abstract = agent.abstract
    if abstract.security is not None:
        fields.append(("logic", repr(float(abstract.security.logic))))
        fields.append(("uncertainty", repr(float(abstract.security.uncertainty))))
    if abstract.intelligence is not None:
        fields.append(("quality", abstract.intelligence.quality.value))
        fields.append(("composition", abstract.intelligence.composition.value))
    fields.append(("autonomy", "true" if abstract.autonomy else "false"))
    return Record("agent", agent.id, tuple(fields))


def _event_record(event: RelationshipEvent) -> Record:
    if isinstance(event, PassiveExistence):
        fields = (("kind", "existence"), ("agent", event.agent))
    elif isinstance(event, PassivePolicy):
        fields = (("kind", "policy"), ("policy", event.policy))
    elif isinstance(event, Attack):
        pairs = [("kind", "attack"), ("initiator", event.initiator or EMPTY)]
        if event.intent is not None:
            pairs.append(("intent", event.intent.value))
        pairs.append(("target", event.target or EMPTY))
        fields = tuple(pairs)
    elif isinstance(event, Defend):
        pairs = [("kind", "defend"), ("initiator", event.initiator or EMPTY)]
        if event.intent is not None:
            pairs.append(("intent", event.intent.value))
        pairs.append(("target", event.target or EMPTY))
        fields = tuple(pairs)
    else:
        raise TypeError(f"unsupported event type {type(event).__name__}")
    return Record("event", str(event.seq), fields)


def graph_document(graph: ConceptGraph) -> Document:
    records = []
    for concept in graph.iter_concepts():
        fields: list[tuple[str, str]] = [("descriptor", concept.descriptor)]
        if concept.parent is not None:
            fields.append(("parent", str(concept.parent)))
        records.append(Record("concept", str(concept.code), tuple(fields)))
    return Document(kind=DocKind.CONCEPTGRAPH, records=tuple(records))


def graph_from_document(doc: Document) -> ConceptGraph:
    if doc.kind is not DocKind.CONCEPTGRAPH:
        raise ValueError(f"expected a conceptgraph document, got {doc.kind.value}")
    triples = [
        (record.rid, record.get("descriptor") or "", record.get("parent"))
        for record in doc.of_type("concept")
    ]
    return build_graph(triples)


def trace_document(trace: Trace) -> Document:
    records = [_event_record(event) for event in trace.events]
    for event, state in zip(trace.events, trace.states):
        fields: list[tuple[str, str]] = [
            ("phase", state.phase.value),
            ("k", str(state.world.k)),
            ("equilibrium", "true" if state.equilibrium else "false"),
        ]
        if state.pending_attack is not None:
            fields.append(("pending", str(state.pending_attack.seq)))
        if state.violated_policies:
            fields.append(("violated", ",".join(sorted(state.violated_policies))))
        records.append(Record("state", str(event.seq), tuple(fields)))
    if trace.error is not None:
        records.append(
            Record("error", str(max(trace.error.seq, 1)), (("kind", trace.error.kind),))
        )
    return Document(kind=DocKind.TRACE, records=tuple(records))
