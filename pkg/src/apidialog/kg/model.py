"""Entity and relation model for the API behavior knowledge graph.

Six entity kinds describe what an API does (the API itself, the
action/event it performs, the objects it acts on and the constraints on
those), fifteen functional relation kinds connect them, and seven
semantic relation kinds connect APIs to each other.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from apidialog.errors import (
    DuplicateConflict,
    RejectedNoEvent,
    UnknownApi,
    UnknownEndpoint,
)

log = logging.getLogger(__name__)


class EntityKind(str, Enum):
    API = "Api"
    EVENT = "Event"
    ACTION = "Action"
    OBJECT = "Object"
    OBJECT_CONSTRAINT = "ObjectConstraint"
    EVENT_CONSTRAINT = "EventConstraint"


class FunctionalRelationKind(str, Enum):
    """Relations stored in an API's FUNCTION property.

    ``API_HAS_EVENT`` links the Api entity to its Event and is excluded
    from clarification subgraphs; the rest describe the behavior itself.
    """

    API_HAS_EVENT = "ApiHasEvent"
    ACT_HAS_EVENT = "ActHasEvent"
    HAS_DIRECT_OBJECT = "HasDirectObject"
    HAS_PREPOSITION_OBJECT = "HasPrepositionObject"
    HAS_STATUS = "HasStatus"
    HAS_TYPE = "HasType"
    HAS_LOCATION = "HasLocation"
    HAS_DIRECTION = "HasDirection"
    HAS_MANNER = "HasManner"
    HAS_EXTENT = "HasExtent"
    HAS_TEMPORAL = "HasTemporal"
    HAS_GOAL = "HasGoal"
    HAS_PURPOSE = "HasPurpose"
    HAS_RESULT = "HasResult"
    HAS_CONDITION = "HasCondition"

    @property
    def display(self) -> str:
        """Human-readable name used in table column headers."""
        return _FUNCTIONAL_DISPLAY[self]

    @property
    def subject_kind(self) -> EntityKind:
        return _FUNCTIONAL_SIGNATURE[self][0]

    @property
    def object_kind(self) -> EntityKind:
        return _FUNCTIONAL_SIGNATURE[self][1]


_FUNCTIONAL_DISPLAY = {
    FunctionalRelationKind.API_HAS_EVENT: "Has Event",
    FunctionalRelationKind.ACT_HAS_EVENT: "Has Event",
    FunctionalRelationKind.HAS_DIRECT_OBJECT: "Has Direct Object",
    FunctionalRelationKind.HAS_PREPOSITION_OBJECT: "Has Preposition Object",
    FunctionalRelationKind.HAS_STATUS: "Has Status",
    FunctionalRelationKind.HAS_TYPE: "Has Type",
    FunctionalRelationKind.HAS_LOCATION: "Has Location",
    FunctionalRelationKind.HAS_DIRECTION: "Has Direction",
    FunctionalRelationKind.HAS_MANNER: "Has Manner",
    FunctionalRelationKind.HAS_EXTENT: "Has Extent",
    FunctionalRelationKind.HAS_TEMPORAL: "Has Temporal",
    FunctionalRelationKind.HAS_GOAL: "Has Goal",
    FunctionalRelationKind.HAS_PURPOSE: "Has Purpose",
    FunctionalRelationKind.HAS_RESULT: "Has Result",
    FunctionalRelationKind.HAS_CONDITION: "Has Condition",
}

_FUNCTIONAL_SIGNATURE = {
    FunctionalRelationKind.API_HAS_EVENT: (EntityKind.API, EntityKind.EVENT),
    FunctionalRelationKind.ACT_HAS_EVENT: (EntityKind.ACTION, EntityKind.EVENT),
    FunctionalRelationKind.HAS_DIRECT_OBJECT: (EntityKind.EVENT, EntityKind.OBJECT),
    FunctionalRelationKind.HAS_PREPOSITION_OBJECT: (EntityKind.EVENT, EntityKind.OBJECT),
    FunctionalRelationKind.HAS_STATUS: (EntityKind.OBJECT, EntityKind.OBJECT_CONSTRAINT),
    FunctionalRelationKind.HAS_TYPE: (EntityKind.OBJECT, EntityKind.OBJECT_CONSTRAINT),
    FunctionalRelationKind.HAS_LOCATION: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
    FunctionalRelationKind.HAS_DIRECTION: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
    FunctionalRelationKind.HAS_MANNER: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
    FunctionalRelationKind.HAS_EXTENT: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
    FunctionalRelationKind.HAS_TEMPORAL: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
    FunctionalRelationKind.HAS_GOAL: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
    FunctionalRelationKind.HAS_PURPOSE: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
    FunctionalRelationKind.HAS_RESULT: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
    FunctionalRelationKind.HAS_CONDITION: (EntityKind.EVENT, EntityKind.EVENT_CONSTRAINT),
}

#: Relation kinds whose objects are clarification-question material.
EVENT_CONSTRAINT_KINDS = tuple(
    k for k, (_, obj) in _FUNCTIONAL_SIGNATURE.items() if obj is EntityKind.EVENT_CONSTRAINT
)
OBJECT_CONSTRAINT_KINDS = (
    FunctionalRelationKind.HAS_STATUS,
    FunctionalRelationKind.HAS_TYPE,
)


class SemanticRelationKind(str, Enum):
    """API-to-API relations; stored directed, queried undirected."""

    FUNCTION_SIMILARITY = "Function Similarity"
    FUNCTION_OPPOSITE = "Function Opposite"
    FUNCTION_REPLACE = "Function Replace"
    FUNCTION_COLLABORATION = "Function Collaboration"
    LOGIC_CONSTRAINT = "Logic Constraint"
    BEHAVIOR_DIFFERENCE = "Behavior Difference"
    EFFICIENCY_COMPARISON = "Efficiency Comparison"

    @classmethod
    def parse(cls, text: str) -> "SemanticRelationKind":
        """Accept both the spaced wire name and the compact enum name."""
        squashed = text.replace(" ", "").replace("_", "").lower()
        for kind in cls:
            if kind.value.replace(" ", "").lower() == squashed:
                return kind
        raise ValueError(f"unknown semantic relation kind: {text!r}")


@dataclass(frozen=True, slots=True)
class Entity:
    id: int
    kind: EntityKind
    label: str


@dataclass(frozen=True, slots=True)
class FunctionalRelation:
    subject_id: int
    kind: FunctionalRelationKind
    object_id: int


@dataclass(frozen=True, slots=True)
class SemanticRelation:
    left_id: int
    kind: SemanticRelationKind
    right_id: int


@dataclass
class ApiExtraction:
    """What document ingestion derived from one API description.

    Labels are lowercase, whitespace-normalized phrases. ``event`` is the
    assembled verb + object (+ preposition + object) statement; the
    constraint maps key relation kind onto the constraint labels.
    """

    verb: str
    event: str
    direct_objects: list[str] = field(default_factory=list)
    preposition_objects: list[str] = field(default_factory=list)
    object_constraints: list[tuple[str, FunctionalRelationKind, str]] = field(default_factory=list)
    event_constraints: list[tuple[FunctionalRelationKind, str]] = field(default_factory=list)


class KnowledgeGraph:
    """In-memory store for entities, FUNCTION properties and semantic links.

    Entities are deduplicated by (kind, label): two APIs returning the
    same event share one Event entity, mirroring how shared behavior is
    grouped during clarification.
    """

    def __init__(self) -> None:
        self._entities: dict[int, Entity] = {}
        self._ids_by_key: dict[tuple[EntityKind, str], int] = {}
        self._function: dict[int, list[FunctionalRelation]] = {}
        self._descriptions: dict[int, str] = {}
        self._semantic: list[SemanticRelation] = []
        self._semantic_seen: set[tuple[int, SemanticRelationKind, int]] = set()
        self._next_id = 1

    # ------------------------------------------------------------------
    # entities

    def intern_entity(self, kind: EntityKind, label: str) -> int:
        """Return the id for (kind, label), creating the entity if new."""
        key = (kind, label.casefold())
        existing = self._ids_by_key.get(key)
        if existing is not None:
            return existing
        entity = Entity(self._next_id, kind, label)
        self._entities[entity.id] = entity
        self._ids_by_key[key] = entity.id
        self._next_id += 1
        return entity.id

    def entity(self, entity_id: int) -> Entity:
        try:
            return self._entities[entity_id]
        except KeyError:
            raise UnknownEndpoint(f"no entity with id {entity_id}") from None

    def find_entity(self, kind: EntityKind, label: str) -> int | None:
        return self._ids_by_key.get((kind, label.casefold()))

    def entities(self, kind: EntityKind | None = None) -> Iterator[Entity]:
        for entity in self._entities.values():
            if kind is None or entity.kind is kind:
                yield entity

    # ------------------------------------------------------------------
    # APIs and their FUNCTION property

    def add_api(self, fqn: str, description: str, extraction: ApiExtraction) -> int:
        """Register an API with the relations extracted from its description.

        Re-adding the same (fqn, description) is a no-op returning the
        existing id; the same fqn with a different description raises
        DuplicateConflict.
        """
        existing = self.find_entity(EntityKind.API, fqn)
        if existing is not None:
            if self._descriptions.get(existing) == description:
                return existing
            raise DuplicateConflict(f"{fqn} already registered with a different description")

        api_id = self.intern_entity(EntityKind.API, fqn)
        self._descriptions[api_id] = description

        event_id = self.intern_entity(EntityKind.EVENT, extraction.event)
        action_id = self.intern_entity(EntityKind.ACTION, extraction.verb)
        relations = [
            FunctionalRelation(api_id, FunctionalRelationKind.API_HAS_EVENT, event_id),
            FunctionalRelation(action_id, FunctionalRelationKind.ACT_HAS_EVENT, event_id),
        ]
        for label in extraction.direct_objects:
            obj = self.intern_entity(EntityKind.OBJECT, label)
            relations.append(
                FunctionalRelation(event_id, FunctionalRelationKind.HAS_DIRECT_OBJECT, obj)
            )
        for label in extraction.preposition_objects:
            obj = self.intern_entity(EntityKind.OBJECT, label)
            relations.append(
                FunctionalRelation(event_id, FunctionalRelationKind.HAS_PREPOSITION_OBJECT, obj)
            )
        for object_label, kind, constraint in extraction.object_constraints:
            obj = self.intern_entity(EntityKind.OBJECT, object_label)
            con = self.intern_entity(EntityKind.OBJECT_CONSTRAINT, constraint)
            relations.append(FunctionalRelation(obj, kind, con))
        for kind, constraint in extraction.event_constraints:
            con = self.intern_entity(EntityKind.EVENT_CONSTRAINT, constraint)
            relations.append(FunctionalRelation(event_id, kind, con))

        deduped: list[FunctionalRelation] = []
        seen: set[FunctionalRelation] = set()
        for rel in relations:
            if rel not in seen:
                seen.add(rel)
                deduped.append(rel)
        self._function[api_id] = deduped
        return api_id

    def add_api_raw(
        self,
        fqn: str,
        description: str,
        relations: Iterable[FunctionalRelation],
    ) -> int:
        """Low-level registration from pre-built relations (graph loading)."""
        relations = list(relations)
        if not any(r.kind is FunctionalRelationKind.API_HAS_EVENT for r in relations):
            raise RejectedNoEvent(f"{fqn}: relations carry no ApiHasEvent link")
        api_id = self.intern_entity(EntityKind.API, fqn)
        self._descriptions[api_id] = description
        self._function.setdefault(api_id, []).extend(relations)
        return api_id

    def api_ids(self) -> list[int]:
        return sorted(self._function.keys())

    def api_fqns(self) -> list[str]:
        return [self.entity(i).label for i in self.api_ids()]

    def api_fqn(self, api_id: int) -> str:
        try:
            entity = self.entity(api_id)
        except UnknownEndpoint:
            raise UnknownApi(f"no API entity with id {api_id}") from None
        if entity.kind is not EntityKind.API:
            raise UnknownApi(f"entity {api_id} is {entity.kind.value}, not Api")
        return entity.label

    def api_by_fqn(self, fqn: str) -> int:
        api_id = self.find_entity(EntityKind.API, fqn)
        if api_id is None:
            raise UnknownApi(f"no API named {fqn}")
        return api_id

    def description(self, api_id: int) -> str:
        try:
            return self._descriptions[api_id]
        except KeyError:
            raise UnknownApi(f"no description for entity {api_id}") from None

    def function_property(
        self, api_id: int, *, include_api_has_event: bool = True
    ) -> list[FunctionalRelation]:
        try:
            relations = self._function[api_id]
        except KeyError:
            raise UnknownApi(f"entity {api_id} has no FUNCTION property") from None
        if include_api_has_event:
            return list(relations)
        return [r for r in relations if r.kind is not FunctionalRelationKind.API_HAS_EVENT]

    def event_of(self, api_id: int) -> Entity:
        for rel in self.function_property(api_id):
            if rel.kind is FunctionalRelationKind.API_HAS_EVENT:
                return self.entity(rel.object_id)
        raise UnknownApi(f"API {api_id} has no event")

    # ------------------------------------------------------------------
    # semantic relations

    def add_semantic_relation(
        self, left_fqn: str, kind: SemanticRelationKind, right_fqn: str
    ) -> bool:
        """Store a directed semantic triple; False if it was already there."""
        left = self.api_by_fqn(left_fqn)
        right = self.api_by_fqn(right_fqn)
        key = (left, kind, right)
        if key in self._semantic_seen:
            return False
        self._semantic_seen.add(key)
        self._semantic.append(SemanticRelation(left, kind, right))
        return True

    def semantic_relations(self) -> list[SemanticRelation]:
        return list(self._semantic)

    def semantic_neighbors(
        self, api_id: int, kinds: set[SemanticRelationKind] | None = None
    ) -> list[tuple[int, SemanticRelationKind]]:
        """All APIs linked to ``api_id`` in either direction.

        Deterministic order: relation kind (declaration order), then the
        neighbor's fqn.
        """
        self.api_fqn(api_id)  # validate
        found: dict[tuple[int, SemanticRelationKind], None] = {}
        for rel in self._semantic:
            if kinds is not None and rel.kind not in kinds:
                continue
            if rel.left_id == api_id:
                found[(rel.right_id, rel.kind)] = None
            elif rel.right_id == api_id:
                found[(rel.left_id, rel.kind)] = None
        kind_rank = {kind: i for i, kind in enumerate(SemanticRelationKind)}
        return sorted(
            found.keys(),
            key=lambda pair: (kind_rank[pair[1]], self.api_fqn(pair[0]).casefold()),
        )

    # ------------------------------------------------------------------

    def stats(self) -> dict[str, int]:
        api_count = len(self._function)
        return {
            "api_entities": api_count,
            "other_entities": len(self._entities) - api_count,
            "functional_relations": sum(len(v) for v in self._function.values()),
            "semantic_relations": len(self._semantic),
        }
