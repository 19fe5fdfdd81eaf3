"""Disk format for the knowledge graph.

A graph directory holds four UTF-8 line-delimited JSON files:

- ``entities.jsonl``            {"id", "kind", "label"}
- ``function_properties.jsonl`` {"api_id", "subject_id", "kind", "object_id"}
- ``semantic_relations.jsonl``  {"left_fqn", "kind", "right_fqn"}
- ``descriptions.jsonl``        {"api_id", "text"}

Loading validates structure and referential integrity and reports the
file and line of the first problem.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Iterator

from apidialog.errors import FormatError
from apidialog.kg.model import (
    Entity,
    EntityKind,
    FunctionalRelation,
    FunctionalRelationKind,
    KnowledgeGraph,
    SemanticRelationKind,
)

log = logging.getLogger(__name__)

ENTITIES_FILE = "entities.jsonl"
FUNCTION_FILE = "function_properties.jsonl"
SEMANTIC_FILE = "semantic_relations.jsonl"
DESCRIPTIONS_FILE = "descriptions.jsonl"


def store_graph(graph: KnowledgeGraph, directory: str | Path) -> Path:
    """Write ``graph`` to ``directory``, creating it if needed."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    with (directory / ENTITIES_FILE).open("w", encoding="utf-8") as fh:
        for entity in sorted(graph.entities(), key=lambda e: e.id):
            _write_record(fh, {"id": entity.id, "kind": entity.kind.value, "label": entity.label})

    with (directory / FUNCTION_FILE).open("w", encoding="utf-8") as fh:
        for api_id in graph.api_ids():
            for rel in graph.function_property(api_id):
                _write_record(
                    fh,
                    {
                        "api_id": api_id,
                        "subject_id": rel.subject_id,
                        "kind": rel.kind.value,
                        "object_id": rel.object_id,
                    },
                )

    with (directory / SEMANTIC_FILE).open("w", encoding="utf-8") as fh:
        for rel in graph.semantic_relations():
            _write_record(
                fh,
                {
                    "left_fqn": graph.api_fqn(rel.left_id),
                    "kind": rel.kind.value,
                    "right_fqn": graph.api_fqn(rel.right_id),
                },
            )

    with (directory / DESCRIPTIONS_FILE).open("w", encoding="utf-8") as fh:
        for api_id in graph.api_ids():
            _write_record(fh, {"api_id": api_id, "text": graph.description(api_id)})

    return directory


def load_graph(directory: str | Path) -> KnowledgeGraph:
    """Read a graph directory back into memory.

    Entity ids may be remapped; everything reachable through labels and
    fqns is preserved structurally.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise FormatError("graph directory does not exist", path=str(directory))

    entities: dict[int, Entity] = {}
    path = directory / ENTITIES_FILE
    for line_no, record in _read_records(path):
        try:
            kind = EntityKind(record["kind"])
            entity = Entity(int(record["id"]), kind, str(record["label"]))
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad entity record: {exc}", path=str(path), line=line_no)
        if entity.id in entities:
            raise FormatError(f"duplicate entity id {entity.id}", path=str(path), line=line_no)
        entities[entity.id] = entity

    descriptions: dict[int, str] = {}
    path = directory / DESCRIPTIONS_FILE
    for line_no, record in _read_records(path):
        try:
            descriptions[int(record["api_id"])] = str(record["text"])
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad description record: {exc}", path=str(path), line=line_no)

    function: dict[int, list[tuple[int, FunctionalRelationKind, int]]] = {}
    path = directory / FUNCTION_FILE
    for line_no, record in _read_records(path):
        try:
            api_id = int(record["api_id"])
            subject_id = int(record["subject_id"])
            kind = FunctionalRelationKind(record["kind"])
            object_id = int(record["object_id"])
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad functional relation: {exc}", path=str(path), line=line_no)
        for endpoint in (api_id, subject_id, object_id):
            if endpoint not in entities:
                raise FormatError(
                    f"relation references unknown entity {endpoint}",
                    path=str(path),
                    line=line_no,
                )
        function.setdefault(api_id, []).append((subject_id, kind, object_id))

    graph = KnowledgeGraph()
    id_map: dict[int, int] = {}
    for old_id, entity in sorted(entities.items()):
        id_map[old_id] = graph.intern_entity(entity.kind, entity.label)

    for api_id in sorted(function):
        entity = entities[api_id]
        if entity.kind is not EntityKind.API:
            raise FormatError(
                f"FUNCTION property attached to non-Api entity {api_id}",
                path=str(directory / FUNCTION_FILE),
            )
        if api_id not in descriptions:
            raise FormatError(
                f"API {api_id} ({entity.label}) has no description",
                path=str(directory / DESCRIPTIONS_FILE),
            )
        relations = [
            FunctionalRelation(id_map[s], kind, id_map[o]) for s, kind, o in function[api_id]
        ]
        graph.add_api_raw(entity.label, descriptions[api_id], relations)

    path = directory / SEMANTIC_FILE
    for line_no, record in _read_records(path):
        try:
            kind = SemanticRelationKind.parse(str(record["kind"]))
            left = str(record["left_fqn"])
            right = str(record["right_fqn"])
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad semantic relation: {exc}", path=str(path), line=line_no)
        try:
            graph.add_semantic_relation(left, kind, right)
        except Exception as exc:
            raise FormatError(str(exc), path=str(path), line=line_no)

    log.info("loaded graph from %s: %s", directory, graph.stats())
    return graph


def _write_record(fh, record: dict[str, Any]) -> None:
    fh.write(json.dumps(record, ensure_ascii=False) + "\n")


def _read_records(path: Path) -> Iterator[tuple[int, dict[str, Any]]]:
    if not path.is_file():
        raise FormatError("missing graph file", path=str(path))
    with path.open("r", encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"invalid JSON: {exc.msg}", path=str(path), line=line_no)
            if not isinstance(record, dict):
                raise FormatError("record is not an object", path=str(path), line=line_no)
            yield line_no, record
