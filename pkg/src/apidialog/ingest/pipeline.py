"""End-to-end build: description pairs + optional annotations + triples -> graph."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ApiDialogError, FormatError
from ..kg.model import KnowledgeGraph, SemanticRelationKind
from .annotate import AnnotatedSentence, annotate
from .extract import extract
from .fqn import FqnDictionary, SimpleNameTriple, resolve_fqn
from .normalize import normalize_description

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class MethodDescriptionPair:
    fqn: str
    description: str

    def __post_init__(self) -> None:
        if "(" not in self.fqn or ")" not in self.fqn:
            raise ValueError("fqn must carry a parameter list: %r" % self.fqn)


@dataclass(slots=True)
class BuildStats:
    api_entities: int = 0
    other_entities: int = 0
    functional_relations: int = 0
    semantic_relations: int = 0
    rejected_pairs: int = 0
    rejected_fqns: list[str] = field(default_factory=list)
    dropped_triples: int = 0

    def to_dict(self) -> dict:
        return {
            "api_entities": self.api_entities,
            "other_entities": self.other_entities,
            "functional_relations": self.functional_relations,
            "semantic_relations": self.semantic_relations,
            "rejected_pairs": self.rejected_pairs,
            "rejected_fqns": list(self.rejected_fqns),
            "dropped_triples": self.dropped_triples,
        }


def build_graph(
    pairs,
    external_annotations: dict[str, AnnotatedSentence] | None = None,
    triples=(),
) -> tuple[KnowledgeGraph, BuildStats]:
    """Run normalize -> annotate -> extract -> assemble over all pairs.

    A bad record is counted and skipped, never fatal to the whole build.
    External annotations, when given for an fqn, replace the built-in
    annotator for that record.
    """
    graph = KnowledgeGraph()
    stats = BuildStats()
    external_annotations = external_annotations or {}
    for pair in pairs:
        fqn, description = pair.fqn, pair.description
        try:
            if fqn in external_annotations:
                annotated = external_annotations[fqn]
            else:
                annotated = annotate(normalize_description(description))
            extraction = extract(fqn, annotated)
            graph.add_api(fqn, description, extraction)
        except ApiDialogError as exc:
            log.info("rejecting %s: %s", fqn, exc)
            stats.rejected_pairs += 1
            stats.rejected_fqns.append(fqn)

    dictionary = FqnDictionary(graph.api_fqns())
    for triple in triples:
        resolved = resolve_fqn(triple, dictionary)
        if not resolved:
            stats.dropped_triples += 1
            continue
        for left_fqn, kind, right_fqn in resolved:
            graph.add_semantic_relation(left_fqn, kind, right_fqn)

    counts = graph.stats()
    stats.api_entities = counts["api_entities"]
    stats.other_entities = counts["other_entities"]
    stats.functional_relations = counts["functional_relations"]
    stats.semantic_relations = counts["semantic_relations"]
    return graph, stats


def _read_jsonl(path: Path):
    with path.open("r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError("invalid JSON: %s" % exc, path=str(path), line=lineno) from exc
            if not isinstance(record, dict):
                raise FormatError("record is not an object", path=str(path), line=lineno)
            yield lineno, record


def read_pairs(path: str | Path) -> list[MethodDescriptionPair]:
    path = Path(path)
    pairs = []
    for lineno, record in _read_jsonl(path):
        try:
            pairs.append(MethodDescriptionPair(fqn=record["fqn"], description=record["description"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError("bad pair record: %s" % exc, path=str(path), line=lineno) from exc
    return pairs


def read_annotations(path: str | Path) -> dict[str, AnnotatedSentence]:
    path = Path(path)
    annotations = {}
    for lineno, record in _read_jsonl(path):
        try:
            annotations[record["fqn"]] = AnnotatedSentence.from_dict(record)
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError("bad annotation record: %s" % exc, path=str(path), line=lineno) from exc
    return annotations


def read_triples(path: str | Path) -> list[SimpleNameTriple]:
    path = Path(path)
    triples = []
    for lineno, record in _read_jsonl(path):
        try:
            triples.append(
                SimpleNameTriple(
                    left=record["left"],
                    kind=SemanticRelationKind.parse(record["kind"]),
                    right=record["right"],
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError("bad triple record: %s" % exc, path=str(path), line=lineno) from exc
    return triples
