"""Synthetic query generation from the graph's own syntactic roles."""

from __future__ import annotations

from dataclasses import dataclass

from ..kg.model import FunctionalRelationKind, KnowledgeGraph

V_DO = "V-DO"
V_PO = "V-PO"
V_DO_PO = "V-DO-PO"
KINDS = (V_DO, V_PO, V_DO_PO)


@dataclass(frozen=True, slots=True)
class SyntheticQuery:
    kind: str
    text: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "text": self.text}


def _event_roles(graph: KnowledgeGraph, api_id: int):
    """(verb, do, prep+po) per event, recovered from the event label.

    The label is "verb [do] [prep po]"; the direct-object relation tells
    us where the do part ends, which disambiguates the split.
    """
    events: dict[int, list[str]] = {}
    for rel in graph.function_property(api_id, include_api_has_event=False):
        if rel.kind is FunctionalRelationKind.ACT_HAS_EVENT:
            events.setdefault(rel.object_id, [])
    for rel in graph.function_property(api_id, include_api_has_event=False):
        if rel.kind is FunctionalRelationKind.HAS_DIRECT_OBJECT and (
            rel.subject_id in events
        ):
            events[rel.subject_id].append(graph.entity(rel.object_id).label)
    for event_id, do_labels in events.items():
        label = graph.entity(event_id).label
        tokens = label.split()
        verb = tokens[0]
        do = None
        rest = tokens[1:]
        for candidate in do_labels:
            head = f"{verb} {candidate}"
            if label == head or label.startswith(head + " "):
                do = candidate
                rest = label[len(head) :].split()
                break
        yield verb, do, rest


def generate_synthetic_queries(
    graph: KnowledgeGraph, kind: str
) -> list[SyntheticQuery]:
    """Build every distinct query of one shape the graph can support.

    V-DO pairs a verb with its direct object, V-PO a verb with its
    preposition phrase, and V-DO-PO needs all roles (the whole event).
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    seen: set[str] = set()
    queries: list[SyntheticQuery] = []
    for api_id in graph.api_ids():
        for verb, do, prep_po in _event_roles(graph, api_id):
            if kind == V_DO:
                text = f"{verb} {do}" if do else None
            elif kind == V_PO:
                text = " ".join([verb, *prep_po]) if prep_po else None
            else:
                text = " ".join([verb, do, *prep_po]) if do and prep_po else None
            if text and text not in seen:
                seen.add(text)
                queries.append(SyntheticQuery(kind, text))
    return queries
