"""Turn annotated sentences into graph-ready extractions."""

from __future__ import annotations

import logging

from ..errors import RejectedNoEvent
from ..kg.model import ApiExtraction, FunctionalRelationKind
from . import postag
from .annotate import (
    ROLE_DIRECT_OBJECT,
    ROLE_DIRECT_OBJECT_MODIFIER,
    ROLE_PREPOSITION,
    ROLE_PREPOSITION_OBJECT,
    ROLE_PREPOSITION_OBJECT_MODIFIER,
    ROLE_VERB,
    AnnotatedSentence,
    Span,
)

log = logging.getLogger(__name__)

_CONSTRAINT_KIND = {
    "ARGM-LOC": FunctionalRelationKind.HAS_LOCATION,
    "ARGM-DIR": FunctionalRelationKind.HAS_DIRECTION,
    "ARGM-MNR": FunctionalRelationKind.HAS_MANNER,
    "ARGM-EXT": FunctionalRelationKind.HAS_EXTENT,
    "ARGM-TMP": FunctionalRelationKind.HAS_TEMPORAL,
    "ARGM-GOL": FunctionalRelationKind.HAS_GOAL,
    "ARGM-PRP": FunctionalRelationKind.HAS_PURPOSE,
    "ARGM-PRD": FunctionalRelationKind.HAS_RESULT,
    "ARGM-ADV": FunctionalRelationKind.HAS_CONDITION,
}

_STATUS_POS = (postag.ADJ, postag.VERB, postag.NUM, postag.ADV)


def _lemma(surface: str) -> str:
    stem = postag.verb_stem(surface)
    if stem is None:
        stem = postag._participle_stem(surface)
    return stem if stem is not None else surface.lower()


def extract(fqn: str, annotated: AnnotatedSentence) -> ApiExtraction:
    """Build the extraction for one API from its annotated description.

    Raises RejectedNoEvent when no verb+object event phrase can be formed;
    such APIs are dropped from the graph by the build pipeline.
    """
    verb_span = next((s for s in annotated.functional_spans if s.role == ROLE_VERB), None)
    if verb_span is None:
        raise RejectedNoEvent("no verb span for %s" % fqn)
    verb = _lemma(annotated.span_text(verb_span))

    do_spans = [s for s in annotated.functional_spans if s.role == ROLE_DIRECT_OBJECT]
    po_spans = [s for s in annotated.functional_spans if s.role == ROLE_PREPOSITION_OBJECT]
    direct_objects = _unique(annotated.span_text(s).lower() for s in do_spans)
    preposition_objects = _unique(annotated.span_text(s).lower() for s in po_spans)

    preposition = annotated.preposition
    event_po = annotated.preposition_object
    parts = [verb]
    if direct_objects:
        parts.append(direct_objects[0])
    if preposition is not None and event_po is not None:
        parts += [preposition.lower(), event_po.lower()]
    if len(parts) == 1:
        raise RejectedNoEvent("no direct or preposition object for %s" % fqn)
    event = " ".join(parts)

    object_constraints = _object_constraints(annotated, do_spans, po_spans)
    event_constraints = _unique(
        (_CONSTRAINT_KIND[role], text.lower())
        for role, text in annotated.constraint_texts()
        if role in _CONSTRAINT_KIND
    )
    return ApiExtraction(
        verb=verb,
        event=event,
        direct_objects=direct_objects,
        preposition_objects=preposition_objects,
        object_constraints=object_constraints,
        event_constraints=event_constraints,
    )


def _object_constraints(
    annotated: AnnotatedSentence,
    do_spans: list[Span],
    po_spans: list[Span],
) -> list[tuple[str, FunctionalRelationKind, str]]:
    constraints = []
    for span in annotated.functional_spans:
        if span.role == ROLE_DIRECT_OBJECT_MODIFIER:
            heads = do_spans
        elif span.role == ROLE_PREPOSITION_OBJECT_MODIFIER:
            heads = po_spans
        else:
            continue
        target = next((h for h in heads if h.start >= span.end), None)
        if target is None:
            log.debug("modifier %r has no following head", annotated.span_text(span))
            continue
        token = annotated.tokens[span.start]
        if token.pos in _STATUS_POS:
            kind = FunctionalRelationKind.HAS_STATUS
        else:
            kind = FunctionalRelationKind.HAS_TYPE
        constraints.append(
            (annotated.span_text(target).lower(), kind, token.surface.lower())
        )
    return _unique(constraints)


def _unique(items) -> list:
    seen = set()
    out = []
    for item in items:
        if item not in seen:
            seen.add(item)
            out.append(item)
    return out
