"""Natural-language question rendering for tree aspects."""

from __future__ import annotations

from dataclasses import dataclass

from ..kg.model import FunctionalRelationKind
from .table import Column

K = FunctionalRelationKind

#: answer label offered for the null branch
NULL_OPTION_LABEL = "other / not applicable"

#: question templates by relation kind; {object} / {event} take the
#: subject entity label of the column being asked about
_TEMPLATES: dict[FunctionalRelationKind, str] = {
    K.ACT_HAS_EVENT: "What do you want to do?",
    K.HAS_DIRECT_OBJECT: "Which object should {event} act on?",
    K.HAS_PREPOSITION_OBJECT: "Which object should {event} involve?",
    K.HAS_STATUS: "What kind of the {object} do you want?",
    K.HAS_TYPE: "Which type of the {object} do you want?",
    K.HAS_LOCATION: "Where the {event} will be done?",
    K.HAS_DIRECTION: "Where is the direction of {event}?",
    K.HAS_MANNER: "How would you prefer to {event}?",
    K.HAS_EXTENT: "How far would you want to {event}?",
    K.HAS_TEMPORAL: "When do you have to {event}?",
    K.HAS_GOAL: "Which object do you want to serve by {event}?",
    K.HAS_PURPOSE: "Which purpose do you want to satisfy by {event}?",
    K.HAS_RESULT: "What is the form of the results of {event}?",
    K.HAS_CONDITION: "Under which condition can {event}?",
}


@dataclass(frozen=True, slots=True)
class Option:
    id: str
    label: str
    api_count: int

    def to_dict(self) -> dict:
        return {"id": self.id, "label": self.label, "api_count": self.api_count}


@dataclass(frozen=True, slots=True)
class ClarificationQuestion:
    text: str
    options: tuple[Option, ...]
    aspect: str

    def to_dict(self) -> dict:
        return {
            "text": self.text,
            "aspect": self.aspect,
            "options": [o.to_dict() for o in self.options],
        }


def question_text(column: Column) -> str:
    template = _TEMPLATES[column.kind]
    return template.format(object=column.subject_label, event=column.subject_label)


def question_for(column: Column, edges) -> ClarificationQuestion:
    """Build the question for an internal node's edge list.

    Option ids are stringified edge indices, so they are stable for a
    given node regardless of the labels themselves.
    """
    from .tree import api_count  # local import to avoid a cycle

    options = tuple(
        Option(
            id=str(i),
            label=NULL_OPTION_LABEL if value is None else value,
            api_count=api_count(child),
        )
        for i, (value, child) in enumerate(edges)
    )
    return ClarificationQuestion(
        text=question_text(column), options=options, aspect=column.name
    )
