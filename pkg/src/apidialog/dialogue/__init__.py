"""Clarification dialogue: attribute table, decision trees, sessions."""

from .questions import (
    NULL_OPTION_LABEL,
    ClarificationQuestion,
    Option,
    question_for,
    question_text,
)
from .session import DialogueSession, new_session_id, open_session
from .table import ACTION_COLUMN, AttributeTable, Column, build_attribute_table
from .tree import (
    STRATEGIES,
    DecisionTree,
    Internal,
    Leaf,
    api_count,
    build_tree,
    dump,
    entropy,
    gain_ratio,
    har,
    information_gain,
    leaf_apis,
)

__all__ = [
    "ACTION_COLUMN",
    "NULL_OPTION_LABEL",
    "STRATEGIES",
    "AttributeTable",
    "ClarificationQuestion",
    "Column",
    "DecisionTree",
    "DialogueSession",
    "Internal",
    "Leaf",
    "Option",
    "api_count",
    "build_attribute_table",
    "build_tree",
    "dump",
    "entropy",
    "gain_ratio",
    "har",
    "information_gain",
    "leaf_apis",
    "new_session_id",
    "open_session",
    "question_for",
    "question_text",
]
