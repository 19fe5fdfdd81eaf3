"""API behavior knowledge graph: entity/relation model and disk format."""

from apidialog.kg.model import (
    Entity,
    EntityKind,
    FunctionalRelation,
    FunctionalRelationKind,
    KnowledgeGraph,
    SemanticRelation,
    SemanticRelationKind,
)
from apidialog.kg.store import load_graph, store_graph

__all__ = [
    "Entity",
    "EntityKind",
    "FunctionalRelation",
    "FunctionalRelationKind",
    "KnowledgeGraph",
    "SemanticRelation",
    "SemanticRelationKind",
    "load_graph",
    "store_graph",
]
