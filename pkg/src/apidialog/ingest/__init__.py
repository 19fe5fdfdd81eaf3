"""Document ingestion: descriptions in, knowledge-graph inputs out."""

from .annotate import AnnotatedSentence, Span, Token, annotate
from .extract import extract
from .fqn import FqnDictionary, SimpleNameTriple, parse_simple_name, resolve_fqn
from .normalize import normalize_description
from .pipeline import (
    BuildStats,
    MethodDescriptionPair,
    build_graph,
    read_annotations,
    read_pairs,
    read_triples,
)

__all__ = [
    "AnnotatedSentence",
    "Span",
    "Token",
    "annotate",
    "extract",
    "FqnDictionary",
    "SimpleNameTriple",
    "parse_simple_name",
    "resolve_fqn",
    "normalize_description",
    "BuildStats",
    "MethodDescriptionPair",
    "build_graph",
    "read_annotations",
    "read_pairs",
    "read_triples",
]
