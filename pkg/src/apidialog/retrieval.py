"""Lexical retrieval of candidate APIs and subgraph expansion.

A small tf-idf cosine ranker over description + name tokens. It is
deliberately boring: the interesting behavior lives in the dialogue, and
the ranker is swappable via a candidates file for evaluation runs.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyIndex, EmptySubgraph
from .ingest.normalize import normalize_description
from .kg.model import FunctionalRelation, KnowledgeGraph

log = logging.getLogger(__name__)

#: determiners and glue words carry no signal and would otherwise give
#: every document a tiny overlap with every query
STOPWORDS = {"a", "an", "the", "this", "that", "these", "those", "of", "or", "and"}

_WORD_RE = re.compile(r"[A-Za-z0-9]+")
_CAMEL_RE = re.compile(r"([a-z0-9])([A-Z])")

DEFAULT_N = 10


def stem(token: str) -> str:
    """Suffix-stripping stemmer: s / es / ed / ing."""
    if token.endswith("ing") and len(token) > 5:
        return token[:-3]
    if token.endswith("ed") and len(token) > 4:
        return token[:-2]
    if token.endswith("es") and len(token) > 3:
        return token[:-2]
    if token.endswith("s") and not token.endswith("ss") and len(token) > 3:
        return token[:-1]
    return token


def text_terms(text: str) -> list[str]:
    terms = []
    for raw in _WORD_RE.findall(text):
        lower = raw.lower()
        if lower in STOPWORDS:
            continue
        terms.append(stem(lower))
    return terms


def fqn_terms(fqn: str) -> list[str]:
    spaced = _CAMEL_RE.sub(r"\1 \2", fqn)
    return [stem(w.lower()) for w in _WORD_RE.findall(spaced)]


class RetrievalIndex:
    """tf-idf index over every API's normalized description and name."""

    def __init__(self, graph: KnowledgeGraph) -> None:
        self.graph = graph
        self._docs: dict[int, dict[str, float]] = {}
        self._norms: dict[int, float] = {}
        frequency: dict[int, dict[str, int]] = {}
        document_frequency: dict[str, int] = {}
        for api_id in graph.api_ids():
            terms = text_terms(normalize_description(graph.description(api_id)))
            terms += fqn_terms(graph.api_fqn(api_id))
            counts: dict[str, int] = {}
            for term in terms:
                counts[term] = counts.get(term, 0) + 1
            frequency[api_id] = counts
            for term in counts:
                document_frequency[term] = document_frequency.get(term, 0) + 1
        total = len(frequency)
        self._idf = {
            term: math.log2(total / df) for term, df in document_frequency.items()
        }
        for api_id, counts in frequency.items():
            weights = {
                term: count * self._idf[term]
                for term, count in counts.items()
                if self._idf[term] > 0.0
            }
            self._docs[api_id] = weights
            self._norms[api_id] = math.sqrt(sum(w * w for w in weights.values()))

    def __len__(self) -> int:
        return len(self._docs)

    def scores(self, query: str) -> dict[int, float]:
        """Cosine similarity of every indexed API against the query."""
        if not self._docs:
            raise EmptyIndex("index holds no APIs")
        counts: dict[str, int] = {}
        for term in text_terms(query):
            counts[term] = counts.get(term, 0) + 1
        weights = {
            term: count * self._idf.get(term, 0.0) for term, count in counts.items()
        }
        query_norm = math.sqrt(sum(w * w for w in weights.values()))
        out: dict[int, float] = {}
        for api_id, doc in self._docs.items():
            dot = sum(weight * doc.get(term, 0.0) for term, weight in sorted(weights.items()))
            norm = self._norms[api_id] * query_norm
            out[api_id] = dot / norm if norm > 0 else 0.0
        return out


def search_candidates(query: str, n: int, index: RetrievalIndex) -> list[int]:
    """Top-n API ids for the query: score descending, then fqn ascending.

    Zero-score APIs rank last but are not dropped, so asking for more
    results than the corpus holds returns everything. A query that is
    itself a parameterless method name matches all parameterized
    variants of that name first.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    graph = index.graph
    scored = index.scores(query)
    named = _name_matches(query, graph)
    ranked = sorted(
        scored,
        key=lambda api_id: (
            0 if api_id in named else 1,
            -scored[api_id],
            graph.api_fqn(api_id),
        ),
    )
    return ranked[:n]


def _name_matches(query: str, graph: KnowledgeGraph) -> set[int]:
    text = query.strip()
    if not text or " " in text or "(" in text:
        return set()
    matches = set()
    for api_id in graph.api_ids():
        head = graph.api_fqn(api_id).split("(", 1)[0]
        if head == text or head.endswith("." + text):
            matches.add(api_id)
    return matches


def positive_candidates(query: str, n: int, index: RetrievalIndex) -> list[int]:
    """Like search_candidates but keeps only APIs with a positive score
    (or an exact name match); the dialogue pipeline has no use for
    APIs sharing nothing with the query."""
    scored = index.scores(query)
    named = _name_matches(query, index.graph)
    ranked = search_candidates(query, n, index)
    return [a for a in ranked if scored[a] > 0.0 or a in named]


@dataclass
class Subgraph:
    """Candidate APIs plus their FUNCTION relations (ApiHasEvent removed)."""

    graph: KnowledgeGraph
    api_ids: list[int]
    per_api: dict[int, list[FunctionalRelation]] = field(default_factory=dict)

    @property
    def relations(self) -> list[FunctionalRelation]:
        out = []
        for api_id in self.api_ids:
            out.extend(self.per_api[api_id])
        return out


def build_subgraph(candidates: list[int], graph: KnowledgeGraph) -> Subgraph:
    """Expand candidate APIs into the behavior subgraph driving questions."""
    if not candidates:
        raise EmptySubgraph("no candidate APIs")
    per_api = {}
    for api_id in candidates:
        per_api[api_id] = graph.function_property(api_id, include_api_has_event=False)
    return Subgraph(graph=graph, api_ids=list(candidates), per_api=per_api)


def read_candidates_file(path: str | Path, graph: KnowledgeGraph) -> list[int]:
    """Fixed candidate list: one fqn per line, ranked as given."""
    ids = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        fqn = line.strip()
        if not fqn or fqn.startswith("#"):
            continue
        ids.append(graph.api_by_fqn(fqn))
    return ids
