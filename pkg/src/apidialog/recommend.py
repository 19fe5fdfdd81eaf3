"""Semantic extension of dialogue results and keyword explanations."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .dialogue.session import DialogueSession
from .kg.model import FunctionalRelationKind, KnowledgeGraph, SemanticRelationKind
from .retrieval import stem

#: keyword sources understood by clients
DECISION_PATH = "DecisionPath"
RELATION_LABEL = "RelationLabel"

#: relation kinds in the order extended APIs are ranked
KIND_PRIORITY = (
    SemanticRelationKind.FUNCTION_SIMILARITY,
    SemanticRelationKind.FUNCTION_REPLACE,
    SemanticRelationKind.FUNCTION_COLLABORATION,
    SemanticRelationKind.FUNCTION_OPPOSITE,
    SemanticRelationKind.LOGIC_CONSTRAINT,
    SemanticRelationKind.BEHAVIOR_DIFFERENCE,
    SemanticRelationKind.EFFICIENCY_COMPARISON,
)

_KIND_RANK = {kind: i for i, kind in enumerate(KIND_PRIORITY)}

_WORD_RE = re.compile(r"[A-Za-z][A-Za-z0-9$-]*")


@dataclass(frozen=True, slots=True)
class Keyword:
    text: str
    source: str

    def to_dict(self) -> dict:
        return {"text": self.text, "source": self.source}


@dataclass(frozen=True, slots=True)
class Extension:
    """One extended API: the neighbor, how it relates, and to which result."""

    api_id: int
    kind: SemanticRelationKind
    source_id: int


@dataclass(frozen=True, slots=True)
class Explanation:
    api_id: int
    fqn: str
    description: str
    keywords: tuple[Keyword, ...]
    relation: SemanticRelationKind | None = None

    def to_dict(self) -> dict:
        record = {
            "fqn": self.fqn,
            "description": self.description,
            "keywords": [k.to_dict() for k in self.keywords],
        }
        if self.relation is not None:
            record["relation"] = self.relation.value
        return record


@dataclass(frozen=True, slots=True)
class Recommendation:
    query: str
    rounds: int
    results: tuple[Explanation, ...]
    extensions: tuple[Explanation, ...]

    def to_dict(self) -> dict:
        entries = []
        for exp in self.extensions:
            record = exp.to_dict()
            # relation sits between fqn and description in the record
            entries.append(
                {
                    "fqn": record["fqn"],
                    "relation": record["relation"],
                    "description": record["description"],
                    "keywords": record["keywords"],
                }
            )
        return {
            "query": self.query,
            "rounds": self.rounds,
            "results": [e.to_dict() for e in self.results],
            "extensions": entries,
        }


def extend(results: list[int], graph: KnowledgeGraph) -> list[Extension]:
    """One-hop semantic neighbors of the results, deduplicated and ranked.

    Neighbors are gathered per result (kind-priority order, then fqn);
    an API already recommended, or already claimed by an earlier result,
    is skipped. The combined list is then ranked globally the same way.
    """
    taken = set(results)
    found: list[Extension] = []
    for source_id in results:
        neighbors = sorted(
            graph.semantic_neighbors(source_id),
            key=lambda pair: (_KIND_RANK[pair[1]], graph.api_fqn(pair[0])),
        )
        for api_id, kind in neighbors:
            if api_id in taken:
                continue
            taken.add(api_id)
            found.append(Extension(api_id, kind, source_id))
    found.sort(key=lambda e: (_KIND_RANK[e.kind], graph.api_fqn(e.api_id)))
    return found


def _surface_form(verb: str, description: str) -> str:
    """The description token matching the event verb, as the user sees it.

    The event label stores the lemma ("return"); the description usually
    shows an inflected form ("Returns"); highlight the latter, lowercased.
    """
    target = stem(verb)
    for token in _WORD_RE.findall(description):
        low = token.lower()
        if low == verb or stem(low) == target:
            return low
    return verb


def _path_keywords(session: DialogueSession, description: str) -> list[Keyword]:
    texts: list[str] = []
    for column, value in session.answered_path:
        if column.kind is FunctionalRelationKind.ACT_HAS_EVENT:
            if value is not None:
                texts.append(_surface_form(value.split()[0], description))
        else:
            texts.append(column.subject_label)
            if value is not None:
                texts.append(value)
    seen: set[str] = set()
    keywords = []
    for text in texts:
        key = text.casefold()
        if key not in seen:
            seen.add(key)
            keywords.append(Keyword(text, DECISION_PATH))
    return keywords


def explain(
    api_id: int,
    session: DialogueSession,
    graph: KnowledgeGraph | None = None,
    relation: SemanticRelationKind | None = None,
    source_id: int | None = None,
) -> Explanation:
    """Explanation record for one recommended or extended API.

    For an extended API the decision-path keywords are those of the
    source result (its path led here), plus the relation label.
    """
    graph = graph or session.graph
    fqn = graph.api_fqn(api_id)  # raises UnknownApi for a bad id
    anchor = source_id if source_id is not None else api_id
    keywords = _path_keywords(session, graph.description(anchor))
    if relation is not None:
        keywords.append(Keyword(relation.value, RELATION_LABEL))
    return Explanation(
        api_id=api_id,
        fqn=fqn,
        description=graph.description(api_id),
        keywords=tuple(keywords),
        relation=relation,
    )


def recommendation(
    session: DialogueSession, graph: KnowledgeGraph | None = None
) -> Recommendation:
    """Assemble the final record for a finished session."""
    graph = graph or session.graph
    results = tuple(explain(api_id, session, graph) for api_id in session.results)
    extensions = tuple(
        explain(e.api_id, session, graph, relation=e.kind, source_id=e.source_id)
        for e in extend(session.results, graph)
    )
    return Recommendation(
        query=session.query,
        rounds=session.rounds,
        results=results,
        extensions=extensions,
    )
