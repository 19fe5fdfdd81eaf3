"""Evaluation datasets and the metric-driven evaluation run."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from statistics import mean

from ..dialogue.session import open_session
from ..errors import ApiDialogError, FormatError
from ..kg.model import KnowledgeGraph
from ..recommend import extend
from ..retrieval import RetrievalIndex
from .metrics import mean_average_precision, mrr, precision, recall
from .simulate import fqn_key, simulate_user

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class EvalQuery:
    text: str
    best: str
    extended: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.best in self.extended:
            raise ValueError(f"best API {self.best!r} repeated in extended list")

    @property
    def truth_keys(self) -> set[str]:
        return {fqn_key(self.best), *(fqn_key(e) for e in self.extended)}


def read_dataset(path: str | Path) -> list[EvalQuery]:
    """Load a line-delimited {query, best, extended:[...]} file."""
    queries = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                queries.append(
                    EvalQuery(
                        text=record["query"],
                        best=record["best"],
                        extended=tuple(record.get("extended", ())),
                    )
                )
            except (ValueError, KeyError, TypeError) as exc:
                raise FormatError(
                    f"bad dataset record: {exc}", path=str(path), line=lineno
                ) from None
    return queries


def _recommended_keys(
    graph: KnowledgeGraph,
    index: RetrievalIndex,
    query: EvalQuery,
    strategy: str,
    n: int,
    max_rounds: int,
    top: int | None,
) -> list[str]:
    try:
        session = open_session(graph, index, query.text, strategy=strategy, n=n)
    except ApiDialogError as exc:
        log.info("query %r unanswerable: %s", query.text, exc)
        return []
    results = simulate_user(session, query.best, max_rounds=max_rounds)
    if not results:
        return []
    ranked = [fqn_key(graph.api_fqn(a)) for a in results]
    ranked += [fqn_key(graph.api_fqn(e.api_id)) for e in extend(results, graph)]
    deduped = list(dict.fromkeys(ranked))
    return deduped[:top] if top else deduped


def evaluate_dataset(
    graph: KnowledgeGraph,
    queries: list[EvalQuery],
    index: RetrievalIndex | None = None,
    rounds: int = 3,
    top: int | None = None,
    strategy: str = "id3",
    n: int = 10,
) -> dict:
    """Per-round MRR/MAP/precision/recall of the simulated dialogue.

    Round r means the simulated user answers at most r questions and the
    session is then stopped; an unretrievable query counts as an empty
    recommendation rather than being dropped.
    """
    if not queries:
        raise ValueError("dataset is empty")
    index = index or RetrievalIndex(graph)
    truths = [q.truth_keys for q in queries]
    per_round = []
    for r in range(1, rounds + 1):
        ranked_lists = [
            _recommended_keys(graph, index, q, strategy, n, r, top) for q in queries
        ]
        per_round.append(
            {
                "round": r,
                "mrr": mrr(ranked_lists, truths),
                "map": mean_average_precision(ranked_lists, truths),
                "precision": mean(
                    precision(rec, t) for rec, t in zip(ranked_lists, truths)
                ),
                "recall": mean(
                    recall(rec, t) for rec, t in zip(ranked_lists, truths)
                ),
            }
        )
    return {
        "queries": len(queries),
        "strategy": strategy,
        "top": top,
        "rounds": rounds,
        "per_round": per_round,
    }
