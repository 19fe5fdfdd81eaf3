"""Head-to-head HAR comparison of the tree-growing strategies."""

from __future__ import annotations

import logging
from statistics import mean

from ..dialogue import STRATEGIES, build_attribute_table, build_tree, har
from ..errors import ApiDialogError, NoCandidates
from ..kg.model import KnowledgeGraph
from ..retrieval import RetrievalIndex, build_subgraph, positive_candidates
from .synth import SyntheticQuery

log = logging.getLogger(__name__)


def _summary(values: list[float]) -> dict:
    histogram: dict[str, int] = {}
    for v in values:
        key = f"{v:.1f}"
        histogram[key] = histogram.get(key, 0) + 1
    return {
        "count": len(values),
        "mean": mean(values) if values else 0.0,
        "histogram": dict(sorted(histogram.items(), key=lambda kv: float(kv[0]))),
    }


def compare_strategies(
    graph: KnowledgeGraph,
    queries: list[SyntheticQuery | str],
    index: RetrievalIndex | None = None,
    n: int = 10,
) -> dict:
    """Average dialogue rounds (HAR) per strategy over a query batch.

    Every query runs retrieval once; both strategies grow their tree on
    the same attribute table. Queries that retrieve nothing are logged
    and skipped — there is no tree to measure.
    """
    if not queries:
        raise ValueError("no queries to compare")
    index = index or RetrievalIndex(graph)
    values: dict[str, list[float]] = {s: [] for s in STRATEGIES}
    by_kind: dict[str, dict[str, list[float]]] = {s: {} for s in STRATEGIES}
    skipped = 0
    for query in queries:
        text = query.text if isinstance(query, SyntheticQuery) else query
        kind = query.kind if isinstance(query, SyntheticQuery) else None
        try:
            candidates = positive_candidates(text, n, index)
            if not candidates:
                raise NoCandidates(f"nothing retrieved for {text!r}")
            table = build_attribute_table(build_subgraph(candidates, graph))
        except ApiDialogError as exc:
            log.info("skipping query %r: %s", text, exc)
            skipped += 1
            continue
        for strategy in STRATEGIES:
            value = har(build_tree(table, strategy=strategy))
            values[strategy].append(value)
            if kind is not None:
                by_kind[strategy].setdefault(kind, []).append(value)
    report = {"queries": len(queries), "skipped": skipped, "strategies": {}}
    for strategy in STRATEGIES:
        entry = _summary(values[strategy])
        entry["by_kind"] = {
            kind: _summary(vals) for kind, vals in sorted(by_kind[strategy].items())
        }
        report["strategies"][strategy] = entry
    return report
