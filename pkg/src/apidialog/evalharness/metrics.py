"""Ranking metrics: precision, recall, MRR, MAP."""

from __future__ import annotations

from typing import Sequence

from ..errors import LengthMismatch


def precision(recommended: Sequence, truth: set) -> float:
    """|recommended ∩ truth| / |recommended|; 0.0 for an empty list."""
    if not recommended:
        return 0.0
    rec = set(recommended)
    return len(rec & set(truth)) / len(rec)


def recall(recommended: Sequence, truth: set) -> float:
    """|recommended ∩ truth| / |truth|; 0.0 for an empty truth set."""
    if not truth:
        return 0.0
    return len(set(recommended) & set(truth)) / len(set(truth))


def _first_hit_rank(ranked: Sequence, truth: set) -> int | None:
    for rank, item in enumerate(ranked, start=1):
        if item in truth:
            return rank
    return None


def mrr(ranked_lists: Sequence[Sequence], truths: Sequence[set]) -> float:
    """Mean reciprocal rank of the first relevant item per query."""
    if len(ranked_lists) != len(truths):
        raise LengthMismatch(
            f"{len(ranked_lists)} ranked lists vs {len(truths)} truth sets"
        )
    if not ranked_lists:
        return 0.0
    total = 0.0
    for ranked, truth in zip(ranked_lists, truths):
        rank = _first_hit_rank(ranked, truth)
        if rank is not None:
            total += 1.0 / rank
    return total / len(ranked_lists)


def average_precision(ranked: Sequence, truth: set) -> float:
    """Mean of precision-at-rank over the hits present in the list.

    Each truth item counts at most once, at its first occurrence.
    """
    hits = 0
    total = 0.0
    remaining = set(truth)
    for rank, item in enumerate(ranked, start=1):
        if item in remaining:
            remaining.discard(item)
            hits += 1
            total += hits / rank
    return total / hits if hits else 0.0


def mean_average_precision(
    ranked_lists: Sequence[Sequence], truths: Sequence[set]
) -> float:
    if len(ranked_lists) != len(truths):
        raise LengthMismatch(
            f"{len(ranked_lists)} ranked lists vs {len(truths)} truth sets"
        )
    if not ranked_lists:
        return 0.0
    return sum(
        average_precision(r, t) for r, t in zip(ranked_lists, truths)
    ) / len(ranked_lists)
