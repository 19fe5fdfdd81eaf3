"""Decision trees over the attribute table, plus entropy and gain helpers."""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .. import treecore
from ..errors import EmptyInput, UnknownAspect
from .table import AttributeTable, Column

log = logging.getLogger(__name__)

#: strategies understood by build_tree
STRATEGIES = ("id3", "c4.5")

#: relative tolerance for calling two gains a tie
_TIE_REL = 1e-12


def entropy(labels: Iterable) -> float:
    """Shannon entropy of a label multiset, in bits."""
    counts = Counter(labels)
    total = sum(counts.values())
    if total == 0:
        raise EmptyInput("entropy of an empty multiset is undefined")
    result = 0.0
    for count in counts.values():
        p = count / total
        result -= p * math.log2(p)
    return result


def _column_index(table: AttributeTable, aspect: str, rows: Sequence[int]):
    names = table.column_names
    if aspect not in names:
        raise UnknownAspect(f"no aspect column named {aspect!r}")
    matrix = table.encode(list(rows), names)
    return matrix, names.index(aspect)


def information_gain(table: AttributeTable, aspect: str, rows=None) -> float:
    """ID3 information gain of splitting the rows on one aspect."""
    rows = table.api_ids if rows is None else list(rows)
    matrix, j = _column_index(table, aspect, rows)
    gains, _, _ = treecore.column_stats(matrix)
    return float(gains[j])


def gain_ratio(table: AttributeTable, aspect: str, rows=None) -> float:
    """C4.5 gain ratio; 0.0 when the aspect does not split the rows."""
    rows = table.api_ids if rows is None else list(rows)
    matrix, j = _column_index(table, aspect, rows)
    gains, splits, _ = treecore.column_stats(matrix)
    if splits[j] <= 0.0:
        return 0.0
    return float(gains[j] / splits[j])


@dataclass(frozen=True, slots=True)
class Leaf:
    api_ids: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Internal:
    aspect: Column
    #: edge label -> child; None labels the null ("not applicable") edge
    edges: tuple[tuple[str | None, "Node"], ...]


Node = Leaf | Internal


@dataclass(slots=True)
class DecisionTree:
    root: Node
    strategy: str
    table: AttributeTable = field(repr=False)


def _select_aspect(
    table: AttributeTable,
    rows: list[int],
    columns: list[str],
    strategy: str,
    weights: dict[str, float] | None,
) -> str | None:
    matrix = table.encode(rows, columns)
    gains, splits, ngroups = treecore.column_stats(matrix)
    scores: list[float] = []
    usable: list[bool] = []
    for j, name in enumerate(columns):
        if strategy == "c4.5":
            ok = ngroups[j] >= 2 and splits[j] > 0.0
            score = gains[j] / splits[j] if ok else float("-inf")
        else:
            ok = True
            score = float(gains[j])
        if weights and name in weights:
            score *= weights[name]
        scores.append(score)
        usable.append(ok)
    if not any(usable):
        return None
    best = max(s for s, ok in zip(scores, usable) if ok)
    thresh = best - max(_TIE_REL, abs(best) * _TIE_REL)
    tied = [n for n, s, ok in zip(columns, scores, usable) if ok and s >= thresh]
    return min(tied)


def _grow(
    table: AttributeTable,
    rows: list[int],
    columns: list[str],
    strategy: str,
    weights: dict[str, float] | None,
) -> Node:
    if len(rows) == 1:
        return Leaf(tuple(rows))
    if len({table.signature(r) for r in rows}) == 1:
        # identical relation sets: no question can separate these
        return Leaf(tuple(rows))
    if not columns:
        return Leaf(tuple(rows))
    aspect = _select_aspect(table, rows, columns, strategy, weights)
    if aspect is None:
        return Leaf(tuple(rows))
    groups: dict[str | None, list[int]] = {}
    for api_id in rows:
        groups.setdefault(table.effective(api_id, aspect), []).append(api_id)
    remaining = [c for c in columns if c != aspect]
    labels = sorted((v for v in groups if v is not None))
    if None in groups:
        labels.append(None)
    edges = tuple(
        (value, _grow(table, groups[value], remaining, strategy, weights))
        for value in labels
    )
    return Internal(table.column(aspect), edges)


def build_tree(
    table: AttributeTable,
    strategy: str = "id3",
    weights: dict[str, float] | None = None,
) -> DecisionTree:
    """Grow a clarification tree over the whole table.

    ``strategy`` picks the aspect scoring rule: plain information gain
    ("id3") or gain ratio over splittable aspects ("c4.5"). ``weights``
    optionally scales individual aspect scores by column name.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    root = _grow(table, list(table.api_ids), table.column_names, strategy, weights)
    return DecisionTree(root=root, strategy=strategy, table=table)


def api_count(node: Node) -> int:
    if isinstance(node, Leaf):
        return len(node.api_ids)
    return sum(api_count(child) for _, child in node.edges)


def leaf_apis(node: Node) -> list[int]:
    if isinstance(node, Leaf):
        return list(node.api_ids)
    result: list[int] = []
    for _, child in node.edges:
        result.extend(leaf_apis(child))
    return result


def har(tree: DecisionTree) -> float:
    """Human–api rounds: average tree depth weighted by leaf size."""
    total_apis = api_count(tree.root)
    if total_apis == 0:
        raise EmptyInput("tree has no APIs")

    def walk(node: Node, depth: int) -> float:
        if isinstance(node, Leaf):
            return len(node.api_ids) * depth
        return sum(walk(child, depth + 1) for _, child in node.edges)

    return walk(tree.root, 0) / total_apis


def dump(tree: DecisionTree, graph) -> dict:
    """Plain-dict form of the tree for the CLI and tests."""

    def walk(node: Node) -> dict:
        if isinstance(node, Leaf):
            return {"apis": [graph.entity(i).label for i in node.api_ids]}
        return {
            "aspect": node.aspect.name,
            "edges": [
                {"value": value, "child": walk(child)} for value, child in node.edges
            ],
        }

    return walk(tree.root)
