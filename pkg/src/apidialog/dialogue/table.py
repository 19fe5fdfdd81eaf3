"""Attribute table: the subgraph flattened to APIs × aspects."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import EmptySubgraph, UnknownAspect
from ..kg.model import FunctionalRelationKind

#: every ActHasEvent relation shares this one column
ACTION_COLUMN = "action#Has Event"


@dataclass(frozen=True, slots=True)
class Column:
    """One aspect column: its name, relation kind and subject label."""

    name: str
    kind: FunctionalRelationKind
    subject_label: str


class AttributeTable:
    """Rows are candidate APIs, columns are "entity#relation" aspects.

    A cell keeps every object label the API has for the aspect; the
    effective value used for grouping is the lexicographically first,
    which keeps decision-tree leaves an exact partition of the rows.
    """

    def __init__(self, graph, api_ids: list[int]) -> None:
        if not api_ids:
            raise EmptySubgraph("attribute table needs at least one API row")
        self.graph = graph
        self.api_ids = list(api_ids)
        self._columns: dict[str, Column] = {}
        self._cells: dict[tuple[int, str], set[str]] = {}
        self._signatures: dict[int, tuple] = {}

    @classmethod
    def from_subgraph(cls, subgraph) -> "AttributeTable":
        table = cls(subgraph.graph, subgraph.api_ids)
        graph = subgraph.graph
        for api_id in subgraph.api_ids:
            signature = []
            for rel in subgraph.per_api[api_id]:
                object_label = graph.entity(rel.object_id).label
                signature.append((rel.kind.value, object_label))
                if rel.kind is FunctionalRelationKind.ACT_HAS_EVENT:
                    name, subject_label = ACTION_COLUMN, "action"
                else:
                    subject_label = graph.entity(rel.subject_id).label
                    name = f"{subject_label}#{rel.kind.display}"
                if name not in table._columns:
                    table._columns[name] = Column(name, rel.kind, subject_label)
                table._cells.setdefault((api_id, name), set()).add(object_label)
            table._signatures[api_id] = tuple(sorted(signature))
        return table

    # ------------------------------------------------------------------

    @property
    def column_names(self) -> list[str]:
        return sorted(self._columns)

    def column(self, name: str) -> Column:
        try:
            return self._columns[name]
        except KeyError:
            raise UnknownAspect(f"no aspect column named {name!r}") from None

    def cell(self, api_id: int, name: str) -> frozenset[str] | None:
        values = self._cells.get((api_id, name))
        return frozenset(values) if values else None

    def effective(self, api_id: int, name: str) -> str | None:
        """Single grouping value for the cell: its lexicographic minimum."""
        values = self._cells.get((api_id, name))
        return min(values) if values else None

    def signature(self, api_id: int) -> tuple:
        """Normalized relation multiset for the identical-functionality test."""
        return self._signatures[api_id]

    def encode(self, rows: list[int], columns: list[str]) -> np.ndarray:
        """Encode effective values as int codes; -1 is null.

        Codes are assigned per column by sorted label order, so the
        encoding is deterministic for a given row subset.
        """
        matrix = np.full((len(rows), len(columns)), -1, dtype=np.int32)
        for j, name in enumerate(columns):
            values = sorted(
                {v for v in (self.effective(r, name) for r in rows) if v is not None}
            )
            code_of = {v: i for i, v in enumerate(values)}
            for i, api_id in enumerate(rows):
                value = self.effective(api_id, name)
                if value is not None:
                    matrix[i, j] = code_of[value]
        return matrix


def build_attribute_table(subgraph) -> AttributeTable:
    """Flatten a retrieval subgraph into the clarification attribute table."""
    if not subgraph.api_ids:
        raise EmptySubgraph("subgraph has no APIs")
    return AttributeTable.from_subgraph(subgraph)
