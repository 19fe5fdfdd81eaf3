"""Interactive clarification sessions over a decision tree."""

from __future__ import annotations

import logging
import secrets

from ..errors import (
    BlankQuery,
    NoCandidates,
    SessionFinished,
    UnknownOption,
)
from ..kg.model import KnowledgeGraph
from ..retrieval import RetrievalIndex, build_subgraph, positive_candidates
from .questions import ClarificationQuestion, question_for
from .table import Column, build_attribute_table
from .tree import DecisionTree, Internal, Leaf, build_tree, leaf_apis

log = logging.getLogger(__name__)

ACTIVE = "active"
FINISHED = "finished"


class DialogueSession:
    """One user's walk down a clarification tree.

    The session tracks the current node, every answered round in
    ``transcript`` and the (aspect, value) pairs in ``answered_path``;
    once a leaf is reached (or ``stop`` is called) the remaining APIs
    are ranked into ``results`` and the session is finished.
    """

    def __init__(
        self,
        session_id: str,
        query: str,
        graph: KnowledgeGraph,
        tree: DecisionTree,
        scores: dict[int, float],
    ) -> None:
        self.id = session_id
        self.query = query
        self.graph = graph
        self.tree = tree
        self.scores = scores
        self.state = ACTIVE
        self.transcript: list[dict] = []
        self.answered_path: list[tuple[Column, str | None]] = []
        self.results: list[int] = []
        self._node = tree.root
        if isinstance(self._node, Leaf):
            self._finish(list(self._node.api_ids))

    # ------------------------------------------------------------------

    @property
    def strategy(self) -> str:
        return self.tree.strategy

    @property
    def current_node(self):
        return self._node

    @property
    def rounds(self) -> int:
        return len(self.transcript)

    def _rank(self, api_ids: list[int]) -> list[int]:
        return sorted(
            api_ids,
            key=lambda a: (-self.scores.get(a, 0.0), self.graph.api_fqn(a)),
        )

    def _finish(self, api_ids: list[int]) -> None:
        self.results = self._rank(api_ids)
        self.state = FINISHED

    def next_question(self) -> ClarificationQuestion:
        if self.state == FINISHED:
            raise SessionFinished("session already has its recommendation")
        assert isinstance(self._node, Internal)
        return question_for(self._node.aspect, self._node.edges)

    def apply_selection(self, option_id: str) -> None:
        """Answer the pending question by option id and descend."""
        if self.state == FINISHED:
            raise SessionFinished("session already has its recommendation")
        assert isinstance(self._node, Internal)
        question = self.next_question()
        by_id = {o.id: o for o in question.options}
        if option_id not in by_id:
            raise UnknownOption(f"no option with id {option_id!r}")
        index = int(option_id)
        value, child = self._node.edges[index]
        self.transcript.append(
            {
                "question": question.text,
                "aspect": question.aspect,
                "options": [o.to_dict() for o in question.options],
                "selected_option_id": option_id,
                "selected_label": by_id[option_id].label,
            }
        )
        self.answered_path.append((self._node.aspect, value))
        self._node = child
        if isinstance(child, Leaf):
            self._finish(list(child.api_ids))

    def stop(self) -> None:
        """Finish now with everything still reachable; idempotent."""
        if self.state == FINISHED:
            return
        self._finish(leaf_apis(self._node))


def new_session_id() -> str:
    return secrets.token_urlsafe(16)


def open_session(
    graph: KnowledgeGraph,
    index: RetrievalIndex,
    query: str,
    strategy: str = "id3",
    n: int = 10,
    session_id: str | None = None,
    weights: dict[str, float] | None = None,
) -> DialogueSession:
    """Full query-to-session pipeline: retrieve, tabulate, grow, wrap."""
    text = query.strip()
    if not text:
        raise BlankQuery("query is blank")
    candidates = positive_candidates(text, n, index)
    if not candidates:
        raise NoCandidates(f"nothing in the graph matches {text!r}")
    subgraph = build_subgraph(candidates, graph)
    table = build_attribute_table(subgraph)
    tree = build_tree(table, strategy=strategy, weights=weights)
    scores = index.scores(text)
    session = DialogueSession(
        session_id=session_id or new_session_id(),
        query=text,
        graph=graph,
        tree=tree,
        scores={a: scores.get(a, 0.0) for a in subgraph.api_ids},
    )
    log.debug(
        "opened session %s: %d candidates, strategy=%s", session.id, len(candidates), strategy
    )
    return session
