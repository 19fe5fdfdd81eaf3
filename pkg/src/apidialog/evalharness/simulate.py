"""A scripted stand-in for the human side of the dialogue."""

from __future__ import annotations

import logging

from ..dialogue.session import ACTIVE, DialogueSession
from ..dialogue.tree import leaf_apis

log = logging.getLogger(__name__)


def fqn_key(fqn: str) -> str:
    """Fqn comparison key: the name part, parameter list dropped."""
    return fqn.split("(", 1)[0]


def simulate_user(
    session: DialogueSession, best: str, max_rounds: int | None = None
) -> list[int]:
    """Walk a fresh session the way an informed user would.

    At every question the simulated user picks the first option whose
    sub-tree still contains the ground-truth best API; if no option
    does (best was never retrieved), the recommendation counts as
    empty. Reaching a leaf — or the round budget — stops the session
    and returns its ranked results.
    """
    graph = session.graph
    key = fqn_key(best)
    target = {
        a
        for a in leaf_apis(session.tree.root)
        if fqn_key(graph.api_fqn(a)) == key
    }
    if not target:
        log.debug("best %r not in the clarification tree", best)
        return []
    rounds = 0
    while session.state == ACTIVE and (max_rounds is None or rounds < max_rounds):
        node = session.current_node
        choice = None
        for i, (_value, child) in enumerate(node.edges):
            if target & set(leaf_apis(child)):
                choice = str(i)
                break
        if choice is None:  # defensive: leaves partition the rows
            return []
        session.apply_selection(choice)
        rounds += 1
    session.stop()
    return list(session.results)
