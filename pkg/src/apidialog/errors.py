"""Exception types shared across the package.

Every error that crosses a module boundary gets a named type here so that
callers (CLI, HTTP layer, tests) can catch by meaning instead of matching
message strings.
"""

from __future__ import annotations


class ApiDialogError(Exception):
    """Base class for all package errors."""

    #: short machine-readable code, used by the HTTP layer
    code = "error"


class FormatError(ApiDialogError):
    """A persisted file or exchange record is malformed.

    Carries the offending location so users can fix their data.
    """

    code = "format_error"

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f" [{path}" + (f":{line}" if line is not None else "") + "]"
        super().__init__(message + where)


class UnknownEndpoint(ApiDialogError):
    """A relation references an entity id that is not in the graph."""

    code = "unknown_endpoint"


class DuplicateConflict(ApiDialogError):
    """The same API fqn was added twice with a different description."""

    code = "duplicate_conflict"


class RejectedNoEvent(ApiDialogError):
    """A description produced no Event entity, so the API is dropped."""

    code = "rejected_no_event"


class NoVerbFound(ApiDialogError):
    """The annotator could not locate a verb in the sentence."""

    code = "no_verb_found"


class UnknownApi(UnknownEndpoint):
    """An operation referenced an API that is not in the graph."""

    code = "unknown_api"


class EmptyIndex(ApiDialogError):
    """The retrieval index contains no documents."""

    code = "empty_index"


class BlankQuery(ApiDialogError):
    """The query string is empty or whitespace."""

    code = "blank_query"


class EmptySubgraph(ApiDialogError):
    """No candidate APIs were supplied for subgraph construction."""

    code = "empty_subgraph"


class EmptyInput(ApiDialogError):
    """An aggregate operation received an empty collection."""

    code = "empty_input"


class UnknownAspect(ApiDialogError):
    """An aspect name is not a column of the attribute table."""

    code = "unknown_aspect"


class UnknownOption(ApiDialogError):
    """A selection referenced an option id the current question lacks."""

    code = "unknown_option"


class SessionFinished(ApiDialogError):
    """The dialogue already reached a leaf; no further questions exist."""

    code = "session_finished"


class NoCandidates(ApiDialogError):
    """Retrieval produced no matching APIs for the query."""

    code = "no_candidates"


class UnknownSession(ApiDialogError):
    """No session with the given id exists (or it expired)."""

    code = "unknown_session"


class LengthMismatch(ApiDialogError):
    """Parallel lists passed to a metric differ in length."""

    code = "length_mismatch"
