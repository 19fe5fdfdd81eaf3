"""Deterministic role annotation for normalized description sentences.

A small pattern grammar stands in for an external semantic-role tool:
the first non-auxiliary verb anchors the sentence, cue words open
constraint spans, and the remaining tokens are parsed as noun phrases
for the direct/preposition objects and their modifiers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import NoVerbFound
from . import postag

ROLE_VERB = "Verb"
ROLE_DIRECT_OBJECT = "DirectObject"
ROLE_PREPOSITION = "Preposition"
ROLE_PREPOSITION_OBJECT = "PrepositionObject"
ROLE_DIRECT_OBJECT_MODIFIER = "DirectObjectModifier"
ROLE_PREPOSITION_OBJECT_MODIFIER = "PrepositionObjectModifier"

FUNCTIONAL_ROLES = (
    ROLE_VERB,
    ROLE_DIRECT_OBJECT,
    ROLE_PREPOSITION,
    ROLE_PREPOSITION_OBJECT,
    ROLE_DIRECT_OBJECT_MODIFIER,
    ROLE_PREPOSITION_OBJECT_MODIFIER,
)

CONSTRAINT_ROLES = (
    "ARGM-LOC", "ARGM-DIR", "ARGM-MNR", "ARGM-EXT", "ARGM-TMP",
    "ARGM-GOL", "ARGM-PRP", "ARGM-PRD", "ARGM-ADV",
)

#: cue word -> constraint role, matched on the token after the verb
_CUE_ROLES = {
    "in": "ARGM-LOC",
    "at": "ARGM-LOC",
    "down": "ARGM-DIR",
    "up": "ARGM-DIR",
    "into": "ARGM-DIR",
    "using": "ARGM-MNR",
    "by": "ARGM-MNR",
    "when": "ARGM-TMP",
    "while": "ARGM-TMP",
    "after": "ARGM-TMP",
    "for": "ARGM-GOL",
    "as": "ARGM-PRD",
    "if": "ARGM-ADV",
}

#: single-token extent adverbs; the only cues that may precede the verb
_EXTENT_CUES = {"fully", "partially"}

_SPAN_BOUNDARY = {",", ".", ";", ":", "!", "?"}


@dataclass(frozen=True, slots=True)
class Token:
    surface: str
    pos: str

    def to_dict(self) -> dict:
        return {"surface": self.surface, "pos": self.pos}

    @classmethod
    def from_dict(cls, data: dict) -> "Token":
        return cls(surface=data["surface"], pos=data["pos"])


@dataclass(frozen=True, slots=True)
class Span:
    """Half-open token range [start, end) carrying one role."""

    role: str
    start: int
    end: int

    def to_dict(self) -> dict:
        return {"role": self.role, "start": self.start, "end": self.end}

    @classmethod
    def from_dict(cls, data: dict) -> "Span":
        return cls(role=data["role"], start=int(data["start"]), end=int(data["end"]))


@dataclass(slots=True)
class AnnotatedSentence:
    tokens: list[Token]
    functional_spans: list[Span] = field(default_factory=list)
    constraint_spans: list[Span] = field(default_factory=list)

    def span_text(self, span: Span) -> str:
        return " ".join(t.surface for t in self.tokens[span.start:span.end])

    def _first(self, role: str) -> Span | None:
        for span in self.functional_spans:
            if span.role == role:
                return span
        return None

    @property
    def verb(self) -> str | None:
        span = self._first(ROLE_VERB)
        return self.span_text(span) if span else None

    @property
    def direct_object(self) -> str | None:
        span = self._first(ROLE_DIRECT_OBJECT)
        return self.span_text(span) if span else None

    @property
    def preposition(self) -> str | None:
        span = self._first(ROLE_PREPOSITION)
        return self.span_text(span) if span else None

    @property
    def preposition_object(self) -> str | None:
        """The preposition object that completes the event phrase."""
        prep = self._first(ROLE_PREPOSITION)
        if prep is None:
            return None
        for span in self.functional_spans:
            if span.role == ROLE_PREPOSITION_OBJECT and span.start >= prep.end:
                return self.span_text(span)
        return None

    def constraint_texts(self) -> list[tuple[str, str]]:
        return [(s.role, self.span_text(s)) for s in self.constraint_spans]

    def to_dict(self) -> dict:
        return {
            "tokens": [t.to_dict() for t in self.tokens],
            "functional_spans": [s.to_dict() for s in self.functional_spans],
            "constraint_spans": [s.to_dict() for s in self.constraint_spans],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AnnotatedSentence":
        return cls(
            tokens=[Token.from_dict(t) for t in data["tokens"]],
            functional_spans=[Span.from_dict(s) for s in data.get("functional_spans", [])],
            constraint_spans=[Span.from_dict(s) for s in data.get("constraint_spans", [])],
        )


def _is_participle(surface: str) -> bool:
    return postag._participle_stem(surface) is not None


def _is_modifier(surface: str, pos: str) -> bool:
    if pos in (postag.ADJ, postag.NUM, postag.ADV):
        return True
    return pos == postag.VERB and _is_participle(surface)


class _NounPhrase:
    __slots__ = ("modifiers", "head_start", "head_end")

    def __init__(self) -> None:
        self.modifiers: list[int] = []
        self.head_start = -1
        self.head_end = -1


def _parse_noun_phrase(tokens: list[Token], indices: list[int], pos: int) -> tuple[_NounPhrase | None, int]:
    """Parse one NP over the index subsequence starting at ``pos``.

    Skips determiners, gathers modifier tokens, then a contiguous
    noun/proper-noun head run. A leading java primitive-type word in a
    multi-word head is peeled off as a modifier ("double value").
    """
    np = _NounPhrase()
    n = len(indices)
    while pos < n and tokens[indices[pos]].pos == postag.DET:
        pos += 1
    while pos < n and _is_modifier(tokens[indices[pos]].surface, tokens[indices[pos]].pos):
        np.modifiers.append(indices[pos])
        pos += 1
    head: list[int] = []
    while pos < n and tokens[indices[pos]].pos in (postag.NOUN, postag.PROPN):
        if head and indices[pos] != head[-1] + 1:
            break
        head.append(indices[pos])
        pos += 1
    if not head:
        return None, pos
    if len(head) > 1 and tokens[head[0]].surface.lower() in postag.JAVA_TYPE_WORDS:
        np.modifiers.append(head[0])
        head = head[1:]
    np.head_start, np.head_end = head[0], head[-1] + 1
    return np, pos


def annotate(text: str) -> AnnotatedSentence:
    """Annotate a normalized sentence with functional and constraint spans."""
    surfaces = postag.tokenize(text)
    tags = postag.tag_all(surfaces)
    tokens = [Token(s, p) for s, p in zip(surfaces, tags)]
    verb_index = None
    for i, token in enumerate(tokens):
        if token.pos == postag.VERB and token.surface.lower() not in postag.AUXILIARIES:
            verb_index = i
            break
    if verb_index is None:
        raise NoVerbFound("no verb found in %r" % text)

    claimed = [False] * len(tokens)
    constraint_spans = _claim_constraints(tokens, claimed, verb_index)
    functional_spans = [Span(ROLE_VERB, verb_index, verb_index + 1)]
    functional_spans += _parse_functional(tokens, claimed, verb_index)
    functional_spans.sort(key=lambda s: (s.start, s.end))
    constraint_spans.sort(key=lambda s: (s.start, s.end))
    return AnnotatedSentence(tokens, functional_spans, constraint_spans)


def _claim_constraints(tokens: list[Token], claimed: list[bool], verb_index: int) -> list[Span]:
    spans: list[Span] = []
    i = 0
    n = len(tokens)
    while i < n:
        if claimed[i] or i == verb_index:
            i += 1
            continue
        lower = tokens[i].surface.lower()
        if i < verb_index:
            if lower in _EXTENT_CUES and tokens[i].pos == postag.ADV:
                spans.append(Span("ARGM-EXT", i, i + 1))
                claimed[i] = True
            i += 1
            continue
        if lower in _EXTENT_CUES and tokens[i].pos == postag.ADV:
            spans.append(Span("ARGM-EXT", i, i + 1))
            claimed[i] = True
            i += 1
            continue
        if lower == "so" and i + 1 < n and tokens[i + 1].surface.lower() == "that":
            end = _span_end(tokens, i)
            spans.append(Span("ARGM-PRP", i, end))
            for j in range(i, end):
                claimed[j] = True
            i = end
            continue
        role = _CUE_ROLES.get(lower)
        if role is not None:
            end = _span_end(tokens, i)
            spans.append(Span(role, i, end))
            for j in range(i, end):
                claimed[j] = True
            i = end
            continue
        i += 1
    return spans


def _span_end(tokens: list[Token], start: int) -> int:
    for j in range(start + 1, len(tokens)):
        if tokens[j].surface in _SPAN_BOUNDARY:
            return j
    return len(tokens)


def _parse_functional(tokens: list[Token], claimed: list[bool], verb_index: int) -> list[Span]:
    indices = [i for i in range(verb_index + 1, len(tokens)) if not claimed[i]]
    segments = _segment(tokens, indices)
    spans: list[Span] = []
    prep_seen = False
    for segment in segments:
        if not segment:
            continue
        first = tokens[segment[0]]
        if first.pos == postag.PRON:
            continue  # relative clause without an own subject
        if first.pos == postag.PREP and first.surface.lower() != "of":
            if prep_seen:
                continue
            prep_seen = True
            spans.append(Span(ROLE_PREPOSITION, segment[0], segment[0] + 1))
            spans += _parse_object_region(tokens, segment, 1, ROLE_PREPOSITION_OBJECT)
            continue
        if prep_seen:
            continue
        np, pos = _parse_noun_phrase(tokens, segment, 0)
        if np is None:
            continue
        spans += _emit_noun_phrase(np, ROLE_DIRECT_OBJECT)
        pos = _parse_of_chain(tokens, segment, pos, spans)
        # a non-"of" preposition after the object opens the event preposition
        if pos < len(segment):
            trailing = tokens[segment[pos]]
            if trailing.pos == postag.PREP and trailing.surface.lower() != "of" and not prep_seen:
                prep_seen = True
                spans.append(Span(ROLE_PREPOSITION, segment[pos], segment[pos] + 1))
                spans += _parse_object_region(tokens, segment, pos + 1, ROLE_PREPOSITION_OBJECT)
    return spans


def _segment(tokens: list[Token], indices: list[int]) -> list[list[int]]:
    segments: list[list[int]] = [[]]
    previous = None
    for index in indices:
        token = tokens[index]
        breaking = (
            token.pos == postag.PUNCT
            or (token.pos == postag.CONJ and token.surface.lower() in ("or", "and"))
            or (previous is not None and index != previous + 1)
        )
        if breaking:
            if token.pos not in (postag.PUNCT, postag.CONJ):
                segments.append([index])
            else:
                segments.append([])
            previous = index
            continue
        segments[-1].append(index)
        previous = index
    return [s for s in segments if s]


def _parse_object_region(tokens: list[Token], segment: list[int], pos: int, role: str) -> list[Span]:
    spans: list[Span] = []
    np, pos = _parse_noun_phrase(tokens, segment, pos)
    if np is not None:
        spans += _emit_noun_phrase(np, role)
        _parse_of_chain(tokens, segment, pos, spans)
    return spans


def _parse_of_chain(tokens: list[Token], segment: list[int], pos: int, spans: list[Span]) -> int:
    while pos < len(segment):
        token = tokens[segment[pos]]
        if token.pos == postag.PREP and token.surface.lower() == "of":
            np, pos = _parse_noun_phrase(tokens, segment, pos + 1)
            if np is None:
                break
            spans += _emit_noun_phrase(np, ROLE_PREPOSITION_OBJECT)
            continue
        break
    return pos


def _emit_noun_phrase(np: _NounPhrase, head_role: str) -> list[Span]:
    if head_role == ROLE_DIRECT_OBJECT:
        modifier_role = ROLE_DIRECT_OBJECT_MODIFIER
    else:
        modifier_role = ROLE_PREPOSITION_OBJECT_MODIFIER
    spans = [Span(modifier_role, m, m + 1) for m in np.modifiers]
    spans.append(Span(head_role, np.head_start, np.head_end))
    return spans
