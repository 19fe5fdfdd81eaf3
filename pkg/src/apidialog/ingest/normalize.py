"""Description normalization: one sentence, no parentheses, uniform prefix."""

from __future__ import annotations

import re

from . import postag

_PAREN_RE = re.compile(r"\([^()]*\)")
_SENTENCE_END_RE = re.compile(r"[.!?](?=\s)")
_SPACE_BEFORE_PUNCT_RE = re.compile(r"\s+([,.;:!?])")

PREFIX = "This method "


def normalize_description(text: str) -> str:
    """Normalize a raw description to a single processable sentence.

    Parenthesized asides are dropped, whitespace is collapsed, only the
    first sentence is kept, and verb-initial sentences (optionally led by
    an adverb) gain the "This method " prefix with the original first
    word decapitalized.  Empty input comes back empty.
    """
    if not text:
        return ""
    # drop nested parens from the inside out
    previous = None
    while previous != text:
        previous = text
        text = _PAREN_RE.sub(" ", text)
    text = " ".join(text.split())
    text = _SPACE_BEFORE_PUNCT_RE.sub(r"\1", text)
    match = _SENTENCE_END_RE.search(text)
    if match:
        text = text[: match.end()]
    text = text.strip()
    if not text:
        return ""
    tokens = postag.tokenize(text)
    if not tokens:
        return ""
    if _starts_with_verb(tokens):
        text = text[0].lower() + text[1:]
        text = PREFIX + text
    return text


def _starts_with_verb(tokens: list[str]) -> bool:
    first = postag.tag(tokens[0], sentence_initial=True)
    if first == postag.VERB and tokens[0].lower() not in postag.AUXILIARIES:
        return True
    if first == postag.ADV and len(tokens) > 1:
        second = postag.tag(tokens[1])
        return second == postag.VERB and tokens[1].lower() not in postag.AUXILIARIES
    return False
