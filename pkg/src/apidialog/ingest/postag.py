"""Small deterministic part-of-speech tagger for API description prose.

Lexicon plus suffix heuristics; nothing statistical, so the same sentence
always tags the same way. Tags use coarse universal-style classes.
"""

from __future__ import annotations

import re

VERB = "VERB"
NOUN = "NOUN"
PROPN = "PROPN"
ADJ = "ADJ"
ADV = "ADV"
NUM = "NUM"
DET = "DET"
PREP = "PREP"
PRON = "PRON"
CONJ = "CONJ"
PUNCT = "PUNCT"

DETERMINERS = {
    "a", "an", "the", "this", "these", "those", "its", "their", "his",
    "her", "your", "our", "my", "all", "any", "each", "every", "some", "no",
    "another", "both",
}

PRONOUNS = {"it", "they", "he", "she", "we", "you", "i", "them", "him", "us",
            "which", "who", "whom", "whose", "what", "that"}

PREPOSITIONS = {
    "of", "to", "from", "with", "without", "on", "onto", "in", "into", "at",
    "by", "for", "as", "down", "up", "over", "under", "through", "about",
    "between", "against", "during", "within", "across", "via", "per",
    "toward", "towards", "upon",
}

CONJUNCTIONS = {"and", "or", "but", "nor", "so", "if", "when", "while",
                "after", "before", "because", "although", "unless", "until",
                "once", "whether"}

ADVERBS = {
    "fully", "partially", "not", "also", "only", "again", "always", "never",
    "already", "currently", "immediately", "later", "then", "too", "very",
    "first", "last", "once", "twice", "forward", "backward", "here", "there",
}

NUMBER_WORDS = {"zero", "one", "two", "three", "four", "five", "six", "seven",
                "eight", "nine", "ten"}

#: java built-in data types; a leading such word in a compound noun is a
#: type modifier ("double value"), never the object head.
JAVA_TYPE_WORDS = {"byte", "int", "integer", "float", "char", "boolean",
                   "double", "long", "short"}

ADJECTIVES = {
    "absolute", "canonical", "current", "full", "empty", "new", "old",
    "default", "specific", "unique", "valid", "invalid", "real", "raw",
    "binary", "mutable", "immutable", "safe", "unsafe", "next", "previous",
    "same", "different", "whole", "single", "multiple", "original", "given",
    "underlying", "internal", "external", "remote", "local", "relative",
    "native", "primitive", "abstract", "temporary", "secure", "modifiable",
    "available", "readable", "writable", "open", "closed", "deep", "shallow",
    "lazy", "eager", "pretty", "human",
}

VERB_STEMS = {
    "return", "get", "set", "convert", "write", "read", "create", "add",
    "remove", "find", "fetch", "destroy", "parse", "move", "close", "open",
    "obtain", "produce", "test", "check", "delete", "append", "insert",
    "compare", "copy", "compute", "build", "make", "invoke", "call",
    "register", "unregister", "notify", "throw", "cause", "determine",
    "ensure", "join", "form", "comprise", "represent", "reclaim", "serve",
    "satisfy", "contain", "provide", "specify", "use", "perform", "apply",
    "store", "load", "save", "send", "receive", "print", "format", "replace",
    "split", "trim", "sort", "search", "iterate", "map", "filter", "collect",
    "reduce", "wait", "sleep", "start", "stop", "run", "execute", "flush",
    "reset", "clear", "mark", "skip", "seek", "update", "encode", "decode",
    "encrypt", "decrypt", "sign", "verify", "hash", "digest", "allocate",
    "release", "acquire", "lock", "unlock", "bind", "connect", "disconnect",
    "listen", "accept", "resolve", "validate", "normalize", "transform",
    "merge", "retrieve", "lookup", "look", "schedule", "cancel", "resume",
    "suspend", "refresh", "render", "draw", "paint", "play", "record",
    "initialize", "configure", "install", "process", "handle", "dispatch",
    "emit", "consume", "publish", "subscribe", "wrap", "unwrap", "attach",
    "detach", "enable", "disable", "mask", "shift", "rotate", "scale",
    "translate", "describe", "report", "count", "measure", "estimate",
    "sample", "generate", "select", "choose", "pick", "assign", "deliver",
    "forward", "redirect", "drain", "fill", "pad", "truncate", "expand",
    "compress", "decompress", "archive", "extract", "deploy", "spawn",
    "terminate", "kill", "restart", "reload", "poll", "push", "pop", "peek",
    "enqueue", "dequeue", "offer", "take", "put", "give", "show", "hide",
    "display", "reveal", "signal", "broadcast", "reply", "respond",
    "request", "query", "scan", "walk", "traverse", "visit", "climb",
    "project", "group", "partition", "divide", "multiply", "subtract",
    "negate", "increment", "decrement", "accumulate", "aggregate", "flatten",
    "zip", "unzip", "slice", "splice", "paste", "cut", "erase", "wipe",
    "purge", "evict", "expire", "touch", "rename", "link", "unlink", "mount",
    "unmount", "seal", "freeze", "thaw", "clone", "snapshot", "restore",
    "backup", "sync", "synchronize", "await", "yield", "block", "unblock",
    "do", "be", "have", "is", "are", "has", "can", "may", "will", "shall",
    "must", "need", "want", "prefer", "define", "work",
}

#: frequent API-doc nouns the adjective suffix heuristics would misread
NOUNS = {
    "component", "event", "element", "argument", "document", "environment",
    "statement", "segment", "comment", "content", "parent", "client",
    "agent", "constant", "increment", "instrument", "equipment", "fragment",
    "alignment", "assignment", "requirement", "management", "moment",
    "interval", "literal", "numeral", "signal", "arrival", "removal",
    "retrieval", "approval", "traversal", "credential", "channel", "panel",
    "label", "level", "model", "kernel",
}

AUXILIARIES = {"is", "are", "be", "been", "being", "was", "were", "has",
               "have", "had", "can", "could", "may", "might", "will",
               "would", "shall", "should", "must", "does", "do", "did"}

_TOKEN_RE = re.compile(r"[A-Za-z0-9$][\w$-]*|[,.;:!?]")


def tokenize(text: str) -> list[str]:
    """Split text into word and punctuation tokens."""
    return _TOKEN_RE.findall(text)


def verb_stem(word: str) -> str | None:
    """Map an inflected verb to its stem, or None if not a known verb."""
    lower = word.lower()
    candidates = [lower]
    if lower.endswith("ies") and len(lower) > 4:
        candidates.append(lower[:-3] + "y")
    if lower.endswith("es") and len(lower) > 3:
        candidates.append(lower[:-2])
    if lower.endswith("s") and not lower.endswith("ss") and len(lower) > 2:
        candidates.append(lower[:-1])
    for candidate in candidates:
        if candidate in VERB_STEMS:
            return candidate
    return None


def _participle_stem(word: str) -> str | None:
    lower = word.lower()
    candidates = []
    if lower.endswith("ing") and len(lower) > 4:
        base = lower[:-3]
        candidates += [base, base + "e", base[:-1] if len(base) > 2 and base[-1] == base[-2] else base]
    if lower.endswith("ied") and len(lower) > 4:
        candidates.append(lower[:-3] + "y")
    if lower.endswith("ed") and len(lower) > 3:
        base = lower[:-2]
        candidates += [base, base + "e" if not base.endswith("e") else base,
                       base[:-1] if len(base) > 2 and base[-1] == base[-2] else base]
        candidates.append(lower[:-1])
    for candidate in candidates:
        if candidate in VERB_STEMS:
            return candidate
    return None


def tag(token: str, *, sentence_initial: bool = False) -> str:
    """Part-of-speech class for one token."""
    if not token[0].isalnum():
        return PUNCT
    lower = token.lower()
    if token.replace(".", "", 1).isdigit():
        return NUM
    if lower in NUMBER_WORDS:
        return NUM
    if lower in DETERMINERS:
        return DET
    if lower in PRONOUNS:
        return PRON
    if lower in CONJUNCTIONS:
        return CONJ
    if lower in PREPOSITIONS:
        return PREP
    if lower in ADVERBS or (lower.endswith("ly") and len(lower) > 3):
        return ADV
    # exact adjective hits outrank verb stemming: "open"/"closed"/"given"
    # modify nouns far more often than they head a javadoc sentence
    if lower in ADJECTIVES:
        return ADJ
    if verb_stem(lower) is not None or _participle_stem(lower) is not None:
        return VERB
    if lower in JAVA_TYPE_WORDS or lower in NOUNS:
        return NOUN
    if not sentence_initial and any(ch.isupper() for ch in token):
        return PROPN
    if lower.endswith(("ive", "ous", "able", "ible", "ful", "less", "ant", "ent", "ic", "al")):
        return ADJ
    return NOUN


def tag_all(tokens: list[str]) -> list[str]:
    return [tag(tok, sentence_initial=(i == 0)) for i, tok in enumerate(tokens)]
