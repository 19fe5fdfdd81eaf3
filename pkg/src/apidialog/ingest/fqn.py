"""Resolution of simple method names to fully qualified names.

Relation triples mined from prose name methods like ``update()`` or
``Cipher.doFinal()``. Resolution matches them against the dictionary of
known fully qualified names, inferring the package where it is unique
and fanning bare name pairs out to every class containing both.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..kg.model import SemanticRelationKind

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SimpleNameTriple:
    """A mined triple whose endpoints are simple names, e.g. ``update()``."""

    left: str
    kind: SemanticRelationKind
    right: str


@dataclass(frozen=True, slots=True)
class _ParsedName:
    class_path: tuple[str, ...]  # possibly empty; may include package fragments
    method: str

    @property
    def qualified(self) -> bool:
        return bool(self.class_path)


def parse_simple_name(name: str) -> _ParsedName:
    """Split ``Class.method(...)`` into its dotted parts, dropping the parens."""
    cut = name.find("(")
    if cut >= 0:
        name = name[:cut]
    parts = [p for p in name.split(".") if p]
    if not parts:
        raise ValueError("empty method name: %r" % name)
    return _ParsedName(class_path=tuple(parts[:-1]), method=parts[-1])


class FqnDictionary:
    """Index of known fully qualified method names."""

    def __init__(self, fqns) -> None:
        #: (package.Class) -> method -> sorted fqns (overloads)
        self._classes: dict[str, dict[str, list[str]]] = {}
        for fqn in sorted(set(fqns)):
            head = fqn.split("(", 1)[0]
            parts = head.split(".")
            if len(parts) < 2:
                log.warning("skipping unqualifiable fqn %r", fqn)
                continue
            class_key = ".".join(parts[:-1])
            method = parts[-1]
            self._classes.setdefault(class_key, {}).setdefault(method, []).append(fqn)

    def __len__(self) -> int:
        return sum(len(m) for m in self._classes.values())

    def classes_with_method(self, method: str) -> list[str]:
        return sorted(k for k, methods in self._classes.items() if method in methods)

    def classes_matching(self, class_path: tuple[str, ...], method: str) -> list[str]:
        """Class keys whose trailing dotted parts equal ``class_path`` and
        that define ``method``."""
        suffix = list(class_path)
        out = []
        for key, methods in self._classes.items():
            if method not in methods:
                continue
            if key.split(".")[-len(suffix):] == suffix:
                out.append(key)
        return sorted(out)

    def first_overload(self, class_key: str, method: str) -> str:
        return self._classes[class_key][method][0]


def resolve_fqn(
    triple: SimpleNameTriple, dictionary: FqnDictionary
) -> list[tuple[str, SemanticRelationKind, str]]:
    """Resolve one simple-name triple to zero or more fully qualified triples.

    Unresolvable or ambiguous names drop the triple (with a log line)
    rather than failing the build.
    """
    try:
        left = parse_simple_name(triple.left)
        right = parse_simple_name(triple.right)
    except ValueError as exc:
        log.info("dropping malformed triple %s: %s", triple, exc)
        return []

    resolved: list[tuple[str, SemanticRelationKind, str]] = []
    if left.qualified and right.qualified:
        lfqn = _resolve_qualified(left, dictionary)
        rfqn = _resolve_qualified(right, dictionary)
        if lfqn and rfqn:
            resolved.append((lfqn, triple.kind, rfqn))
    elif not left.qualified and not right.qualified:
        shared = [
            key
            for key in dictionary.classes_with_method(left.method)
            if key in set(dictionary.classes_with_method(right.method))
        ]
        for key in shared:
            resolved.append(
                (
                    dictionary.first_overload(key, left.method),
                    triple.kind,
                    dictionary.first_overload(key, right.method),
                )
            )
    else:
        anchor, bare, flipped = (left, right, False) if left.qualified else (right, left, True)
        anchor_fqn = _resolve_qualified(anchor, dictionary)
        if anchor_fqn:
            anchor_class = anchor_fqn.split("(", 1)[0].rsplit(".", 1)[0]
            bare_fqn = _resolve_bare(bare, dictionary, preferred_class=anchor_class)
            if bare_fqn:
                pair = (bare_fqn, triple.kind, anchor_fqn) if flipped else (anchor_fqn, triple.kind, bare_fqn)
                resolved.append(pair)

    resolved = [t for t in resolved if t[0] != t[2]]
    if not resolved:
        log.info("could not resolve triple %s against %d names", triple, len(dictionary))
    return resolved


def _resolve_qualified(name: _ParsedName, dictionary: FqnDictionary) -> str | None:
    matches = dictionary.classes_matching(name.class_path, name.method)
    if len(matches) != 1:
        log.debug("%s.%s matches %d classes", ".".join(name.class_path), name.method, len(matches))
        return None
    return dictionary.first_overload(matches[0], name.method)


def _resolve_bare(
    name: _ParsedName, dictionary: FqnDictionary, *, preferred_class: str | None = None
) -> str | None:
    if preferred_class is not None:
        try:
            return dictionary.first_overload(preferred_class, name.method)
        except KeyError:
            pass
    matches = dictionary.classes_with_method(name.method)
    if len(matches) != 1:
        return None
    return dictionary.first_overload(matches[0], name.method)
