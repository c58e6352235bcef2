"""Token-stream phrase matching shared by stop-phrase removal and the
lexicon measures: left-to-right, longest phrase first, non-overlapping."""

from __future__ import annotations

from typing import Iterable, Sequence

PhraseIndex = dict[str, list[tuple[str, ...]]]


def phrase_index(phrases: Iterable[str]) -> PhraseIndex:
    """Group token-tuple phrases by first token, longest first per group."""
    index: PhraseIndex = {}
    for phrase in phrases:
        parts = tuple(phrase.split())
        if parts:
            index.setdefault(parts[0], []).append(parts)
    for candidates in index.values():
        candidates.sort(key=lambda t: (-len(t), t))
    return index


def longest_match_at(tokens: Sequence[str], i: int, index: PhraseIndex) -> int:
    """Length of the longest phrase matching at position i, or 0."""
    for phrase in index.get(tokens[i], ()):
        k = len(phrase)
        if tuple(tokens[i : i + k]) == phrase:
            return k
    return 0
