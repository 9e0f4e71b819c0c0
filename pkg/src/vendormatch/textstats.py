"""Character-statistics text machinery.

Tokenization, n-gram candidate enumeration, and the composite relatedness
metric that drives instance extraction: a length-normalized Euclidean
distance over scaled character codes, plus a standard-deviation gap, plus
the variance of the difference vector. Smaller relatedness means more
related; identical phrases score exactly zero.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

# Character codes are divided by this so every element lies in [0, 1];
# 127 is the top of the 7-bit range the tokenizer guarantees.
CODE_SCALE = 127.0

_TOKEN_RE = re.compile(r"[a-z0-9]+")
_NON_ASCII_RE = re.compile(r"[^\x00-\x7f]")


@dataclass(frozen=True)
class Token:
    """A lowercase word with its ordinal position in the document."""

    text: str
    position: int


@dataclass(frozen=True)
class CandidateObject:
    """An n-gram phrase (1-3 tokens) with its occurrence count."""

    phrase: str
    length_tokens: int
    frequency: int


@dataclass(frozen=True)
class ObjectVector:
    """A phrase as scaled character codes with cached population statistics."""

    codes: tuple[float, ...]
    mean: float
    stddev: float

    @classmethod
    def from_codes(cls, codes: Iterable[float]) -> "ObjectVector":
        values = tuple(float(c) for c in codes)
        if not values:
            raise ValueError("object vector needs at least one element")
        mu = math.fsum(values) / len(values)
        var = math.fsum((c - mu) ** 2 for c in values) / len(values)
        return cls(codes=values, mean=mu, stddev=math.sqrt(var))

    def __len__(self) -> int:
        return len(self.codes)


def tokenize(text: str) -> list[Token]:
    """Split raw text into lowercase tokens.

    Every character that is not a letter or digit separates tokens.
    Characters above code point 127 are replaced by ``?`` before splitting
    (and a warning is logged), so tokens stay within the 7-bit range.
    """
    replaced, n_replaced = _NON_ASCII_RE.subn("?", text)
    if n_replaced:
        log.warning("replaced %d non-ascii character(s) with '?'", n_replaced)
    return [
        Token(match.group(), position)
        for position, match in enumerate(_TOKEN_RE.finditer(replaced.lower()))
    ]


def candidates(
    tokens: Sequence[Token], stopwords: frozenset[str] | set[str]
) -> list[CandidateObject]:
    """Enumerate unigram/bigram/trigram candidate phrases.

    An n-gram qualifies only if its first and last token are not stopwords
    (interior stopwords are fine, so "speed of wind" survives). Duplicate
    phrases are aggregated with summed frequency; output order is first
    occurrence, scanning start positions left to right and lengths 1..3.
    """
    words = [t.text for t in tokens]
    seen: dict[str, list[int]] = {}  # phrase -> [length_tokens, frequency]
    for start in range(len(words)):
        for n in (1, 2, 3):
            end = start + n
            if end > len(words):
                break
            if words[start] in stopwords or words[end - 1] in stopwords:
                continue
            phrase = " ".join(words[start:end])
            entry = seen.get(phrase)
            if entry is None:
                seen[phrase] = [n, 1]
            else:
                entry[1] += 1
    return [
        CandidateObject(phrase=p, length_tokens=ln, frequency=f)
        for p, (ln, f) in seen.items()
    ]


def encode(phrase: str) -> ObjectVector:
    """Map each character of the phrase (spaces included) to code point / 127."""
    if not phrase:
        raise ValueError("cannot encode an empty phrase")
    return ObjectVector.from_codes(ord(ch) / CODE_SCALE for ch in phrase)


def mean(v: ObjectVector) -> float:
    """Arithmetic mean of the code elements (cached at construction)."""
    return v.mean


def stddev(v: ObjectVector) -> float:
    """Population standard deviation of the code elements (divide by N)."""
    return v.stddev


def _padded(codes: tuple[float, ...], length: int) -> tuple[float, ...]:
    return codes + (0.0,) * (length - len(codes))


def euclidean(p: ObjectVector, q: ObjectVector) -> float:
    """Length-normalized Euclidean distance between two code vectors.

    The shorter vector is right-padded with zeros to the longer length L
    and the root of the squared-difference sum is divided by sqrt(L), so
    values stay comparable across phrase lengths.
    """
    length = max(len(p), len(q))
    a = _padded(p.codes, length)
    b = _padded(q.codes, length)
    total = math.fsum((y - x) ** 2 for x, y in zip(a, b))
    return math.sqrt(total) / math.sqrt(length)


def variance_pair(a: ObjectVector, b: ObjectVector) -> float:
    """Population variance of the element-wise difference vector.

    Both vectors are zero-padded to the common length first; identical
    vectors therefore give exactly zero, and the result is sign-invariant.
    """
    length = max(len(a), len(b))
    pa = _padded(a.codes, length)
    pb = _padded(b.codes, length)
    diff = [y - x for x, y in zip(pa, pb)]
    mu = math.fsum(diff) / length
    return math.fsum((d - mu) ** 2 for d in diff) / length


def relatedness(marked: ObjectVector, candidate: ObjectVector) -> float:
    """Composite relatedness between a marked object and a candidate.

    Sum of the normalized Euclidean distance, the absolute gap between the
    two standard deviations, and the variance of the difference vector.
    Non-negative; exactly zero when the two vectors are equal.
    """
    return (
        euclidean(marked, candidate)
        + abs(marked.stddev - candidate.stddev)
        + variance_pair(marked, candidate)
    )
