"""Rooted IS-A concept graph with depth, LCS, and similarity scoring.

The taxonomy is a DAG loaded from an edge-list file (``<child>\\t<parent>``
per line); the unique parentless concept is the root. Depth counts from 1
at the root (minimum over parents below it), which guarantees every
similarity score is strictly positive. Immutable after construction.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .stopwords import DEFAULT_STOPWORDS

log = logging.getLogger(__name__)


class TaxonomyError(ValueError):
    """Structural problem in a taxonomy: cycles, root count, dangling refs."""


@dataclass(frozen=True)
class Concept:
    id: str
    parents: frozenset[str]
    depth: int


@dataclass(frozen=True)
class SimilarityScore:
    """A similarity value plus, when a single LCS exists, its concept id."""

    value: float
    lcs_id: str | None = None


class Taxonomy:
    """Validated concept graph; use :meth:`build` or :func:`load_taxonomy`."""

    def __init__(
        self,
        concepts: dict[str, Concept],
        root: str,
        ancestors: dict[str, frozenset[str]],
    ) -> None:
        self.concepts = concepts
        self.root = root
        self._ancestors = ancestors

    @classmethod
    def build(cls, parent_map: Mapping[str, Iterable[str]]) -> "Taxonomy":
        """Validate a child -> parents map and compute depths and ancestors.

        Raises TaxonomyError for dangling parent references, cycles
        (naming a member), and a root count other than one.
        """
        parents: dict[str, frozenset[str]] = {
            child.lower(): frozenset(p.lower() for p in ps)
            for child, ps in parent_map.items()
        }
        for child, ps in parents.items():
            for parent in ps:
                if parent not in parents:
                    raise TaxonomyError(
                        f"dangling parent reference: {child!r} -> {parent!r}"
                    )

        # Kahn's algorithm over parent links; leftovers form cycles.
        remaining = {c: len(ps) for c, ps in parents.items()}
        children: dict[str, list[str]] = {c: [] for c in parents}
        for child, ps in parents.items():
            for parent in ps:
                children[parent].append(child)
        queue = deque(sorted(c for c, n in remaining.items() if n == 0))
        order: list[str] = []
        while queue:
            concept = queue.popleft()
            order.append(concept)
            for child in sorted(children[concept]):
                remaining[child] -= 1
                if remaining[child] == 0:
                    queue.append(child)
        if len(order) < len(parents):
            member = min(c for c, n in remaining.items() if n > 0)
            raise TaxonomyError(f"cycle detected involving concept {member!r}")

        roots = sorted(c for c, ps in parents.items() if not ps)
        if not roots:
            raise TaxonomyError("taxonomy has no root concept")
        if len(roots) > 1:
            raise TaxonomyError(f"taxonomy has multiple roots: {roots}")
        root = roots[0]

        depth: dict[str, int] = {}
        ancestors: dict[str, frozenset[str]] = {}
        for concept in order:  # parents always precede children
            ps = parents[concept]
            if not ps:
                depth[concept] = 1
                ancestors[concept] = frozenset({concept})
            else:
                depth[concept] = 1 + min(depth[p] for p in ps)
                merged: set[str] = {concept}
                for p in ps:
                    merged |= ancestors[p]
                ancestors[concept] = frozenset(merged)

        concepts = {
            c: Concept(id=c, parents=parents[c], depth=depth[c]) for c in parents
        }
        return cls(concepts=concepts, root=root, ancestors=ancestors)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]]) -> "Taxonomy":
        parent_map: dict[str, set[str]] = {}
        for child, parent in edges:
            child, parent = child.lower(), parent.lower()
            parent_map.setdefault(child, set()).add(parent)
            parent_map.setdefault(parent, set())
        return cls.build(parent_map)

    def depth(self, concept_id: str) -> int:
        return self._concept(concept_id).depth

    def ancestors(self, concept_id: str) -> frozenset[str]:
        """All concepts subsuming this one, itself included."""
        if concept_id not in self._ancestors:
            raise KeyError(f"unknown concept: {concept_id!r}")
        return self._ancestors[concept_id]

    def _concept(self, concept_id: str) -> Concept:
        try:
            return self.concepts[concept_id]
        except KeyError:
            raise KeyError(f"unknown concept: {concept_id!r}") from None

    def __contains__(self, concept_id: str) -> bool:
        return concept_id in self.concepts

    def __len__(self) -> int:
        return len(self.concepts)


def load_taxonomy(path: Path | str) -> Taxonomy:
    """Parse an edge-list file into a validated Taxonomy.

    One edge per line, ``<child>\\t<parent>``; ids are lowercased; blank
    lines are ignored. Malformed lines raise TaxonomyError with the line
    number.
    """
    path = Path(path)
    edges: list[tuple[str, str]] = []
    with open(path, encoding="utf-8", newline="") as fh:
        content = fh.read()
    for lineno, line in enumerate(content.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise TaxonomyError(
                f"{path}: line {lineno}: expected '<child>\\t<parent>', got {line!r}"
            )
        edges.append((parts[0], parts[1]))
    return Taxonomy.from_edges(edges)


def lcs(t: Taxonomy, a: str, b: str) -> str:
    """Least common subsumer: the deepest concept subsuming both inputs.

    Ancestor sets include the concept itself, so lcs(x, x) == x. Equal-depth
    ties break to the lexicographically smallest id.
    """
    common = t.ancestors(a) & t.ancestors(b)
    return min(common, key=lambda c: (-t.depth(c), c))


def wup_score(t: Taxonomy, a: str, b: str) -> SimilarityScore:
    """Concept similarity: 2 * depth(LCS) / (depth(a) + depth(b)).

    With the root at depth 1 the value always lies in (0, 1]; it is 1
    exactly when the two concepts coincide on a tree.
    """
    subsumer = lcs(t, a, b)
    value = 2.0 * t.depth(subsumer) / (t.depth(a) + t.depth(b))
    return SimilarityScore(value=value, lcs_id=subsumer)


def _token_pair_score(t: Taxonomy, x: str, y: str) -> float:
    if x in t and y in t:
        return wup_score(t, x, y).value
    if x not in t and y not in t and x == y:
        return 1.0
    log.debug("untaxonomized token pair: %r / %r", x, y)
    return 0.0


def phrase_score(
    t: Taxonomy,
    a: str,
    b: str,
    stopwords: frozenset[str] | set[str] = DEFAULT_STOPWORDS,
) -> SimilarityScore:
    """Phrase-level similarity via symmetrized greedy token alignment.

    Stopwords are removed first; each remaining token resolves to a concept
    by exact id match. A token pair scores its concept similarity when both
    resolve, 1.0 when neither resolves but the strings are equal, and 0
    otherwise. The phrase score averages each side's best-match mean, so
    permutations of the same token set always score 1.0. If either phrase
    is nothing but stopwords, falls back to whole-phrase string equality.
    """
    tokens_a = [w for w in a.lower().split() if w not in stopwords]
    tokens_b = [w for w in b.lower().split() if w not in stopwords]
    if not tokens_a or not tokens_b:
        return SimilarityScore(value=1.0 if a.lower() == b.lower() else 0.0)
    if len(tokens_a) == 1 and len(tokens_b) == 1:
        x, y = tokens_a[0], tokens_b[0]
        if x in t and y in t:
            return wup_score(t, x, y)

    def directed(src: list[str], dst: list[str]) -> float:
        best = (max(_token_pair_score(t, x, y) for y in dst) for x in src)
        return math.fsum(best) / len(src)

    value = (directed(tokens_a, tokens_b) + directed(tokens_b, tokens_a)) / 2.0
    return SimilarityScore(value=value)
