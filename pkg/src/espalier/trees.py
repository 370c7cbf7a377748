"""Espaliers: non-crossing spanning trees on {1..n} and the word classification.

An espalier is a tree whose vertices sit at 1..n on a line and whose edges can
be drawn below the line with disjoint interiors.  Combinatorially that is a
spanning tree with no two edges (i,j), (k,l) interleaved as i < k < j < l;
edges sharing an endpoint never cross.
"""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .braid import BraidWord
from .errors import InvalidEspalier, ParseError, StrandMismatch

__all__ = [
    "Espalier",
    "Kind",
    "Classification",
    "new_espalier",
    "linear",
    "classify",
    "enumerate_espaliers",
    "find_espalier",
    "parse_espalier",
    "format_espalier",
]

ENUMERATION_BOUND = 10

Edge = tuple[int, int]


@dataclass(frozen=True)
class Espalier:
    """A validated non-crossing spanning tree; edges are sorted (i,j) pairs with i < j."""

    vertices: int
    edges: tuple[Edge, ...]

    def generator_edges(self) -> tuple[Edge, ...]:
        """The edges, i.e. the index pairs of the tree's band generators."""
        return self.edges

    def __str__(self) -> str:
        return format_espalier(self)


class Kind(enum.Enum):
    T_POSITIVE = "TPositive"
    T_HOMOGENEOUS = "THomogeneous"
    NOT_T_WORD = "NotTWord"


@dataclass(frozen=True)
class Classification:
    """Outcome of matching a word against an espalier's generator set."""

    kind: Kind
    signs: Mapping[Edge, int] | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.kind is not Kind.NOT_T_WORD


def _crossing_pair(edges: Iterable[Edge]) -> tuple[Edge, Edge] | None:
    edges = sorted(edges)
    for a in range(len(edges)):
        i, j = edges[a]
        for b in range(a + 1, len(edges)):
            k, l = edges[b]
            if i < k < j < l or k < i < l < j:
                return edges[a], edges[b]
    return None


def new_espalier(n: int, edges: Iterable[Edge]) -> Espalier:
    """Validate and build; reports the failure (edge count, cycle, crossing pair)."""
    if n < 1:
        raise InvalidEspalier(f"vertex count must be positive, got {n}")
    normalized = []
    for i, j in edges:
        if i > j:
            i, j = j, i
        if i == j or i < 1 or j > n:
            raise InvalidEspalier(f"edge ({i},{j}) is not a pair of distinct vertices in 1..{n}")
        normalized.append((i, j))
    normalized = sorted(set(normalized))
    if len(normalized) != n - 1:
        raise InvalidEspalier(
            f"a tree on {n} vertices needs exactly {n - 1} distinct edges, got {len(normalized)}"
        )
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in normalized:
        ri, rj = find(i), find(j)
        if ri == rj:
            raise InvalidEspalier(f"edges contain a cycle through ({i},{j})")
        parent[ri] = rj
    crossing = _crossing_pair(normalized)
    if crossing is not None:
        raise InvalidEspalier(f"edges {crossing[0]} and {crossing[1]} cross")
    return Espalier(n, tuple(normalized))


def linear(n: int) -> Espalier:
    """The path 1-2-...-n; its generators are exactly the Artin generators."""
    if n < 1:
        raise InvalidEspalier(f"vertex count must be positive, got {n}")
    return Espalier(n, tuple((k, k + 1) for k in range(1, n)))


def classify(tree: Espalier, word: BraidWord) -> Classification:
    """T-positive / T-homogeneous / not-a-T-word, with the first offense reported.

    T-positive: every letter is a positive generator of the tree and every
    tree edge occurs.  T-homogeneous: every letter lies on a tree edge, every
    edge occurs, and each edge carries one constant sign.
    """
    if word.strands != tree.vertices:
        raise StrandMismatch(
            f"word on {word.strands} strands against espalier on {tree.vertices} vertices"
        )
    tree_edges = set(tree.edges)
    signs: dict[Edge, int] = {}
    for k, g in enumerate(word.letters):
        if g.edge not in tree_edges:
            return Classification(
                Kind.NOT_T_WORD, reason=f"letter #{k + 1} {g} is not a generator of the espalier"
            )
        if signs.setdefault(g.edge, g.sign) != g.sign:
            return Classification(
                Kind.NOT_T_WORD,
                reason=f"letter #{k + 1}: edge {g.edge} carries both signs",
            )
    missing = tree_edges - signs.keys()
    if missing:
        e = min(missing)
        return Classification(Kind.NOT_T_WORD, reason=f"edge {e} never appears in the word")
    kind = Kind.T_POSITIVE if all(s > 0 for s in signs.values()) else Kind.T_HOMOGENEOUS
    return Classification(kind, signs=dict(sorted(signs.items())))


# --- enumeration -------------------------------------------------------------
#
# Interval decomposition: for a tree on {lo..hi}, let m be the largest
# neighbour of lo.  Every edge then lies inside [lo,m] or [m,hi], the part on
# [lo,m] is a tree containing the edge (lo,m), and deleting that edge splits
# [lo,m] into two complementary interval trees.  This generates each tree
# exactly once.


def _shift(edges: tuple[Edge, ...], offset: int) -> tuple[Edge, ...]:
    return tuple((i + offset, j + offset) for i, j in edges)


@functools.cache
def _trees_of_length(length: int) -> tuple[tuple[Edge, ...], ...]:
    """All non-crossing spanning trees on {1..length}, as sorted edge tuples."""
    if length == 1:
        return ((),)
    out: list[tuple[Edge, ...]] = []
    for m in range(2, length + 1):
        for left in _trees_with_bridge(m):
            for right in _trees_of_length(length - m + 1):
                out.append(tuple(sorted(left + _shift(right, m - 1))))
    return tuple(out)


@functools.cache
def _trees_with_bridge(length: int) -> tuple[tuple[Edge, ...], ...]:
    """Trees on {1..length} containing the edge (1, length)."""
    out: list[tuple[Edge, ...]] = []
    for s in range(1, length):
        for a in _trees_of_length(s):
            for b in _trees_of_length(length - s):
                out.append(tuple(sorted(a + _shift(b, s) + ((1, length),))))
    return tuple(out)


def enumerate_espaliers(n: int, bound: int = ENUMERATION_BOUND) -> list[Espalier]:
    """Every espalier on {1..n} exactly once, in a fixed deterministic order."""
    if n < 1:
        raise InvalidEspalier(f"vertex count must be positive, got {n}")
    if n > bound:
        raise InvalidEspalier(f"enumeration bound exceeded: n={n} > {bound}")
    return [Espalier(n, edges) for edges in _trees_of_length(n)]


def find_espalier(word: BraidWord) -> tuple[Espalier, Classification] | None:
    """The unique espalier a T-word can belong to, or None.

    A word using exactly the edges of some espalier determines it: the support
    must be a non-crossing spanning tree of {1..strands}.  The classification
    may still come back NOT_T_WORD when an edge carries both signs.
    """
    support = sorted(word.support_edges())
    try:
        tree = new_espalier(word.strands, support)
    except InvalidEspalier:
        return None
    return tree, classify(tree, word)


# --- text format -------------------------------------------------------------

_ESPALIER_RE = re.compile(r"^n=(\d+);edges=(.*)$")
_EDGE_RE = re.compile(r"\((\d+),(\d+)\)")


def format_espalier(tree: Espalier) -> str:
    edges = ",".join(f"({i},{j})" for i, j in tree.edges)
    return f"n={tree.vertices}; edges={edges}"


def parse_espalier(text: str) -> Espalier:
    """Parse "n=<int>; edges=(i,j),(k,l),..." (whitespace-insensitive)."""
    squeezed = re.sub(r"\s+", "", text)
    m = _ESPALIER_RE.match(squeezed)
    if m is None:
        raise ParseError(f"not an espalier spec: {text!r}")
    n = int(m.group(1))
    body = m.group(2)
    edges = [(int(a), int(b)) for a, b in _EDGE_RE.findall(body)]
    leftover = _EDGE_RE.sub("", body).replace(",", "")
    if leftover:
        raise ParseError(f"unrecognized content in edge list: {leftover!r}")
    return new_espalier(n, edges)
