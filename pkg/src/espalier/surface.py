"""Combinatorial accounting of braided Seifert surfaces.

The surface of a word on n strands has one disk per strand and one
half-twisted band per letter, so chi = strands - length.  Genus and the
Murasugi summand data are read off the word; whether the formula genus is the
Seifert genus is the caller's hypothesis (true for BKL-positive and
T-homogeneous words).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .braid import BandGenerator, BraidWord, closure_components, exponent_sum_by_edge
from .errors import HomogenizeError, MultiComponentClosure, ToolkitError
from .trees import Espalier, Kind, classify

__all__ = [
    "BraidedSurface",
    "MurasugiSummand",
    "MurasugiData",
    "braided_surface",
    "euler_characteristic",
    "genus_of_knot_closure",
    "murasugi_decomposition",
    "homogenize",
]


@dataclass(frozen=True)
class BraidedSurface:
    disks: int
    bands: tuple[BandGenerator, ...]

    @property
    def euler_characteristic(self) -> int:
        return self.disks - len(self.bands)


def braided_surface(word: BraidWord) -> BraidedSurface:
    return BraidedSurface(word.strands, word.letters)


def euler_characteristic(word: BraidWord) -> int:
    return word.strands - len(word.letters)


def genus_of_knot_closure(word: BraidWord) -> int:
    """(1 - chi)/2 for a knot closure; rejects links."""
    components = closure_components(word)
    if components != 1:
        raise MultiComponentClosure(
            f"genus formula needs a knot closure, got {components} components",
            components=components,
        )
    chi = euler_characteristic(word)
    # chi = 1 - 2g is odd for knots
    if (1 - chi) % 2 != 0:
        raise ToolkitError(f"chi = {chi} is impossible for a knot closure")
    return (1 - chi) // 2


@dataclass(frozen=True)
class MurasugiSummand:
    edge: tuple[int, int]
    exponent_sum: int

    @property
    def label(self) -> str:
        return f"F_{{2,{self.exponent_sum}}}"


@dataclass(frozen=True)
class MurasugiData:
    """Summands F_{2,t} in a leaf-peeling order of the tree's edges."""

    espalier: Espalier
    summands: tuple[MurasugiSummand, ...]

    def to_json(self) -> str:
        return json.dumps([{"edge": list(s.edge), "t": s.exponent_sum} for s in self.summands])


def _leaf_peeling_order(tree: Espalier) -> list[tuple[int, int]]:
    # peel the lexicographically smallest leaf edge of what remains
    remaining = set(tree.edges)
    degree = {v: 0 for v in range(1, tree.vertices + 1)}
    for i, j in remaining:
        degree[i] += 1
        degree[j] += 1
    order = []
    while remaining:
        edge = min(e for e in remaining if degree[e[0]] == 1 or degree[e[1]] == 1)
        order.append(edge)
        remaining.remove(edge)
        degree[edge[0]] -= 1
        degree[edge[1]] -= 1
    return order


def murasugi_decomposition(tree: Espalier, word: BraidWord) -> MurasugiData:
    """Summand data of the iterated Murasugi sum carried by a T-homogeneous word."""
    outcome = classify(tree, word)
    if outcome.kind is Kind.NOT_T_WORD:
        raise ToolkitError(f"word is not T-homogeneous for this espalier: {outcome.reason}")
    sums = exponent_sum_by_edge(word)
    summands = tuple(
        MurasugiSummand(edge, sums[edge]) for edge in _leaf_peeling_order(tree)
    )
    return MurasugiData(tree, summands)


def homogenize(tree: Espalier, word: BraidWord) -> BraidWord:
    """Flip each lone negative letter positive; output is T-positive.

    Requires a T-homogeneous word whose edges all have exponent sum >= -1, so
    every negative edge carries exactly one letter.  The closure is unchanged
    (the single band disconnects the surface, and rotating the cut-off piece
    turns the band positive); callers verify that externally through the
    invariants oracle.
    """
    outcome = classify(tree, word)
    if outcome.kind is Kind.NOT_T_WORD:
        raise ToolkitError(f"word is not T-homogeneous for this espalier: {outcome.reason}")
    sums = exponent_sum_by_edge(word)
    bad = sorted(e for e, t in sums.items() if t <= -2)
    if bad:
        raise HomogenizeError(
            f"homogenization hypothesis violated: edge {bad[0]} has exponent sum {sums[bad[0]]}"
        )
    letters = tuple(
        BandGenerator(g.i, g.j, 1) if g.sign < 0 else g for g in word.letters
    )
    return BraidWord(word.strands, letters)
