"""Connected sums of braid words and espaliers.

Two knot-closure words on n1 and n2 strands embed side by side into
B_{n1+n2-1}: the left word keeps its indices, the right word's indices shift
up by n1 - 1 so the two share exactly one strand.  The closure of the
concatenation is the connected sum, and any interleaving (shuffle) of the two
letter sequences closes to a braided Stallings plumbing of the same pieces.
"""

from __future__ import annotations

from typing import Sequence

from .braid import BandGenerator, BraidWord, closure_components
from .errors import MultiComponentClosure, ToolkitError
from .trees import Espalier, new_espalier

__all__ = [
    "shift_embed_left",
    "shift_embed_right",
    "connected_sum_words",
    "espalier_sum",
]


def shift_embed_left(a: BraidWord, other_strands: int) -> BraidWord:
    """Reinterpret `a` on a.strands + other_strands - 1 strands, indices unchanged."""
    return BraidWord(a.strands + other_strands - 1, a.letters)


def shift_embed_right(b: BraidWord, left_strands: int) -> BraidWord:
    """Embed `b` with every index shifted by left_strands - 1, signs preserved."""
    offset = left_strands - 1
    letters = tuple(BandGenerator(g.i + offset, g.j + offset, g.sign) for g in b.letters)
    return BraidWord(b.strands + offset, letters)


def connected_sum_words(
    a: BraidWord,
    b: BraidWord,
    shuffle: Sequence[int] | None = None,
    force: bool = False,
) -> BraidWord:
    """A word on n1+n2-1 strands whose closure is (closure a) # (closure b).

    The default letter order is plain concatenation; a shuffle is a 0/1
    sequence (0 = next letter from a, 1 = from b) giving any braided Stallings
    plumbing of the two surfaces.  Multi-component inputs are rejected unless
    force is set, since the # interpretation is stated for knots.
    """
    for name, w in (("left", a), ("right", b)):
        components = closure_components(w)
        if components != 1 and not force:
            raise MultiComponentClosure(
                f"{name} word closes to a {components}-component link; "
                "connected sum is defined for knots (pass force=True to experiment)",
                components=components,
            )
    left = shift_embed_left(a, b.strands)
    right = shift_embed_right(b, a.strands)
    if shuffle is None:
        return BraidWord(left.strands, left.letters + right.letters)
    if sorted(shuffle) != [0] * len(a.letters) + [1] * len(b.letters):
        raise ToolkitError(
            f"shuffle must contain {len(a.letters)} zeros and {len(b.letters)} ones"
        )
    army = iter(left.letters)
    bees = iter(right.letters)
    letters = tuple(next(bees) if pick else next(army) for pick in shuffle)
    return BraidWord(left.strands, letters)


def espalier_sum(t1: Espalier, t2: Espalier) -> Espalier:
    """Vertex sum gluing the right-most vertex of t1 to the left-most of t2."""
    offset = t1.vertices - 1
    edges = list(t1.edges) + [(i + offset, j + offset) for i, j in t2.edges]
    return new_espalier(t1.vertices + t2.vertices - 1, edges)
