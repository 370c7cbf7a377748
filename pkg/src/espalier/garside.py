"""Dual-Garside (band generator) left normal form and staircase detection.

Simple elements of the dual structure on n strands are the non-crossing
partitions of {1..n}.  The partition with one block {1..n} is the dual
Garside element delta = s_1 s_2 ... s_{n-1}; the discrete partition is the
identity.  A block {b_1 < ... < b_k} stands for the chain of bands
a(b_1,b_2) a(b_2,b_3) ... a(b_{k-1},b_k); distinct blocks of a non-crossing
partition commute, so the partition determines the product.

The computational engine is the underlying permutation: the chain of a block
acts as the cycle b_{i+1} -> b_i (cyclically), the map partition -> permutation
is injective, and left-divisibility between simples is exactly refinement of
partitions.  Complements and quotients are computed on permutations and read
back as cycle decompositions, which the structure theory guarantees are again
descending cycles of a non-crossing partition (we assert this).

Every braid word equals delta^inf A_1 ... A_l for a unique left-weighted
sequence of proper simples: for consecutive (A, B) no band a with A.a simple
also left-divides B.  Negative letters enter through a^-1 = delta^-1 (delta a^-1)
with delta a^-1 simple, and delta powers migrate to the front through the
index-rotation automorphism tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .braid import (
    BandGenerator,
    BraidWord,
    Permutation,
    concat_all,
    cyclic_rotations,
)
from .errors import NotBKLPositive, StrandMismatch, ToolkitError

__all__ = [
    "NonCrossingPartition",
    "NormalForm",
    "StaircaseWitness",
    "delta",
    "band_to_simple",
    "simple_product",
    "left_complement",
    "left_normal_form",
    "words_equal",
    "tau_shift",
    "is_staircase",
]

Block = tuple[int, ...]


def delta(n: int) -> BraidWord:
    """The dual Garside element s_1 s_2 ... s_{n-1} as a word."""
    if n < 2:
        raise ToolkitError(f"delta needs at least 2 strands, got {n}")
    return BraidWord(n, tuple(BandGenerator(k, k + 1) for k in range(1, n)))


def _delta_permutation(n: int) -> Permutation:
    # delta sends 1 -> n and k -> k-1 for k >= 2.
    return Permutation(tuple([n] + list(range(1, n))))


@dataclass(frozen=True)
class NonCrossingPartition:
    """A non-crossing partition of {1..n}; blocks sorted, singletons included."""

    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        elements = [x for block in self.blocks for x in block]
        if sorted(elements) != list(range(1, self.n + 1)):
            raise ToolkitError(f"blocks do not partition 1..{self.n}: {self.blocks}")
        for block in self.blocks:
            if tuple(sorted(block)) != block:
                raise ToolkitError(f"block {block} is not sorted")
        if list(self.blocks) != sorted(self.blocks):
            raise ToolkitError("blocks are not in canonical order")
        pair = _interleaved_blocks(self.blocks)
        if pair is not None:
            raise ToolkitError(f"blocks {pair[0]} and {pair[1]} interleave")

    @staticmethod
    def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> "NonCrossingPartition":
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks if b))
        return NonCrossingPartition(n, canon)

    @staticmethod
    def identity(n: int) -> "NonCrossingPartition":
        return NonCrossingPartition(n, tuple((k,) for k in range(1, n + 1)))

    @staticmethod
    def full(n: int) -> "NonCrossingPartition":
        return NonCrossingPartition(n, (tuple(range(1, n + 1)),))

    @property
    def is_identity(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    @property
    def is_delta(self) -> bool:
        return len(self.blocks) == 1 and self.n > 1

    @property
    def length(self) -> int:
        """Band-letter length of the simple element: n minus the block count."""
        return self.n - len(self.blocks)

    def permutation(self) -> Permutation:
        images = list(range(1, self.n + 1))
        for block in self.blocks:
            k = len(block)
            for idx in range(k):
                # descending cycle: each element maps to its predecessor in the block
                images[block[idx] - 1] = block[idx - 1] if idx > 0 else block[k - 1]
        return Permutation(tuple(images))

    @staticmethod
    def from_permutation(perm: Permutation) -> "NonCrossingPartition":
        """Read a partition off the cycles; valid only for images of simples."""
        blocks = []
        for cycle in perm.cycles():
            block = tuple(sorted(cycle))
            blocks.append(block)
            # the cycle must descend through its sorted block
            for idx, x in enumerate(block):
                expected = block[idx - 1] if idx > 0 else block[-1]
                if perm(x) != expected:
                    raise ToolkitError(f"permutation cycle {cycle} is not a descending cycle")
        return NonCrossingPartition.from_blocks(perm.n, blocks)

    def refines(self, other: "NonCrossingPartition") -> bool:
        """Refinement order == left (and right) divisibility of simples."""
        membership = {}
        for idx, block in enumerate(other.blocks):
            for x in block:
                membership[x] = idx
        return all(len({membership[x] for x in block}) == 1 for block in self.blocks)

    def meet(self, other: "NonCrossingPartition") -> "NonCrossingPartition":
        """Common refinement: the lattice meet, i.e. the gcd of two simples."""
        if self.n != other.n:
            raise StrandMismatch("partition sizes differ")
        keys: dict[tuple[int, int], list[int]] = {}
        mine = {x: idx for idx, block in enumerate(self.blocks) for x in block}
        theirs = {x: idx for idx, block in enumerate(other.blocks) for x in block}
        for x in range(1, self.n + 1):
            keys.setdefault((mine[x], theirs[x]), []).append(x)
        return NonCrossingPartition.from_blocks(self.n, keys.values())

    def shift(self, offset: int) -> "NonCrossingPartition":
        """Conjugation by delta^offset: indices rotate by offset mod n."""
        n = self.n
        blocks = [tuple(sorted((x - 1 + offset) % n + 1 for x in block)) for block in self.blocks]
        return NonCrossingPartition.from_blocks(n, blocks)

    def to_word(self) -> BraidWord:
        """The chain word of each block, blocks in canonical order."""
        letters = []
        for block in self.blocks:
            letters.extend(BandGenerator(block[k], block[k + 1]) for k in range(len(block) - 1))
        return BraidWord(self.n, tuple(letters))

    def __str__(self) -> str:
        parts = ["{" + ",".join(map(str, b)) + "}" for b in self.blocks if len(b) > 1]
        return "".join(parts) if parts else "e"


def _interleaved_blocks(blocks: Sequence[Block]) -> tuple[Block, Block] | None:
    # Two blocks interleave iff some consecutive-element arcs cross; arcs within
    # one block share structure, so checking the chords (b_k, b_{k+1}) suffices.
    arcs = []
    for block in blocks:
        arcs.extend((block[k], block[k + 1], block) for k in range(len(block) - 1))
    for a in range(len(arcs)):
        i, j, one = arcs[a]
        for b in range(a + 1, len(arcs)):
            k, l, two = arcs[b]
            if (i < k < j < l or k < i < l < j) and one is not two:
                return one, two
    return None


def band_to_simple(g: BandGenerator, n: int) -> NonCrossingPartition:
    """The atom partition of a positive band: one block {i,j}, rest singletons."""
    if g.sign < 0:
        raise NotBKLPositive(f"{g} is negative; only positive bands are simple")
    if g.j > n:
        raise StrandMismatch(f"{g} does not fit on {n} strands")
    blocks = [(g.i, g.j)] + [(x,) for x in range(1, n + 1) if x not in (g.i, g.j)]
    return NonCrossingPartition.from_blocks(n, blocks)


def left_complement(a: NonCrossingPartition) -> NonCrossingPartition:
    """The unique simple C with a . C = delta."""
    d = _delta_permutation(a.n)
    return NonCrossingPartition.from_permutation(a.permutation().inverse().then(d))


def _delta_over(g: BandGenerator, n: int) -> NonCrossingPartition:
    """The simple delta . a(i,j)^-1 (used to absorb a negative letter)."""
    d = _delta_permutation(n)
    t = Permutation.transposition(n, g.i, g.j)
    return NonCrossingPartition.from_permutation(d.then(t))


def simple_product(a: NonCrossingPartition, b: NonCrossingPartition) -> NonCrossingPartition | None:
    """The partition of a.b when that product is still simple, else None.

    a.b is simple exactly when b left-divides the complement of a.
    """
    if a.n != b.n:
        raise StrandMismatch("partition sizes differ")
    if not b.refines(left_complement(a)):
        return None
    return NonCrossingPartition.from_permutation(a.permutation().then(b.permutation()))


def _left_quotient(h: NonCrossingPartition, b: NonCrossingPartition) -> NonCrossingPartition:
    """h^-1 . b for h a left divisor of b."""
    return NonCrossingPartition.from_permutation(h.permutation().inverse().then(b.permutation()))


def tau_shift(g: BandGenerator, n: int) -> BandGenerator:
    """Conjugation by delta: a(i,j) -> a(i+1,j+1) with indices cyclic in 1..n."""
    i = g.i % n + 1
    j = g.j % n + 1
    if i > j:
        i, j = j, i
    return BandGenerator(i, j, g.sign)


@dataclass(frozen=True)
class NormalForm:
    """delta^inf . A_1 ... A_l with proper simple factors, left-weighted."""

    n: int
    inf: int
    factors: tuple[NonCrossingPartition, ...]

    def __post_init__(self):
        for f in self.factors:
            if f.is_identity or f.is_delta:
                raise ToolkitError("normal form factors must be proper simples")
        for a, b in zip(self.factors, self.factors[1:]):
            if not left_complement(a).meet(b).is_identity:
                raise ToolkitError(f"factors {a} | {b} are not left-weighted")

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        parts = []
        if self.inf != 0 and self.n >= 2:
            d = delta(self.n)
            if self.inf > 0:
                parts.extend([d] * self.inf)
            else:
                inv = BraidWord(self.n, tuple(g.inverse() for g in reversed(d.letters)))
                parts.extend([inv] * (-self.inf))
        parts.extend(f.to_word() for f in self.factors)
        return concat_all(parts, self.n)

    def __str__(self) -> str:
        head = f"delta^{self.inf}"
        if not self.factors:
            return head
        return head + " | " + ";".join(str(f) for f in self.factors)


def _left_weight(n: int, inf: int, factors: list[NonCrossingPartition]) -> NormalForm:
    factors = [f for f in factors if not f.is_identity]
    changed = True
    while changed:
        changed = False
        # pull any full factor (a delta) to the front, rotating what it passes
        idx = 0
        while idx < len(factors):
            if factors[idx].is_delta:
                inf += 1
                for j in range(idx):
                    factors[j] = factors[j].shift(-1)
                del factors[idx]
                changed = True
            else:
                idx += 1
        # transfer every movable head one pair at a time, left to right
        for idx in range(len(factors) - 1):
            a, b = factors[idx], factors[idx + 1]
            head = left_complement(a).meet(b)
            if not head.is_identity:
                product = simple_product(a, head)
                assert product is not None
                factors[idx] = product
                factors[idx + 1] = _left_quotient(head, b)
                changed = True
        if changed:
            factors = [f for f in factors if not f.is_identity]
    return NormalForm(n, inf, tuple(factors))


def left_normal_form(word: BraidWord) -> NormalForm:
    """The left-weighted dual normal form of the word's braid element."""
    n = word.strands
    if n == 1:
        return NormalForm(1, 0, ())
    inf = 0
    factors: list[NonCrossingPartition] = []
    for g in word.letters:
        if g.sign > 0:
            factors.append(band_to_simple(g, n))
        else:
            # X . a^-1  =  X . delta^-1 . (delta a^-1)  =  delta^-1 . tau(X) . (delta a^-1)
            inf -= 1
            factors = [f.shift(1) for f in factors]
            factors.append(_delta_over(g, n))
    return _left_weight(n, inf, factors)


def words_equal(a: BraidWord, b: BraidWord) -> bool:
    """Whether two words represent the same braid element (normal forms agree)."""
    if a.strands != b.strands:
        raise StrandMismatch(f"words on {a.strands} and {b.strands} strands are incomparable")
    return left_normal_form(a) == left_normal_form(b)


@dataclass(frozen=True)
class StaircaseWitness:
    """Outcome of the staircase test; truthy iff the infimum is positive.

    When found, head is the delta word, tail the BKL-positive remainder P, and
    head.tail equals the witnessing rotation of the input.
    """

    staircase: bool
    inf: int
    rotation: int | None = None
    head: BraidWord | None = None
    tail: BraidWord | None = None

    def __bool__(self) -> bool:
        return self.staircase

    @property
    def word(self) -> BraidWord | None:
        if self.head is None or self.tail is None:
            return None
        return concat_all([self.head, self.tail], self.head.strands)


def is_staircase(word: BraidWord, up_to_rotation: bool = False) -> StaircaseWitness:
    """Detect a positive power of delta in the dual normal form.

    A BKL-positive word is a staircase braid iff its infimum is at least 1.
    With up_to_rotation, every cyclic rotation is tried (a sufficient check
    for the closure, which is rotation-invariant); the witness records which
    rotation succeeded and rewrites it as delta . P with P BKL-positive.
    """
    if not word.is_positive:
        raise NotBKLPositive("staircase detection is defined for BKL-positive words")
    n = word.strands
    rotations = cyclic_rotations(word) if up_to_rotation else [word]
    first_inf: int | None = None
    for r, rotated in enumerate(rotations):
        nf = left_normal_form(rotated)
        if first_inf is None:
            first_inf = nf.inf
        if nf.inf >= 1 and n >= 2:
            head = delta(n)
            tail = NormalForm(n, nf.inf - 1, nf.factors).to_word()
            return StaircaseWitness(True, nf.inf, rotation=r, head=head, tail=tail)
    return StaircaseWitness(False, first_inf if first_inf is not None else 0)
