"""Band-generator braid words: parsing, Artin expansion, and bookkeeping.

A word is stored exactly as written.  No free reduction or rewriting ever
happens implicitly, because the braided-surface accounting reads the literal
letter sequence (it is *not* invariant under the trivial group relations).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import ParseError, StrandMismatch

__all__ = [
    "BandGenerator",
    "BraidWord",
    "Permutation",
    "parse_braid",
    "format_braid",
    "to_artin",
    "free_reduce",
    "exponent_sum",
    "exponent_sum_by_edge",
    "underlying_permutation",
    "closure_components",
    "concat",
    "concat_all",
    "invert",
    "conjugate",
    "cyclic_rotations",
]


@dataclass(frozen=True, order=True)
class BandGenerator:
    """The band a(i,j) (1 <= i < j) taking strand i over to strand j, signed."""

    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ParseError(f"band generator needs 1 <= i < j, got a({self.i},{self.j})")
        if self.sign not in (1, -1):
            raise ParseError(f"band generator sign must be +1 or -1, got {self.sign}")

    @property
    def edge(self) -> tuple[int, int]:
        return (self.i, self.j)

    @property
    def is_adjacent(self) -> bool:
        return self.j == self.i + 1

    def inverse(self) -> "BandGenerator":
        return BandGenerator(self.i, self.j, -self.sign)

    def __str__(self) -> str:
        return f"a({self.i},{self.j})" + ("" if self.sign > 0 else "^-1")


@dataclass(frozen=True)
class BraidWord:
    """A sequence of band generators on a declared number of strands."""

    strands: int
    letters: tuple[BandGenerator, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ParseError(f"strand count must be positive, got {self.strands}")
        for g in self.letters:
            if g.j > self.strands:
                raise ParseError(f"letter {g} exceeds strand count {self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BandGenerator]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_braid(self)

    @property
    def is_positive(self) -> bool:
        """True when every letter is a positive band generator (BKL-positive)."""
        return all(g.sign > 0 for g in self.letters)

    def support_edges(self) -> set[tuple[int, int]]:
        return {g.edge for g in self.letters}


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; images[k-1] is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ParseError(f"not a bijection of 1..{n}: {self.images}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """The composite 'apply self first, then other'."""
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition including fixed points, each cycle starting at its minimum."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cycle))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())


# --- text format -----------------------------------------------------------
#
# word   := WS* (term WS*)*
# term   := gen power?
# gen    := 's' INT | 'a' INT | 'a' '(' INT ',' INT ')'
# power  := '^' '-'? INT
#
# 's1' and 'a1' are both shorthand for a(1,2).

_GEN_RE = re.compile(r"s(\d+)|a\((\d+)\s*,\s*(\d+)\)|a(\d+)")
_POW_RE = re.compile(r"\^(-?\d+)")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse braid-word text; infer the strand count from indices when omitted."""
    letters: list[BandGenerator] = []
    needed = 1
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _GEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unrecognized token {text[pos:pos + 8]!r}", position=pos)
        if m.group(1) is not None:
            i, j = int(m.group(1)), int(m.group(1)) + 1
        elif m.group(4) is not None:
            i, j = int(m.group(4)), int(m.group(4)) + 1
        else:
            i, j = int(m.group(2)), int(m.group(3))
        if i < 1:
            raise ParseError("strand indices are 1-based", position=pos)
        if i >= j:
            raise ParseError(f"band generator needs i < j, got a({i},{j})", position=pos)
        pos = m.end()
        exponent = 1
        pm = _POW_RE.match(text, pos)
        if pm is not None:
            exponent = int(pm.group(1))
            pos = pm.end()
        sign = 1 if exponent >= 0 else -1
        letters.extend(BandGenerator(i, j, sign) for _ in range(abs(exponent)))
        needed = max(needed, j)
    if strands is None:
        strands = needed
    elif strands < needed:
        raise ParseError(f"word needs {needed} strands but only {strands} declared")
    return BraidWord(strands, tuple(letters))


def format_braid(word: BraidWord) -> str:
    """Canonical serialization: runs of equal letters become a(i,j)^k."""
    parts = []
    for (i, j, sign), group in itertools.groupby(word.letters, key=lambda g: (g.i, g.j, g.sign)):
        k = sum(1 for _ in group) * sign
        parts.append(f"a({i},{j})" if k == 1 else f"a({i},{j})^{k}")
    return " ".join(parts)


# --- elementary operations ---------------------------------------------------


def to_artin(word: BraidWord) -> BraidWord:
    """Expand every band into adjacent generators.

    a(i,j) becomes s_i ... s_{j-2} s_{j-1} s_{j-2}^-1 ... s_i^-1; an inverse
    band expands to the inverse word.  The result represents the same braid.
    """
    out: list[BandGenerator] = []
    for g in word.letters:
        if g.is_adjacent:
            out.append(g)
            continue
        conj = [BandGenerator(k, k + 1) for k in range(g.i, g.j - 1)]
        out.extend(conj)
        out.append(BandGenerator(g.j - 1, g.j, g.sign))
        out.extend(c.inverse() for c in reversed(conj))
    return BraidWord(word.strands, tuple(out))


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent a(i,j) a(i,j)^-1 pairs until none remain."""
    stack: list[BandGenerator] = []
    for g in word.letters:
        if stack and stack[-1].edge == g.edge and stack[-1].sign == -g.sign:
            stack.pop()
        else:
            stack.append(g)
    return BraidWord(word.strands, tuple(stack))


def exponent_sum(word: BraidWord) -> int:
    return sum(g.sign for g in word.letters)


def exponent_sum_by_edge(word: BraidWord) -> Mapping[tuple[int, int], int]:
    """Signed letter count per band edge; edges never used are absent."""
    sums: dict[tuple[int, int], int] = {}
    for g in word.letters:
        sums[g.edge] = sums.get(g.edge, 0) + g.sign
    return sums


def underlying_permutation(word: BraidWord) -> Permutation:
    """Image of the word in the symmetric group (each band acts as the transposition (i j))."""
    perm = Permutation.identity(word.strands)
    for g in word.letters:
        perm = perm.then(Permutation.transposition(word.strands, g.i, g.j))
    return perm


def closure_components(word: BraidWord) -> int:
    """Number of link components of the closure: cycles of the permutation."""
    return underlying_permutation(word).cycle_count()


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatch(f"cannot concatenate words on {a.strands} and {b.strands} strands")
    return BraidWord(a.strands, a.letters + b.letters)


def concat_all(words: Iterable[BraidWord], strands: int) -> BraidWord:
    letters: list[BandGenerator] = []
    for w in words:
        if w.strands != strands:
            raise StrandMismatch(f"expected {strands} strands, got {w.strands}")
        letters.extend(w.letters)
    return BraidWord(strands, tuple(letters))


def invert(word: BraidWord) -> BraidWord:
    return BraidWord(word.strands, tuple(g.inverse() for g in reversed(word.letters)))


def conjugate(word: BraidWord, by: BraidWord) -> BraidWord:
    """The word  by . word . by^-1  (same closure as word when by is arbitrary)."""
    return concat(concat(by, word), invert(by))


def cyclic_rotations(word: BraidWord) -> list[BraidWord]:
    """All cyclic rotations; the closure of each equals the closure of the input."""
    if not word.letters:
        return [word]
    return [
        BraidWord(word.strands, word.letters[k:] + word.letters[:k])
        for k in range(len(word.letters))
    ]
