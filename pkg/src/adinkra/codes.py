"""Binary linear codes over GF(2).

Words are fixed-length bit vectors with coordinate 1 on the left.  A code is
the row span of its generators; equality and membership are decided by row
reduction, never by generator lists.  Includes exhaustive enumeration of
doubly-even codes at small length, which drives the verification harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

SPAN_DIMENSION_LIMIT = 20
ENUMERATION_LENGTH_LIMIT = 8


class ParityClass(Enum):
    """Weight classification of a code."""

    ODD = "odd"
    EVEN = "even"
    DOUBLY_EVEN = "doubly-even"

    @property
    def is_even(self) -> bool:
        return self is not ParityClass.ODD


@dataclass(frozen=True, order=True)
class BinaryWord:
    """Length-N vector over GF(2); coordinate 1 is the leftmost bit."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) == 0:
            raise ValueError("a word needs at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"bits must be 0 or 1: {self.bits!r}")

    @classmethod
    def from_text(cls, text: str) -> BinaryWord:
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary word: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_int(cls, value: int, length: int) -> BinaryWord:
        return cls(tuple((value >> (length - 1 - i)) & 1 for i in range(length)))

    @classmethod
    def zero(cls, length: int) -> BinaryWord:
        return cls((0,) * length)

    @classmethod
    def ones(cls, length: int) -> BinaryWord:
        return cls((1,) * length)

    @classmethod
    def unit(cls, length: int, coordinate: int) -> BinaryWord:
        """Standard basis word with a single 1 at the given 1-based coordinate."""
        if not 1 <= coordinate <= length:
            raise ValueError(f"coordinate {coordinate} out of range 1..{length}")
        return cls(tuple(1 if i == coordinate - 1 else 0 for i in range(length)))

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def as_int(self) -> int:
        """Integer packing with coordinate 1 as the most significant bit."""
        value = 0
        for b in self.bits:
            value = (value << 1) | b
        return value

    def weight(self) -> int:
        return sum(self.bits)

    def dot(self, other: BinaryWord) -> int:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")
        return sum(a & b for a, b in zip(self.bits, other.bits)) % 2

    def __add__(self, other: BinaryWord) -> BinaryWord:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")
        return BinaryWord(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def _rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon form of int-packed rows, sorted by descending pivot."""
    basis: dict[int, int] = {}
    for row in rows:
        for pos in sorted(basis, reverse=True):
            if (row >> pos) & 1:
                row ^= basis[pos]
        if row:
            pos = row.bit_length() - 1
            for p, r in basis.items():
                if (r >> pos) & 1:
                    basis[p] = r ^ row
            basis[pos] = row
    return tuple(basis[p] for p in sorted(basis, reverse=True))


@dataclass(frozen=True, eq=False)
class LinearCode:
    """GF(2) row span of generator words; equality means span equality."""

    length: int
    generators: tuple[BinaryWord, ...]

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("code length must be positive")
        for g in self.generators:
            if g.length != self.length:
                raise ValueError(
                    f"generator {g} has length {g.length}, expected {self.length}"
                )
        object.__setattr__(self, "_rref", _rref(g.as_int for g in self.generators))

    @classmethod
    def from_texts(cls, length: int, *rows: str) -> LinearCode:
        return cls(length, tuple(BinaryWord.from_text(r) for r in rows))

    @property
    def dimension(self) -> int:
        return len(self._rref)

    @property
    def basis(self) -> tuple[BinaryWord, ...]:
        """Canonical reduced-echelon basis of the span."""
        return tuple(BinaryWord.from_int(r, self.length) for r in self._rref)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and self._rref == other._rref

    def __hash__(self) -> int:
        return hash((self.length, self._rref))

    def __str__(self) -> str:
        gens = ",".join(str(g) for g in self.generators) or "0" * self.length
        return f"<{gens}>"


def classify_code(code: LinearCode) -> ParityClass:
    """Odd, even, or doubly-even, from the basis alone.

    All span weights are even iff all basis weights are; the span is doubly
    even iff the basis words have weight 0 mod 4 and are pairwise orthogonal
    (weights add mod 4 up to twice the overlap).
    """
    basis = code.basis
    if any(g.weight() % 2 for g in basis):
        return ParityClass.ODD
    if any(g.weight() % 4 for g in basis):
        return ParityClass.EVEN
    for i, g in enumerate(basis):
        for h in basis[i + 1 :]:
            if g.dot(h):
                return ParityClass.EVEN
    return ParityClass.DOUBLY_EVEN


def span_members(code: LinearCode) -> set[BinaryWord]:
    """All 2^k words of the span; guarded against dimension blowup."""
    if code.dimension > SPAN_DIMENSION_LIMIT:
        raise ValueError(
            f"span of dimension {code.dimension} exceeds limit {SPAN_DIMENSION_LIMIT}"
        )
    members = {0}
    for row in code._rref:  # noqa: SLF001 (own class internals)
        members |= {m ^ row for m in members}
    return {BinaryWord.from_int(m, code.length) for m in members}


def contains(code: LinearCode, word: BinaryWord) -> bool:
    """Span membership by row reduction against the echelon basis."""
    if word.length != code.length:
        raise ValueError(f"length mismatch: word {word.length}, code {code.length}")
    x = word.as_int
    for row in code._rref:
        if (x >> (row.bit_length() - 1)) & 1:
            x ^= row
    return x == 0


def coset_representatives(code: LinearCode) -> list[BinaryWord]:
    """One word per coset of the code, each the lexicographic minimum of its
    coset, listed in lexicographic order."""
    if not classify_code(code).is_even:
        raise ValueError("coset structure is only used for even codes")
    n = code.length
    span = [w.as_int for w in span_members(code)]
    taken = bytearray(1 << n)
    reps: list[int] = []
    for v in range(1 << n):
        if taken[v]:
            continue
        reps.append(v)
        for c in span:
            taken[v ^ c] = 1
    return [BinaryWord.from_int(v, n) for v in reps]


def enumerate_doubly_even_codes(length: int, k_max: int) -> list[LinearCode]:
    """All distinct doubly-even subspaces of dimension <= k_max, one canonical
    generator matrix each, in a deterministic order."""
    if not 1 <= length <= ENUMERATION_LENGTH_LIMIT:
        raise ValueError(f"length {length} outside 1..{ENUMERATION_LENGTH_LIMIT}")
    if not 0 <= k_max <= length:
        raise ValueError(f"k_max {k_max} outside 0..{length}")
    candidates = [v for v in range(1, 1 << length) if v.bit_count() % 4 == 0]
    trivial = frozenset({0})
    seen: set[frozenset[int]] = {trivial}
    frontier: list[tuple[frozenset[int], tuple[int, ...]]] = [(trivial, ())]
    for _ in range(k_max):
        grown: list[tuple[frozenset[int], tuple[int, ...]]] = []
        for span, basis in frontier:
            for w in candidates:
                # adding w keeps the span doubly even iff w is orthogonal to it
                if w in span or any((w & g).bit_count() % 2 for g in basis):
                    continue
                bigger = frozenset(span | {s ^ w for s in span})
                if bigger not in seen:
                    seen.add(bigger)
                    grown.append((bigger, _rref([*basis, w])))
        frontier = grown
    codes = [
        LinearCode(length, tuple(BinaryWord.from_int(r, length) for r in _rref(span)))
        for span in seen
    ]
    codes.sort(key=lambda c: (c.dimension, tuple(w.as_int for w in c.basis)))
    return codes


def parse_code_text(text: str) -> LinearCode:
    """Parse generators, one word per line; blank lines and '#' comments are
    ignored; all words must share one length."""
    rows: list[BinaryWord] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append(BinaryWord.from_text(line))
        except ValueError as exc:
            raise ValueError(f"line {number}: {exc}") from None
    if not rows:
        raise ValueError("no generators found")
    length = rows[0].length
    if any(w.length != length for w in rows):
        raise ValueError("generators have differing lengths")
    return LinearCode(length, tuple(rows))


def words_of_length(length: int) -> Iterator[BinaryWord]:
    """All 2^N words in lexicographic order."""
    for v in range(1 << length):
        yield BinaryWord.from_int(v, length)
