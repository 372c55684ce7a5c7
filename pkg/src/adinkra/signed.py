"""Signed permutations of {0..d-1} and the finite groups they generate.

An element sends index j to signs[j] * image[j]; composition is right to
left, so (f * g) applies g first.  Matrix form has one entry of +-1 per row
and column, and matrix(f * g) = matrix(f) @ matrix(g).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_ORDER_BOUND = 1 << 16


@dataclass(frozen=True, order=True)
class SignedPermutation:
    """Signed bijection of {0..d-1}: index j maps to signs[j] * image[j]."""

    image: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        d = len(self.image)
        if len(self.signs) != d:
            raise ValueError("image and signs must have equal length")
        if sorted(self.image) != list(range(d)):
            raise ValueError(f"image is not a bijection of 0..{d - 1}: {self.image}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1: {self.signs}")

    @classmethod
    def _unchecked(cls, image: tuple[int, ...], signs: tuple[int, ...]) -> SignedPermutation:
        # fast path for values valid by construction (compose, inverse, negate)
        self = object.__new__(cls)
        object.__setattr__(self, "image", image)
        object.__setattr__(self, "signs", signs)
        return self

    @classmethod
    def identity(cls, degree: int) -> SignedPermutation:
        return cls(tuple(range(degree)), (1,) * degree)

    @classmethod
    def minus_identity(cls, degree: int) -> SignedPermutation:
        return cls(tuple(range(degree)), (-1,) * degree)

    @property
    def degree(self) -> int:
        return len(self.image)

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """Composition self after other (apply `other` first)."""
        si, ss = self.image, self.signs
        oi, os = other.image, other.signs
        if len(si) != len(oi):
            raise ValueError(f"degree mismatch: {len(si)} vs {len(oi)}")
        image = tuple(si[t] for t in oi)
        signs = tuple(s * ss[t] for s, t in zip(os, oi))
        return SignedPermutation._unchecked(image, signs)

    __mul__ = compose

    def inverse(self) -> SignedPermutation:
        image = [0] * self.degree
        signs = [1] * self.degree
        for j, target in enumerate(self.image):
            image[target] = j
            signs[target] = self.signs[j]
        return SignedPermutation._unchecked(tuple(image), tuple(signs))

    def negate(self) -> SignedPermutation:
        return SignedPermutation._unchecked(self.image, tuple(-s for s in self.signs))

    __neg__ = negate

    def abs_perm(self) -> tuple[int, ...]:
        """Underlying unsigned permutation."""
        return self.image

    @property
    def is_identity(self) -> bool:
        return self.image == tuple(range(self.degree)) and all(
            s == 1 for s in self.signs
        )

    @property
    def is_minus_identity(self) -> bool:
        return self.image == tuple(range(self.degree)) and all(
            s == -1 for s in self.signs
        )

    def order(self) -> int:
        power = self
        n = 1
        while not power.is_identity:
            power = power * self
            n += 1
        return n

    def factorize(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Unique (diagonal signs, unsigned permutation) with self = D after P."""
        diagonal = [0] * self.degree
        for j in range(self.degree):
            diagonal[self.image[j]] = self.signs[j]
        return tuple(diagonal), self.image

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.degree, self.degree), dtype=int)
        for j in range(self.degree):
            m[self.image[j], j] = self.signs[j]
        return m

    @classmethod
    def from_matrix(cls, matrix) -> SignedPermutation:
        m = np.asarray(matrix, dtype=int)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        d = m.shape[0]
        image = []
        signs = []
        for j in range(d):
            nonzero = np.nonzero(m[:, j])[0]
            if len(nonzero) != 1 or m[nonzero[0], j] not in (1, -1):
                raise ValueError(f"column {j} is not a signed unit column")
            image.append(int(nonzero[0]))
            signs.append(int(m[nonzero[0], j]))
        return cls(tuple(image), tuple(signs))

    def matrix_text(self) -> str:
        """Integer grid rendering, one row per line, entries -1/0/1."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.matrix())


@dataclass(frozen=True)
class SignedGroup:
    """A closed set of signed permutations with its generating set."""

    degree: int
    generators: tuple[SignedPermutation, ...]
    elements: frozenset[SignedPermutation]

    @property
    def order(self) -> int:
        return len(self.elements)

    def abs_image(self) -> frozenset[tuple[int, ...]]:
        return frozenset(g.image for g in self.elements)

    def abs_kernel(self) -> SignedGroup:
        """Subgroup of elements whose underlying permutation is the identity."""
        ident = tuple(range(self.degree))
        kept = frozenset(g for g in self.elements if g.image == ident)
        return SignedGroup(self.degree, tuple(sorted(kept)), kept)

    def sorted_elements(self) -> list[SignedPermutation]:
        return sorted(self.elements)


def closure(
    generators, order_bound: int = DEFAULT_ORDER_BOUND
) -> SignedGroup:
    """Breadth-first closure of the generators under composition."""
    gens = tuple(generators)
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators have mixed degrees")
    seen = {SignedPermutation.identity(degree)}
    frontier = list(seen)
    while frontier:
        grown = []
        for element in frontier:
            for g in gens:
                h = element * g
                if h not in seen:
                    seen.add(h)
                    grown.append(h)
                    if len(seen) > order_bound:
                        raise ValueError(f"group order exceeds bound {order_bound}")
        frontier = grown
    return SignedGroup(degree, gens, frozenset(seen))
