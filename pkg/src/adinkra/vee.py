"""Salingaros Vee groups.

G_n is generated by a central involution -1 together with n generators that
square to -1 and anticommute pairwise.  Every element has the normal form
(-1)^b g1^x1 ... gn^xn, encoded here as a sign bit and an exponent vector,
so |G_n| = 2^(n+1).  Products are computed with a closed-form sign cocycle;
the structural operations (centre, omega squared, normal subgroups, small
quotients) are computed by brute force and checked against their closed
forms before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

NORMAL_SUBGROUP_RANK_LIMIT = 4


def _reorder_sign(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    """Parity of the sign picked up when merging g^x g^y into normal form.

    Each generator of y moves left past the higher-indexed generators of x
    (one anticommutation swap each), then squares against its mate in x if
    present (one factor of -1 each).
    """
    total = 0
    higher = sum(x)
    for j in range(len(x)):
        higher -= x[j]
        if y[j]:
            total += higher + (x[j] & y[j])
    return total % 2


@dataclass(frozen=True, order=True)
class VeeElement:
    """Normal form (-1)^sign g1^x1 ... gn^xn as (sign bit, exponent vector)."""

    sign: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.sign not in (0, 1):
            raise ValueError(f"sign bit must be 0 or 1: {self.sign}")
        if any(x not in (0, 1) for x in self.exponents):
            raise ValueError(f"exponents must be 0 or 1: {self.exponents}")

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: VeeElement) -> VeeElement:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        sign = (self.sign + other.sign + _reorder_sign(self.exponents, other.exponents)) % 2
        exponents = tuple(a ^ b for a, b in zip(self.exponents, other.exponents))
        return VeeElement(sign, exponents)

    def inverse(self) -> VeeElement:
        # x * x = (-1)^eps(x,x), so flipping that sign inverts x
        return VeeElement(
            (self.sign + _reorder_sign(self.exponents, self.exponents)) % 2,
            self.exponents,
        )

    def negate(self) -> VeeElement:
        return VeeElement(1 - self.sign, self.exponents)

    __neg__ = negate

    @property
    def is_identity(self) -> bool:
        return self.sign == 0 and not any(self.exponents)

    def __str__(self) -> str:
        names = [f"g{i + 1}" for i, x in enumerate(self.exponents) if x]
        body = " ".join(names) if names else "1"
        return f"-{body}" if self.sign else body


def identity(rank: int) -> VeeElement:
    return VeeElement(0, (0,) * rank)


def minus_one(rank: int) -> VeeElement:
    return VeeElement(1, (0,) * rank)


def generator(rank: int, index: int) -> VeeElement:
    """The generator g_index, 1-based."""
    if not 1 <= index <= rank:
        raise ValueError(f"generator index {index} out of range 1..{rank}")
    return VeeElement(0, tuple(1 if i == index - 1 else 0 for i in range(rank)))


def generators(rank: int) -> list[VeeElement]:
    return [generator(rank, i) for i in range(1, rank + 1)]


def elements(rank: int) -> list[VeeElement]:
    """All 2^(rank+1) elements in a deterministic order."""
    return [
        VeeElement(b, xs) for b in (0, 1) for xs in product((0, 1), repeat=rank)
    ]


def omega(rank: int) -> VeeElement:
    """The product g1 g2 ... gn."""
    if rank < 1:
        raise ValueError("omega needs rank >= 1")
    return VeeElement(0, (1,) * rank)


def omega_squared(rank: int) -> int:
    """Sign of omega^2, computed by multiplication and checked against the
    mod-4 pattern (+1 for rank 0,3 mod 4, -1 for rank 1,2 mod 4)."""
    w = omega(rank)
    square = w * w
    if any(square.exponents):
        raise RuntimeError("omega^2 must be central")
    value = -1 if square.sign else 1
    expected = 1 if rank % 4 in (0, 3) else -1
    if value != expected:
        raise RuntimeError(f"omega^2 = {value} contradicts the rank {rank} pattern")
    return value


def abs_vee(element: VeeElement) -> tuple[int, ...]:
    """Image in F_2^n: the exponent vector with the sign dropped."""
    return element.exponents


def commutes(a: VeeElement, b: VeeElement) -> bool:
    return a * b == b * a


def center(rank: int) -> frozenset[VeeElement]:
    """Centre by brute-force commutation against the generators, checked
    against the closed form: {1,-1} for even rank, {1,-1,w,-w} for odd."""
    gens = generators(rank)
    found = frozenset(
        e for e in elements(rank) if all(commutes(e, g) for g in gens)
    )
    expected = {identity(rank), minus_one(rank)}
    if rank % 2 == 1:
        expected |= {omega(rank), omega(rank).negate()}
    if found != frozenset(expected):
        raise RuntimeError(f"centre of rank {rank} does not match its closed form")
    return found


def conjugacy_class(element: VeeElement) -> frozenset[VeeElement]:
    """Orbit under conjugation, generated by conjugating with the generators."""
    orbit = {element}
    frontier = [element]
    gens = generators(element.rank)
    while frontier:
        grown = []
        for e in frontier:
            for g in gens:
                c = g * e * g.inverse()
                if c not in orbit:
                    orbit.add(c)
                    grown.append(c)
        frontier = grown
    return frozenset(orbit)


def subgroup_generated(seed) -> frozenset[VeeElement]:
    """Closure of a nonempty set of elements under multiplication."""
    gens = list(seed)
    if not gens:
        raise ValueError("need at least one element")
    closed = {gens[0].inverse() * gens[0]}  # the identity at the right rank
    frontier = list(closed)
    while frontier:
        grown = []
        for e in frontier:
            for g in gens:
                h = e * g
                if h not in closed:
                    closed.add(h)
                    grown.append(h)
        frontier = grown
    return frozenset(closed)


def all_subgroups(rank: int) -> list[frozenset[VeeElement]]:
    """Every subgroup, by breadth-first extension of known subgroups."""
    bottom = frozenset({identity(rank)})
    known = {bottom}
    frontier = [bottom]
    universe = elements(rank)
    while frontier:
        grown = []
        for sub in frontier:
            for extra in universe:
                if extra in sub:
                    continue
                bigger = subgroup_generated(set(sub) | {extra})
                if bigger not in known:
                    known.add(bigger)
                    grown.append(bigger)
        frontier = grown
    return sorted(known, key=lambda s: (len(s), sorted(s)))


def is_normal(subgroup: frozenset[VeeElement], rank: int) -> bool:
    # conjugation by the generators generates all conjugation
    return all(
        g * h * g.inverse() in subgroup for g in generators(rank) for h in subgroup
    )


def _subspaces(rank: int) -> list[frozenset[tuple[int, ...]]]:
    zero = (0,) * rank
    bottom = frozenset({zero})
    known = {bottom}
    frontier = [bottom]
    vectors = [xs for xs in product((0, 1), repeat=rank) if any(xs)]
    while frontier:
        grown = []
        for space in frontier:
            for v in vectors:
                if v in space:
                    continue
                bigger = frozenset(
                    space | {tuple(a ^ b for a, b in zip(v, s)) for s in space}
                )
                if bigger not in known:
                    known.add(bigger)
                    grown.append(bigger)
        frontier = grown
    return sorted(known, key=lambda s: (len(s), sorted(s)))


def normal_subgroups(rank: int) -> list[frozenset[VeeElement]]:
    """All normal subgroups, by exhaustive enumeration, checked against the
    classification: preimages of subspaces of F_2^n under abs, the trivial
    subgroup, and {1,w}, {1,-w} exactly when rank = 3 mod 4."""
    if rank > NORMAL_SUBGROUP_RANK_LIMIT:
        raise ValueError(f"rank {rank} exceeds limit {NORMAL_SUBGROUP_RANK_LIMIT}")
    found = [sub for sub in all_subgroups(rank) if is_normal(sub, rank)]

    expected: set[frozenset[VeeElement]] = {frozenset({identity(rank)})}
    for space in _subspaces(rank):
        expected.add(frozenset(VeeElement(b, xs) for b in (0, 1) for xs in space))
    if rank % 4 == 3:
        expected.add(frozenset({identity(rank), omega(rank)}))
        expected.add(frozenset({identity(rank), omega(rank).negate()}))
    if set(found) != expected:
        raise RuntimeError(f"normal subgroups of rank {rank} defy the classification")
    return found


def recognize_quotient(rank: int, kernel: frozenset[VeeElement]) -> int:
    """Rank m with G_rank / kernel isomorphic to G_m, for the kernels that can
    arise: {1} gives rank, {1,w} and {1,-w} give rank - 1 (rank = 3 mod 4).
    The isomorphism is exhibited on generators and checked exhaustively."""
    if kernel == frozenset({identity(rank)}):
        return rank
    w = omega(rank)
    if rank % 4 == 3 and kernel in (
        frozenset({identity(rank), w}),
        frozenset({identity(rank), w.negate()}),
    ):
        (nontrivial,) = [k for k in kernel if not k.is_identity]

        def coset(a: VeeElement) -> frozenset[VeeElement]:
            return frozenset({a, a * nontrivial})

        def lift(e: VeeElement) -> VeeElement:
            return VeeElement(e.sign, e.exponents + (0,))

        small = elements(rank - 1)
        images = {e: coset(lift(e)) for e in small}
        if len(set(images.values())) != len(small):
            raise RuntimeError("generator map is not injective on cosets")
        for a in small:
            for b in small:
                if images[a * b] != coset(lift(a) * lift(b)):
                    raise RuntimeError("generator map is not a homomorphism")
        return rank - 1
    raise ValueError(f"unsupported kernel for rank {rank}: {sorted(map(str, kernel))}")
