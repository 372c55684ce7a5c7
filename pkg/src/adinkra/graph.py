"""Adinkra graphs.

An Adinkra here is an N-coloured bipartite graph on boson and fermion
vertices in which every vertex meets one edge of each colour, any two colour
classes form disjoint 4-cycles, and every such 4-cycle carries an odd number
of dashed edges.  Edges are stored fermion-side: for each colour, a map from
fermion index to (boson index, sign), sign -1 meaning dashed.

Builders cover the N-cube (with its explicit dashing rule) and quotients of
the cube by doubly-even codes (dashing found by a GF(2) solver).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import (
    BinaryWord,
    LinearCode,
    ParityClass,
    classify_code,
    coset_representatives,
    span_members,
)

MIN_COLORS = 2
MAX_COLORS = 10

DOT_COLOR_NAMES = (
    "red",
    "green",
    "blue",
    "orange",
    "purple",
    "brown",
    "turquoise",
    "magenta",
    "goldenrod",
    "gray",
)


@dataclass(frozen=True)
class Adinkra:
    """Immutable coloured, dashed, bipartite graph.

    edges[c][f] = (boson index, sign) for the colour-(c+1) edge at fermion f.
    The code is the one the graph was built from (None for unions of
    components with differing codes).
    """

    colors: int
    code: LinearCode | None
    bosons: tuple[str, ...]
    fermions: tuple[str, ...]
    edges: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def d(self) -> int:
        return len(self.fermions)

    def vertex_labels(self) -> tuple[str, ...]:
        return self.bosons + self.fermions


@dataclass(frozen=True)
class TwoColorCycle:
    """A 4-cycle alternating between two colours.

    Vertices are listed in cycle order (fermion, boson, fermion, boson) and
    edges as (colour, fermion index) pairs in the same traversal order.
    """

    colors: tuple[int, int]
    vertices: tuple[str, str, str, str]
    edges: tuple[tuple[int, int], tuple[int, int], tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failure: str | None = None
    witness: str | None = None


def _check_color(a: Adinkra, color: int) -> None:
    if not 1 <= color <= a.colors:
        raise ValueError(f"colour {color} out of range 1..{a.colors}")


def _boson_to_fermion(a: Adinkra, color: int) -> list[int]:
    inverse = [-1] * a.d
    for f in range(a.d):
        inverse[a.edges[color - 1][f][0]] = f
    return inverse


def build_cubical(colors: int) -> Adinkra:
    """The N-cube Adinkra on all words of length N.

    Colour i joins words differing in coordinate i; the edge at x is dashed
    iff x_1 + ... + x_{i-1} is odd (the sum omits coordinate i, so both
    endpoints give the same value).
    """
    if not MIN_COLORS <= colors <= MAX_COLORS:
        raise ValueError(f"colour count {colors} outside {MIN_COLORS}..{MAX_COLORS}")
    n = colors
    words = [BinaryWord.from_int(v, n) for v in range(1 << n)]
    boson_words = [w for w in words if w.weight() % 2 == 0]
    fermion_words = [w for w in words if w.weight() % 2 == 1]
    boson_index = {str(w): i for i, w in enumerate(boson_words)}
    edges = []
    for color in range(1, n + 1):
        row = []
        for w in fermion_words:
            partner = w + BinaryWord.unit(n, color)
            sign = -1 if sum(w.bits[: color - 1]) % 2 else 1
            row.append((boson_index[str(partner)], sign))
        edges.append(tuple(row))
    return Adinkra(
        colors=n,
        code=LinearCode(n, ()),
        bosons=tuple(str(w) for w in boson_words),
        fermions=tuple(str(w) for w in fermion_words),
        edges=tuple(edges),
    )


def quotient_chromotopology(code: LinearCode) -> Adinkra:
    """The coloured quotient graph of the cube by an even code, all edges
    solid.  Colour i joins the cosets of w and w + e_i."""
    n = code.length
    if not MIN_COLORS <= n <= MAX_COLORS:
        raise ValueError(f"code length {n} outside {MIN_COLORS}..{MAX_COLORS}")
    if not classify_code(code).is_even:
        raise ValueError("an odd code does not preserve the bipartition")
    reps = coset_representatives(code)
    span = [w.as_int for w in span_members(code)]
    rep_label: dict[int, str] = {}
    for rep in reps:
        for c in span:
            rep_label[rep.as_int ^ c] = str(rep)
    boson_words = [w for w in reps if w.weight() % 2 == 0]
    fermion_words = [w for w in reps if w.weight() % 2 == 1]
    boson_index = {str(w): i for i, w in enumerate(boson_words)}
    edges = []
    for color in range(1, n + 1):
        unit = BinaryWord.unit(n, color).as_int
        row = []
        for w in fermion_words:
            row.append((boson_index[rep_label[w.as_int ^ unit]], 1))
        edges.append(tuple(row))
    return Adinkra(
        colors=n,
        code=code,
        bosons=tuple(str(w) for w in boson_words),
        fermions=tuple(str(w) for w in fermion_words),
        edges=tuple(edges),
    )


def build_quotient(code: LinearCode) -> Adinkra:
    """Quotient Adinkra for a doubly-even code, with a solver-chosen odd
    dashing; the result always validates."""
    parity = classify_code(code)
    if parity is not ParityClass.DOUBLY_EVEN:
        raise ValueError(
            f"quotient dashing needs a doubly-even code; {code} is {parity.value}"
        )
    bare = quotient_chromotopology(code)
    bits = solve_odd_dashing(bare)
    if bits is None:
        raise RuntimeError(f"no odd dashing found for doubly-even code {code}")
    dashed = apply_dashing(bare, bits)
    report = validate(dashed)
    if not report.ok:
        raise RuntimeError(f"built graph fails validation: {report}")
    return dashed


def two_colored_cycles(a: Adinkra, color_a: int, color_b: int) -> list[TwoColorCycle]:
    """The 4-cycles of the two colour classes; they must partition the
    vertex set or a ValueError is raised."""
    if color_a == color_b:
        raise ValueError("need two distinct colours")
    _check_color(a, color_a)
    _check_color(a, color_b)
    back = _boson_to_fermion(a, color_b)
    cycles = []
    seen = [False] * a.d
    for f in range(a.d):
        if seen[f]:
            continue
        b1, _ = a.edges[color_a - 1][f]
        f2 = back[b1]
        if f2 == f:
            raise ValueError(
                f"colours {color_a},{color_b} form a 2-cycle at fermion {a.fermions[f]}"
            )
        b2, _ = a.edges[color_a - 1][f2]
        if back[b2] != f:
            raise ValueError(
                f"colours {color_a},{color_b} do not close a 4-cycle at fermion "
                f"{a.fermions[f]}"
            )
        seen[f] = seen[f2] = True
        cycles.append(
            TwoColorCycle(
                colors=(color_a, color_b),
                vertices=(a.fermions[f], a.bosons[b1], a.fermions[f2], a.bosons[b2]),
                edges=((color_a, f), (color_b, f2), (color_a, f2), (color_b, f)),
            )
        )
    return cycles


def _edge_variable(a: Adinkra, color: int, fermion: int) -> int:
    return (color - 1) * a.d + fermion


def solve_odd_dashing(a: Adinkra) -> list[int] | None:
    """A dash bit per edge making every 2-coloured 4-cycle odd, or None.

    One GF(2) equation per cycle; variables are edges in (colour, fermion)
    order.  Always the same solution for a given graph: free variables are
    zero and the pivot set depends only on the variable order.
    """
    nvars = a.colors * a.d
    rows: list[list[int]] = []
    for ca in range(1, a.colors + 1):
        for cb in range(ca + 1, a.colors + 1):
            for cycle in two_colored_cycles(a, ca, cb):
                rows.append([_edge_variable(a, c, f) for c, f in cycle.edges])
    solution = _solve_gf2(rows, nvars)
    if solution is None:
        return None
    return [(solution >> v) & 1 for v in range(nvars)]


def _solve_gf2(rows: list[list[int]], nvars: int) -> int | None:
    """Solve (each row's variables sum to 1) over GF(2); bit-packed columns.

    Returns the solution as an int bitmask with free variables zero, or None
    if inconsistent.
    """
    if not rows:
        return 0
    words = (nvars >> 6) + 1
    mat = np.zeros((len(rows), words), dtype=np.uint64)
    rhs = np.ones(len(rows), dtype=np.uint64)
    for r, variables in enumerate(rows):
        for v in variables:
            mat[r, v >> 6] ^= np.uint64(1) << np.uint64(v & 63)
    rank = 0
    pivots: list[int] = []
    for col in range(nvars):
        word = col >> 6
        bit = np.uint64(1) << np.uint64(col & 63)
        hits = np.nonzero(mat[rank:, word] & bit)[0]
        if hits.size == 0:
            continue
        pivot = rank + int(hits[0])
        if pivot != rank:
            mat[[rank, pivot]] = mat[[pivot, rank]]
            rhs[[rank, pivot]] = rhs[[pivot, rank]]
        selected = np.nonzero(mat[:, word] & bit)[0]
        selected = selected[selected != rank]
        if selected.size:
            mat[selected] ^= mat[rank]
            rhs[selected] ^= rhs[rank]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    tail = ~mat[rank:].any(axis=1)
    if np.any(rhs[rank:][tail]):
        return None
    solution = 0
    for row, col in enumerate(pivots):
        if int(rhs[row]):
            solution |= 1 << col
    return solution


def dashing_bits(a: Adinkra) -> list[int]:
    """Dash state per edge in (colour, fermion index) order; 1 means dashed."""
    return [
        1 if a.edges[c][f][1] < 0 else 0 for c in range(a.colors) for f in range(a.d)
    ]


def apply_dashing(a: Adinkra, bits: list[int]) -> Adinkra:
    """Replace the dashing wholesale; bits in (colour, fermion index) order."""
    if len(bits) != a.colors * a.d:
        raise ValueError(f"expected {a.colors * a.d} dash bits, got {len(bits)}")
    edges = tuple(
        tuple(
            (a.edges[c][f][0], -1 if bits[c * a.d + f] else 1) for f in range(a.d)
        )
        for c in range(a.colors)
    )
    return Adinkra(a.colors, a.code, a.bosons, a.fermions, edges)


def validate(a: Adinkra) -> ValidationReport:
    """Check bipartition, per-colour regularity, the 4-cycle condition for
    every colour pair, and the odd-dashing condition on every such cycle.
    Reports the first violation with a witness."""
    d = a.d
    if d == 0 or len(a.bosons) != d:
        return ValidationReport(
            False, "bipartition", f"{len(a.bosons)} bosons vs {d} fermions"
        )
    labels = a.vertex_labels()
    if len(set(labels)) != len(labels):
        return ValidationReport(False, "bipartition", "duplicate vertex labels")
    if len(a.edges) != a.colors:
        return ValidationReport(
            False, "regularity", f"{len(a.edges)} colour classes for {a.colors} colours"
        )
    for color in range(1, a.colors + 1):
        row = a.edges[color - 1]
        if len(row) != d:
            return ValidationReport(
                False, "regularity", f"colour {color} has {len(row)} edges, wanted {d}"
            )
        if any(s not in (1, -1) for _, s in row):
            return ValidationReport(False, "regularity", f"colour {color} has a bad sign")
        if sorted(b for b, _ in row) != list(range(d)):
            return ValidationReport(
                False, "regularity", f"colour {color} is not a perfect matching"
            )
    for ca in range(1, a.colors + 1):
        for cb in range(ca + 1, a.colors + 1):
            try:
                cycles = two_colored_cycles(a, ca, cb)
            except ValueError as exc:
                return ValidationReport(False, "four-cycles", str(exc))
            for cycle in cycles:
                parity = 1
                for c, f in cycle.edges:
                    parity *= a.edges[c - 1][f][1]
                if parity != -1:
                    return ValidationReport(
                        False,
                        "odd-dashing",
                        f"cycle {cycle.vertices} of colours {ca},{cb} "
                        "has an even dash count",
                    )
    return ValidationReport(True)


def switch_vertex(a: Adinkra, label: str) -> Adinkra:
    """Flip the dash state of every edge at one vertex (a gauge move: each
    2-coloured 4-cycle meets the vertex in 0 or 2 edges)."""
    bits = dashing_bits(a)
    if label in a.fermions:
        f = a.fermions.index(label)
        for color in range(1, a.colors + 1):
            bits[_edge_variable(a, color, f)] ^= 1
    elif label in a.bosons:
        b = a.bosons.index(label)
        for color in range(1, a.colors + 1):
            f = _boson_to_fermion(a, color)[b]
            bits[_edge_variable(a, color, f)] ^= 1
    else:
        raise ValueError(f"unknown vertex {label!r}")
    return apply_dashing(a, bits)


def flip_color_dashes(a: Adinkra, color: int) -> Adinkra:
    """Flip the dash state of every edge of one colour (each 2-coloured
    4-cycle has exactly 0 or 2 edges of that colour, so validity survives)."""
    _check_color(a, color)
    bits = dashing_bits(a)
    for f in range(a.d):
        bits[_edge_variable(a, color, f)] ^= 1
    return apply_dashing(a, bits)


def disjoint_union(a: Adinkra, b: Adinkra) -> Adinkra:
    """Vertex- and edge-disjoint union; labels get a component prefix."""
    if a.colors != b.colors:
        raise ValueError(f"colour counts differ: {a.colors} vs {b.colors}")
    offset = a.d
    edges = tuple(
        tuple(a.edges[c]) + tuple((bb + offset, s) for bb, s in b.edges[c])
        for c in range(a.colors)
    )
    code = a.code if a.code is not None and a.code == b.code else None
    return Adinkra(
        colors=a.colors,
        code=code,
        bosons=tuple(f"0:{v}" for v in a.bosons) + tuple(f"1:{v}" for v in b.bosons),
        fermions=tuple(f"0:{v}" for v in a.fermions)
        + tuple(f"1:{v}" for v in b.fermions),
        edges=edges,
    )


def connected_components(a: Adinkra) -> list[frozenset[str]]:
    """Vertex sets of the components under edge reachability."""
    neighbors: dict[str, set[str]] = {v: set() for v in a.vertex_labels()}
    for c in range(a.colors):
        for f in range(a.d):
            b, _ = a.edges[c][f]
            neighbors[a.fermions[f]].add(a.bosons[b])
            neighbors[a.bosons[b]].add(a.fermions[f])
    components = []
    visited: set[str] = set()
    for start in a.vertex_labels():
        if start in visited:
            continue
        stack = [start]
        component = {start}
        while stack:
            for nxt in neighbors[stack.pop()]:
                if nxt not in component:
                    component.add(nxt)
                    stack.append(nxt)
        visited |= component
        components.append(frozenset(component))
    return components


def permute_colors(a: Adinkra, order: tuple[int, ...]) -> Adinkra:
    """Relabel colours: new colour c is old colour order[c-1]."""
    if sorted(order) != list(range(1, a.colors + 1)):
        raise ValueError(f"{order} is not a permutation of 1..{a.colors}")
    return Adinkra(
        a.colors,
        a.code,
        a.bosons,
        a.fermions,
        tuple(a.edges[old - 1] for old in order),
    )


def permute_vertex_order(
    a: Adinkra, boson_order: tuple[int, ...], fermion_order: tuple[int, ...]
) -> Adinkra:
    """Reindex vertices: new index i holds old index order[i].  The graph is
    unchanged, only the numbering of bosons and fermions moves."""
    d = a.d
    if sorted(boson_order) != list(range(d)) or sorted(fermion_order) != list(range(d)):
        raise ValueError("orders must be permutations of 0..d-1")
    new_boson = [0] * d
    for new, old in enumerate(boson_order):
        new_boson[old] = new
    edges = tuple(
        tuple(
            (new_boson[a.edges[c][fermion_order[f]][0]], a.edges[c][fermion_order[f]][1])
            for f in range(d)
        )
        for c in range(a.colors)
    )
    return Adinkra(
        a.colors,
        a.code,
        tuple(a.bosons[old] for old in boson_order),
        tuple(a.fermions[old] for old in fermion_order),
        edges,
    )


def export_dot(a: Adinkra) -> str:
    """DOT text: white bosons, black fermions, one named colour per edge
    colour, dashed style for dashed edges.  Renders structure as-is and does
    not validate."""
    if a.colors > len(DOT_COLOR_NAMES):
        raise ValueError(f"only {len(DOT_COLOR_NAMES)} edge colour names available")
    lines = ["graph adinkra {", "  node [style=filled];"]
    for label in a.bosons:
        lines.append(f'  "{label}" [fillcolor=white];')
    for label in a.fermions:
        lines.append(f'  "{label}" [fillcolor=black, fontcolor=white];')
    for color in range(1, a.colors + 1):
        name = DOT_COLOR_NAMES[color - 1]
        for f in range(a.d):
            b, sign = a.edges[color - 1][f]
            style = ", style=dashed" if sign < 0 else ""
            lines.append(f'  "{a.fermions[f]}" -- "{a.bosons[b]}" [color={name}{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
