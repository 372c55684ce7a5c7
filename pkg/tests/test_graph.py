import pytest

from adinkra.codes import BinaryWord, LinearCode, classify_code, span_members
from adinkra.graph import (
    apply_dashing,
    build_cubical,
    build_quotient,
    connected_components,
    dashing_bits,
    disjoint_union,
    export_dot,
    flip_color_dashes,
    permute_colors,
    quotient_chromotopology,
    solve_odd_dashing,
    switch_vertex,
    two_colored_cycles,
    validate,
)
from helpers import all_codes, code_of, quotient


def test_cube4_shape():
    a = build_cubical(4)
    assert len(a.bosons) == 8 and len(a.fermions) == 8
    assert sum(len(row) for row in a.edges) == 32
    assert validate(a).ok


def test_cube2_has_exactly_one_dash():
    a = build_cubical(2)
    bits = dashing_bits(a)
    assert sum(bits) == 1
    # the dashed edge is the colour-2 edge at fermion 10 (prefix sum x1 = 1)
    f = a.fermions.index("10")
    assert a.edges[1][f][1] == -1


def test_cube_color1_edges_are_solid():
    a = build_cubical(4)
    assert all(sign == 1 for _, sign in a.edges[0])


def test_cube_dashing_follows_the_prefix_rule():
    for n in (3, 4):
        a = build_cubical(n)
        for color in range(1, n + 1):
            for f, label in enumerate(a.fermions):
                bits = [int(c) for c in label]
                expected = -1 if sum(bits[: color - 1]) % 2 else 1
                assert a.edges[color - 1][f][1] == expected


def test_cube_rejects_out_of_range_sizes():
    with pytest.raises(ValueError):
        build_cubical(1)
    with pytest.raises(ValueError):
        build_cubical(11)


def test_quotient_sizes():
    a = quotient(code_of("1111"))
    assert len(a.bosons) == 4 and len(a.fermions) == 4
    b = quotient(code_of("11110"))
    assert len(b.bosons) == 8 and len(b.fermions) == 8


def test_quotient_rejects_non_doubly_even():
    with pytest.raises(ValueError):
        build_quotient(code_of("1100"))


def test_two_colored_cycle_counts():
    assert len(two_colored_cycles(build_cubical(4), 1, 2)) == 4
    assert len(two_colored_cycles(quotient(code_of("1111")), 2, 3)) == 2
    assert len(two_colored_cycles(build_cubical(2), 1, 2)) == 1


def test_two_colored_cycles_partition_and_alternate():
    a = quotient(code_of("11110"))
    for ca in range(1, 6):
        for cb in range(ca + 1, 6):
            cycles = two_colored_cycles(a, ca, cb)
            assert len(cycles) == (len(a.bosons) + len(a.fermions)) // 4
            seen = []
            for cycle in cycles:
                assert [c for c, _ in cycle.edges] == [ca, cb, ca, cb]
                seen.extend(cycle.vertices)
            assert sorted(seen) == sorted(a.bosons + a.fermions)


def test_two_colored_cycles_reject_equal_colors():
    with pytest.raises(ValueError):
        two_colored_cycles(build_cubical(3), 2, 2)


def test_solver_on_cube4():
    bare = apply_dashing(build_cubical(4), [0] * 32)
    bits = solve_odd_dashing(bare)
    assert bits is not None
    solved = apply_dashing(bare, bits)
    count = 0
    for ca in range(1, 5):
        for cb in range(ca + 1, 5):
            for cycle in two_colored_cycles(solved, ca, cb):
                parity = 1
                for c, f in cycle.edges:
                    parity *= solved.edges[c - 1][f][1]
                assert parity == -1
                count += 1
    assert count == 24


def test_solver_on_cube2():
    bare = apply_dashing(build_cubical(2), [0, 0, 0, 0])
    bits = solve_odd_dashing(bare)
    assert bits is not None and sum(bits) % 2 == 1


def test_solver_on_all_ones_quotient():
    a = quotient(code_of("1111"))
    cycles = sum(
        len(two_colored_cycles(a, ca, cb))
        for ca in range(1, 5)
        for cb in range(ca + 1, 5)
    )
    assert cycles == 12
    assert validate(a).ok


def test_validate_flags_a_flipped_edge():
    a = build_cubical(3)
    bits = dashing_bits(a)
    bits[0] ^= 1
    broken = apply_dashing(a, bits)
    report = validate(broken)
    assert not report.ok
    assert report.failure == "odd-dashing"
    assert report.witness


def test_validate_passes_for_builders():
    assert validate(build_cubical(5)).ok
    assert validate(quotient(code_of("11110"))).ok


def test_switch_vertex_keeps_validity_everywhere():
    a = quotient(code_of("1111"))
    for label in a.bosons + a.fermions:
        assert validate(switch_vertex(a, label)).ok


def test_switch_vertex_is_an_involution():
    a = build_cubical(3)
    for label in ("000", "111"):
        assert switch_vertex(switch_vertex(a, label), label) == a


def test_switch_vertex_unknown_label():
    with pytest.raises(ValueError):
        switch_vertex(build_cubical(2), "0000")


def test_flip_color_keeps_validity():
    a = quotient(code_of("1111"))
    for color in range(1, 5):
        assert validate(flip_color_dashes(a, color)).ok


def test_disjoint_union_shapes():
    a = quotient(code_of("1111"))
    u = disjoint_union(a, a)
    assert len(u.bosons) == 8 and len(u.fermions) == 8
    assert validate(u).ok
    assert len(connected_components(u)) == 2
    assert len(connected_components(a)) == 1


def test_disjoint_union_rejects_mixed_color_counts():
    with pytest.raises(ValueError):
        disjoint_union(build_cubical(2), build_cubical(3))


def test_export_dot_cube2():
    text = export_dot(build_cubical(2))
    node_lines = [line for line in text.splitlines() if "fillcolor" in line]
    edge_lines = [line for line in text.splitlines() if " -- " in line]
    assert len(node_lines) == 4
    assert len(edge_lines) == 4
    assert sum("style=dashed" in line for line in edge_lines) == 1


def test_export_dot_quotient_counts():
    text = export_dot(quotient(code_of("1111")))
    assert len([line for line in text.splitlines() if "fillcolor" in line]) == 8
    assert len([line for line in text.splitlines() if " -- " in line]) == 16


def test_export_does_not_validate():
    bare = quotient_chromotopology(code_of("1111"))
    assert not validate(bare).ok
    text = export_dot(bare)
    assert "style=dashed" not in text
    assert len([line for line in text.splitlines() if " -- " in line]) == 16


def test_edge_counts_and_perfect_matchings():
    for n in range(2, 6):
        for code in all_codes(n):
            a = quotient(code)
            d = len(a.fermions)
            assert sum(len(row) for row in a.edges) == d * a.colors
            for row in a.edges:
                assert sorted(b for b, _ in row) == list(range(d))


def test_quotients_are_connected():
    for n in range(2, 7):
        for code in all_codes(n):
            assert len(connected_components(quotient(code))) == 1


def test_quotient_of_trivial_code_is_the_cube_chromotopology():
    for n in range(2, 6):
        cube = build_cubical(n)
        quo = quotient(LinearCode(n, ()))
        assert cube.bosons == quo.bosons
        assert cube.fermions == quo.fermions
        for c in range(n):
            assert [b for b, _ in cube.edges[c]] == [b for b, _ in quo.edges[c]]


def _enumerate_even_codes(length: int) -> list[LinearCode]:
    # independent span-growing enumeration over even-weight words
    words = [v for v in range(1, 1 << length) if v.bit_count() % 2 == 0]
    seen = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        grown = []
        for span in frontier:
            for w in words:
                if w in span:
                    continue
                bigger = frozenset(span | {s ^ w for s in span})
                if bigger not in seen:
                    seen.add(bigger)
                    grown.append(bigger)
        frontier = grown
    return [
        LinearCode(
            length,
            tuple(BinaryWord.from_int(v, length) for v in sorted(span) if v),
        )
        for span in sorted(seen, key=lambda s: (len(s), sorted(s)))
    ]


def _has_simple_chromotopology(code: LinearCode) -> bool:
    return all(w.weight() == 0 or w.weight() > 2 for w in span_members(code))


def test_odd_dashing_feasible_exactly_for_doubly_even_codes():
    for n in range(2, 7):
        for code in _enumerate_even_codes(n):
            if not _has_simple_chromotopology(code):
                continue
            bare = quotient_chromotopology(code)
            feasible = solve_odd_dashing(bare) is not None
            assert feasible == (classify_code(code).value == "doubly-even")


def _brute_force_odd_dashing_exists(bare) -> bool:
    cycles = []
    for ca in range(1, bare.colors + 1):
        for cb in range(ca + 1, bare.colors + 1):
            for cycle in two_colored_cycles(bare, ca, cb):
                mask = 0
                for c, f in cycle.edges:
                    mask |= 1 << ((c - 1) * len(bare.fermions) + f)
                cycles.append(mask)
    total = bare.colors * len(bare.fermions)
    for assignment in range(1 << total):
        if all((assignment & mask).bit_count() % 2 for mask in cycles):
            return True
    return False


def test_solver_agrees_with_brute_force_on_small_graphs():
    small = [
        apply_dashing(build_cubical(2), [0] * 4),
        apply_dashing(build_cubical(3), [0] * 12),
        quotient_chromotopology(code_of("1111")),
    ]
    for bare in small:
        assert bare.colors * len(bare.fermions) <= 16
        solver = solve_odd_dashing(bare) is not None
        assert solver == _brute_force_odd_dashing_exists(bare)


def test_apply_dashing_length_guard():
    with pytest.raises(ValueError):
        apply_dashing(build_cubical(2), [0, 1])


def test_permute_colors_validity_and_guard():
    a = quotient(code_of("11110"))
    assert validate(permute_colors(a, (2, 1, 5, 3, 4))).ok
    with pytest.raises(ValueError):
        permute_colors(a, (1, 1, 2, 3, 4))
