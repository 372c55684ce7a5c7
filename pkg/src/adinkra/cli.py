"""Command-line front end.

Subcommands: analyze a code's Adinkra, enumerate doubly-even codes with
their analyses, verify the structure theorems exhaustively at small length,
and export graphs as DOT text.  Exit codes: 0 success, 1 input error, 2 a
structural theorem failed (which means the toolkit itself is broken).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .codes import (
    BinaryWord,
    LinearCode,
    ParityClass,
    classify_code,
    contains,
    enumerate_doubly_even_codes,
    parse_code_text,
)
from .graph import build_cubical, build_quotient, export_dot, permute_colors, validate
from .monodromy import (
    AnalysisReport,
    TheoremViolation,
    analyze,
    find_relation,
    gar_matrices,
    report_to_dict,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_THEOREM = 2


class CliInputError(Exception):
    pass


def _chi_text(value: int) -> str:
    return f"{value:+d}" if value else "0"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adinkra",
        description="Adinkras from doubly-even binary codes and their signed monodromy groups",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    analyze_p = sub.add_parser("analyze", help="analyze the Adinkra of one code")
    _add_code_options(analyze_p)
    analyze_p.add_argument("--rainbow", help="colour order, e.g. 2,1,3,4")
    analyze_p.add_argument("--format", choices=("json", "text"), default="json")
    analyze_p.add_argument("--out", help="output path (default stdout)")

    enum_p = sub.add_parser("enumerate", help="analyze every doubly-even code")
    enum_p.add_argument("--nmax", type=int, required=True, help="code length")
    enum_p.add_argument("--kmax", type=int, help="largest dimension (default nmax)")
    enum_p.add_argument("--format", choices=("json", "text"), default="text")
    enum_p.add_argument("--out", help="output path (default stdout)")

    verify_p = sub.add_parser("verify", help="run the exhaustive theorem checks")
    verify_p.add_argument("--nmax", type=int, required=True, help="largest code length")
    verify_p.add_argument("--out", help="output path (default stdout)")

    export_p = sub.add_parser("export", help="emit the Adinkra of one code as DOT")
    _add_code_options(export_p)
    export_p.add_argument("--rainbow", help="colour order, e.g. 2,1,3,4")
    export_p.add_argument("--out", help="output path (default stdout)")

    return parser


def _add_code_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--code", help="path to a generator file, one word per line")
    parser.add_argument("--gens", help="inline generators, comma separated")


def _load_code(args) -> LinearCode:
    if getattr(args, "code", None) and getattr(args, "gens", None):
        raise CliInputError("give either --code or --gens, not both")
    if getattr(args, "code", None):
        try:
            text = Path(args.code).read_text()
        except OSError as exc:
            raise CliInputError(f"cannot read {args.code}: {exc}") from None
    elif getattr(args, "gens", None):
        text = "\n".join(args.gens.split(","))
    else:
        raise CliInputError("a code is required (--code or --gens)")
    try:
        return parse_code_text(text)
    except ValueError as exc:
        raise CliInputError(f"bad code: {exc}") from None


def _parse_rainbow(spec: str | None, colors: int) -> tuple[int, ...] | None:
    if spec is None:
        return None
    try:
        order = tuple(int(part) for part in spec.split(","))
    except ValueError:
        raise CliInputError(
            f"bad rainbow {spec!r}: expected comma-separated integers"
        ) from None
    if sorted(order) != list(range(1, colors + 1)):
        raise CliInputError(f"rainbow {spec!r} is not a permutation of 1..{colors}")
    return order


def _require_doubly_even(code: LinearCode) -> None:
    parity = classify_code(code)
    if parity is not ParityClass.DOUBLY_EVEN:
        raise CliInputError(
            f"code {code} is {parity.value}; a doubly-even code is required"
        )


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _report_text(report: AnalysisReport, code: LinearCode) -> str:
    gens = ",".join(str(g) for g in code.generators) or "(trivial)"
    lines = [
        f"N={report.N} k={report.k} d={report.d}",
        f"code generators: {gens}",
        f"h1 in code: {'yes' if report.h1_in_code else 'no'}",
        f"genus: {report.genus}",
        f"K: {report.K_tag} (chi0 = {_chi_text(report.chi0)})",
        f"H: order {report.H_order} = {report.H_structure}",
        f"Sigma: order {report.Sigma_order}"
        + (" (elementary abelian)" if report.Sigma_elementary_abelian else ""),
        f"M: order {report.M_order}",
        f"relation: {report.relation_witness or 'none'}",
    ]
    return "\n".join(lines) + "\n"


def run_analyze(args) -> int:
    code = _load_code(args)
    _require_doubly_even(code)
    rainbow = _parse_rainbow(args.rainbow, code.length)
    graph = build_quotient(code)
    if rainbow:
        graph = permute_colors(graph, rainbow)
    report = analyze(graph)
    if args.format == "json":
        text = json.dumps(report_to_dict(report, graph, rainbow), indent=2) + "\n"
    else:
        text = _report_text(report, code)
    _write(text, args.out)
    return EXIT_OK


def _enumerate_rows(nmax: int, kmax: int):
    for code in enumerate_doubly_even_codes(nmax, kmax):
        report = analyze(build_quotient(code))
        yield code, report


def run_enumerate(args) -> int:
    nmax = args.nmax
    kmax = args.kmax if args.kmax is not None else nmax
    try:
        rows = list(_enumerate_rows(nmax, kmax))
    except ValueError as exc:
        raise CliInputError(str(exc)) from None
    if args.format == "json":
        payload = {
            "schema": 1,
            "N": nmax,
            "rows": [
                {
                    "generators": [str(g) for g in code.generators],
                    "k": report.k,
                    "d": report.d,
                    "genus": report.genus,
                    "h1_in_code": report.h1_in_code,
                    "chi0": report.chi0,
                    "H_order": report.H_order,
                    "H_structure": report.H_structure,
                    "Sigma_order": report.Sigma_order,
                    "M_order": report.M_order,
                }
                for code, report in rows
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        header = (
            f"{'generators':<24} {'k':>2} {'d':>3} {'genus':>5} {'h1':>3} "
            f"{'chi0':>4} {'|H|':>4} {'H':<5} {'|Sigma|':>7} {'|M|':>4}"
        )
        lines = [header]
        for code, report in rows:
            gens = ",".join(str(g) for g in code.generators) or "(trivial)"
            lines.append(
                f"{gens:<24} {report.k:>2} {report.d:>3} {report.genus:>5} "
                f"{'yes' if report.h1_in_code else 'no':>3} {_chi_text(report.chi0):>4} "
                f"{report.H_order:>4} {report.H_structure:<5} "
                f"{report.Sigma_order:>7} {report.M_order:>4}"
            )
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_OK


class _Tally:
    def __init__(self) -> None:
        self.checks: dict[str, list[int]] = {}

    def record(self, name: str, ok: bool) -> None:
        passed, total = self.checks.setdefault(name, [0, 0])
        self.checks[name] = [passed + (1 if ok else 0), total + 1]

    def lines(self) -> list[str]:
        return [
            f"{name}: {passed}/{total} pass"
            for name, (passed, total) in sorted(self.checks.items())
        ]

    @property
    def all_pass(self) -> bool:
        return all(p == t for p, t in self.checks.values())


def run_verify(args) -> int:
    nmax = args.nmax
    if not 2 <= nmax <= 8:
        raise CliInputError(f"--nmax {nmax} outside 2..8")
    tally = _Tally()
    branch_cases = {"h1-in-code": 0, "h1-not-in-code": 0}
    for n in range(2, nmax + 1):
        cube = build_cubical(n)
        tally.record("cube-dashing-validates", validate(cube).ok)
        for code in enumerate_doubly_even_codes(n, n):
            graph = build_quotient(code)
            tally.record("solver-dashing-validates", validate(graph).ok)
            try:
                report = analyze(graph)
                ok = True
            except TheoremViolation:
                ok = False
            tally.record("main-theorem", ok)
            if not ok:
                continue
            branch = "h1-in-code" if report.h1_in_code else "h1-not-in-code"
            branch_cases[branch] += 1
            gm = gar_matrices(graph)
            tally.record("gr-relations", _gr_relations_hold(gm))
            if n % 2 == 0:
                witness = find_relation(gm)
                tally.record(
                    "relation-iff-h1",
                    (witness is not None) == contains(code, BinaryWord.ones(n)),
                )
            k_order = 1 if report.K_tag == "trivial" else 2
            tally.record(
                "snake-lemma-sigma",
                report.Sigma_order == 2 * 2**report.k // k_order,
            )
    lines = tally.lines()
    lines.append(
        "main-theorem branches: "
        f"h1-in-code {branch_cases['h1-in-code']} cases, "
        f"h1-not-in-code {branch_cases['h1-not-in-code']} cases"
    )
    lines.append("ALL CHECKS PASSED" if tally.all_pass else "CHECKS FAILED")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if tally.all_pass else EXIT_THEOREM


def _gr_relations_hold(gm) -> bool:
    n = gm.colors
    d = gm.degree
    eye = np.eye(d, dtype=int)
    for i in range(n):
        li, ri = gm.L[i].matrix(), gm.R[i].matrix()
        for j in range(n):
            lj, rj = gm.L[j].matrix(), gm.R[j].matrix()
            want = 2 * eye if i == j else 0 * eye
            if not np.array_equal(li @ rj + lj @ ri, want):
                return False
            if not np.array_equal(ri @ lj + rj @ li, want):
                return False
    return True


def run_export(args) -> int:
    code = _load_code(args)
    _require_doubly_even(code)
    rainbow = _parse_rainbow(args.rainbow, code.length)
    graph = build_quotient(code)
    if rainbow:
        graph = permute_colors(graph, rainbow)
    _write(export_dot(graph), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": run_analyze,
        "enumerate": run_enumerate,
        "verify": run_verify,
        "export": run_export,
    }
    try:
        return handlers[args.subcommand](args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM


if __name__ == "__main__":
    raise SystemExit(main())
