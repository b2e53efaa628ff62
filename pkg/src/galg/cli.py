"""Command-line interface: one subcommand per paper-facing operation.

Results print to stdout as JSON (stable key order) or a readable table.
Exit codes: 0 success, 2 parse errors, 3 violated hypotheses or
preconditions, 4 exhausted search budgets.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import center as center_mod
from . import groebner, invariants, iso
from .errors import PARSE_ERRORS, BudgetExceeded, GalgError
from .fields import PrimeField
from .freealg import NcPoly, random_homogeneous
from .presentations import Presentation
from .textio import (
    emit,
    format_poly,
    parse_poly,
    parse_presentation,
    print_presentation,
    scalar_str,
    subspace_rows,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SYNTAX = 2
EXIT_HYPOTHESIS = 3
EXIT_BUDGET = 4


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> Presentation:
    return parse_presentation(_read_source(path))


def _build(pres: Presentation, degree: int) -> groebner.ReductionSystem:
    return groebner.build(pres, degree)


def _sliced_payload(rs, sliced) -> list[dict]:
    out = []
    for d in range(rs.truncation_degree + 1):
        space = sliced.slice(d)
        out.append(
            {
                "degree": d,
                "dim": space.dim,
                "ambient_dim": space.ambient_dim,
                "basis": subspace_rows(rs.field, space),
            }
        )
    return out


# ---------------------------------------------------------------- handlers


def cmd_hilbert(args) -> dict:
    pres = _load(args.file)
    rs = _build(pres, args.degree)
    payload = {"hilbert": rs.hilbert(), "D": args.degree}
    if args.plot:
        from .plots import render_hilbert

        render_hilbert(payload["hilbert"], args.plot)
        payload["plot"] = args.plot
    return payload


def cmd_gb(args) -> dict:
    pres = _load(args.file)
    rs = _build(pres, args.degree)
    rules = [
        {"lead": rs.word_str(rule.lead), "tail": format_poly(rule.tail)}
        for rule in rs.rules
    ]
    return {
        "D": args.degree,
        "rules": rules,
        "hilbert": rs.hilbert(),
        "generated_in_degree_one": rs.is_generated_in_degree_one(),
    }


def cmd_characters(args) -> dict:
    pres = _load(args.file)
    chars = invariants.characters_enumerate(pres, budget=args.budget)
    return {
        "characters": [[scalar_str(pres.field, a) for a in ch.point] for ch in chars],
        "count": len(chars),
    }


def cmd_tangent(args) -> dict:
    pres = _load(args.file)
    field = pres.field

    def record(ch: invariants.Character) -> dict:
        entry = {
            "point": [scalar_str(field, a) for a in ch.point],
            "cotangent": invariants.cotangent_dimension(pres, ch),
        }
        if args.profile_depth > 0:
            rs = _build(pres, args.degree)
            entry["profile"] = list(
                invariants.tangent_profile(rs, ch, args.profile_depth).dims
            )
        return entry

    if args.point:
        point = tuple(field.parse_scalar(t) for t in args.point.split(","))
        ch = invariants.Character(point)
        return {"characters": [record(ch)]}
    chars = invariants.characters_enumerate(pres, budget=args.budget)
    return {"characters": [record(ch) for ch in chars]}


def cmd_js(args) -> dict:
    pres = _load(args.file)
    rs = _build(pres, args.degree)
    if args.profile:
        profile = tuple(int(t) for t in args.profile.split(","))
        sliced = invariants.tangent_ideal_for_profile(pres, profile, rs, budget=args.budget)
        head = {"profile": list(profile)}
    else:
        sliced = invariants.tangent_ideal(pres, args.s, rs, budget=args.budget)
        head = {"s": args.s}
    return {
        **head,
        "D": args.degree,
        "full": sliced.is_full,
        "degrees": _sliced_payload(rs, sliced),
    }


def cmd_normal(args) -> dict:
    pres = _load(args.file)
    rs = _build(pres, args.degree)
    if args.candidate:
        poly = parse_poly(args.candidate, pres.gens, pres.field)
        return {
            "candidate": format_poly(poly),
            "normal": invariants.is_normal_up_to(rs, poly),
            "D": args.degree,
        }
    lines = invariants.normal_lines_degree_one(rs, budget=args.budget)
    return {
        "lines": [
            {
                "coeffs": [scalar_str(pres.field, c) for c in coeffs],
                "element": format_poly(poly),
            }
            for coeffs, poly in lines
        ],
        "count": len(lines),
        "D": args.degree,
    }


def cmd_center(args) -> dict:
    pres = _load(args.file)
    rs = _build(pres, args.degree)
    space = invariants.central_elements(rs, args.element_degree)
    return {
        "degree": args.element_degree,
        "dim": space.dim,
        "basis": subspace_rows(pres.field, space),
        "elements": [
            format_poly(rs.element_from_component(args.element_degree, row))
            for row in space.rows
        ],
        "D": args.degree,
    }


def cmd_brackets(args) -> dict:
    from . import brackets

    pres = _load(args.file)
    if args.element:
        poly = parse_poly(args.element, pres.gens, pres.field)
    elif args.random_degree:
        rng = random.Random(args.seed)
        poly = random_homogeneous(pres.gens, pres.field, args.random_degree, args.terms, rng)
    else:
        raise GalgError("brackets needs --element or --random-degree")
    pivot = pres.gens.index(args.pivot) if args.pivot else len(pres.gens) - 1
    dec = brackets.bracket_decompose(poly, pivot)
    names = pres.gens.names
    parts = {}
    for s, part in sorted(dec.parts.items()):
        rendered = []
        for w, c in sorted(part.terms.items()):
            word = "*".join(f"{names[i]}^[{j}]" for i, j in w) or "1"
            rendered.append(f"{scalar_str(pres.field, c)} * {word}")
        parts[str(s)] = rendered
    return {
        "element": format_poly(poly),
        "pivot": names[pivot],
        "parts": parts,
        "leading_index": brackets.leading_part_index(dec),
        "round_trip_exact": dec.expand() == poly,
    }


def cmd_fingerprint(args) -> dict:
    pres = _load(args.file)
    rs = _build(pres, args.degree)
    fp = invariants.graded_fingerprint(rs, budget=args.budget)
    payload = {
        "D": fp.truncation_degree,
        "hilbert": list(fp.hilbert),
        "commutator_dims": list(fp.commutator_dims),
        "normal_lines_degree_1": fp.normal_line_count,
        "cotangent_multiset": list(fp.cotangent_multiset)
        if fp.cotangent_multiset is not None
        else None,
    }
    if args.plot:
        from .plots import render_fingerprint

        render_fingerprint(payload, args.plot)
        payload["plot"] = args.plot
    return payload


def cmd_iso(args) -> dict:
    A = _load(args.file_a)
    B = _load(args.file_b)
    if args.method == "brute":
        verdict = iso.brute_force_graded_iso(A, B, args.degree)
    else:
        candidates = None
        if args.scalars:
            candidates = [
                tuple(A.field.parse_scalar(t) for t in group.split(","))
                for group in args.scalars.split(";")
            ]
        verdict = iso.skew_quotient_iso(
            A, B, args.degree, budget=args.budget, scalar_candidates=candidates
        )
    payload = {
        "isomorphic": verdict.isomorphic,
        "sigma": [s + 1 for s in verdict.witness.sigma] if verdict.witness else None,
        "scalars": [scalar_str(A.field, a) for a in verdict.witness.scalars]
        if verdict.witness
        else None,
        "checked_degree": verdict.checked_degree,
    }
    if args.method == "brute":
        payload["linear_map"] = (
            [[scalar_str(A.field, x) for x in row] for row in verdict.linear_witness]
            if verdict.linear_witness
            else None
        )
    return payload


def cmd_cancel(args) -> dict:
    pres = _load(args.file)
    result = center_mod.cancel(pres, args.count, args.degree)
    rs_in = _build(pres, args.degree)
    rs_out = _build(result, args.degree)
    fp_in = invariants.graded_fingerprint(rs_in, budget=args.budget)
    fp_out = invariants.graded_fingerprint(rs_out, budget=args.budget)
    return {
        "count": args.count,
        "result": print_presentation(result),
        "hilbert": rs_out.hilbert(),
        "fingerprint_matches": fp_in == fp_out,
        "D": args.degree,
    }


# ------------------------------------------------------------------ wiring


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--degree", "-D", type=int, default=6, help="truncation degree (default 6)")
    sub.add_argument("--format", choices=("json", "table"), default="table")
    sub.add_argument("--budget", type=int, default=2_000_000, help="enumeration/search budget")
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized demonstrations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galg",
        description="Invariants and isomorphism tests for finitely presented connected graded algebras.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def sub(name: str, help_text: str, handler, files: int = 1) -> argparse.ArgumentParser:
        s = subs.add_parser(name, help=help_text)
        if files == 1:
            s.add_argument("file", help="presentation file (.galg) or - for stdin")
        elif files == 2:
            s.add_argument("file_a", help="first presentation file")
            s.add_argument("file_b", help="second presentation file")
        _common_flags(s)
        s.set_defaults(handler=handler)
        return s

    s = sub("hilbert", "Hilbert function of the truncated algebra", cmd_hilbert)
    s.add_argument("--plot", metavar="PATH", help="also render the Hilbert function to an image file")

    sub("gb", "truncated rewriting rules and degreewise dimensions", cmd_gb)
    sub("characters", "all characters over GF(p)", cmd_characters)

    s = sub("tangent", "cotangent dimensions (and power profiles) of characters", cmd_tangent)
    s.add_argument("--point", help="comma-separated scalars naming one character")
    s.add_argument("--profile-depth", type=int, default=0, help="also report dim I^i/I^{i+1} up to this depth")

    s = sub("js", "intersection of codimension-1 ideals with given tangent data", cmd_js)
    s.add_argument("--s", type=int, help="tangent dimension selecting the ideals")
    s.add_argument("--profile", help="comma-separated power-dimension profile instead of --s")

    s = sub("normal", "normal degree-1 lines (or verify one candidate)", cmd_normal)
    s.add_argument("--candidate", help="polynomial to test instead of scanning (needed over Q)")

    s = sub("center", "central elements of one graded component", cmd_center)
    s.add_argument("--element-degree", type=int, default=1, help="graded component to inspect")

    s = sub("brackets", "decompose into pivot powers times bracket letters", cmd_brackets)
    s.add_argument("--element", help="polynomial in the file's generators")
    s.add_argument("--pivot", help="distinguished generator name (default: the last one)")
    s.add_argument("--random-degree", type=int, help="decompose a random homogeneous element instead")
    s.add_argument("--terms", type=int, default=4, help="terms in the random element")

    s = sub("fingerprint", "composite graded fingerprint", cmd_fingerprint)
    s.add_argument("--plot", metavar="PATH", help="also render the fingerprint to an image file")

    s = sub("iso", "graded isomorphism of two skew quotients", cmd_iso, files=2)
    s.add_argument("--method", choices=("skew", "brute"), default="skew")
    s.add_argument("--scalars", help="semicolon-separated scalar tuples to try over Q, e.g. '1,2;1,3'")

    s = sub("cancel", "adjoin central variables and cancel them again", cmd_cancel)
    s.add_argument("--count", type=int, default=1, help="number of central variables")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.handler(args)
    except PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GalgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(emit(payload, args.format))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
