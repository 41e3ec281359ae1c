"""Command-line front end.

One subcommand per operation family; ``--format text`` prints plain values
and tables, ``--format structured`` prints canonical JSON (two-space indent,
stable key order) that survives a parse/re-serialize round trip unchanged.
Chain complexes and chain maps come in as files in the format documented in
:mod:`towercalc.chainio`; everything else is flags.

Exit status: 0 for a computed result (including negative verdicts), 1 for
typed domain errors (the code appears in the output), 2 for usage errors.
The environment variable TOWER_CALC_MAX_DEGREE (default 64) caps the
homotopy degree of table computations to bound runtime.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import chainio
from .chains import (
    Verdict,
    check_normal_invariant,
    homology,
    mapping_cone,
    verify_desuspension,
)
from .disklinks import pi0_cardinality, pi1_description, ses_rank_report
from .errors import ChainFormatError, DomainError, InvalidChainMapError, InvalidComplexError
from .hilton import SphereWedge, looped_product_ranks, wedge_pi_ranks
from .lie import lyndon_words, witt_rank
from .tower import (
    BettiVector,
    codim_check,
    comparison_connectivities,
    connectivity_note,
    convergence_check,
    layer_profile,
    obstruction_degree,
    obstruction_group_rank,
    phi_connectivity,
    stage_map_connectivity,
)

DEFAULT_DEGREE_CAP = 64


class UsageError(Exception):
    pass


def _degree_cap() -> int:
    raw = os.environ.get("TOWER_CALC_MAX_DEGREE", str(DEFAULT_DEGREE_CAP))
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"TOWER_CALC_MAX_DEGREE={raw!r} is not an integer") from None
    if cap < 0:
        raise UsageError("TOWER_CALC_MAX_DEGREE must be nonnegative")
    return cap


def _check_degree(q: int, what: str = "q-max") -> int:
    cap = _degree_cap()
    if q > cap:
        raise UsageError(
            f"{what} {q} exceeds the degree cap {cap} (raise TOWER_CALC_MAX_DEGREE to allow)"
        )
    return q


def _parse_betti(spec: str) -> BettiVector:
    entries = {}
    for piece in spec.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if ":" not in piece:
            raise UsageError(f"bad betti entry {piece!r}; expected degree:rank")
        d, _, r = piece.partition(":")
        try:
            entries[int(d)] = int(r)
        except ValueError:
            raise UsageError(f"bad betti entry {piece!r}; expected integers") from None
    try:
        return BettiVector(entries)
    except ValueError as exc:
        raise UsageError(f"bad betti vector: {exc}") from None


def _parse_dims(spec: str) -> SphereWedge:
    try:
        dims = tuple(int(x) for x in spec.split(",") if x.strip())
        return SphereWedge(dims)
    except ValueError as exc:
        raise UsageError(f"bad sphere dimensions {spec!r}: {exc}") from None


def _load_complex(path: str):
    try:
        return chainio.load_complex(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_map(path: str):
    try:
        return chainio.load_map(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _group_payload(group) -> dict:
    return {"betti": group.betti, "torsion": list(group.torsion)}


def _homology_payload(summary) -> dict:
    return {str(d): _group_payload(g) for d, g in summary.groups.items()}


def _homology_text(summary) -> str:
    if summary.is_trivial():
        return "all trivial"
    return "\n".join(f"H_{d} = {g}" for d, g in summary.groups.items())


def _table_payload(table) -> dict:
    return {
        "q_min": table.q_min,
        "q_max": table.q_max,
        "ranks": {str(q): r for q, r in table.entries.items()},
    }


def _table_text(table) -> str:
    if not table.entries:
        return f"all zero on [{table.q_min}, {table.q_max}]"
    return "\n".join(f"{q}: {r}" for q, r in table.entries.items())


# ---- subcommand handlers ---------------------------------------------------


def _cmd_homology(args):
    c = _load_complex(args.complex)
    summary = homology(c)
    payload = {"homology": _homology_payload(summary)}
    return payload, _homology_text(summary), 0


def _cmd_cone(args):
    f = _load_map(args.map)
    cone = mapping_cone(f)
    payload = chainio.complex_to_payload(cone)
    lines = ["ranks: " + ", ".join(f"{d}: {r}" for d, r in cone.ranks.items())]
    for d, mat in cone.boundaries.items():
        lines.append(f"boundary {d}: {mat.to_lists()}")
    return payload, "\n".join(lines), 0


def _cmd_desusp_check(args):
    boundary = _load_map(args.boundary)
    section = _load_map(args.section)
    report = verify_desuspension(boundary.target, boundary, section)
    degrees = {
        str(comp.degree): {
            "relative": _group_payload(comp.relative),
            "cone": _group_payload(comp.cone),
            "match": comp.match,
        }
        for comp in report.comparisons
    }
    payload = {
        "verdict": report.verdict.value,
        "sectioning_ok": report.sectioning_ok,
        "degrees": degrees,
    }
    if report.reason:
        payload["reason"] = report.reason
    lines = [report.verdict.value]
    for comp in report.comparisons:
        mark = "match" if comp.match else "MISMATCH"
        lines.append(
            f"degree {comp.degree}: H_{comp.degree}(P,dP) = {comp.relative}"
            f" vs cone H_{comp.degree - 1} = {comp.cone}  [{mark}]"
        )
    if report.reason:
        lines.append(f"reason: {report.reason}")
    code = 1 if report.verdict is Verdict.INVALID_SECTIONING else 0
    return payload, "\n".join(lines), code


def _cmd_normal_invariant(args):
    alpha = _load_map(args.alpha)
    boundary = _load_map(args.boundary)
    verdict = check_normal_invariant(alpha, boundary.target, boundary, args.n)
    payload = {"verdict": verdict.value, "n": args.n}
    return payload, verdict.value, 0


def _letters_text(word) -> str:
    if word.alphabet_size <= 26:
        return "".join(chr(ord("a") + x) for x in word.letters)
    return "(" + ",".join(str(x) for x in word.letters) + ")"


def _cmd_lyndon(args):
    # the full listing has ~ g^len / len entries; refuse absurd requests
    if args.g >= 2 and args.g ** min(args.max_len, 64) > 2 ** 26:
        raise UsageError("listing would be enormous; reduce --g or --max-len")
    words = lyndon_words(args.g, args.max_len)
    payload = {
        "alphabet_size": args.g,
        "max_len": args.max_len,
        "counts": {str(n): len(ws) for n, ws in words.items()},
        "words": {str(n): [list(w.letters) for w in ws] for n, ws in words.items()},
    }
    lines = []
    for n, ws in words.items():
        lines.append(f"{n}: " + " ".join(_letters_text(w) for w in ws))
    return payload, "\n".join(lines), 0


def _cmd_witt(args):
    value = witt_rank(args.g, args.len)
    return {"g": args.g, "len": args.len, "rank": value}, str(value), 0


def _cmd_pi_wedge(args):
    wedge = _parse_dims(args.dims)
    _check_degree(args.q_max)
    if args.loop_t is not None:
        table = looped_product_ranks(wedge, args.loop_t, args.q_max)
        payload = {
            "dims": list(wedge.dims),
            "loop_factors": args.loop_t,
            **_table_payload(table),
        }
    else:
        table = wedge_pi_ranks(wedge, args.q_max)
        payload = {"dims": list(wedge.dims), **_table_payload(table)}
    return payload, _table_text(table), 0


def _cmd_tower(args):
    q = args.quantity
    if q == "phi":
        _require(args, "n", "k", "j")
        value = phi_connectivity(args.n, args.k, args.j)
        return _connectivity_result(q, args, value)
    if q == "stage":
        _require(args, "n", "k", "j")
        value = stage_map_connectivity(args.n, args.k, args.j)
        return _connectivity_result(q, args, value)
    if q == "convergence":
        _require(args, "n", "k", "j")
        value = convergence_check(args.n, args.k, args.j)
        payload = {"quantity": q, "n": args.n, "k": args.k, "j": args.j, "value": value}
        return payload, "true" if value else "false", 0
    if q == "codim":
        _require(args, "n", "k", "bconn")
        value = codim_check(args.bconn, args.k, args.n)
        payload = {
            "quantity": q,
            "n": args.n,
            "k": args.k,
            "boundary_map_connectivity": args.bconn,
            "value": value,
        }
        return payload, "true" if value else "false", 0
    raise UsageError(f"unknown tower quantity {q!r}")


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required for this quantity")


def _connectivity_result(quantity, args, value):
    note = connectivity_note(value)
    payload = {
        "quantity": quantity,
        "n": args.n,
        "k": args.k,
        "j": args.j,
        "value": value,
    }
    text = str(value)
    if note:
        payload["note"] = note
        text += f"\nNOTE: {note}"
    return payload, text, 0


def _cmd_layer(args):
    source = args.t if args.t is not None else _parse_betti(args.betti)
    q_range = None
    if args.q_min is not None or args.q_max is not None:
        if args.q_min is None or args.q_max is None:
            raise UsageError("--q-min and --q-max must be given together")
        q_range = (args.q_min, args.q_max)
    profile = layer_profile(source, args.n, args.j, q_range)
    payload = {
        "n": args.n,
        "j": args.j,
        "top_degree": profile.top_degree,
        "copies": profile.copies,
        "bound": profile.bound_kind,
        **_table_payload(profile.table),
    }
    if args.t is not None:
        payload["points"] = args.t
    text = (
        f"{profile.bound_kind}; wedge of {profile.copies} spheres,"
        f" top degree {profile.top_degree}\n" + _table_text(profile.table)
    )
    return payload, text, 0


def _cmd_obstruction(args):
    s = obstruction_degree(args.n, args.j)
    payload = {"n": args.n, "j": args.j, "degree": s}
    text = f"degree: {s}"
    if args.betti is not None:
        b = _parse_betti(args.betti)
        rank = obstruction_group_rank(b, args.n, args.j)
        payload["rank"] = rank
        text += f"\nrank: {rank}"
    return payload, text, 0


def _cmd_compare(args):
    record = comparison_connectivities(args.n, args.k, args.j)
    values = record.as_dict()
    notes = {}
    for name, value in values.items():
        note = connectivity_note(value)
        if note:
            notes[name] = note
    payload = {"n": args.n, "k": args.k, "j": args.j, "values": values}
    if notes:
        payload["notes"] = notes
    lines = [f"{name}: {value}" for name, value in values.items()]
    for name, note in notes.items():
        lines.append(f"NOTE {name}: {note}")
    return payload, "\n".join(lines), 0


def _cmd_disk_links(args):
    if args.n < 3:
        raise UsageError("the disk-links analysis needs ambient dimension n >= 3")
    q = args.quantity
    if q == "pi0":
        value = pi0_cardinality(args.t)
        return {"quantity": q, "n": args.n, "t": args.t, "value": value}, str(value), 0
    if q == "pi1":
        group = pi1_description(args.t)
        payload = {
            "quantity": q,
            "n": args.n,
            "t": args.t,
            "group": str(group),
            "copies": group.copies,
            "order": group.order,
        }
        return payload, f"{group} of order {group.order}", 0
    if q == "ses":
        if args.m is None:
            raise UsageError("--m is required for the ses quantity")
        _check_degree(2 * args.m + args.n - 1, what="derived degree 2m+n-1")
        report = ses_rank_report(args.n, args.t, args.m)
        payload = {
            "quantity": q,
            "n": report.n,
            "t": report.t,
            "m": report.m,
            "rank_B": report.rank_B,
            "rank_C": report.rank_C,
            "upper_odd": report.upper_odd,
            "upper_even": report.upper_even,
            "euler_relation": report.euler_relation,
            "exact": report.exact,
        }
        lines = [
            f"rank_B (sum of t copies at degree {2 * report.m + 1}): {report.rank_B}",
            f"rank_C (degree {2 * report.m + report.n - 1}): {report.rank_C}",
            f"rank pi_{2 * report.m + 1} <= {report.upper_odd}",
            f"rank pi_{2 * report.m} <= {report.upper_even}",
            f"rank pi_{2 * report.m} - rank pi_{2 * report.m + 1} = {report.euler_relation}",
        ]
        if report.exact:
            payload["exact_odd"] = report.exact_odd
            payload["exact_even"] = report.exact_even
            lines.append(
                f"EXACT: rank pi_{2 * report.m + 1} = {report.exact_odd},"
                f" rank pi_{2 * report.m} = {report.exact_even}"
            )
        return payload, "\n".join(lines), 0
    raise UsageError(f"unknown disk-links quantity {q!r}")


# ---- parser ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="towercalc",
        description="Exact homology, free-Lie-algebra and embedding-tower calculator.",
    )
    parser.add_argument(
        "--format",
        choices=("text", "structured"),
        default="text",
        help="text for humans, structured for canonical JSON",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("homology", help="integer homology of a chain-complex file")
    p.add_argument("--complex", required=True, help="chain-complex file")
    p.set_defaults(handler=_cmd_homology)

    p = sub.add_parser("cone", help="algebraic mapping cone of a chain-map file")
    p.add_argument("--map", required=True, help="chain-map file")
    p.set_defaults(handler=_cmd_cone)

    p = sub.add_parser("desusp-check", help="compare cone homology with the shifted pair")
    p.add_argument("--boundary", required=True, help="chain-map file: boundary -> P")
    p.add_argument("--section", required=True, help="chain-map file: K -> boundary")
    p.set_defaults(handler=_cmd_desusp_check)

    p = sub.add_parser("normal-invariant", help="fundamental-class test for a sphere map")
    p.add_argument("--alpha", required=True, help="chain-map file: sphere -> Thom model")
    p.add_argument("--boundary", required=True, help="chain-map file: boundary -> P")
    p.add_argument("--n", type=int, required=True, help="dimension of the pair")
    p.set_defaults(handler=_cmd_normal_invariant)

    p = sub.add_parser("lyndon", help="Lyndon words by length")
    p.add_argument("--g", type=int, required=True, help="alphabet size")
    p.add_argument("--max-len", type=int, required=True, help="largest word length")
    p.set_defaults(handler=_cmd_lyndon)

    p = sub.add_parser("witt", help="dimension of a graded free-Lie-algebra piece")
    p.add_argument("--g", type=int, required=True, help="number of generators")
    p.add_argument("--len", type=int, required=True, help="word length / degree")
    p.set_defaults(handler=_cmd_witt)

    p = sub.add_parser("pi-wedge", help="rational homotopy ranks of a sphere wedge")
    p.add_argument("--dims", required=True, help="comma-separated sphere dimensions, e.g. 3,3")
    p.add_argument("--q-max", type=int, required=True, help="top homotopy degree")
    p.add_argument(
        "--loop-t",
        type=int,
        default=None,
        help="report the looped t-fold product instead of the wedge itself",
    )
    p.set_defaults(handler=_cmd_pi_wedge)

    p = sub.add_parser("tower", help="tower connectivity and convergence formulas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--bconn", type=int, default=None,
                   help="connectivity of the boundary inclusion (codim only)")
    p.add_argument("quantity", choices=("phi", "stage", "convergence", "codim"))
    p.set_defaults(handler=_cmd_tower)

    p = sub.add_parser("layer", help="rank profile of a tower layer (upper bound)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=int, default=None, help="treat P as t points")
    group.add_argument("--betti", default=None, help="betti vector, e.g. 0:1,2:1")
    p.add_argument("--q-min", type=int, default=None)
    p.add_argument("--q-max", type=int, default=None)
    p.set_defaults(handler=_cmd_layer)

    p = sub.add_parser("obstruction", help="degree (and rank) of the obstruction group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--betti", default=None, help="betti vector for the rank computation")
    p.set_defaults(handler=_cmd_obstruction)

    p = sub.add_parser("compare", help="connectivities of the comparison maps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("disk-links", help="disjoint disks in a disk: pi0, pi1, rank bounds")
    p.add_argument("--n", type=int, required=True, help="ambient dimension (>= 3)")
    p.add_argument("--t", type=int, required=True, help="number of disks")
    p.add_argument("--m", type=int, default=None, help="degree pair index for ses")
    p.add_argument("quantity", choices=("pi0", "pi1", "ses"))
    p.set_defaults(handler=_cmd_disk_links)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text, code = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ChainFormatError, InvalidComplexError, InvalidChainMapError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        if args.format == "structured":
            sys.stdout.write(chainio.dumps({"error": exc.code, "detail": str(exc)}))
        else:
            print(f"error: {exc.code}: {exc}")
        return 1
    if args.format == "structured":
        sys.stdout.write(chainio.dumps(payload))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
