"""Command-line front end: one subcommand per checker, deterministic
structured reports, optional JSON.

Exit status: 0 for any computed verdict (including unknown), 2 for
parse/validation errors, 3 for internal consistency failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import condensed as cnd
from . import dplusxl as dxl
from .ideals import (
    comaximal,
    ideal_colon,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    is_principal,
    membership,
    v_closure,
)
from .parsing import (
    parse_domain,
    parse_dxl,
    parse_element,
    parse_elements,
    parse_ideal,
    parse_relement,
    parse_rideal,
)
from .rings import fmt_element
from .verdicts import (
    DomainMismatchError,
    InternalConsistencyError,
    ParseError,
    PreconditionError,
    UnsupportedOperationError,
    Verdict,
)

DEFAULT_HEIGHT = int(os.environ.get("CONDENSE_DEFAULT_HEIGHT", "10"))
DEFAULT_TRUNC = int(os.environ.get("CONDENSE_DEFAULT_TRUNC", "24"))

CITATIONS = {
    "ideal-calc": ["exact fractional/monomial ideal calculus with v-closure"],
    "check-condensed-pair": ["condensed pair: IJ = {ij : i in I, j in J}"],
    "check-star": ["star property: (cap(a_i))(cap(b_j)) = cap(a_i*b_j)"],
    "check-primal": ["primal element: x | yz forces x = rs with r | y and s | z"],
    "check-atom-prime": [
        "atom-prime criterion: an atom a is prime iff a not dividing b forces (a,b)_v = D"
    ],
    "certificates": [
        "in a condensed domain, v-coprime nonunits are comaximal",
        "in a condensed domain, t-invertible ideals are invertible and principal",
    ],
    "vs-closed": [
        "vs-closed pair criterion: 1 + a*b = (p + q*a)(r + s*b)",
        "a vs-closed field extension has degree at most 3",
    ],
    "sm-closed": ["sm-closed: products of 2-generated submodules are set products"],
    "dplusxl-check": [
        "D is condensed iff D + X*K[X] is condensed",
        "K + X*L[X] is condensed iff K in L is vs-closed",
        "a condensed D + X*L[X] forces [L:K] <= 3",
    ],
    "factor": ["constructive factorization of elements of canonical ideal products"],
    "pr-witness": ["D[X] is condensed only when D is a field"],
}

_REPORT_KEYS = (
    "subcommand",
    "inputs",
    "verdict",
    "witness",
    "counterexample",
    "bound",
    "reason",
    "certificate_kind",
    "citations",
    "transcript",
)


def _fmt(v) -> str:
    if isinstance(v, Verdict):
        return v.kind
    return fmt_element(v)


def _verdict_fields(v: Verdict) -> dict:
    return {
        "verdict": v.kind,
        "witness": [_fmt(w) for w in v.witness],
        "counterexample": [_fmt(c) for c in v.counterexample],
        "bound": v.bound,
        "reason": v.reason,
    }


def _status_fields(st) -> dict:
    return {
        "verdict": st.kind,
        "witness": [],
        "counterexample": [] if st.certificate is None else [str(st.certificate)],
        "bound": None,
        "reason": st.reason,
        "certificate_kind": getattr(st.certificate, "kind", None),
    }


def _report(subcommand: str, inputs: dict, fields: dict, transcript=()) -> dict:
    rep = {
        "subcommand": subcommand,
        "inputs": {k: str(v) for k, v in inputs.items()},
        "verdict": "",
        "witness": [],
        "counterexample": [],
        "bound": None,
        "reason": "",
        "certificate_kind": None,
        "citations": CITATIONS[subcommand],
        "transcript": list(transcript),
    }
    rep.update(fields)
    return rep


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True)
    lines = []
    for key in _REPORT_KEYS:
        val = report[key]
        if key == "inputs":
            for k in sorted(val):
                lines.append(f"input.{k}: {val[k]}")
        elif isinstance(val, list):
            if val:
                lines.append(f"{key}: " + "; ".join(str(v) for v in val))
        elif val not in (None, ""):
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Handlers


def _cmd_ideal_calc(args) -> dict:
    D = parse_domain(args.ring)
    a = parse_ideal(args.a, D)
    inputs = {"ring": args.ring, "op": args.op, "a": args.a}
    if args.op in ("product", "intersect", "colon", "sum", "comaximal"):
        if args.b is None:
            raise ParseError(f"--b is required for {args.op}")
        inputs["b"] = args.b
        b = parse_ideal(args.b, D)
        if args.op == "product":
            out = ideal_product(a, b)
        elif args.op == "intersect":
            out = ideal_intersect(a, b)
        elif args.op == "colon":
            out = ideal_colon(a, b)
        elif args.op == "sum":
            out = ideal_sum(a, b)
        else:
            return _report(
                "ideal-calc",
                inputs,
                {"verdict": str(comaximal(a, b)), "reason": "sum compared with the unit ideal"},
            )
        return _report("ideal-calc", inputs, {"verdict": "computed", "witness": [str(out)]})
    if args.op == "v-closure":
        return _report(
            "ideal-calc", inputs, {"verdict": "computed", "witness": [str(v_closure(a))]}
        )
    if args.op == "inverse":
        return _report(
            "ideal-calc", inputs, {"verdict": "computed", "witness": [str(a.inverse())]}
        )
    if args.op == "principal":
        v = is_principal(a)
        return _report("ideal-calc", inputs, _verdict_fields(v))
    if args.op == "membership":
        if args.x is None:
            raise ParseError("--x is required for membership")
        inputs["x"] = args.x
        x = parse_element(args.x, D)
        return _report(
            "ideal-calc",
            inputs,
            {"verdict": str(membership(x, a)), "reason": "exact membership"},
        )
    raise ParseError(f"unknown op {args.op!r}")


def _cmd_condensed_pair(args) -> dict:
    D = parse_domain(args.ring)
    a = parse_ideal(args.a, D)
    b = parse_ideal(args.b, D)
    v = cnd.condensed_pair(a, b, bound=args.bound)
    return _report(
        "check-condensed-pair",
        {"ring": args.ring, "a": args.a, "b": args.b, "bound": args.bound},
        _verdict_fields(v),
    )


def _cmd_star(args) -> dict:
    D = parse_domain(args.ring)
    a_elems = parse_elements(args.a, D)
    b_elems = parse_elements(args.b, D)
    v = cnd.star_property(a_elems, b_elems, D)
    fields = _verdict_fields(v)
    transcript = []
    if v.is_fails:
        witness, lhs, rhs = v.counterexample
        fields["counterexample"] = [_fmt(witness)]
        transcript = [
            f"lhs = (cap(a_i))(cap(b_j)) = {lhs}",
            f"rhs = cap(a_i*b_j) = {rhs}",
            f"witness {_fmt(witness)} lies in rhs but not in lhs",
        ]
    elif v.is_holds:
        fields["witness"] = [str(v.witness[0])]
    return _report(
        "check-star", {"ring": args.ring, "a": args.a, "b": args.b}, fields, transcript
    )


def _cmd_primal(args) -> dict:
    D = parse_domain(args.ring)
    x = parse_element(args.x, D)
    v = cnd.primal(x, D, bound=args.bound)
    return _report(
        "check-primal",
        {"ring": args.ring, "x": args.x, "bound": args.bound},
        _verdict_fields(v),
    )


def _cmd_atom_prime(args) -> dict:
    D = parse_domain(args.ring)
    a = parse_element(args.a, D)
    v = cnd.atom_prime_criterion(a, D, bound=args.bound)
    return _report(
        "check-atom-prime",
        {"ring": args.ring, "a": args.a, "bound": args.bound},
        _verdict_fields(v),
    )


def _cmd_certificates(args) -> dict:
    D = parse_domain(args.ring)
    certs = cnd.lemma_a1_certificates(D, height=args.height)
    transcript = []
    for c in certs:
        transcript.extend(c.describe())
    return _report(
        "certificates",
        {"ring": args.ring, "height": args.height},
        {
            "verdict": "not_condensed" if certs else "no_certificate",
            "counterexample": [str(c) for c in certs],
            "certificate_kind": certs[0].kind if certs else None,
            "bound": args.height,
            "reason": f"{len(certs)} certificate(s) found",
        },
        transcript,
    )


def _cmd_vs_closed(args) -> dict:
    l_dom = parse_domain(args.l)
    from .rings import FieldDomain

    if not isinstance(l_dom, FieldDomain):
        raise ParseError("--l must be Q or NumField(...)")
    v = dxl.vs_closed(None, l_dom.field, height=args.height)
    fields = _verdict_fields(v)
    transcript = []
    if v.is_fails:
        fields["counterexample"] = [str(v.counterexample[0]), str(v.counterexample[1])]
        refut = v.counterexample[2]
        transcript = refut.describe() + [f"refutation replays: {refut.replay()}"]
    mapping = {"holds": "yes", "fails": "no", "unknown": "unknown"}
    fields["verdict"] = mapping[v.kind]
    return _report("vs-closed", {"l": args.l, "height": args.height}, fields, transcript)


def _cmd_sm_closed(args) -> dict:
    ring = parse_dxl(args.ring)
    from .parsing import _split_commas, parse_nf_scalar

    m_gens = [parse_nf_scalar(p, ring.nf) for p in _split_commas(args.m)]
    n_gens = [parse_nf_scalar(p, ring.nf) for p in _split_commas(args.n)]
    v = dxl.sm_closed_probe(ring.D, ring.nf, m_gens, n_gens, bound=args.bound)
    fields = _verdict_fields(v)
    fields["counterexample"] = [ring.fmt_scalar(c) for c in v.counterexample]
    return _report(
        "sm-closed",
        {"ring": args.ring, "m": args.m, "n": args.n, "bound": args.bound},
        fields,
    )


def _cmd_dplusxl_check(args) -> dict:
    ring = parse_dxl(args.ring)
    st = dxl.is_condensed_dplusxl(
        ring.D,
        ring.nf,
        height=args.height,
        sweep_height=args.sweep_height,
        probe_bound=args.probe_bound,
    )
    fields = _status_fields(st)
    mapping = {
        "condensed": "known_condensed",
        "not_condensed": "known_not_condensed",
        "unknown": "unknown",
    }
    fields["verdict"] = mapping[st.kind]
    transcript = []
    if hasattr(st.certificate, "describe"):
        transcript = st.certificate.describe()
    return _report("dplusxl-check", {"ring": args.ring}, fields, transcript)


def _cmd_factor(args) -> dict:
    ring = parse_dxl(args.ring)
    a = parse_rideal(args.a, ring)
    b = parse_rideal(args.b, ring)
    x = parse_relement(args.x, ring)
    v = dxl.factor_in_product(x, a, b, bound=args.bound)
    fields = _verdict_fields(v)
    transcript = []
    if v.is_holds:
        ae, be = v.witness
        transcript = [
            f"a = {ae}",
            f"b = {be}",
            "re-verified: a*b = x, a in A, b in B (exact)",
        ]
    return _report(
        "factor",
        {"ring": args.ring, "a": args.a, "b": args.b, "x": args.x},
        fields,
        transcript,
    )


def _cmd_pr_witness(args) -> dict:
    D = parse_domain(args.ring)
    d = parse_element(args.d, D)
    e = parse_element(args.e, D)
    cert = cnd.polynomial_ring_witness(D, d, e)
    return _report(
        "pr-witness",
        {"ring": args.ring, "d": args.d, "e": args.e},
        {
            "verdict": "fails",
            "counterexample": [f"(X, ideal({args.d}, X), ideal({args.e}, X))"],
            "certificate_kind": cert.kind,
            "reason": "X is a non-subtle element of the product",
        },
        cert.describe(),
    )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="condense",
        description="Exact deciders and certificates for condensedness properties"
        " of integral domains and D + X*L[X] rings.",
    )
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--out", help="also write the report to this file")
    sub = p.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("ideal-calc", help="ideal arithmetic in canonical form")
    sp.add_argument("--ring", required=True)
    sp.add_argument(
        "--op",
        required=True,
        choices=[
            "product",
            "intersect",
            "colon",
            "sum",
            "v-closure",
            "inverse",
            "principal",
            "membership",
            "comaximal",
        ],
    )
    sp.add_argument("--a", required=True, help="ideal literal")
    sp.add_argument("--b", help="second ideal literal")
    sp.add_argument("--x", help="element literal (membership)")
    sp.set_defaults(handler=_cmd_ideal_calc)

    sp = sub.add_parser("check-condensed-pair", help="is (I, J) a condensed pair?")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--bound", type=int, default=6)
    sp.set_defaults(handler=_cmd_condensed_pair)

    sp = sub.add_parser("check-star", help="star property on two element lists")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--a", required=True, help="comma-separated elements")
    sp.add_argument("--b", required=True, help="comma-separated elements")
    sp.set_defaults(handler=_cmd_star)

    sp = sub.add_parser("check-primal", help="search for a primality counterexample")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--bound", type=int, default=4)
    sp.set_defaults(handler=_cmd_primal)

    sp = sub.add_parser("check-atom-prime", help="atom-prime criterion")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--a", required=True)
    sp.add_argument("--bound", type=int, default=DEFAULT_HEIGHT)
    sp.set_defaults(handler=_cmd_atom_prime)

    sp = sub.add_parser("certificates", help="scan for non-condensedness certificates")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--height", type=int, default=5)
    sp.set_defaults(handler=_cmd_certificates)

    sp = sub.add_parser("vs-closed", help="is Q <= L vs-closed?")
    sp.add_argument("--l", required=True, help="Q or NumField(...)")
    sp.add_argument("--height", type=int, default=1)
    sp.set_defaults(handler=_cmd_vs_closed)

    sp = sub.add_parser("sm-closed", help="probe sm-closedness of D in L")
    sp.add_argument("--ring", required=True, help="DXL(D=...;L=...)")
    sp.add_argument("--m", required=True, help="comma-separated L-scalars")
    sp.add_argument("--n", required=True, help="comma-separated L-scalars")
    sp.add_argument("--bound", type=int, default=3)
    sp.set_defaults(handler=_cmd_sm_closed)

    sp = sub.add_parser("dplusxl-check", help="condensedness of D + X*L[X]")
    sp.add_argument("--ring", required=True, help="DXL(D=...;L=...)")
    sp.add_argument("--height", type=int, default=6)
    sp.add_argument("--sweep-height", type=int, default=1)
    sp.add_argument("--probe-bound", type=int, default=2)
    sp.set_defaults(handler=_cmd_dplusxl_check)

    sp = sub.add_parser("factor", help="split x in the product of two canonical ideals")
    sp.add_argument("--ring", required=True, help="DXL(D=...;L=...)")
    sp.add_argument("--a", required=True, help="canonical R-ideal literal")
    sp.add_argument("--b", required=True, help="canonical R-ideal literal")
    sp.add_argument("--x", required=True, help="R-element literal")
    sp.add_argument("--bound", type=int, default=8)
    sp.set_defaults(handler=_cmd_factor)

    sp = sub.add_parser("pr-witness", help="polynomial-ring non-condensedness witness")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--d", required=True)
    sp.add_argument("--e", required=True)
    sp.set_defaults(handler=_cmd_pr_witness)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except InternalConsistencyError as e:
        print(f"internal consistency failure: {e}", file=sys.stderr)
        return 3
    except (
        ParseError,
        PreconditionError,
        DomainMismatchError,
        UnsupportedOperationError,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = render(report, args.json)
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
