"""Command-line front end: compute, expand, enumerate, verify, trace.

Output is byte-deterministic for identical inputs.  Exit codes: 0 on
success, 1 on usage errors, 2 on verification failure (including route
disagreement), 3 on an internal invariant breach such as an inexact
Vandermonde division.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import ExactDivisionError, Polynomial, TruncatedSeries
from .insertion import in_step, out_step
from .polynomials import (
    BasisExpansion,
    FamilySpec,
    expand_in_pschur,
    expand_in_schur,
    expansion_via_maximal,
    grothendieck_J_algebraic,
    grothendieck_J_combinatorial,
    grothendieck_P_algebraic,
    grothendieck_P_combinatorial,
    pschur,
    schur,
    schur_bialternant,
    specialize_t,
)
from .tableaux import (
    MultisetTableau,
    ShiftedMultisetTableau,
    enumerate_maximal_mt,
    enumerate_maximal_smt,
    enumerate_mt,
    enumerate_rt,
    enumerate_smt,
    enumerate_srt,
    enumerate_ssyt,
    enumerate_sst,
)
from .verify import SUITES, run_suite

__all__ = ["main"]

USAGE_ERROR, VERIFY_ERROR, INTERNAL_ERROR = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _parse_mu(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}")
    return parts


def _format_mu(mu) -> str:
    return ",".join(map(str, mu)) if mu else "0"


def _series_lines(series: TruncatedSeries) -> list[str]:
    out = []
    for xe, te, c in series.poly.sorted_terms():
        xs = " ".join(map(str, xe))
        ts = " ".join(map(str, te))
        out.append(f"{c}  {xs} | {ts}".rstrip())
    return out


def _series_json(series: TruncatedSeries) -> list:
    return [[c, list(xe), list(te)] for xe, te, c in series.poly.sorted_terms()]


def _expansion_lines(exp: BasisExpansion) -> list[str]:
    return [f"{_format_mu(lam)} : {poly!r}" for lam, poly in exp.coefficients]


def _expansion_json(exp: BasisExpansion) -> dict:
    return {
        _format_mu(lam): [[c, list(te)] for _, te, c in poly.sorted_terms()]
        for lam, poly in exp.coefficients
    }


def _routes_for(spec: FamilySpec):
    if spec.family == "J":
        return {
            "algebraic": lambda: grothendieck_J_algebraic(spec),
            "combinatorial": lambda: grothendieck_J_combinatorial(spec),
        }
    if spec.family == "P":
        return {
            "algebraic": lambda: grothendieck_P_algebraic(spec),
            "combinatorial": lambda: grothendieck_P_combinatorial(spec),
        }
    cap = spec.effective_x_cap()

    def as_series(poly: Polynomial) -> TruncatedSeries:
        lifted = Polynomial(
            spec.n, spec.ell, {(xe, (0,) * spec.ell): c for (xe, _), c in poly.terms.items()}
        )
        return TruncatedSeries(lifted, cap, spec.t_cap)

    if spec.family == "schur":
        return {
            "algebraic": lambda: as_series(schur_bialternant(spec.mu, spec.n)),
            "combinatorial": lambda: as_series(schur(spec.mu, spec.n)),
        }
    return {
        "algebraic": lambda: as_series(
            specialize_t(
                grothendieck_P_algebraic(FamilySpec("P", spec.mu, spec.n, t_cap=0)),
                (0,) * spec.ell,
            )
        ),
        "combinatorial": lambda: as_series(pschur(spec.mu, spec.n)),
    }


def _cmd_compute(args) -> int:
    mu = _parse_mu(args.mu)
    spec = FamilySpec(args.family, mu, args.n, t_cap=args.tcap, x_cap=args.xcap)
    routes = _routes_for(spec)
    wanted = ["algebraic", "combinatorial"] if args.route == "both" else [args.route]
    computed = {name: routes[name]() for name in wanted}
    verdict = None
    if len(computed) == 2:
        a, b = computed["algebraic"], computed["combinatorial"]
        verdict = "AGREE" if a == b else "DISAGREE"
    if args.format == "json":
        payload = {
            "family": spec.family,
            "mu": list(mu),
            "n": spec.n,
            "tcap": spec.t_cap,
            "xcap": spec.effective_x_cap(),
            "routes": {name: _series_json(s) for name, s in computed.items()},
        }
        if verdict:
            payload["verdict"] = verdict
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"family: {spec.family}")
        print(f"mu: {_format_mu(mu)}")
        print(f"n: {spec.n}")
        print(f"tcap: {spec.t_cap}")
        print(f"xcap: {spec.effective_x_cap()}")
        for name, s in computed.items():
            print(f"route {name}: {len(s.poly.terms)} terms")
            for line in _series_lines(s):
                print(line)
        if verdict:
            print(f"verdict: {verdict}")
    return 0 if verdict in (None, "AGREE") else VERIFY_ERROR


def _cmd_expand(args) -> int:
    mu = _parse_mu(args.mu)
    if args.family not in ("J", "P"):
        raise ValueError("expand applies to families J and P")
    spec = FamilySpec(args.family, mu, args.n, t_cap=args.tcap, x_cap=args.xcap)
    if spec.family == "J":
        series = grothendieck_J_algebraic(spec)
        expansion = expand_in_schur(series, spec.n)
    else:
        series = grothendieck_P_algebraic(spec)
        expansion = expand_in_pschur(series, spec.n)
    via_maximal = expansion_via_maximal(spec)
    verdict = "AGREE" if expansion == via_maximal else "DISAGREE"
    if args.format == "json":
        payload = {
            "family": spec.family,
            "mu": list(mu),
            "n": spec.n,
            "tcap": spec.t_cap,
            "basis": expansion.basis,
            "coefficients": _expansion_json(expansion),
            "via_maximal": _expansion_json(via_maximal),
            "verdict": verdict,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"family: {spec.family}")
        print(f"mu: {_format_mu(mu)}")
        print(f"n: {spec.n}")
        print(f"tcap: {spec.t_cap}")
        print(f"basis: {expansion.basis}")
        for line in _expansion_lines(expansion):
            print(line)
        print(f"verdict: {verdict}")
    return 0 if verdict == "AGREE" else VERIFY_ERROR


_ENUM_FAMILIES = ("MT", "SMT", "SMT+-", "SSYT", "SST", "SST+-", "RT", "SRT", "maxMT", "maxSMT")


def _cmd_enumerate(args) -> int:
    mu = _parse_mu(args.mu)
    fam = args.family
    if fam in ("RT", "SRT"):
        if args.outer is None:
            raise ValueError(f"family {fam} needs --outer")
        outer = _parse_mu(args.outer)
        items = enumerate_rt(outer, mu) if fam == "RT" else enumerate_srt(outer, mu)
    elif fam == "MT":
        items = enumerate_mt(mu, args.max_value, args.extra)
    elif fam == "SSYT":
        items = enumerate_ssyt(mu, args.max_value)
    elif fam == "SMT":
        items = enumerate_smt(mu, args.max_value, args.extra, signed=False)
    elif fam == "SMT+-":
        items = enumerate_smt(mu, args.max_value, args.extra, signed=True)
    elif fam == "SST":
        items = enumerate_sst(mu, args.max_value, signed=False)
    elif fam == "SST+-":
        items = enumerate_sst(mu, args.max_value, signed=True)
    elif fam == "maxMT":
        items = enumerate_maximal_mt(mu, args.extra)
    else:
        items = enumerate_maximal_smt(mu, args.extra)
    if args.format == "json":
        payload = {
            "family": fam,
            "mu": list(mu),
            "count": len(items),
            "tableaux": [
                t.to_json_dict()
                if hasattr(t, "to_json_dict")
                else {"outer": list(t.outer), "inner": list(t.inner), "rows": [list(r) for r in t.rows]}
                for t in items
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"family: {fam}")
        print(f"mu: {_format_mu(mu)}")
        print(f"count: {len(items)}")
        for t in items:
            print()
            print(t.to_text())
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failures = [r for r in results if not r.passed]
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "cases": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
            "failures": len(failures),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in results:
            mark = "PASS" if r.passed else "FAIL"
            suffix = f" -- {r.detail}" if r.detail else ""
            print(f"{mark} {r.name}{suffix}")
        print(f"suite {args.suite}: {len(results)} cases, {len(failures)} failures")
    return 0 if not failures else VERIFY_ERROR


def _render_cell(cell) -> list[int]:
    return [cell[0] + 1, cell[1] + 1]


def _cmd_trace(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    if args.flavor == "shifted":
        tableau = ShiftedMultisetTableau.from_text(text)
    else:
        tableau = MultisetTableau.from_text(text)
    ell = args.ell if args.ell is not None else tableau.ell
    states = [tableau]
    traces = []
    if args.direction == "out":
        idx = ell - args.k
        while True:
            t = states[-1]
            if all(len(row[idx]) == 1 for row in t.rows if idx < len(row)):
                break
            t, trace = out_step(t, args.k, ell)
            states.append(t)
            traces.append(trace)
    else:
        if args.inner is None:
            raise ValueError("direction 'in' needs --inner, the target shape")
        inner = _parse_mu(args.inner)
        shifted = args.flavor == "shifted"
        while states[-1].shape != inner:
            t = states[-1]
            shape = t.shape
            if len(shape) != len(inner) or any(a < b for a, b in zip(shape, inner)):
                raise ValueError(f"{inner} is not reachable from shape {shape}")
            strip = [
                (r, (r + shape[r] - 1) if shifted else (shape[r] - 1))
                for r in range(len(shape))
                if shape[r] > inner[r]
            ]
            cell = max(strip, key=lambda rc: rc[1])
            t, trace = in_step(t, args.k, ell, cell)
            states.append(t)
            traces.append(trace)

    final = states[-1]

    def step_json(tr, state):
        data = {
            "removed": str(tr.removed),
            "path": [[r + 1, c + 1, str(old), str(new)] for r, c, old, new in tr.path],
            "tableau": state.to_json_dict(),
        }
        if args.direction == "out":
            data["removed_cell"] = _render_cell(tr.removed_cell)
            data["appended"] = str(tr.appended)
            data["appended_cell"] = _render_cell(tr.appended_cell)
        else:
            data["corner_cell"] = _render_cell(tr.corner_cell)
            data["deposit"] = str(tr.deposit)
            data["deposit_cell"] = _render_cell(tr.deposit_cell)
        return data

    def step_text(i, tr):
        moves = "; ".join(
            f"({r + 1},{c + 1}) {old}->{new}" for r, c, old, new in tr.path
        )
        if args.direction == "out":
            rc = _render_cell(tr.removed_cell)
            ac = _render_cell(tr.appended_cell)
            return (
                f"step {i}: removed {tr.removed} at ({rc[0]},{rc[1]})"
                + (f"; path: {moves}" if moves else "")
                + f"; appended {tr.appended} at ({ac[0]},{ac[1]})"
            )
        cc = _render_cell(tr.corner_cell)
        dc = _render_cell(tr.deposit_cell)
        return (
            f"step {i}: removed {tr.removed} at ({cc[0]},{cc[1]})"
            + (f"; path: {moves}" if moves else "")
            + f"; deposited {tr.deposit} at ({dc[0]},{dc[1]})"
        )

    if args.format == "json":
        payload = {
            "flavor": args.flavor,
            "direction": args.direction,
            "k": args.k,
            "ell": ell,
            "steps": [step_json(tr, state) for tr, state in zip(traces, states[1:])],
            "final": final.to_json_dict(),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"flavor: {args.flavor}")
        print(f"direction: {args.direction}")
        print(f"k: {args.k}")
        print(f"ell: {ell}")
        for i, (tr, state) in enumerate(zip(traces, states[1:]), start=1):
            print(step_text(i, tr))
            print(state.to_text())
        print(f"steps: {len(traces)}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="grothlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a family by both routes")
    p.add_argument("family", choices=("J", "P", "schur", "pschur"))
    p.add_argument("mu", help="comma-separated partition, e.g. 2,1 (0 for empty)")
    p.add_argument("--n", type=int, required=True, help="number of x-variables")
    p.add_argument("--tcap", type=int, default=1, help="max total t-degree")
    p.add_argument("--xcap", type=int, default=None, help="max total x-degree")
    p.add_argument("--route", choices=("both", "algebraic", "combinatorial"), default="both")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("expand", help="basis expansion with the maximal-tableau cross-check")
    p.add_argument("family", choices=("J", "P"))
    p.add_argument("mu")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tcap", type=int, default=1)
    p.add_argument("--xcap", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_expand)

    p = sub.add_parser("enumerate", help="list a tableau family under caps")
    p.add_argument("family", choices=_ENUM_FAMILIES)
    p.add_argument("mu")
    p.add_argument("--outer", default=None, help="outer shape for RT/SRT")
    p.add_argument("--max-value", type=int, default=3, dest="max_value")
    p.add_argument("--extra", type=int, default=1, help="cap on extra entries")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=tuple(sorted(SUITES)) + ("all",))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("trace", help="step-by-step out or in moves at one stage")
    p.add_argument("file", help="tableau file in the text format")
    p.add_argument("--k", type=int, required=True, help="stage (column/diagonal label)")
    p.add_argument("--flavor", choices=("multiset", "shifted"), required=True)
    p.add_argument("--direction", choices=("out", "in"), default="out")
    p.add_argument("--inner", default=None, help="target shape for direction 'in'")
    p.add_argument("--ell", type=int, default=None, help="ambient base width (default: tableau width)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_trace)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ExactDivisionError as ex:
        print(f"internal invariant breach: {ex}", file=sys.stderr)
        return INTERNAL_ERROR
    except (ValueError, OSError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
