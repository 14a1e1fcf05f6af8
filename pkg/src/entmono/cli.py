"""Command-line surface: spectrum/monotone reports, majorization verdicts,
relative and thermodynamic bounds, chain sweeps, analytic curves, crossing
scans, the order census, and the Fisher-Hartwig constants.

All output is deterministic given the arguments and the seed (default 42);
numbers are emitted with 12 significant digits.  Validation problems exit
with code 2, numeric failures inside the modules with code 3; both put a
machine-readable JSON object on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import cftanalytic, erasure, fermichain, monotones, orderlab, relative, spectra

USAGE_ERROR = 2
NUMERIC_ERROR = 3


def _fmt(value):
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def emit(records: list, fmt: str, stream) -> None:
    """Write records (list of dicts with a fixed schema) as CSV or JSON.

    Column order follows the first record; floats carry 12 significant
    digits in both formats, so CSV and JSON parse back to identical values.
    """
    if fmt == "json":
        shaped = [
            {k: (float(_fmt(v)) if isinstance(v, float) else v) for k, v in rec.items()}
            for rec in records
        ]
        json.dump(shaped, stream, indent=2)
        stream.write("\n")
        return
    if not records:
        return
    writer = csv.writer(stream, lineterminator="\n")
    header = list(records[0].keys())
    writer.writerow(header)
    for rec in records:
        writer.writerow([_fmt(rec[k]) for k in header])


def _kv(quantity, value):
    return {"quantity": quantity, "value": value}


# ---------------------------------------------------------------------------
# subcommand implementations (each returns a list of record dicts)


def _cmd_monotones(args) -> list:
    spec = spectra.read_spectrum(args.spectrum)
    nmax = args.nmax
    stats = monotones.modular_stats(spec, nmax)
    recs = [_kv("dim", spec.dim), _kv("S", stats.entropy)]
    if nmax >= 2:
        recs.append(_kv("C", stats.capacity))
    for k in range(3, nmax + 1):
        recs.append(_kv(f"C{k}", stats.cumulants[k - 1]))
    for n in range(1, nmax + 1):
        b = args.b if args.b is not None else float(n - 1)
        recs.append(_kv(f"M{n}", monotones.shifted_moment(spec, n, b)))
    for n in range(1, min(nmax, 4) + 1):
        roots = tuple([args.root] * ((n - 1) // 2)) if args.root is not None else tuple([0.0] * ((n - 1) // 2))
        poly = monotones.extremal_poly(n, roots)
        recs.append(_kv(f"P{n}", monotones.extremal_value(spec, poly)))
    for alpha in (2, 3):
        recs.append(_kv(f"renyi{alpha}", monotones.renyi(spec, alpha)))
    return recs


def _cmd_majorize(args) -> list:
    rho = spectra.read_spectrum(args.rho)
    sigma = spectra.read_spectrum(args.sigma)
    recs = [_kv("verdict", spectra.majorization_verdict(rho, sigma))]
    dm = monotones.delta_m(rho, sigma, args.nmax)
    for n, v in enumerate(dm, start=1):
        recs.append(_kv(f"deltaM{n}", float(v)))
    recs.append(_kv("deltaS", float(dm[0])))
    recs.append(_kv("p2_gap", monotones.p2_extremal(rho) - monotones.p2_extremal(sigma)))
    try:
        recs.append(_kv("ineq3_slack", monotones.inequality3_slack(rho, sigma).slack))
        recs.append(_kv("ineq4_slack", monotones.inequality4_slack(rho, sigma).slack))
    except monotones.DegenerateDenominator as exc:
        recs.append(_kv("ineq_note", f"degenerate: {exc}"))
    return recs


def _read_pair(rfile, sfile) -> spectra.CommutingPair:
    return spectra.CommutingPair(spectra.read_spectrum(rfile), spectra.read_spectrum(sfile))


def _cmd_relative(args) -> list:
    before = _read_pair(args.rho, args.sigma)
    stats = relative.relative_stats(before, args.nmax)
    recs = [
        _kv("S_rel", stats.rel_entropy),
        _kv("C_rel", stats.rel_variance),
    ]
    x = before.s_min
    recs.append(_kv("s_min", x))
    for n in range(1, args.nmax + 1):
        recs.append(_kv(f"Mrel{n}", relative.relative_shifted_moment(before, n, float(n - 1), x)))
    recs.append(_kv("petz2", relative.petz_renyi(before, 2.0)))
    if args.rho_after and args.sigma_after:
        after = _read_pair(args.rho_after, args.sigma_after)
        bounds = relative.rel_entropy_production_bounds(before, after)
        recs += [
            _kv("delta_S_rel", bounds.delta_s_rel),
            _kv("bound_tight", bounds.tight),
            _kv("bound_relaxed", bounds.relaxed),
            _kv("rel_ineq3_slack", relative.relative_inequality3_slack(before, after)),
            _kv("sigma_majorizes", str(spectra.sigma_majorizes(before, after)).lower()),
        ]
    return recs


def _cmd_clausius(args) -> list:
    th = relative.read_thermal_spec(args.thermal)
    rho = spectra.read_spectrum(args.spectrum)
    report = relative.clausius_slack(th, rho)
    gibbs = th.gibbs()
    thermo = spectra.sigma_majorizes(
        spectra.CommutingPair(rho, gibbs), spectra.CommutingPair(gibbs, gibbs)
    )
    return [
        _kv("lhs", report.lhs),
        _kv("rhs", report.rhs),
        _kv("slack", report.slack),
        _kv("middle_rhs", report.middle_rhs),
        _kv("middle_slack", report.middle_slack),
        _kv("thermomajorizes", str(thermo).lower()),
    ]


def _cmd_erasure(args) -> list:
    spec = spectra.read_spectrum(args.spectrum)
    report = erasure.landauer_ladder(spec, args.max_order)
    recs = [
        _kv(f"min_qubits_order{m}", n) for m, n in sorted(report.per_order_min_qubits.items())
    ]
    if report.tight_third_min_qubits is not None:
        recs.append(_kv("min_qubits_third_tight", report.tight_third_min_qubits))
        recs.append(_kv("min_qubits_third_weak", report.weak_third_min_qubits))
    recs.append(_kv("work_cost_kT", report.work_cost))
    return recs


def _parse_ells(text: str) -> list:
    if ":" in text:
        parts = [int(p) for p in text.split(":")]
        start, stop = parts[0], parts[1]
        step = parts[2] if len(parts) > 2 else 1
        return list(range(start, stop + 1, step))
    return [int(p) for p in text.split(",")]


def _cmd_chain(args) -> list:
    ells = _parse_ells(args.ells)
    states = args.states.split(",")
    return fermichain.chain_records(args.model, args.n_sites, ells, states, nmax=args.nmax)


def _params_for(args) -> cftanalytic.CftParams:
    if args.model == "xx":
        params = cftanalytic.xx_params(ell=args.ell, L=args.L)
    else:
        params = cftanalytic.ising_params(ell=args.ell, L=args.L)
    if args.gamma is not None:
        params = cftanalytic.CftParams(
            gamma=args.gamma,
            c=params.c,
            minus_c1prime=params.minus_c1prime,
            d2_ln_cn=params.d2_ln_cn,
            ell=params.ell,
            L=params.L,
        )
    return params


def _cmd_cft(args) -> list:
    params = _params_for(args)
    if args.scan:
        return _scan_records(args.quantity, params)
    if args.quantity == "sminusC":
        fn = lambda x: cftanalytic.s_minus_c(x, params)  # noqa: E731
    else:
        fn = cftanalytic.curve(args.quantity, params)
    xs = np.linspace(args.x_min, args.x_max, args.points)
    return [
        {
            "x": float(x),
            "quantity": args.quantity,
            "value": float(fn(float(x))),
            "gamma": params.gamma,
            "model": args.model,
            "ell": params.ell if params.ell is not None else "",
        }
        for x in xs
    ]


def _scan_records(quantity: str, params: cftanalytic.CftParams) -> list:
    x = cftanalytic.find_crossing(quantity, params)
    return [
        {
            "x": x,
            "quantity": f"crossing_{quantity}",
            "value": 0.0,
            "gamma": params.gamma,
            "model": "",
            "ell": params.ell if params.ell is not None else "",
        }
    ]


def _cmd_scan(args) -> list:
    params = _params_for(args)
    return _scan_records(args.quantity, params)


def _cmd_census(args) -> list:
    result = orderlab.order_census(
        dim=args.dim, samples=args.samples, seed=args.seed, nmax=args.nmax, family=args.family
    )
    return [result.to_json_dict()]


def _cmd_constants(args) -> list:
    u1, u2 = cftanalytic.upsilon_derivatives()
    return [
        _kv("minus_upsilon_prime_1", -u1),
        _kv("upsilon_double_prime_1", u2),
        _kv("entropy_constant", -u1 + math.log(2.0) / 3.0),
        _kv("capacity_constant", u2 + math.log(2.0) / 3.0),
    ]


# ---------------------------------------------------------------------------
# argument parsing


class _SubParser(argparse.ArgumentParser):
    """Subcommand parser that documents every default in --help."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("formatter_class", argparse.ArgumentDefaultsHelpFormatter)
        super().__init__(*args, **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entmono",
        description="Monotone sequences, majorization verdicts, and critical-chain entanglement numerics.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_SubParser)

    def common(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
        p.add_argument("--output", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=42, help="seed for any randomness")

    p = sub.add_parser("monotones", help="spectrum -> S, C, cumulants, shifted and extremal monotones")
    p.add_argument("spectrum")
    p.add_argument("--nmax", type=int, default=4, help="highest monotone order")
    p.add_argument("--b", type=float, default=None, help="override the shift b (default n-1)")
    p.add_argument("--root", type=float, default=None, help="root value for the extremal polynomials")
    common(p)

    p = sub.add_parser("majorize", help="two spectra -> verdict, Delta-M ladder, inequality slacks")
    p.add_argument("rho")
    p.add_argument("sigma")
    p.add_argument("--nmax", type=int, default=4, help="highest monotone order")
    common(p)

    p = sub.add_parser("relative", help="commuting pair -> relative quantifiers and bounds")
    p.add_argument("rho")
    p.add_argument("sigma")
    p.add_argument("--rho-after", default=None, help="post-transition state spectrum")
    p.add_argument("--sigma-after", default=None, help="post-transition reference spectrum")
    p.add_argument("--nmax", type=int, default=4, help="highest monotone order")
    common(p)

    p = sub.add_parser("clausius", help="thermal spec + spectrum -> Clausius slack report")
    p.add_argument("thermal")
    p.add_argument("spectrum")
    common(p)

    p = sub.add_parser("erasure", help="spectrum -> Landauer ladder report")
    p.add_argument("spectrum")
    p.add_argument("--max-order", type=int, default=4, help="highest ladder order (1..4)")
    common(p)

    p = sub.add_parser("chain", help="free-fermion chain sweep -> CSV records")
    p.add_argument("--model", choices=fermichain.MODELS, required=True, help="chain model")
    p.add_argument("--n-sites", type=int, required=True, help="number of chain sites")
    p.add_argument("--ells", required=True, help="start:stop[:step] or comma list")
    p.add_argument("--states", default="gs", help="comma list from gs,current,psi")
    p.add_argument("--nmax", type=int, default=4, help="highest monotone order")
    common(p)

    p = sub.add_parser("cft", help="analytic curve family -> CSV records")
    p.add_argument("--quantity", choices=("sminusC", "deltaS", "deltaS2", "deltaS3", "deltaM2"), required=True, help="curve to tabulate")
    p.add_argument("--model", choices=("xx", "ising"), default="ising")
    p.add_argument("--gamma", type=float, default=None, help="excited-state exponent override")
    p.add_argument("--ell", type=float, default=None, help="block length")
    p.add_argument("--L", type=float, default=None, help="system size (omit for infinite line)")
    p.add_argument("--x-min", type=float, default=0.05, help="smallest block fraction")
    p.add_argument("--x-max", type=float, default=0.5, help="largest block fraction")
    p.add_argument("--points", type=int, default=10, help="number of grid points")
    p.add_argument("--scan", action="store_true", help="report the sign-change location instead")
    common(p)

    p = sub.add_parser("scan", help="crossing finder for the analytic curves")
    p.add_argument("--quantity", choices=("deltaS", "deltaS2", "deltaS3", "deltaM2"), required=True, help="curve to scan")
    p.add_argument("--model", choices=("xx", "ising"), default="ising")
    p.add_argument("--gamma", type=float, default=None, help="excited-state exponent override")
    p.add_argument("--ell", type=float, default=None, help="block length")
    p.add_argument("--L", type=float, default=None, help="system size (omit for infinite line)")
    common(p)

    p = sub.add_parser("census", help="order census -> confusion-matrix JSON")
    p.add_argument("--dim", type=int, default=3, help="spectrum dimension")
    p.add_argument("--samples", type=int, default=1000, help="number of sampled pairs")
    p.add_argument("--nmax", type=int, default=2, help="highest cone degree")
    p.add_argument("--family", choices=orderlab.FAMILIES, default="msequence", help="monotone family")
    common(p)

    p = sub.add_parser("constants", help="Fisher-Hartwig constants report")
    common(p)

    return parser


_HANDLERS = {
    "monotones": _cmd_monotones,
    "majorize": _cmd_majorize,
    "relative": _cmd_relative,
    "clausius": _cmd_clausius,
    "erasure": _cmd_erasure,
    "chain": _cmd_chain,
    "cft": _cmd_cft,
    "scan": _cmd_scan,
    "census": _cmd_census,
    "constants": _cmd_constants,
}

_NUMERIC_FAILURES = (
    cftanalytic.NoSignChange,
    cftanalytic.DomainError,
    fermichain.NoConvergence,
    monotones.DegenerateDenominator,
    ArithmeticError,
)


def _fail(code: int, kind: str, exc: BaseException) -> int:
    json.dump({"error": kind, "detail": str(exc)}, sys.stderr)
    sys.stderr.write("\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a message; normalize usage failures to 2
        return USAGE_ERROR if exc.code not in (0, None) else 0
    handler = _HANDLERS[args.command]
    fmt = getattr(args, "format", "csv")
    if args.command == "census":
        fmt = "json"
    try:
        records = handler(args)
    except (OSError, ValueError, KeyError) as exc:
        if isinstance(exc, _NUMERIC_FAILURES):
            return _fail(NUMERIC_ERROR, type(exc).__name__, exc)
        return _fail(USAGE_ERROR, type(exc).__name__, exc)
    except ArithmeticError as exc:
        return _fail(NUMERIC_ERROR, type(exc).__name__, exc)
    buf = io.StringIO()
    emit(records, fmt, buf)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
