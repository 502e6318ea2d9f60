"""Command-line front end.

Subcommands: tableaux, nsjp, jack, norm, count, verify, and wave with the
nested integrate / density / check actions.  Rationals are printed as "p/q"
strings so exact results survive serialization; all iteration orders are
fixed, so repeated runs with identical flags produce identical bytes.

Exit codes: 0 success, 2 usage error, 3 inadmissible coupling, 4 failed
verification.  Errors are mirrored as JSON on stderr.
"""

from __future__ import annotations

import argparse
import csv
import importlib.resources
import json
import sys
from fractions import Fraction

import numpy as np

from . import verify
from .combinatorics import RSYT, enumerate_rsyt, hooks_and_dim, jack_count, weight_n
from .hermitian import norm, norm_recursive
from .symmetric_jack import eigenvalue, jack, labels_by_degree, minimal_jack
from .torus_wave import TorusContext, TorusPoint, density, integrate_L
from .vvpoly import KappaContext, KappaError
from .yang_baxter import node

USAGE_ERROR, KAPPA_ERROR, VERIFY_ERROR = 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _fail(message, USAGE_ERROR)


def _fail(message: str, code: int):
    json.dump({"error": message, "code": code}, sys.stderr)
    sys.stderr.write("\n")
    raise SystemExit(code)


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        _fail(f"expected comma-separated integers, got {text!r}", USAGE_ERROR)


def _parse_kappa(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        _fail(f"expected a rational like 1/10, got {text!r}", USAGE_ERROR)


def _frac(q: Fraction) -> str:
    return str(q)


def _resolve_tableau(tau: tuple[int, ...], spec: str) -> tuple[int, RSYT]:
    tableaux = enumerate_rsyt(tau)
    if spec and spec[0] in "Tt" and spec[1:].isdigit():
        idx = int(spec[1:])
        if idx >= len(tableaux):
            _fail(f"tableau index {spec} out of range (dimension {len(tableaux)})", USAGE_ERROR)
        return idx, tableaux[idx]
    content = _parse_ints(spec)
    for idx, T in enumerate(tableaux):
        if T.content == content:
            return idx, T
    _fail(f"no tableau of shape {tau} has content vector {list(content)}", USAGE_ERROR)


def _tableau_json(tau: tuple[int, ...], idx: int, T: RSYT) -> dict:
    return {
        "index": f"T{idx}",
        "rows": [list(r) for r in T.rows],
        "content": list(T.content),
    }


def _poly_json(ctx: KappaContext, p) -> list[dict]:
    items = sorted(
        p.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]), reverse=True
    )
    return [
        {
            "alpha": list(alpha),
            "tableau": list(ctx.tableaux[t].content),
            "coeff": _frac(c),
        }
        for (alpha, t), c in items
    ]


def _emit(payload, args):
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def schema(name: str) -> dict:
    """Load one of the shipped JSON schemas by stem name."""
    ref = importlib.resources.files("vvjack") / "schemas" / f"{name}.json"
    return json.loads(ref.read_text())


# -- subcommands -------------------------------------------------------------


def _cmd_tableaux(args):
    tau = _parse_ints(args.tau)
    hooks, h_max, dim = hooks_and_dim(tau)
    tableaux = enumerate_rsyt(tau)
    payload = {
        "tau": list(tau),
        "n": sum(tau),
        "dimension": dim,
        "max_hook": h_max,
        "min_symmetric_degree": weight_n(tau),
        "hooks": [
            {"cell": [i, j], "hook": hooks[(i, j)]} for (i, j) in sorted(hooks)
        ],
        "tableaux": [_tableau_json(tau, i, T) for i, T in enumerate(tableaux)],
    }
    _emit(payload, args)


def _context(args) -> KappaContext:
    tau = _parse_ints(args.tau)
    kappa = _parse_kappa(args.kappa)
    try:
        return KappaContext(tau, kappa, force=args.force_kappa)
    except KappaError as exc:
        _fail(str(exc), KAPPA_ERROR)


def _cmd_nsjp(args):
    ctx = _context(args)
    alpha = _parse_ints(args.alpha)
    idx, T = _resolve_tableau(ctx.tau, args.tableau)
    try:
        nd = node(ctx, alpha, T)
        norm2 = norm(ctx, alpha, T)
    except KappaError as exc:
        _fail(str(exc), KAPPA_ERROR)
    payload = {
        "tau": list(ctx.tau),
        "kappa": _frac(ctx.kappa),
        "alpha": list(alpha),
        "tableau": _tableau_json(ctx.tau, idx, T),
        "spectral_vector": [_frac(x) for x in nd.xi],
        "rank_permutation": list(nd.r),
        "norm2": _frac(norm2),
        "polynomial": _poly_json(ctx, nd.zeta),
    }
    _emit(payload, args)


def _cmd_jack(args):
    ctx = _context(args)
    if args.lam is None:
        _jack_table(ctx, args)
        return
    lam = _parse_ints(args.lam)
    try:
        if args.tableau is not None:
            idx, T = _resolve_tableau(ctx.tau, args.tableau)
        else:
            sinks = [
                (lt, ts)
                for lt, ts in labels_by_degree(ctx.tau, sum(lam))
                if lt == tuple(sorted(lam, reverse=True))
            ]
            if len(sinks) != 1:
                _fail(
                    f"{len(sinks)} sink tableaux exist for lambda={list(lam)}; "
                    "pass --tableau",
                    USAGE_ERROR,
                )
            T = sinks[0][1]
            idx = next(i for i, U in enumerate(enumerate_rsyt(ctx.tau)) if U == T)
        J = jack(ctx, lam, T)
    except KappaError as exc:
        _fail(str(exc), KAPPA_ERROR)
    except ValueError as exc:
        _fail(str(exc), USAGE_ERROR)
    payload = {
        "tau": list(ctx.tau),
        "kappa": _frac(ctx.kappa),
        "lambda": list(J.lam),
        "tableau": _tableau_json(ctx.tau, idx, J.T_S),
        "degree": sum(J.lam),
        "norm2": _frac(J.norm),
        "eigenvalue": _frac(J.eigenvalue),
        "component_size": len(J.component.labels),
        "stabilizer_order": J.component.stabilizer_order,
        "coefficients": [
            {"alpha": list(beta), "tableau": list(content), "coeff": _frac(c)}
            for (beta, content), c in sorted(J.coefficients.items(), reverse=True)
        ],
        "polynomial": _poly_json(ctx, J.poly),
    }
    _emit(payload, args)


def _jack_table(ctx: KappaContext, args):
    if args.max_degree is None:
        _fail("jack needs --lambda or --max-degree", USAGE_ERROR)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["degree", "count", "eigenvalues"])
    for degree in range(args.max_degree + 1):
        labels = labels_by_degree(ctx.tau, degree)
        eigs = ";".join(
            _frac(eigenvalue(ctx, lam, T_S)) for lam, T_S in labels
        )
        writer.writerow([degree, len(labels), eigs])


def _cmd_norm(args):
    ctx = _context(args)
    alpha = _parse_ints(args.alpha)
    idx, T = _resolve_tableau(ctx.tau, args.tableau)
    try:
        closed = norm(ctx, alpha, T)
        recursive = (
            norm_recursive(ctx, alpha, T) if min(alpha) >= 0 else closed
        )
    except KappaError as exc:
        _fail(str(exc), KAPPA_ERROR)
    payload = {
        "tau": list(ctx.tau),
        "kappa": _frac(ctx.kappa),
        "alpha": list(alpha),
        "tableau": _tableau_json(ctx.tau, idx, T),
        "norm2": _frac(closed),
        "norm2_recursive": _frac(recursive),
        "agree": closed == recursive,
    }
    _emit(payload, args)


def _cmd_count(args):
    tau = _parse_ints(args.tau)
    rows = [
        (d, jack_count(tau, d, restrict_last_zero=args.restrict_last_zero))
        for d in range(args.max_degree + 1)
    ]
    if args.output == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["degree", "count"])
        writer.writerows(rows)
        return
    payload = {
        "tau": list(tau),
        "min_degree": weight_n(tau),
        "restricted_last_zero": args.restrict_last_zero,
        "series": [{"degree": d, "count": c} for d, c in rows],
    }
    _emit(payload, args)


def _print_checks(results) -> bool:
    width = max(len(r.name) for r in results)
    ok = True
    for r in results:
        ok &= r.passed
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.name.ljust(width)}"
        if r.detail:
            line += f"  {r.detail}"
        print(line)
    return ok


def _cmd_verify(args):
    tau = _parse_ints(args.tau)
    kappas = [_parse_kappa(k) for k in args.kappa.split(";")]
    try:
        results = verify.exact_suite(
            tau, kappas, max_degree=args.max_degree, seed=args.seed
        )
    except KappaError as exc:
        _fail(str(exc), KAPPA_ERROR)
    if not _print_checks(results):
        _fail("exact verification failed", VERIFY_ERROR)


def _cmd_wave(args):
    tau = _parse_ints(args.tau)
    kappa = float(_parse_kappa(args.kappa))
    if args.action == "integrate":
        tctx = TorusContext(tau, kappa)
        theta = tuple(float(v) for v in args.theta.split(","))
        if len(theta) != sum(tau):
            _fail("theta length must match the number of variables", USAGE_ERROR)
        L = integrate_L(tctx, TorusPoint(theta), tol=args.tol)
        payload = {
            "tau": list(tau),
            "kappa": args.kappa,
            "theta": list(theta),
            "tolerance": args.tol,
            "matrix": {
                "real": [[float(v) for v in row] for row in L.real],
                "imag": [[float(v) for v in row] for row in L.imag],
            },
        }
        _emit(payload, args)
    elif args.action == "density":
        tctx = TorusContext(tau, kappa)
        ctx = KappaContext(tau, _parse_kappa(args.kappa))
        if args.lam is not None:
            lam = _parse_ints(args.lam)
            _, T = _resolve_tableau(tau, args.tableau) if args.tableau else (None, None)
            if T is None:
                _fail("density with --lambda also needs --tableau", USAGE_ERROR)
            J = jack(ctx, lam, T)
        else:
            J = minimal_jack(ctx)
        N = sum(tau)
        points = []
        for gaps in _grid_compositions(args.grid, N):
            step = 2 * np.pi / (args.grid + N)
            angles = np.cumsum([0.0] + [(g + 1) * step for g in gaps[:-1]])
            points.append(TorusPoint(angles))
        values = density(tctx, points, J, tol=args.tol)
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow([f"theta_{i}" for i in range(1, N + 1)] + ["density"])
        for p, v in zip(points, values):
            writer.writerow([f"{a:.12f}" for a in p.angles] + [f"{v:.12e}"])
    else:
        try:
            results = verify.numeric_suite(tau, kappa, tol=args.tol, seed=args.seed)
        except KappaError as exc:
            _fail(str(exc), KAPPA_ERROR)
        ok = _print_checks(results)
        if tuple(tau) == (2, 2):
            probe = verify.boundedness_probe()
            bounded = probe["density_slope"] >= -0.01
            expected = probe["expected_operator_norm_slope"]
            raw = abs(probe["operator_norm_slope"] - expected) <= 0.2 * abs(expected)
            print(
                f"{'PASS' if bounded else 'FAIL'}  density stays bounded at a collision"
                f"  slope {probe['density_slope']:+.3f}"
            )
            print(
                f"{'PASS' if raw else 'FAIL'}  bare base state diverges at the known rate"
                f"  slope {probe['operator_norm_slope']:+.3f} vs {expected:+.3f}"
            )
            ok = ok and bounded and raw
        if not ok:
            _fail("numeric verification failed", VERIFY_ERROR)


def _grid_compositions(total: int, parts: int):
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _grid_compositions(total - first, parts - 1):
            yield (first,) + rest


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vvjack", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, kappa=True):
        p.add_argument("--tau", required=True, help="shape, e.g. 2,2")
        if kappa:
            p.add_argument("--kappa", required=True, help="rational coupling, e.g. 1/10")
            p.add_argument(
                "--force-kappa",
                action="store_true",
                help="admit couplings outside the positivity window (poles still error)",
            )
        p.add_argument("--output", choices=["json", "csv"], default="json")

    p = sub.add_parser("tableaux", help="shape data and all tableaux")
    common(p, kappa=False)
    p.set_defaults(func=_cmd_tableaux)

    p = sub.add_parser("nsjp", help="one nonsymmetric Jack polynomial")
    common(p)
    p.add_argument("--alpha", required=True, help="composition, e.g. 0,1,1")
    p.add_argument("--tableau", required=True, help="T<index> or content vector")
    p.set_defaults(func=_cmd_nsjp)

    p = sub.add_parser("jack", help="a symmetric Jack polynomial or a degree table")
    common(p)
    p.add_argument("--lambda", dest="lam", help="partition, e.g. 1,1,0,0")
    p.add_argument("--tableau", help="sink tableau (optional if unique)")
    p.add_argument("--max-degree", type=int, help="emit a CSV table instead")
    p.set_defaults(func=_cmd_jack)

    p = sub.add_parser("norm", help="squared norm, closed form and recursion")
    common(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--tableau", required=True)
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("count", help="symmetric label counts per degree")
    common(p, kappa=False)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--restrict-last-zero", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="exact-arithmetic invariant suite")
    p.add_argument("--tau", required=True)
    p.add_argument("--kappa", default="1/10;-1/7", help="semicolon-separated list")
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("wave", help="numeric torus computations")
    p.add_argument("action", choices=["integrate", "density", "check"])
    p.add_argument("--tau", required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--theta", help="angles for integrate, e.g. 0.3,1.5,3.0,5.2")
    p.add_argument("--lambda", dest="lam", help="label for density (default minimal)")
    p.add_argument("--tableau")
    p.add_argument("--grid", type=int, default=3, help="density grid refinement")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=["json", "csv"], default="json")
    p.set_defaults(func=_cmd_wave)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except SystemExit:
        raise
    except KappaError as exc:
        _fail(str(exc), KAPPA_ERROR)
    except ValueError as exc:
        _fail(str(exc), USAGE_ERROR)
    return 0


if __name__ == "__main__":
    sys.exit(main())
