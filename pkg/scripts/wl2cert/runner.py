# scripts/wl2cert/runner.py
# Certification CLI: verify, solve, certify, sweep and oracle over the weighted-Gaussian operator calculus.

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from helpers.errors import (
    IllConditioned,
    NoSolutionInTruncation,
    PositivityViolated,
    QuadratureNotConverged,
)
from helpers.fs import atomic_write_text, read_json
from helpers.operators import OperatorParams
from helpers.threading import THREADS_ENV, ordered_map, worker_count
from helpers.validation import ValidationError
from helpers.zpoly import ZPoly, random_zpoly, zpoly_from_json
from services import identity_lab, oracle, reports, solver, transforms
from services.transforms import WeightSpec

from .config import FORMATS, SWEEP_TABLES, RunConfig, load_run_config
from .schemas import validate_artifact

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3

DUALITY_PHIS = 4

# (artifact text, passed)
Outcome = Tuple[str, bool]


# -------------------------
# Inputs
# -------------------------


def load_f(path: Optional[str]) -> ZPoly:
    """--f file in the ZPoly JSON form; f = 1 when absent."""
    if not path:
        return ZPoly.const(1)
    try:
        raw = read_json(path)
    except (OSError, json.JSONDecodeError) as e:
        raise ValidationError(f"cannot read f from {path}: {e}") from e
    return zpoly_from_json(raw, path="f")


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Any]:
    """Only flags given on the command line override the config files."""
    out: Dict[str, Any] = {}

    def put(section: Optional[str], key: str, value: Any) -> None:
        if value is None:
            return
        target = out if section is None else out.setdefault(section, {})
        target[key] = value

    put("params", "k", args.k)
    put("params", "alpha", args.alpha)
    put("params", "beta", args.beta)
    put("params", "gamma", args.gamma)
    if args.c_re is not None or args.c_im is not None:
        c = out.setdefault("params", {}).setdefault("c", {})
        if args.c_re is not None:
            c["re"] = args.c_re
        if args.c_im is not None:
            c["im"] = args.c_im
    put("trunc", "N", args.N)
    put("trunc", "buffer", args.buffer)

    z0 = None
    if args.z0_re is not None or args.z0_im is not None:
        z0 = {"re": args.z0_re or "0", "im": args.z0_im or "0"}
    if args.radius is not None:
        out["domain"] = {"radius": args.radius, "center": z0 or {"re": "0", "im": "0"}}
    else:
        put("weight", "z0", z0)
    put("weight", "lambda", args.lam)

    put("grid", "radial_nodes", args.radial_nodes)
    put("grid", "angular_nodes", args.angular_nodes)
    put(None, "seed", args.seed)
    put(None, "format", args.format)
    put(None, "threads", args.threads)

    if args.cmd == "verify":
        put("suite", "count", args.count)
        put("suite", "degree", args.degree)
        if args.k is not None:
            put("suite", "ks", [args.k])
    elif args.cmd == "sweep":
        put("sweep", "table", args.table)
        if args.k is not None:
            put("sweep", "ks", [args.k])
    elif args.cmd == "oracle":
        put("oracle", "max_degree", args.max_degree)
        put("oracle", "pairs", args.pairs)
    elif args.cmd == "certify":
        put("certify", "N", args.N)
    return out


# -------------------------
# Commands
# -------------------------


def cmd_verify(cfg: RunConfig, f: ZPoly, workers: int) -> Outcome:
    s = cfg.suite
    rows = identity_lab.run_suite(s.ks, count=s.count, degree=s.degree, seed=cfg.seed, workers=workers)

    rng = np.random.default_rng(cfg.seed)
    duality = []
    for k in s.ks:
        params = cfg.params if cfg.params.k == k else replace(cfg.params, k=k)
        phis = [ZPoly.const(1)] + [random_zpoly(rng, 2) for _ in range(DUALITY_PHIS - 1)]
        trunc = solver.TruncationSpec.for_problem(f, params, phis)
        duality.append(identity_lab.duality_certificate(f, params, None, phis, trunc=trunc))

    doc = reports.identity_document(rows, ks=s.ks, seed=cfg.seed, count=s.count, degree=s.degree, duality=duality)
    return _emit(doc, lambda: reports.identity_csv(rows), cfg.format), doc["passed"]


def cmd_solve(cfg: RunConfig, f: ZPoly, workers: int) -> Outcome:
    N = cfg.N if cfg.N is not None else max(f.max_m, f.max_n, 0)
    trunc = cfg.truncation(N)
    if cfg.domain is not None:
        rep: Any = transforms.solve_on_domain(f, cfg.params, cfg.domain, trunc, cfg.grid, workers=workers)
    elif cfg.scaled:
        rep = transforms.rescale_solve(f, cfg.params, cfg.weight, trunc, workers=workers)
    else:
        rep = solver.solve_min_norm(f, cfg.params, trunc, workers=workers)
    doc = reports.solve_document(rep)
    return _emit(doc, lambda: reports.solve_csv(rep), cfg.format), reports.solve_passed(rep)


def cmd_certify(cfg: RunConfig, f: ZPoly, workers: int) -> Outcome:
    params = cfg.params
    N = max(cfg.certify_N, params.k)
    coercivity = solver.coercivity_constant(params, N, workers=workers)
    inverse = solver.right_inverse(params, cfg.truncation(N), workers=workers)
    entries = [reports.certify_entry(params, N, coercivity, inverse)]
    doc = reports.certify_document(entries)
    return _emit(doc, lambda: reports.certify_csv(entries), cfg.format), doc["passed"]


def _sweep_params(cfg: RunConfig) -> List[OperatorParams]:
    sw = cfg.sweep
    return [
        OperatorParams(k=k, alpha=a, beta=b, gamma=g, c=c)
        for k in sw.ks
        for a, b, g in sw.families
        for c in sw.cs
    ]


def _corollary_ready(p: OperatorParams) -> bool:
    if p.case is None:
        return False
    coef = {"ddbar": p.alpha, "dbar": p.beta, "d": p.gamma}[p.case]
    return abs(coef) >= 1


def cmd_sweep(cfg: RunConfig, f: Optional[ZPoly], workers: int) -> Outcome:
    sw = cfg.sweep
    rng = np.random.default_rng(cfg.seed)
    if f is None:
        f = random_zpoly(rng, sw.f_degree)
    points = _sweep_params(cfg)

    def one_solve(p: OperatorParams) -> solver.SolveReport:
        return solver.solve_min_norm(f, p, solver.TruncationSpec.for_problem(f, p))

    solves = ordered_map(one_solve, points, workers=workers)

    scaled_jobs = [(p, lam) for p in points if _corollary_ready(p) for lam in sw.lambdas]

    def one_scaled(job: tuple[OperatorParams, Fraction]) -> transforms.ScaledSolveReport:
        p, lam = job
        return transforms.rescale_solve(f, p, WeightSpec(lam=lam), solver.TruncationSpec.for_problem(f, p))

    scaled = ordered_map(one_scaled, scaled_jobs, workers=workers)

    pairs = sorted({(b, g) for _, b, g in sw.families if b and g})
    phis = [random_zpoly(rng, 3) for _ in range(3)]
    cross = [
        row
        for k in sw.ks
        for b, g in pairs
        for phi in phis
        for row in identity_lab.cross_terms(k, phi, beta=b, gamma=g)
    ]

    general = []
    for lam in sw.lambdas:
        for case in transforms.CASES:
            general.append(
                (str(lam), transforms.general_weight_bound(f, WeightSpec(lam=lam), case, grid=cfg.grid))
            )

    doc = reports.sweep_document(solves, scaled, cross, general, seed=cfg.seed)
    return _emit(doc, lambda: reports.sweep_csv(doc, sw.table), cfg.format), doc["passed"]


def cmd_oracle(cfg: RunConfig, f: Optional[ZPoly], workers: int) -> Outcome:
    rep = oracle.run_oracle(
        seed=cfg.seed,
        max_degree=cfg.oracle.max_degree,
        grid=cfg.grid,
        pairs=cfg.oracle.pairs,
        workers=workers,
    )
    doc = reports.oracle_document(rep)
    return _emit(doc, lambda: reports.oracle_csv(rep), cfg.format), rep.passed


COMMANDS: Dict[str, Callable[[RunConfig, Any, int], Outcome]] = {
    "verify": cmd_verify,
    "solve": cmd_solve,
    "certify": cmd_certify,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
}


def _emit(doc: Dict[str, Any], csv: Callable[[], str], fmt: str) -> str:
    validate_artifact(doc)
    return reports.render(doc, csv() if fmt == "csv" else None, fmt)


# -------------------------
# CLI
# -------------------------


def _problem_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("problem")
    g.add_argument("--config", default=None, help="JSON config merged over helpers/configs/wl2cert/default.json")
    g.add_argument("--k", type=int, default=None, help="Derivative order k >= 1")
    g.add_argument("--alpha", default=None, help="Rational coefficient of d^k dbar^k (e.g. 1, 3/2)")
    g.add_argument("--beta", default=None, help="Rational coefficient of dbar^k")
    g.add_argument("--gamma", default=None, help="Rational coefficient of d^k")
    g.add_argument("--c-re", dest="c_re", default=None, help="Real part of the constant c")
    g.add_argument("--c-im", dest="c_im", default=None, help="Imaginary part of the constant c")
    g.add_argument("--N", type=int, default=None, help="Truncation degree of f and the test space")
    g.add_argument("--buffer", type=int, default=None, help="Extra degree of the trial space (default k)")
    g.add_argument("--lambda", dest="lam", default=None, help="Weight scale lambda > 0")
    g.add_argument("--z0-re", dest="z0_re", default=None, help="Weight (or disc) center, real part")
    g.add_argument("--z0-im", dest="z0_im", default=None, help="Weight (or disc) center, imaginary part")
    g.add_argument("--radius", default=None, help="Solve on the disc of this radius around z0")
    g.add_argument("--f", dest="f_path", default=None, help="Right-hand side as ZPoly JSON (default f = 1)")

    o = p.add_argument_group("run")
    o.add_argument("--seed", type=int, default=None, help="Seed for every random draw")
    o.add_argument("--radial-nodes", dest="radial_nodes", type=int, default=None, help="Radial quadrature nodes")
    o.add_argument("--angular-nodes", dest="angular_nodes", type=int, default=None, help="Angular quadrature nodes")
    o.add_argument("--format", choices=FORMATS, default=None, help="Artifact format (default json)")
    o.add_argument("--out", default=None, help="Write the artifact here instead of stdout")
    o.add_argument("--threads", type=int, default=None, help=f"Worker threads (default ${THREADS_ENV} or cpu count)")
    return p


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wl2cert",
        description="Exact certification of weighted L^2 estimates for H = alpha d^k dbar^k + beta dbar^k + gamma d^k + c",
    )
    ap.add_argument("--log-level", default="WARNING", help="Logging level (DEBUG, INFO, WARNING, ...)")
    ap.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    common = _problem_flags()
    sub = ap.add_subparsers(dest="cmd", required=True)

    p_verify = sub.add_parser(
        "verify",
        parents=[common],
        help="Exact commutator / norm identities and the duality certificate",
        description="CSV columns: identity_id, k, deg_phi, passed",
    )
    p_verify.add_argument("--count", type=int, default=None, help="Random test polynomials per k")
    p_verify.add_argument("--degree", type=int, default=None, help="Degree of the random test polynomials")

    sub.add_parser(
        "solve",
        parents=[common],
        help="Minimum-norm solution of H u = f (scaled weight with --lambda/--z0, disc with --radius)",
        description=(
            "CSV columns: k, alpha, beta, gamma, c_re, c_im, N, buffer, ratio, residual "
            "(scaled: case, lambda, z0_re, z0_im, k, ratio; disc: case, radius, factor, lhs, rhs)"
        ),
    )
    sub.add_parser(
        "certify",
        parents=[common],
        help="Coercivity constant and right-inverse norm on V_N",
        description="CSV columns: " + ", ".join(reports.CERTIFY_HEADER),
    )
    p_sweep = sub.add_parser(
        "sweep",
        parents=[common],
        help="Ratios over parameter families, scalings, cross terms and general weights",
        description="CSV columns depend on --table: solve, scaling, cross_terms or general_weight",
    )
    p_sweep.add_argument("--table", choices=SWEEP_TABLES, default=None, help="Table written in CSV format")

    p_oracle = sub.add_parser(
        "oracle",
        parents=[common],
        help="Quadrature cross-validation of closed forms and weak residuals",
        description="CSV columns: check, label, value, expected, abs_error, passed",
    )
    p_oracle.add_argument("--max-degree", dest="max_degree", type=int, default=None, help="Largest m + n checked")
    p_oracle.add_argument("--pairs", type=int, default=None, help="Number of (u, H u) weak-residual pairs")
    return ap


def _configure_logging(level: str, verbose: int) -> None:
    if verbose >= 2:
        level = "DEBUG"
    elif verbose == 1:
        level = "INFO"
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def run(args: argparse.Namespace) -> int:
    cfg = load_run_config(
        overrides_from_args(args),
        config_path=Path(args.config) if args.config else None,
    )
    workers = worker_count(cfg.threads)
    f: Optional[ZPoly]
    if args.cmd in ("verify", "solve", "certify"):
        f = load_f(args.f_path)
    else:
        f = load_f(args.f_path) if args.f_path else None
    log.info("wl2cert %s: %s workers=%d", args.cmd, cfg.params, workers)

    text, passed = COMMANDS[args.cmd](cfg, f, workers)
    if args.out:
        atomic_write_text(args.out, text)
    else:
        sys.stdout.write(text)
    if not passed:
        print(f"FAILED: {args.cmd} assertions did not hold (see the artifact)", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    _configure_logging(args.log_level, args.verbose)

    try:
        return run(args)
    except ValueError as e:
        # ValidationError (BufferTooSmall included) is a ValueError
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_INVALID
    except PositivityViolated as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (NoSolutionInTruncation, IllConditioned, QuadratureNotConverged) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    raise SystemExit(main())
