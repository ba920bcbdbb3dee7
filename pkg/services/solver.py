# services/solver.py
# Gram-metric minimum-norm solutions of H u = f on truncated spaces, coercivity constants and the right inverse.

from __future__ import annotations

"""
services.solver
---------------

Spaces:
- V_N: f-space and test space, span{z^m zbar^n : m, n <= N}
- W:   search space V_{N+buffer}

The truncated problem is the weak equation against V_N:

    <e_i, H u> = <e_i, f>   for every e_i in V_N,   u in W

Each test monomial e_i has a representer r_i in W with <r_i, v> = <e_i, H v>
for all v in W. When buffer >= k the representer is exactly H* e_i; otherwise
it is G_W^{-1} A^H e_i with A[i][r] = <e_i, H e_r>.

The minimum-norm solution is u = sum psi_i r_i with M psi = b, where
M[i][j] = <r_i, r_j> and b_i = <e_i, f>. H and the Gram metric never mix
coupling classes (charge m - n, or charge mod k when beta or gamma is nonzero),
so M is solved one class block at a time with an exact LDL^H.

Everything is exact Gaussian-rational arithmetic; floats appear only in the
report fields and the generalized eigenvalue problems.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Sequence

import numpy as np
from scipy import linalg as sla

from helpers.errors import IllConditioned, NoSolutionInTruncation
from helpers.fock import PiRational, factor_basis, gram_solve, inner, norm_sq, truncated_basis
from helpers.linalg import (
    LDLFactor,
    Matrix,
    NotPositiveDefinite,
    Vector,
    congruence_to_float,
    ldl_hermitian,
    nullspace,
    row_echelon_solve,
)
from helpers.operators import OperatorParams, apply_H, assemble, theorem_bound
from helpers.threading import ordered_map
from helpers.validation import (
    ValidationError,
    ensure_dict,
    qpath,
    require_int,
    require_int_list,
)
from helpers.zpoly import GaussianRational, ZPoly, format_rational, linear_combine, zpoly_to_json

log = logging.getLogger(__name__)

Exp = tuple[int, int]

SCHEMA = "solve_report"
SCHEMA_VERSION = 1

BOUND_SLACK = 1e-6
EIG_FLOOR = 1e-13

SWEEP_HEADER = ("k", "alpha", "beta", "gamma", "c_re", "c_im", "N", "buffer", "ratio", "residual")


@dataclass(frozen=True)
class TruncationSpec:
    """N bounds f and the test space; W = V_{N+buffer}; growth_schedule lists buffers for a trace."""

    N: int
    buffer: int
    growth_schedule: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.N < 0:
            raise ValidationError(f"{qpath('trunc.N')} must be >= 0 (got {self.N})")
        if self.buffer < 0:
            raise ValidationError(f"{qpath('trunc.buffer')} must be >= 0 (got {self.buffer})")
        sched = tuple(self.growth_schedule)
        if any(b < 0 for b in sched) or any(b >= a for b, a in zip(sched, sched[1:])):
            raise ValidationError(
                f"{qpath('trunc.growth_schedule')} must be strictly increasing buffers >= 0 (got {list(sched)})"
            )
        object.__setattr__(self, "growth_schedule", sched)

    @staticmethod
    def from_dict(d: Dict[str, Any], *, path: str = "trunc") -> "TruncationSpec":
        obj = ensure_dict(d, path=path)
        return TruncationSpec(
            N=require_int(obj, "N", path=path, min_v=0),
            buffer=require_int(obj, "buffer", path=path, min_v=0),
            growth_schedule=tuple(
                require_int_list(obj, "growth_schedule", path=path, min_v=0, strictly_increasing=True, default=[])
            ),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"N": self.N, "buffer": self.buffer, "growth_schedule": list(self.growth_schedule)}

    @staticmethod
    def default_schedule(k: int) -> tuple[int, ...]:
        return (k, 2 * k, 3 * k)

    @staticmethod
    def for_problem(f: ZPoly, params: OperatorParams, extra: Sequence[ZPoly] = ()) -> "TruncationSpec":
        """Smallest N holding f and extra, buffer = k."""
        N = max([f.max_m, f.max_n] + [max(p.max_m, p.max_n) for p in extra] + [0])
        return TruncationSpec(N=N, buffer=params.k)


def coupling_key(params: OperatorParams) -> Callable[[int], int]:
    """Charge q -> class key. beta and gamma shift charge by +-k; alpha and c keep it."""
    if params.couples_charges:
        k = params.k
        return lambda q: q % k
    return lambda q: q


def _exact_sqrt_float(x: PiRational) -> float:
    return math.sqrt(max(x.to_float(), 0.0))


@dataclass(frozen=True)
class _Block:
    key: int
    test: tuple[int, ...]
    reps: tuple[ZPoly, ...]
    M: Matrix
    factor: Optional[LDLFactor]

    def solve(self, b: Vector) -> Vector:
        if self.factor is not None:
            return self.factor.solve(b)
        psi = row_echelon_solve(self.M, b)
        if psi is None:
            raise NoSolutionInTruncation(
                f"f has no solution in the truncated space (class {self.key}); increase --buffer"
            )
        return psi


@dataclass(frozen=True)
class TruncatedSystem:
    """
    Representers and factored normal equations of one truncation.

    split=False puts every test monomial in a single block (same solution,
    used to check charge decoupling).
    """

    params: OperatorParams
    N: int
    buffer: int
    test_basis: tuple[Exp, ...]
    domain_basis: tuple[Exp, ...]
    blocks: tuple[_Block, ...]
    adjoint_path: bool

    @staticmethod
    def build(
        params: OperatorParams,
        N: int,
        buffer: int,
        *,
        workers: int = 1,
        split: bool = True,
    ) -> "TruncatedSystem":
        if N < 0 or buffer < 0:
            raise ValidationError(f"{qpath('trunc')} needs N >= 0 and buffer >= 0 (got N={N}, buffer={buffer})")
        test_basis = tuple(truncated_basis(N))
        domain_basis = tuple(truncated_basis(N + buffer))
        adjoint_path = buffer >= params.k
        if adjoint_path:
            reps = assemble(params, N, buffer, with_adjoint=True, workers=workers).Hstar_images
        else:
            reps = tuple(
                ordered_map(lambda mn: _representer(params, mn, domain_basis), test_basis, workers=workers)
            )

        key = coupling_key(params) if split else (lambda q: 0)
        classes: dict[int, list[int]] = {}
        for i, (m, n) in enumerate(test_basis):
            classes.setdefault(key(m - n), []).append(i)

        def make_block(item: tuple[int, list[int]]) -> _Block:
            ck, idx = item
            rs = tuple(reps[i] for i in idx)
            M = [[inner(ri, rj).coeff for rj in rs] for ri in rs]
            try:
                factor: Optional[LDLFactor] = ldl_hermitian(M)
            except NotPositiveDefinite as e:
                log.debug("class %d: normal matrix singular at pivot %d, using row echelon", ck, e.index)
                factor = None
            return _Block(key=ck, test=tuple(idx), reps=rs, M=M, factor=factor)

        blocks = tuple(ordered_map(make_block, sorted(classes.items()), workers=workers))
        log.debug(
            "truncated system %s N=%d buffer=%d: %d blocks, sizes %s",
            params,
            N,
            buffer,
            len(blocks),
            [len(b.test) for b in blocks],
        )
        return TruncatedSystem(
            params=params,
            N=N,
            buffer=buffer,
            test_basis=test_basis,
            domain_basis=domain_basis,
            blocks=blocks,
            adjoint_path=adjoint_path,
        )

    def check_rhs(self, f: ZPoly) -> None:
        if f.max_m > self.N or f.max_n > self.N:
            raise ValidationError(
                f"{qpath('f')} has degree ({f.max_m}, {f.max_n}) beyond N={self.N} in some variable"
            )

    def solve(self, f: ZPoly) -> ZPoly:
        """Minimum-norm u in W with <e_i, H u> = <e_i, f> for all e_i in V_N."""
        self.check_rhs(f)
        pairs: list[tuple[GaussianRational, ZPoly]] = []
        for blk in self.blocks:
            b = [inner(ZPoly.monomial(*self.test_basis[i]), f).coeff for i in blk.test]
            if not any(b):
                continue
            psi = blk.solve(b)
            pairs.extend((c, r) for c, r in zip(psi, blk.reps) if c)
        return linear_combine(pairs)

    def projected_residual_sq(self, u: ZPoly, f: ZPoly) -> PiRational:
        """||P_N (H u - f)||^2 = r^H G_N^{-1} r with r_i = <e_i, H u - f>."""
        g = apply_H(self.params, u) - f
        r = [inner(ZPoly.monomial(*mn), g).coeff for mn in self.test_basis]
        if not any(r):
            return PiRational.zero()
        x = gram_solve(self.test_basis, r)
        acc = GaussianRational(0)
        for ri, xi in zip(r, x):
            acc = acc + ri.conj() * xi
        return PiRational(acc)

    def perturbations(self) -> list[ZPoly]:
        """Basis of {v in W : P_N H v = 0}."""
        A = [
            [inner(ZPoly.monomial(*e), apply_H(self.params, ZPoly.monomial(*w))).coeff for w in self.domain_basis]
            for e in self.test_basis
        ]
        out: list[ZPoly] = []
        for vec in nullspace(A, ncols=len(self.domain_basis)):
            out.append(ZPoly({mn: c for mn, c in zip(self.domain_basis, vec) if c}))
        return out


def _representer(params: OperatorParams, mn: Exp, domain_basis: Sequence[Exp]) -> ZPoly:
    """r in W with <r, v> = <e, H v> for all v in W (G_W x = conj(A row))."""
    e = ZPoly.monomial(*mn)
    row = [inner(e, apply_H(params, ZPoly.monomial(*w))).coeff.conj() for w in domain_basis]
    if not any(row):
        return ZPoly.zero()
    x = gram_solve(domain_basis, row)
    return ZPoly({w: c for w, c in zip(domain_basis, x) if c})


@dataclass(frozen=True)
class SolveReport:
    params: OperatorParams
    N: int
    buffer: int
    f: ZPoly
    u: ZPoly
    norm_u_sq: PiRational
    norm_f_sq: PiRational
    bound: Fraction
    residual_sq: PiRational
    leak_sq: PiRational
    trace: tuple[tuple[int, PiRational], ...] = field(default_factory=tuple)

    @property
    def ratio_exact(self) -> Fraction:
        """||u||^2 / (bound ||f||^2); 0 when f = 0."""
        den = self.bound * self.norm_f_sq.real
        return Fraction(0) if den == 0 else self.norm_u_sq.real / den

    @property
    def ratio(self) -> float:
        return float(self.ratio_exact)

    @property
    def residual(self) -> float:
        return _exact_sqrt_float(self.residual_sq)

    @property
    def leak(self) -> float:
        return _exact_sqrt_float(self.leak_sq)

    @property
    def bound_asserted(self) -> bool:
        """Single-term cases carry an unconditional bound; mixed ones are reported only."""
        return self.params.case is not None

    @property
    def bound_holds(self) -> bool:
        return self.ratio <= 1 + BOUND_SLACK

    @property
    def trace_flat_from_buffer(self) -> int:
        """From buffer = k on, u = H* psi lies in V_{N+k}, so larger buffers repeat ||u||^2."""
        return self.params.k

    @property
    def trace_non_increasing(self) -> bool:
        vals = [n.real for _, n in self.trace]
        return all(b <= a for a, b in zip(vals, vals[1:]))

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA,
            "schema_version": SCHEMA_VERSION,
            "params": self.params.to_dict(),
            "truncation": {"N": self.N, "buffer": self.buffer},
            "f": zpoly_to_json(self.f),
            "u": zpoly_to_json(self.u),
            "norm_u_sq": self.norm_u_sq.to_json(),
            "norm_f_sq": self.norm_f_sq.to_json(),
            "bound": format_rational(self.bound),
            "ratio": self.ratio,
            "residual": self.residual,
            "leak": self.leak,
            "bound_asserted": self.bound_asserted,
            "bound_holds": self.bound_holds,
            "trace": [{"buffer": b, "norm_u_sq": n.to_json()} for b, n in self.trace],
            "trace_flat_from_buffer": self.trace_flat_from_buffer,
        }

    def sweep_row(self) -> Dict[str, Any]:
        return {
            "k": self.params.k,
            "alpha": format_rational(self.params.alpha),
            "beta": format_rational(self.params.beta),
            "gamma": format_rational(self.params.gamma),
            "c_re": format_rational(self.params.c.re),
            "c_im": format_rational(self.params.c.im),
            "N": self.N,
            "buffer": self.buffer,
            "ratio": repr(self.ratio),
            "residual": repr(self.residual),
        }


def _solve_once(
    f: ZPoly,
    params: OperatorParams,
    N: int,
    buffer: int,
    *,
    workers: int = 1,
    split: bool = True,
) -> SolveReport:
    system = TruncatedSystem.build(params, N, buffer, workers=workers, split=split)
    u = system.solve(f)
    norm_u = norm_sq(u)
    res_sq = system.projected_residual_sq(u, f)
    full_sq = norm_sq(apply_H(params, u) - f)
    rep = SolveReport(
        params=params,
        N=N,
        buffer=buffer,
        f=f,
        u=u,
        norm_u_sq=norm_u,
        norm_f_sq=norm_sq(f),
        bound=theorem_bound(params),
        residual_sq=res_sq,
        leak_sq=full_sq - res_sq,
        trace=((buffer, norm_u),),
    )
    log.debug("solve %s N=%d buffer=%d: ||u||^2=%s ratio=%.6g", params, N, buffer, norm_u, rep.ratio)
    return rep


def solve_min_norm(
    f: ZPoly,
    params: OperatorParams,
    trunc: TruncationSpec,
    *,
    workers: int = 1,
    split: bool = True,
) -> SolveReport:
    """
    Minimum-norm solution of the truncated weak equation.

    The returned u is solved at trunc.buffer; when trunc.growth_schedule is set the
    trace carries ||u||^2 at every scheduled buffer.

    Raises NoSolutionInTruncation when f is outside the range of the truncated H.
    """
    rep = _solve_once(f, params, trunc.N, trunc.buffer, workers=workers, split=split)
    if trunc.growth_schedule:
        trace = convergence_sweep(f, params, trunc.growth_schedule, N=trunc.N, workers=workers)
        rep = replace(rep, trace=trace)
    log.info(
        "solve_min_norm %s N=%d buffer=%d: ratio=%.6g residual=%.3g leak=%.3g",
        params,
        trunc.N,
        trunc.buffer,
        rep.ratio,
        rep.residual,
        rep.leak,
    )
    return rep


def convergence_sweep(
    f: ZPoly,
    params: OperatorParams,
    schedule: Sequence[int],
    *,
    N: Optional[int] = None,
    workers: int = 1,
) -> tuple[tuple[int, PiRational], ...]:
    """
    (buffer, ||u||^2) for each buffer in a strictly increasing schedule.

    Flat by construction from buffer = k on; only buffers below k can change ||u||^2.
    A buffer below k raises NoSolutionInTruncation when f is out of reach there.
    """
    sched = list(schedule)
    if not sched or any(b < 0 for b in sched) or any(b >= a for b, a in zip(sched, sched[1:])):
        raise ValidationError(f"{qpath('schedule')} must be non-empty, strictly increasing, >= 0 (got {sched})")
    n = N if N is not None else max(f.max_m, f.max_n, 0)
    reports = ordered_map(lambda b: _solve_once(f, params, n, b), sched, workers=workers)
    trace = tuple((r.buffer, r.norm_u_sq) for r in reports)
    log.debug("convergence sweep %s: %s", params, [(b, str(v)) for b, v in trace])
    return trace


def minimality_gap(
    rep: SolveReport,
    *,
    count: int = 20,
    seed: int = 0,
    workers: int = 1,
) -> Fraction:
    """
    min over seeded random v with P_N H v = 0 of (||u + v||^2 - ||u||^2) / pi.

    Exact; 0 when the kernel is trivial.
    """
    system = TruncatedSystem.build(rep.params, rep.N, rep.buffer, workers=workers)
    kernel = system.perturbations()
    if not kernel:
        return Fraction(0)
    rng = np.random.default_rng(seed)
    worst: Optional[Fraction] = None
    for _ in range(count):
        coeffs = rng.integers(-3, 4, size=(len(kernel), 2))
        v = linear_combine(
            (GaussianRational(int(a), int(b)), p) for (a, b), p in zip(coeffs, kernel) if a or b
        )
        gap = norm_sq(rep.u + v).real - rep.norm_u_sq.real
        worst = gap if worst is None else min(worst, gap)
    return worst if worst is not None else Fraction(0)


def _generalized_eigs(M: Matrix, G: LDLFactor) -> np.ndarray:
    """Eigenvalues of M v = lambda G v through the exact LDL^H of G."""
    S = congruence_to_float(M, G)
    S = 0.5 * (S + S.conj().T)
    return sla.eigh(S, eigvals_only=True)


def coercivity_constant(params: OperatorParams, N: int, *, workers: int = 1) -> float:
    """
    min over nonzero phi in V_N of ||H* phi||^2 / ||phi||^2.

    H* is exact on V_N (its image lives in V_{N+k}). Raises IllConditioned when
    the smallest generalized eigenvalue is below EIG_FLOOR relative to the largest.
    """
    if N < params.k:
        raise ValidationError(f"{qpath('N')} must be >= k={params.k} for the coercivity constant (got {N})")
    system = TruncatedSystem.build(params, N, params.k, workers=workers)

    def block_min(blk: _Block) -> tuple[float, float]:
        basis = tuple(system.test_basis[i] for i in blk.test)
        ev = _generalized_eigs(blk.M, factor_basis(basis))
        return float(ev.min()), float(ev.max())

    mins = ordered_map(block_min, system.blocks, workers=workers)
    lo = min(m for m, _ in mins)
    hi = max(h for _, h in mins)
    if hi <= 0 or lo < EIG_FLOOR * hi:
        raise IllConditioned(
            f"coercivity eigenvalue {lo:.3e} is below {EIG_FLOOR:.0e} relative to {hi:.3e}; "
            "try a smaller N or rescale the coefficients"
        )
    log.info("coercivity %s N=%d: %.12g (proof value %s)", params, N, lo, 1 / theorem_bound(params))
    return lo


@dataclass(frozen=True)
class RightInverseReport:
    """T: f -> minimum-norm u, column by column over V_N."""

    params: OperatorParams
    N: int
    buffer: int
    columns: tuple[ZPoly, ...]
    norm_sq: float
    identity_error: float
    bound: Fraction

    @property
    def bound_holds(self) -> bool:
        return self.norm_sq <= float(self.bound) + BOUND_SLACK

    def column(self, m: int, n: int) -> ZPoly:
        return self.columns[truncated_basis(self.N).index((m, n))]

    def to_json(self) -> Dict[str, Any]:
        return {
            "params": self.params.to_dict(),
            "truncation": {"N": self.N, "buffer": self.buffer},
            "norm_sq": self.norm_sq,
            "bound": format_rational(self.bound),
            "bound_holds": self.bound_holds,
            "identity_error": self.identity_error,
        }


def right_inverse(params: OperatorParams, trunc: TruncationSpec, *, workers: int = 1) -> RightInverseReport:
    """
    Materialize T on V_N with the per-class factors built once.

    ||T||^2 is the largest generalized eigenvalue of <T e_i, T e_j> against G_N.
    identity_error = max |coeffs of P_N H T e_j - e_j|, which is 0 in exact arithmetic.
    """
    system = TruncatedSystem.build(params, trunc.N, trunc.buffer, workers=workers)
    basis = system.test_basis
    columns = tuple(ordered_map(lambda mn: system.solve(ZPoly.monomial(*mn)), basis, workers=workers))

    worst_id = 0.0
    for j, (mn, col) in enumerate(zip(basis, columns)):
        g = apply_H(params, col)
        r = [inner(ZPoly.monomial(*e), g).coeff for e in basis]
        x = gram_solve(basis, r)
        for i, xi in enumerate(x):
            target = 1 if i == j else 0
            worst_id = max(worst_id, abs(complex(xi) - target))

    def block_max(blk: _Block) -> float:
        sub = tuple(basis[i] for i in blk.test)
        cols = [columns[i] for i in blk.test]
        Mt = [[inner(a, b).coeff for b in cols] for a in cols]
        return float(_generalized_eigs(Mt, factor_basis(sub)).max())

    norm = max(ordered_map(block_max, system.blocks, workers=workers), default=0.0)
    rep = RightInverseReport(
        params=params,
        N=trunc.N,
        buffer=trunc.buffer,
        columns=columns,
        norm_sq=norm,
        identity_error=worst_id,
        bound=theorem_bound(params),
    )
    log.info("right inverse %s N=%d: ||T||^2=%.12g bound=%s", params, trunc.N, norm, rep.bound)
    return rep
