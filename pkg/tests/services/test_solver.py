# tests/services/test_solver.py
# Tests for minimum-norm solves, coercivity constants and the right inverse.

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from helpers.errors import NoSolutionInTruncation
from helpers.fock import PiRational
from helpers.operators import OperatorParams
from helpers.validation import ValidationError
from helpers.zpoly import GaussianRational, ZPoly, gr, random_zpoly
from services.solver import (
    TruncatedSystem,
    TruncationSpec,
    convergence_sweep,
    coercivity_constant,
    minimality_gap,
    right_inverse,
    solve_min_norm,
)

DBAR = OperatorParams(k=1, alpha=0, beta=1, gamma=0)
DDBAR = OperatorParams(k=1, alpha=1, beta=0, gamma=0)
ONE = ZPoly.const(1)


def test_truncation_spec_validation() -> None:
    with pytest.raises(ValidationError):
        TruncationSpec(N=-1, buffer=0)
    with pytest.raises(ValidationError):
        TruncationSpec(N=1, buffer=1, growth_schedule=(2, 2))
    spec = TruncationSpec.from_dict({"N": 2, "buffer": 1, "growth_schedule": [1, 2]})
    assert spec.to_dict() == {"N": 2, "buffer": 1, "growth_schedule": [1, 2]}
    assert TruncationSpec.default_schedule(2) == (2, 4, 6)
    fp = TruncationSpec.for_problem(ZPoly.monomial(1, 3), DDBAR, [ZPoly.monomial(4, 0)])
    assert (fp.N, fp.buffer) == (4, 1)


def test_dbar_solution_of_one() -> None:
    rep = solve_min_norm(ONE, DBAR, TruncationSpec.for_problem(ONE, DBAR))
    assert rep.u == ZPoly.zbar()
    assert rep.norm_u_sq == PiRational.of(1)
    assert rep.bound == 1
    assert rep.ratio_exact == 1
    assert rep.residual_sq.is_zero()
    assert rep.bound_asserted and rep.bound_holds


def test_ddbar_solution_of_one() -> None:
    rep = solve_min_norm(ONE, DDBAR, TruncationSpec.for_problem(ONE, DDBAR))
    assert rep.u == ZPoly.monomial(1, 1) - 1
    assert rep.norm_u_sq == PiRational.of(1)
    assert rep.ratio_exact == 1


def test_zero_right_hand_side() -> None:
    rep = solve_min_norm(ZPoly.zero(), DDBAR, TruncationSpec(N=2, buffer=1))
    assert rep.u.is_zero()
    assert rep.ratio == 0.0
    assert rep.to_json()["schema"] == "solve_report"
    assert rep.sweep_row()["ratio"] == "0.0"


def test_rhs_beyond_truncation_is_rejected() -> None:
    with pytest.raises(ValidationError):
        solve_min_norm(ZPoly.monomial(3, 0), DBAR, TruncationSpec(N=2, buffer=1))


@pytest.mark.parametrize(
    "params",
    [
        DBAR,
        DDBAR,
        OperatorParams(k=1, alpha=0, beta=0, gamma=2),
        OperatorParams(k=2, alpha=1, beta=0, gamma=0, c=gr(1, 0)),
        OperatorParams(k=2, alpha=0, beta=Fraction(3, 2), gamma=0),
    ],
)
def test_single_term_bounds_hold(params: OperatorParams, rng) -> None:
    for _ in range(3):
        f = random_zpoly(rng, 3, n_terms=3)
        rep = solve_min_norm(f, params, TruncationSpec.for_problem(f, params))
        assert rep.residual_sq.is_zero()
        assert rep.bound_holds, rep.ratio


@pytest.mark.parametrize("c", [gr(0), gr(0, 1)], ids=["c=0", "c=i"])
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("family", [(1, 0, 0), (0, 1, 0), (0, 0, 1)], ids=["ddbar", "dbar", "d"])
def test_single_term_bounds_at_degree_six(family: tuple[int, int, int], k: int, c: GaussianRational) -> None:
    params = OperatorParams(k, *family, c=c)
    rng = np.random.default_rng(1000 * k + sum(i * v for i, v in enumerate(family)))
    for _ in range(2):
        f = random_zpoly(rng, 6)
        base = TruncationSpec.for_problem(f, params)
        trunc = TruncationSpec(N=base.N, buffer=k, growth_schedule=TruncationSpec.default_schedule(k)[:2])
        rep = solve_min_norm(f, params, trunc)
        assert rep.residual_sq.is_zero()
        assert rep.ratio_exact <= 1
        assert rep.ratio <= 1 + 1e-10
        assert rep.trace_non_increasing


def test_mixed_parameters_are_report_only() -> None:
    params = OperatorParams(k=1, alpha=1, beta=1, gamma=1)
    f = ZPoly.z() + ZPoly.zbar()
    rep = solve_min_norm(f, params, TruncationSpec.for_problem(f, params))
    assert not rep.bound_asserted
    assert rep.residual_sq.is_zero()


def test_charge_decoupling() -> None:
    params = OperatorParams(k=2, alpha=1, beta=1, gamma=0, c=gr(0, 1))
    f = ZPoly.monomial(2, 1) - ZPoly.z() + 3
    spec = TruncationSpec.for_problem(f, params)
    split = solve_min_norm(f, params, spec)
    single = solve_min_norm(f, params, spec, split=False)
    assert split.u == single.u


def test_convergence_trace() -> None:
    assert [n for _, n in convergence_sweep(ONE, DBAR, [1, 2, 3])] == [PiRational.of(1)] * 3
    assert all(n.is_zero() for _, n in convergence_sweep(ZPoly.zero(), DBAR, [1, 2]))
    f = ZPoly.monomial(0, 2)
    rep = solve_min_norm(f, DBAR, TruncationSpec(N=2, buffer=3, growth_schedule=(1, 2, 3)))
    assert len(rep.trace) == 3
    assert rep.trace_non_increasing
    assert rep.bound_holds
    with pytest.raises(ValidationError):
        convergence_sweep(ONE, DBAR, [2, 1])


def test_convergence_trace_moves_only_below_k() -> None:
    # H = dbar^2 + 1, f = 1, N = 0: u = 1 at buffer 0, u = (zbar^2 + 1)/3 from buffer k = 2 on
    params = OperatorParams(k=2, alpha=0, beta=1, gamma=0, c=1)
    trace = convergence_sweep(ONE, params, [0, 2, 4], N=0)
    assert [n for _, n in trace] == [PiRational.of(1), PiRational.of(Fraction(1, 3)), PiRational.of(Fraction(1, 3))]
    rep = solve_min_norm(ONE, params, TruncationSpec(N=0, buffer=2, growth_schedule=(0, 2, 4)))
    assert rep.trace_flat_from_buffer == 2
    assert rep.to_json()["trace_flat_from_buffer"] == 2
    assert rep.trace_non_increasing


def test_minimality_against_kernel_perturbations() -> None:
    f = ZPoly.z() + 1
    rep = solve_min_norm(f, DBAR, TruncationSpec(N=1, buffer=2))
    assert minimality_gap(rep, count=20, seed=3) >= 0


def test_workers_do_not_change_the_solution() -> None:
    params = OperatorParams(k=1, alpha=1, beta=0, gamma=1)
    f = ZPoly.monomial(1, 2) + ZPoly.zbar()
    spec = TruncationSpec.for_problem(f, params)
    assert solve_min_norm(f, params, spec).u == solve_min_norm(f, params, spec, workers=4).u


@pytest.mark.parametrize(
    "params, floor",
    [
        (DDBAR, 1.0),
        (OperatorParams(k=2, alpha=1, beta=0, gamma=0), 4.0),
        (DBAR, 1.0),
    ],
)
def test_coercivity_constant(params: OperatorParams, floor: float) -> None:
    assert coercivity_constant(params, 6) >= floor - 1e-9


def test_coercivity_needs_n_at_least_k() -> None:
    with pytest.raises(ValidationError):
        coercivity_constant(OperatorParams(k=3, alpha=1, beta=0, gamma=0), 2)


def test_right_inverse_norm_and_columns() -> None:
    rep = right_inverse(DDBAR, TruncationSpec(N=4, buffer=1))
    assert rep.norm_sq <= 1 + 1e-6
    assert rep.bound_holds
    assert rep.identity_error <= 1e-9
    dbar = right_inverse(DBAR, TruncationSpec(N=4, buffer=1))
    assert dbar.column(0, 0) == ZPoly.zbar()
    assert dbar.to_json()["bound"] == "1"


def test_right_inverse_needs_buffer() -> None:
    assert right_inverse(DDBAR, TruncationSpec(N=0, buffer=1)).column(0, 0) == ZPoly.monomial(1, 1) - 1
    with pytest.raises(NoSolutionInTruncation):
        right_inverse(DDBAR, TruncationSpec(N=0, buffer=0))


def test_representer_path_matches_adjoint_path() -> None:
    params = OperatorParams(k=1, alpha=1, beta=1, gamma=0)
    f = ZPoly.z()
    # buffer < k forces representers through the Gram solve on W
    small = TruncatedSystem.build(params, 1, 0)
    assert not small.adjoint_path
    big = TruncatedSystem.build(params, 1, 1)
    assert big.adjoint_path
    assert big.projected_residual_sq(big.solve(f), f).is_zero()
