# services/identity_lab.py
# Exact verification of the commutator, Gaussian-weight, coercivity-sum, norm-expansion and duality identities.

from __future__ import annotations

"""
services.identity_lab
---------------------

Every identity is evaluated on polynomial test functions phi with exact
Gaussian-rational arithmetic; both sides are PiRational values (units of pi).

Notation (Gaussian weight):
    R = d^k dbar^k,  d*^k = (M_z - dbar)^k,  dbar*^k = (M_zbar - d)^k,
    R* = e^{|z|^2} d^k dbar^k (. e^{-|z|^2})
    P_{i,j} = e^{|z|^2} d^i dbar^j e^{-|z|^2}   (gauss_derivative)

Identity ids:
    C1..C6  commutator expansions ([R, d*^k], [R, dbar*^k], [d^k, R*], [dbar^k, R*], [d^k, dbar*^k], [dbar^k, d*^k])
    E1..E6  Gaussian specialization of C1..C6
    F1..F5  coercivity sums and the two cross-term sums
    B       norm expansion of ||H* phi||^2
    A       duality certificate
    HYP     cross-term hypothesis values (reported, not asserted)
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Callable, Dict, Iterable, Optional, Sequence

import numpy as np

from helpers.fock import PiRational, inner, norm_sq
from helpers.fs import csv_text
from helpers.math import binom, falling
from helpers.operators import (
    OperatorParams,
    apply_H,
    apply_H_star,
    apply_R,
    apply_R_star,
    d_star,
    dbar_star,
)
from helpers.threading import ordered_map
from helpers.zpoly import (
    GaussianRational,
    ZPoly,
    d_mixed,
    d_z,
    d_zbar,
    format_rational,
    gauss_derivative,
    linear_combine,
    random_zpoly,
    zpoly_to_json,
)

log = logging.getLogger(__name__)

IDENTITY_IDS = (
    "C1", "C2", "C3", "C4", "C5", "C6",
    "E1", "E2", "E3", "E4", "E5", "E6",
    "F1", "F2", "F3", "F4", "F5",
    "B", "A", "HYP",
)

SUMMARY_HEADER = ("identity_id", "k", "deg_phi", "passed")


@dataclass(frozen=True)
class IdentityReport:
    """
    One evaluated identity.

    passed is True exactly when discrepancy = lhs - rhs is zero. Rows with
    asserted=False are informational (cross-term hypothesis values).
    """

    identity_id: str
    k: int
    phi: ZPoly
    lhs: PiRational
    rhs: PiRational
    asserted: bool = True
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def discrepancy(self) -> PiRational:
        return self.lhs - self.rhs

    @property
    def passed(self) -> bool:
        return self.discrepancy.is_zero()

    def to_json(self) -> Dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "k": self.k,
            "phi": zpoly_to_json(self.phi),
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "discrepancy": self.discrepancy.to_json(),
            "passed": self.passed,
            "asserted": self.asserted,
            "extras": {key: _extra_json(v) for key, v in sorted(self.extras.items())},
        }


def _extra_json(v: Any) -> Any:
    if isinstance(v, PiRational):
        return v.to_json()
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, GaussianRational):
        return {"re": format_rational(v.re), "im": format_rational(v.im)}
    if isinstance(v, ZPoly):
        return zpoly_to_json(v)
    return v


def _sum(pairs: Iterable[tuple[int | Fraction, ZPoly]]) -> ZPoly:
    return linear_combine(pairs)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


# -------------------------
# Commutators computed through operator compositions
# -------------------------


def comm_R_dstar(phi: ZPoly, k: int) -> ZPoly:
    """R(d*^k phi) - d*^k(R phi)"""
    return apply_R(d_star(phi, k), k) - d_star(apply_R(phi, k), k)


def comm_R_dbarstar(phi: ZPoly, k: int) -> ZPoly:
    """R(dbar*^k phi) - dbar*^k(R phi)"""
    return apply_R(dbar_star(phi, k), k) - dbar_star(apply_R(phi, k), k)


def comm_d_Rstar(phi: ZPoly, k: int) -> ZPoly:
    """d^k(R* phi) - R*(d^k phi)"""
    return d_z(apply_R_star(phi, k), k) - apply_R_star(d_z(phi, k), k)


def comm_dbar_Rstar(phi: ZPoly, k: int) -> ZPoly:
    """dbar^k(R* phi) - R*(dbar^k phi)"""
    return d_zbar(apply_R_star(phi, k), k) - apply_R_star(d_zbar(phi, k), k)


def comm_d_dbarstar(phi: ZPoly, k: int) -> ZPoly:
    """d^k(dbar*^k phi) - dbar*^k(d^k phi)"""
    return d_z(dbar_star(phi, k), k) - dbar_star(d_z(phi, k), k)


def comm_dbar_dstar(phi: ZPoly, k: int) -> ZPoly:
    """dbar^k(d*^k phi) - d*^k(dbar^k phi)"""
    return d_zbar(d_star(phi, k), k) - d_star(d_zbar(phi, k), k)


def comm_R_Rstar(phi: ZPoly, k: int) -> ZPoly:
    return apply_R(apply_R_star(phi, k), k) - apply_R_star(apply_R(phi, k), k)


def comm_dbar_dbarstar(phi: ZPoly, k: int) -> ZPoly:
    return d_zbar(dbar_star(phi, k), k) - dbar_star(d_zbar(phi, k), k)


def comm_d_dstar(phi: ZPoly, k: int) -> ZPoly:
    return d_z(d_star(phi, k), k) - d_star(d_z(phi, k), k)


# -------------------------
# Expansion sums built from Gaussian-derivative polynomials
# -------------------------

IndexFilter = Callable[[int, int, int], bool]


def _all(i: int, j: int, l: int) -> bool:
    return True


def sum_C1(phi: ZPoly, k: int, keep: IndexFilter = _all, lo: int = 0) -> ZPoly:
    """(-1)^k sum O_{ijl} (d^{k-l} dbar^{k-i} dbar^{k-j} phi) * d^l dbar^j P_{0,i} over (j,l) != (0,0)."""
    terms = []
    for i in range(lo, k + 1):
        weight = gauss_derivative(0, i)
        for j in range(lo, k + 1):
            for l in range(lo, k + 1):
                if (j, l) == (0, 0) or not keep(i, j, l):
                    continue
                o = binom(k, i) * binom(k, j) * binom(k, l)
                terms.append((_sign(k) * o, d_mixed(phi, k - l, 2 * k - i - j) * d_mixed(weight, l, j)))
    return _sum(terms)


def sum_C2(phi: ZPoly, k: int, keep: IndexFilter = _all, lo: int = 0) -> ZPoly:
    """(-1)^k sum O_{ijl} (d^{k-l} d^{k-i} dbar^{k-j} phi) * d^l dbar^j P_{i,0} over (j,l) != (0,0)."""
    terms = []
    for i in range(lo, k + 1):
        weight = gauss_derivative(i, 0)
        for j in range(lo, k + 1):
            for l in range(lo, k + 1):
                if (j, l) == (0, 0) or not keep(i, j, l):
                    continue
                o = binom(k, i) * binom(k, j) * binom(k, l)
                terms.append((_sign(k) * o, d_mixed(phi, 2 * k - l - i, k - j) * d_mixed(weight, l, j)))
    return _sum(terms)


def sum_C3(phi: ZPoly, k: int, lo: int = 0) -> ZPoly:
    """sum O_{ijl} (d^{k-l} d^{k-i} dbar^{k-j} phi) * d^l P_{i,j}, l >= 1."""
    terms = []
    for i in range(lo, k + 1):
        for j in range(lo, k + 1):
            weight = gauss_derivative(i, j)
            for l in range(max(1, lo), k + 1):
                o = binom(k, i) * binom(k, j) * binom(k, l)
                terms.append((o, d_mixed(phi, 2 * k - l - i, k - j) * d_z(weight, l)))
    return _sum(terms)


def sum_C4(phi: ZPoly, k: int, lo: int = 0) -> ZPoly:
    """sum O_{ijl} (dbar^{k-l} d^{k-i} dbar^{k-j} phi) * dbar^l P_{i,j}, l >= 1."""
    terms = []
    for i in range(lo, k + 1):
        for j in range(lo, k + 1):
            weight = gauss_derivative(i, j)
            for l in range(max(1, lo), k + 1):
                o = binom(k, i) * binom(k, j) * binom(k, l)
                terms.append((o, d_mixed(phi, k - i, 2 * k - l - j) * d_zbar(weight, l)))
    return _sum(terms)


def sum_C5(phi: ZPoly, k: int, lo: int = 0) -> ZPoly:
    """(-1)^k sum O_{ij} (d^{k-j} d^{k-i} phi) * d^j P_{i,0}, j >= 1."""
    terms = []
    for i in range(lo, k + 1):
        weight = gauss_derivative(i, 0)
        for j in range(max(1, lo), k + 1):
            terms.append((_sign(k) * binom(k, i) * binom(k, j), d_z(phi, 2 * k - i - j) * d_z(weight, j)))
    return _sum(terms)


def sum_C6(phi: ZPoly, k: int, lo: int = 0) -> ZPoly:
    """(-1)^k sum O_{ij} (dbar^{k-j} dbar^{k-i} phi) * dbar^j P_{0,i}, j >= 1."""
    terms = []
    for i in range(lo, k + 1):
        weight = gauss_derivative(0, i)
        for j in range(max(1, lo), k + 1):
            terms.append((_sign(k) * binom(k, i) * binom(k, j), d_zbar(phi, 2 * k - i - j) * d_zbar(weight, j)))
    return _sum(terms)


def _mono(m: int, n: int, c: int | Fraction) -> ZPoly:
    return ZPoly.monomial(m, n, c)


def sum_E5(phi: ZPoly, k: int, *, stated: bool = False) -> ZPoly:
    """
    Closed quadruple sum for d^k(R* phi) - R*(d^k phi), built from explicit monomials:

      sum_{i,j} sum_{n=max(0,i-j)}^{i} sum_{l=1}^{j-i+n} C(k,i)C(k,j)C(k,l)C(i,n) (-1)^{j+n}
          j!/(j-i+n-l)! z^{j-i+n-l} zbar^n  d^{k-l} d^{k-i} dbar^{k-j} phi

    stated=True starts i at 1 (the range as printed in the lemma).
    """
    terms = []
    for i in range(1 if stated else 0, k + 1):
        for j in range(k + 1):
            for n in range(max(0, i - j), i + 1):
                e = j - i + n
                for l in range(1, min(k, e) + 1):
                    c = binom(k, i) * binom(k, j) * binom(k, l) * binom(i, n) * (-1) ** (j + n)
                    c *= Fraction(factorial(j), factorial(e - l))
                    terms.append((c, _mono(e - l, n, 1) * d_mixed(phi, 2 * k - l - i, k - j)))
    return _sum(terms)


def sum_E6(phi: ZPoly, k: int, *, stated: bool = False) -> ZPoly:
    """
    Closed quadruple sum for dbar^k(R* phi) - R*(dbar^k phi):

      ... C(k,i)C(k,j)C(k,l)C(i,n) (-1)^{j+n} j!/(j-i+n)! n!/(n-l)! z^{j-i+n} zbar^{n-l}
          dbar^{k-l} d^{k-i} dbar^{k-j} phi,   l in [1, min(k, n)]

    stated=True uses i >= 1 and l in [1, j-i+n] as printed.
    """
    terms = []
    for i in range(1 if stated else 0, k + 1):
        for j in range(k + 1):
            for n in range(max(0, i - j), i + 1):
                e = j - i + n
                top = e if stated else min(k, n)
                for l in range(1, top + 1):
                    ff = falling(n, l) if l <= n else 0
                    if not ff:
                        continue
                    c = binom(k, i) * binom(k, j) * binom(k, l) * binom(i, n) * (-1) ** (j + n)
                    c *= Fraction(factorial(j) * ff, factorial(e))
                    terms.append((c, _mono(e, n - l, 1) * d_mixed(phi, k - i, 2 * k - l - j)))
    return _sum(terms)


# -------------------------
# Reports
# -------------------------


def _pair(phi: ZPoly, expr: ZPoly) -> PiRational:
    return inner(phi, expr)


def _lo_holds(phi: ZPoly, lhs: PiRational, stated_expr: ZPoly) -> bool:
    return _pair(phi, stated_expr) == lhs


def check_commutators(k: int, phi: ZPoly) -> list[IdentityReport]:
    """C1..C6: commutator pairings against their expansion sums over the full derivation ranges."""
    out: list[IdentityReport] = []
    cases = (
        ("C1", comm_R_dstar, lambda lo: sum_C1(phi, k, lo=lo)),
        ("C2", comm_R_dbarstar, lambda lo: sum_C2(phi, k, lo=lo)),
        ("C3", comm_d_Rstar, lambda lo: sum_C3(phi, k, lo=lo)),
        ("C4", comm_dbar_Rstar, lambda lo: sum_C4(phi, k, lo=lo)),
        ("C5", comm_d_dbarstar, lambda lo: sum_C5(phi, k, lo=lo)),
        ("C6", comm_dbar_dstar, lambda lo: sum_C6(phi, k, lo=lo)),
    )
    for ident, comm, expansion in cases:
        lhs = _pair(phi, comm(phi, k))
        rhs = _pair(phi, expansion(0))
        out.append(
            IdentityReport(
                ident, k, phi, lhs, rhs,
                extras={"stated_range_holds": _lo_holds(phi, lhs, expansion(1))},
            )
        )
    return out


def check_gauss_specialization(k: int, phi: ZPoly) -> list[IdentityReport]:
    """
    E1..E6.

    E1/E2: the part of the [R, dbar*^k] (resp. [R, d*^k]) expansion whose weight
    factor is differentiated in the annihilating direction (d^l, l >= 1 on the
    antiholomorphic P_{i,0}; dbar^j, j >= 1 on the holomorphic P_{0,i}) vanishes.
    The full commutator pairing is reported alongside.
    E3/E4: operator identities, the pairing is 0.
    E5/E6: commutator pairing equals the closed quadruple sum.
    """
    zero = PiRational.zero()
    out: list[IdentityReport] = []

    mixed_dbar = _pair(phi, sum_C2(phi, k, keep=lambda i, j, l: l >= 1))
    full_dbar = _pair(phi, comm_R_dbarstar(phi, k))
    out.append(
        IdentityReport(
            "E1", k, phi, mixed_dbar, zero,
            extras={"full_commutator": full_dbar, "full_commutator_vanishes": full_dbar.is_zero()},
        )
    )
    mixed_d = _pair(phi, sum_C1(phi, k, keep=lambda i, j, l: j >= 1))
    full_d = _pair(phi, comm_R_dstar(phi, k))
    out.append(
        IdentityReport(
            "E2", k, phi, mixed_d, zero,
            extras={"full_commutator": full_d, "full_commutator_vanishes": full_d.is_zero()},
        )
    )
    e3 = _pair(phi, d_z(apply_R(phi, k), k) - apply_R(d_z(phi, k), k))
    out.append(IdentityReport("E3", k, phi, e3, zero))
    out.append(IdentityReport("E4", k, phi, _pair(phi, comm_dbar_dstar(phi, k)), zero))

    lhs5 = _pair(phi, comm_d_Rstar(phi, k))
    out.append(
        IdentityReport(
            "E5", k, phi, lhs5, _pair(phi, sum_E5(phi, k)),
            extras={"stated_range_holds": _lo_holds(phi, lhs5, sum_E5(phi, k, stated=True))},
        )
    )
    lhs6 = _pair(phi, comm_dbar_Rstar(phi, k))
    out.append(
        IdentityReport(
            "E6", k, phi, lhs6, _pair(phi, sum_E6(phi, k)),
            extras={"stated_range_holds": _lo_holds(phi, lhs6, sum_E6(phi, k, stated=True))},
        )
    )
    return out


def f1_coefficient(k: int, i: int, j: int) -> Fraction:
    """(k!)^4 / ((i!)^2 (j!)^2 (k-i)! (k-j)!)"""
    kf = factorial(k)
    return Fraction(
        kf**4,
        factorial(i) ** 2 * factorial(j) ** 2 * factorial(k - i) * factorial(k - j),
    )


def f2_coefficient(k: int, j: int) -> Fraction:
    """(k!)^2 / ((j!)^2 (k-j)!)"""
    return Fraction(factorial(k) ** 2, factorial(j) ** 2 * factorial(k - j))


def cross_coefficient(k: int, l: int) -> Fraction:
    """(k!)^2 / (l! ((k-l)!)^2)"""
    return Fraction(factorial(k) ** 2, factorial(l) * factorial(k - l) ** 2)


def _weighted_norms(terms: Iterable[tuple[Fraction, ZPoly]]) -> PiRational:
    acc = PiRational.zero()
    for c, p in terms:
        acc = acc + norm_sq(p) * c
    return acc


def check_norm_sums(k: int, phi: ZPoly) -> list[IdentityReport]:
    """
    F1: <phi, [R, R*] phi> = sum over (i,j) in [0,k]^2 minus (k,k) of f1_coefficient * ||d^i dbar^j phi||^2
    F2: <phi, [dbar^k, dbar*^k] phi> = sum_{j<k} f2_coefficient * ||dbar^j phi||^2
    F3: mirror of F2 with d.
    """
    lhs1 = _pair(phi, comm_R_Rstar(phi, k))
    full = [
        (f1_coefficient(k, i, j), d_mixed(phi, i, j))
        for i in range(k + 1)
        for j in range(k + 1)
        if (i, j) != (k, k)
    ]
    stated = [(f1_coefficient(k, i, j), d_mixed(phi, i, j)) for i in range(k) for j in range(k)]
    rhs1 = _weighted_norms(full)
    f1 = IdentityReport(
        "F1", k, phi, lhs1, rhs1,
        extras={"stated_range_holds": _weighted_norms(stated) == lhs1},
    )
    lhs2 = _pair(phi, comm_dbar_dbarstar(phi, k))
    rhs2 = _weighted_norms((f2_coefficient(k, j), d_zbar(phi, j)) for j in range(k))
    lhs3 = _pair(phi, comm_d_dstar(phi, k))
    rhs3 = _weighted_norms((f2_coefficient(k, i), d_z(phi, i)) for i in range(k))
    return [f1, IdentityReport("F2", k, phi, lhs2, rhs2), IdentityReport("F3", k, phi, lhs3, rhs3)]


def cross_pairings(k: int, phi: ZPoly, l: int) -> tuple[PiRational, PiRational]:
    """(<dbar^k d^{k-l} phi, d^{k-l} phi>, <d^k dbar^{k-l} phi, dbar^{k-l} phi>)"""
    g = d_z(phi, k - l)
    b = d_zbar(phi, k - l)
    return inner(d_zbar(g, k), g), inner(d_z(b, k), b)


def cross_terms(
    k: int,
    phi: ZPoly,
    *,
    beta: Fraction | int = 1,
    gamma: Fraction | int = 1,
) -> list[IdentityReport]:
    """
    F4/F5 (asserted) and, for every l in [1, k], the hypothesis combination
    gamma * <dbar^k d^{k-l} phi, d^{k-l} phi> + beta * <d^k dbar^{k-l} phi, dbar^{k-l} phi>
    as an informational HYP row (lhs = combination, rhs = 0).
    """
    beta = Fraction(beta)
    gamma = Fraction(gamma)
    pairs = {l: cross_pairings(k, phi, l) for l in range(1, k + 1)}

    lhs4 = _pair(phi, comm_d_Rstar(phi, k))
    rhs4 = PiRational.zero()
    lhs5 = _pair(phi, comm_dbar_Rstar(phi, k))
    rhs5 = PiRational.zero()
    for l, (pg, pb) in pairs.items():
        rhs4 = rhs4 + pg * cross_coefficient(k, l)
        rhs5 = rhs5 + pb * cross_coefficient(k, l)
    out = [IdentityReport("F4", k, phi, lhs4, rhs4), IdentityReport("F5", k, phi, lhs5, rhs5)]

    for l, (pg, pb) in pairs.items():
        combo = pg * gamma + pb * beta
        out.append(
            IdentityReport(
                "HYP", k, phi, combo, PiRational.zero(),
                asserted=False,
                extras={"l": l, "beta": beta, "gamma": gamma, "gamma_pairing": pg, "beta_pairing": pb},
            )
        )
    return out


def expand_norm_Hstar(params: OperatorParams, phi: ZPoly) -> IdentityReport:
    """
    B: ||H* phi||^2 (direct) against ||H phi||^2 plus the six commutator pairings:

      a^2 [R,R*] + b^2 [B,B*] + g^2 [A,A*] + ab ([R,B*] + [B,R*]) + ag ([R,A*] + [A,R*]) + bg ([B,A*] + [A,B*])

    with A = d^k, B = dbar^k. c never enters the commutators.
    """
    k = params.k
    a, b, g = params.alpha, params.beta, params.gamma
    lhs = norm_sq(apply_H_star(params, phi))

    def pc(expr: ZPoly) -> PiRational:
        return _pair(phi, expr)

    rhs = norm_sq(apply_H(params, phi))
    rhs = rhs + pc(comm_R_Rstar(phi, k)) * (a * a)
    rhs = rhs + pc(comm_dbar_dbarstar(phi, k)) * (b * b)
    rhs = rhs + pc(comm_d_dstar(phi, k)) * (g * g)
    # [B, R*] and [A, R*] are the C4 and C3 commutators
    rhs = rhs + pc(comm_R_dbarstar(phi, k) + comm_dbar_Rstar(phi, k)) * (a * b)
    rhs = rhs + pc(comm_R_dstar(phi, k) + comm_d_Rstar(phi, k)) * (a * g)
    rhs = rhs + pc(comm_dbar_dstar(phi, k) + comm_d_dbarstar(phi, k)) * (b * g)
    return IdentityReport("B", k, phi, lhs, rhs, extras={"params": params.to_dict()})


@dataclass(frozen=True)
class DualityEntry:
    phi: ZPoly
    pairing_abs2: Fraction
    hstar_norm: Fraction
    holds: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "phi": zpoly_to_json(self.phi),
            "pairing_abs2_over_pi2": format_rational(self.pairing_abs2),
            "hstar_norm_sq_over_pi": format_rational(self.hstar_norm),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class DualityReport:
    """|<f, phi>|^2 <= a ||H* phi||^2 with a in units of pi: |x|^2 <= a y exactly."""

    a: Fraction
    entries: tuple[DualityEntry, ...]
    a_from_solution: bool = False

    @property
    def holds(self) -> bool:
        return all(e.holds for e in self.entries)

    def to_identity_report(self, k: int, f: ZPoly) -> IdentityReport:
        worst = max((e.pairing_abs2 - self.a * e.hstar_norm for e in self.entries), default=Fraction(0))
        # lhs = max excess over the battery clipped at 0; passes when no phi exceeds the bound
        return IdentityReport(
            "A", k, f, PiRational.of(max(worst, Fraction(0))), PiRational.zero(),
            extras={"a": self.a, "a_from_solution": self.a_from_solution, "count": len(self.entries)},
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "a_over_pi": format_rational(self.a),
            "a_from_solution": self.a_from_solution,
            "holds": self.holds,
            "entries": [e.to_json() for e in self.entries],
        }


def duality_certificate(
    f: ZPoly,
    params: OperatorParams,
    a: Optional[Fraction | int],
    phis: Sequence[ZPoly],
    *,
    trunc: Any = None,
) -> DualityReport:
    """
    Exact duality check per phi. With a=None, a = ||u||^2 / pi for the minimum-norm
    solution u of H u = f (needs trunc, a TruncationSpec), which certifies every
    phi inside the test space by Cauchy-Schwarz.
    """
    from_solution = a is None
    if a is None:
        from services.solver import TruncationSpec, solve_min_norm

        spec = trunc or TruncationSpec.for_problem(f, params, phis)
        a = solve_min_norm(f, params, spec).norm_u_sq.real
    a = Fraction(a)
    if a < 0:
        raise ValueError(f"a must be >= 0 (got {a})")
    entries: list[DualityEntry] = []
    for phi in phis:
        x = inner(f, phi).coeff
        y = norm_sq(apply_H_star(params, phi)).real
        entries.append(DualityEntry(phi=phi, pairing_abs2=x.abs2(), hstar_norm=y, holds=x.abs2() <= a * y))
    rep = DualityReport(a=a, entries=tuple(entries), a_from_solution=from_solution)
    log.info("duality certificate a=%s over %d test functions: %s", a, len(entries), rep.holds)
    return rep


# -------------------------
# Suite
# -------------------------


@dataclass(frozen=True)
class SuiteItem:
    k: int
    index: int
    phi: ZPoly


def suite_items(ks: Sequence[int], count: int, degree: int, seed: int) -> list[SuiteItem]:
    """Seeded random test polynomials; phi = 0 and phi = 1 are always included."""
    rng = np.random.default_rng(seed)
    out: list[SuiteItem] = []
    for k in ks:
        fixed = [ZPoly.zero(), ZPoly.const(1)]
        for idx in range(count):
            phi = fixed[idx] if idx < len(fixed) else random_zpoly(rng, degree)
            out.append(SuiteItem(k=k, index=idx, phi=phi))
    return out


def run_item(item: SuiteItem, params: Optional[OperatorParams] = None) -> list[IdentityReport]:
    k, phi = item.k, item.phi
    reports = check_commutators(k, phi)
    reports += check_gauss_specialization(k, phi)
    reports += check_norm_sums(k, phi)
    reports += cross_terms(k, phi)
    bparams = params if params is not None and params.k == k else OperatorParams(
        k=k, alpha=Fraction(1), beta=Fraction(1), gamma=Fraction(1), c=GaussianRational(1, 2)
    )
    reports.append(expand_norm_Hstar(bparams, phi))
    return reports


def run_suite(
    ks: Sequence[int],
    *,
    count: int = 50,
    degree: int = 6,
    seed: int = 0,
    params: Optional[OperatorParams] = None,
    workers: int = 1,
) -> list[IdentityReport]:
    """All identity families over seeded random phi; results ordered by (k, draw index)."""
    items = suite_items(ks, count, degree, seed)
    log.debug("identity suite: %d items over k=%s", len(items), list(ks))
    nested = ordered_map(lambda it: run_item(it, params), items, workers=workers)
    reports = [r for batch in nested for r in batch]
    failed = [r for r in reports if r.asserted and not r.passed]
    log.info("identity suite: %d checks, %d failed", len(reports), len(failed))
    return reports


def summary_csv(reports: Sequence[IdentityReport]) -> str:
    """CSV text with columns identity_id, k, deg_phi, passed."""
    rows = (
        {"identity_id": r.identity_id, "k": r.k, "deg_phi": r.phi.degree, "passed": "true" if r.passed else "false"}
        for r in reports
    )
    return csv_text(SUMMARY_HEADER, rows)
