# helpers/quadrature/__init__.py
"""helpers.quadrature

Independent numerical integration over C and over discs: the float-side oracle
for closed forms, bounded-domain norms and weak-solution residuals.
"""

from .grid import (
    MIN_NODES,
    QuadratureGrid,
    QuadratureResult,
    angular_count,
    angular_rule,
    laguerre_rule,
    legendre_rule,
)
from .gaussian import PHI_CUTOFF, integrate_gaussian, integrate_radial_weight, radial_cutoff
from .disc import DISC_TOL, DomainSpec, disc_norm_sq, integrate_disc, integrate_disc_fn
from .bumps import (
    DEFAULT_WEAK_GRID,
    WEAK_TOL,
    BumpSpec,
    bump_derivative,
    default_battery,
    profile_poly,
    transposed_test,
    weak_residual,
    weak_residuals,
)

__all__ = [
    # grid
    "MIN_NODES",
    "QuadratureGrid",
    "QuadratureResult",
    "laguerre_rule",
    "legendre_rule",
    "angular_rule",
    "angular_count",
    # whole plane
    "integrate_gaussian",
    "integrate_radial_weight",
    "PHI_CUTOFF",
    "radial_cutoff",
    # discs
    "DISC_TOL",
    "DomainSpec",
    "integrate_disc",
    "integrate_disc_fn",
    "disc_norm_sq",
    # weak solutions
    "WEAK_TOL",
    "DEFAULT_WEAK_GRID",
    "BumpSpec",
    "default_battery",
    "profile_poly",
    "bump_derivative",
    "transposed_test",
    "weak_residual",
    "weak_residuals",
]
