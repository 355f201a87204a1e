"""Special functions and distortion bounds for quasiconformal self-maps of
the unit ball with identity boundary values."""

from .ball import (
    MobiusMap,
    RadialStretching,
    chord_bound,
    hyperbolic_distance,
    mobius_to_origin,
    radial_stretch_apply,
    radial_stretch_delta,
)
from .bounds import (
    B_CONSTANT,
    DisplacementBound,
    averaging_conjecture_scan,
    corollary_bound,
    krzyz_c1,
    main_theorem_bound,
    mycor_bound,
    origin_bound_chain,
    sandwich_eta,
    stabrmk_bounds,
)
from .elliptic import agm, complete_E, complete_K, quadrature_K
from .errors import DomainError, UsageError
from .grotzsch import mu, mu_inv, phi_K
from .mn_lemma import MNParams, compute_M, iterate_a, p_func, p_inverse, q_func
from .report import CheckReport
from .rings import Enclosure, eta_Kn, gamma_2, lambda_K, phi_Kn, tau_n

__version__ = "0.1.0"
