"""pi_*-kernels of self-maps of compact Lie groups."""

from .abelian import AbelianGroup, direct_sum, localize, p_primary_part
from .catalog import EXCEPTIONAL, E6, E7, E8, F4, G2, SO, LieGroup, Sp, Spin, SU, U, dimension, parse_group, rank, rational_type
from .errors import UNKNOWN, DomainError, NotCovered, OutOfSerreRange, UnsupportedGroup
from .invariants import (
    INF,
    e_sharp_group,
    e_sharp_stability_dim,
    ghost_monomials,
    product_invariants,
    sz_lz,
    z_infty_finite,
    z_n_group,
)
from .localization import Bundle, Decomposition, Sphere, covering_reduction, decompose, is_p_regular, is_quasi_p_regular
from .psi import PsiElement, PsiGroup
from .serre import (
    BundleTarget,
    SphereTarget,
    ghost_obstruction_vanishes,
    serre_bound,
    serre_pi,
    top_obstruction_group_vanishes,
)

__version__ = "0.1.0"
