"""Exact Betti tables, Hilbert data and matrix factorizations for maximal
Cohen-Macaulay modules over the cone of a smooth plane cubic."""

from .betti import (
    BettiTable,
    HilbertData,
    ObjectDescriptor,
    Variant,
    atiyah,
    betti_at,
    betti_general,
    betti_table,
    complete_resolution,
    descriptor_syzygy,
    generic,
    h0,
    h1,
    hilbert_coefficients,
    hilbert_data,
    is_ulrich,
    special,
)
from .charge_lattice import (
    SIGMA,
    Charge,
    LatticeAuto,
    apply_auto,
    euler_form,
    in_domain3,
    in_domain6,
    orbit_V,
    reduce3,
    reduce6,
    sigma_power,
)
from .fields import GF, QQ
from .matfac import (
    HesseCubic,
    MatrixFactorization,
    betti_from_mf,
    hesse,
    hesse_koszul_mf,
    koszul_mf,
    moore_matrix,
    moore_mf,
    point_search,
    skyscraper_explicit,
    skyscraper_mf,
    tensor_mf,
    verify_mf,
)
from .matrix import PolyMatrix, adjugate, determinant, grading_infer, mat_mul, solve_linear
from .poly import MultiPoly, polys

__version__ = "0.1.0"
