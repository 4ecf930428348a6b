"""
Exact Kazhdan-Lusztig computations for the extended affine Weyl group of
type A_n: KL polynomials and mu, Hecke structure constants, the lowest
two-sided cell, and SL_{n+1} tensor multiplicities.
"""

from .cells import (
    C0Factorization,
    CellQuery,
    assemble,
    bound_B,
    c0_factorize,
    d_of,
    d_set_characterization,
    dist_involutions,
    e_elem,
    f_elem,
    gamma0_contains,
    mu_c0_decomposed,
)
from .hecke import HeckeElem, c_basis, delta_gamma, h_const, pi_delta, product, t_mul, to_c_basis
from .kl import (
    CacheFormatError,
    KLTable,
    ResourceLimitError,
    Session,
    get_session,
    kl_poly,
    kl_poly_gamma0,
    mu,
    r_oracle_kl,
)
from .laurent import LaurentPoly, QPoly, parse_qpoly
from .tensor import (
    DominantWeight,
    Partition,
    char_oracle,
    tensor_decompose,
    tensor_mult,
    weight_multiplicity,
    weyl_dim,
)
from .weyl import (
    AffinePerm,
    RootDatum,
    Weight,
    WordError,
    bruhat_leq,
    from_indices,
    from_word,
    interval,
    length_im,
    multiply,
    omega_conjugate,
    parse_element,
    reduced_word,
    translation,
)

__version__ = "0.1.0"


def inverse(w):
    return w.inverse()


def length(w):
    return w.length()


def descents(w, side="right"):
    return w.descents(side)


__all__ = [
    "AffinePerm",
    "C0Factorization",
    "CacheFormatError",
    "CellQuery",
    "DominantWeight",
    "HeckeElem",
    "KLTable",
    "LaurentPoly",
    "Partition",
    "QPoly",
    "ResourceLimitError",
    "RootDatum",
    "Session",
    "Weight",
    "WordError",
    "assemble",
    "bound_B",
    "bruhat_leq",
    "c0_factorize",
    "c_basis",
    "char_oracle",
    "d_of",
    "d_set_characterization",
    "delta_gamma",
    "descents",
    "dist_involutions",
    "e_elem",
    "f_elem",
    "from_indices",
    "from_word",
    "gamma0_contains",
    "get_session",
    "h_const",
    "interval",
    "inverse",
    "kl_poly",
    "kl_poly_gamma0",
    "length",
    "length_im",
    "mu",
    "mu_c0_decomposed",
    "multiply",
    "omega_conjugate",
    "parse_element",
    "parse_qpoly",
    "pi_delta",
    "product",
    "r_oracle_kl",
    "reduced_word",
    "t_mul",
    "tensor_decompose",
    "tensor_mult",
    "to_c_basis",
    "translation",
    "weight_multiplicity",
    "weyl_dim",
]
