"""Exact affine Yangian actions on higher level Fock spaces.

The finite-node Yangian acts on a level-L Fock space through a degenerate
DAHA and a Schur-Weyl type functor on finite wedges; the node-0 generators
come from conjugating by the shift map ``T_inf``.  All coefficients are exact
(rationals or polynomials in the parameters t and c), and :mod:`verify`
checks the defining relations on enumerated basis windows.
"""

from .affine import AffineYangianAction, from_multi, rho_expand, to_multi
from .coeff import C, T, ParamPoly, Parameters, parse_coeff
from .combinatorics import ChargedMultipartition, chevalley_action, fock_basis
from .generators import GeneratorId, H, X, parse_generator
from .wedge import GlobalConfig, basis_sign, charge_compose, charge_decompose

__version__ = "0.1.0"

__all__ = [
    "AffineYangianAction",
    "C",
    "ChargedMultipartition",
    "GeneratorId",
    "GlobalConfig",
    "H",
    "ParamPoly",
    "Parameters",
    "T",
    "X",
    "basis_sign",
    "charge_compose",
    "charge_decompose",
    "chevalley_action",
    "fock_basis",
    "from_multi",
    "parse_coeff",
    "parse_generator",
    "rho_expand",
    "to_multi",
]
