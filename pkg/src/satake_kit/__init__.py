"""Exact-arithmetic toolkit for q-analogs of weight multiplicity and the
cohomology bookkeeping of two real-form families (Lorentz PSO(2n-1,1)-type
with dual group SL2, and an octonionic F4-type family with dual group SL3).
"""

from .qanalog import (
    QPolynomial,
    Tableau,
    charge,
    kostka_charge,
    kostka_foulkes,
    partition_to_weight,
    q_kostant,
    tensor_decompose,
)
from .realform import (
    RealFormFamily,
    RealWeight,
    check_pairing_identity,
    lorentz,
    minuscule_paving,
    octonionic,
    orbit_dim,
    real_weight,
    restricted_rho,
    to_dual_weight,
    weyl_factorization_check,
)
from .rootdata import (
    Coweight,
    RootSystem,
    Weight,
    freudenthal_multiplicity,
    pair,
    rho,
    rho_check,
    root_system,
    weight,
    weyl_dimension,
    weyl_elements,
    weyl_orbit,
)
from .stalks import parity_check, q_substitution_view, stalk_polynomial, stalk_table

__version__ = "0.1.0"

__all__ = [
    "Coweight",
    "QPolynomial",
    "RealFormFamily",
    "RealWeight",
    "RootSystem",
    "Tableau",
    "Weight",
    "charge",
    "check_pairing_identity",
    "freudenthal_multiplicity",
    "kostka_charge",
    "kostka_foulkes",
    "lorentz",
    "minuscule_paving",
    "octonionic",
    "orbit_dim",
    "pair",
    "parity_check",
    "partition_to_weight",
    "q_kostant",
    "q_substitution_view",
    "real_weight",
    "restricted_rho",
    "rho",
    "rho_check",
    "root_system",
    "stalk_polynomial",
    "stalk_table",
    "tensor_decompose",
    "to_dual_weight",
    "weight",
    "weyl_dimension",
    "weyl_elements",
    "weyl_factorization_check",
    "weyl_orbit",
]
