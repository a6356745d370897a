"""Finite bounded posets, multichain posets, and executable order-theoretic checks."""

from . import errors
from .families import (GridIdeal, ascent_positions, boolean_lattice,
                       boolean_multichain_to_tuple, chain, grid, grid_ideal,
                       grid_ideal_from_members, grid_ideal_members,
                       grid_ideal_to_multichain, hypercube_face_lattice,
                       hypercube_interval_type, hypercube_multichain_count,
                       ideal_lattice, multichain_to_grid_ideal, poset_power,
                       power_index, tuple_to_boolean_multichain)
from .formats import (format_labels, format_poset, parse_labels, parse_poset,
                      read_labels, read_poset, to_dot, write_labels,
                      write_poset)
from .incidence import (ChainProfile, binomial, chain_profile,
                        count_multichains, mobius, mobius_matrix,
                        reduced_euler_characteristic, zeta_matrix,
                        zeta_polynomial_eval)
from .iso import IsoWitness, are_isomorphic, verify_order_isomorphism
from .lattice import (LatticeTables, is_distributive,
                      is_join_semidistributive, is_lattice,
                      is_lattice_homomorphism, is_lower_semimodular,
                      is_meet_semidistributive, is_modular, is_sublattice,
                      is_upper_semimodular, lattice_tables)
from .multichain import (LiftedHomomorphism, MultichainPoset,
                         lift_homomorphism, multichain_lattice_tables,
                         multichain_poset, multichain_rank, product_commutes)
from .poset import DEFAULT_ELEMENT_CAP, Poset
from .shellability import (EdgeLabeling, ELResult, is_el_labeling,
                           product_labeling, product_labeling_on,
                           verify_el_transfer)

__version__ = "0.1.0"

__all__ = [
    "ChainProfile", "DEFAULT_ELEMENT_CAP", "EdgeLabeling", "ELResult",
    "GridIdeal", "IsoWitness", "LatticeTables", "LiftedHomomorphism",
    "MultichainPoset", "Poset", "are_isomorphic", "ascent_positions",
    "binomial", "boolean_lattice", "boolean_multichain_to_tuple", "chain",
    "chain_profile", "count_multichains", "errors", "format_labels",
    "format_poset", "grid", "grid_ideal", "grid_ideal_from_members",
    "grid_ideal_members", "grid_ideal_to_multichain",
    "hypercube_face_lattice", "hypercube_interval_type",
    "hypercube_multichain_count", "ideal_lattice", "is_distributive",
    "is_el_labeling", "is_join_semidistributive", "is_lattice",
    "is_lattice_homomorphism", "is_lower_semimodular",
    "is_meet_semidistributive", "is_modular", "is_sublattice",
    "is_upper_semimodular", "lattice_tables", "lift_homomorphism", "mobius",
    "mobius_matrix", "multichain_lattice_tables", "multichain_poset",
    "multichain_rank", "multichain_to_grid_ideal", "parse_labels",
    "parse_poset", "poset_power", "power_index", "product_commutes",
    "product_labeling", "product_labeling_on", "read_labels", "read_poset",
    "reduced_euler_characteristic", "to_dot", "tuple_to_boolean_multichain",
    "verify_el_transfer", "verify_order_isomorphism", "write_labels",
    "write_poset", "zeta_matrix", "zeta_polynomial_eval",
]
