"""Chermak-Delgado measures and lattices of small finite groups.

Brute-force search over explicit multiplication tables, plus the closed-form
subgroup and measure formulas for the metacyclic ZM-groups.
"""

from .cd import CdLatticeReport, cd_lattice, cd_measure
from .descriptors import parse_group
from .groups import (
    CapacityError,
    GroupTable,
    SubgroupSet,
    all_subgroups,
    build_cyclic,
    build_dihedral,
    build_zm,
    centralizer,
    direct_product,
)
from .zm import ZmParams, ZmTriple, cd_zm, enumerate_L, validate_params

__all__ = [
    "CapacityError",
    "CdLatticeReport",
    "GroupTable",
    "SubgroupSet",
    "ZmParams",
    "ZmTriple",
    "all_subgroups",
    "build_cyclic",
    "build_dihedral",
    "build_zm",
    "cd_lattice",
    "cd_measure",
    "cd_zm",
    "centralizer",
    "direct_product",
    "enumerate_L",
    "parse_group",
    "validate_params",
]
