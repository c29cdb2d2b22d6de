"""Combinatorial calculus of positive opetopes.

Modules:
  core       positive hypergraphs, orders, opetope axioms, duals
  omega      cells (S, n), domains/codomains, composition
  morphisms  face maps and contraction maps, kernels, fibers
  flags      flags, punctured flags, signs, pencil and flag orders, successor
  cylinder   the cylinder complex, star operations, flag opetopes, straightness
  product    splitting analysis and the universal map into the cylinder
  cli        command-line entry points
"""

from .core import (
    AxiomReport,
    Hypergraph,
    boundary,
    dual,
    generated_sub,
    iota_faces,
    is_opetope,
    is_opetopic_cardinal,
    iterated_codomain,
    lower_order,
    occurs,
    size,
    upper_order,
    validate_structure,
)
from .cylinder import (
    build_cylinder,
    face_id,
    flag_opetope,
    parse_face_id,
    pflag_opetope,
    star,
    straightness_certificate,
)
from .fixtures_catalog import all_fixtures, load_fixture
from .flags import maximal_flags, next_flag, parse_flag
from .morphisms import FaceMap, IotaMap, identity_iota, kernel, onto_maps_to_interval
from .omega import Cell, cell_codomain, cell_compose, cell_domain, cell_from_faces
from .oracles import ORACLES, run_oracle
from .product import analyze_splitting, build_H, projection_pair, verify_product

__all__ = [
    "build_cylinder",
    "face_id",
    "flag_opetope",
    "parse_face_id",
    "pflag_opetope",
    "star",
    "straightness_certificate",
    "maximal_flags",
    "next_flag",
    "parse_flag",
    "FaceMap",
    "IotaMap",
    "identity_iota",
    "kernel",
    "onto_maps_to_interval",
    "Cell",
    "cell_codomain",
    "cell_compose",
    "cell_domain",
    "cell_from_faces",
    "ORACLES",
    "run_oracle",
    "analyze_splitting",
    "build_H",
    "projection_pair",
    "verify_product",
    "AxiomReport",
    "Hypergraph",
    "boundary",
    "dual",
    "generated_sub",
    "iota_faces",
    "is_opetope",
    "is_opetopic_cardinal",
    "iterated_codomain",
    "lower_order",
    "occurs",
    "size",
    "upper_order",
    "validate_structure",
    "all_fixtures",
    "load_fixture",
]
