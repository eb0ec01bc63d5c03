"""Arithmetic of homology groups of Riemann surfaces."""

from .intlin import AbelianGroup, IntMatrix, SnfResult, quotient_structure, smith_normal_form
from .orbifold import (
    HomologyVerdict,
    MaclachlanError,
    NonHyperbolicError,
    Signature,
    SignatureError,
    homology_genus,
    homology_group,
    homology_order,
    is_homology_pair,
    is_homology_signature,
    maclachlan_check,
    signature_lcm,
)
from .fermat import (
    CoverConstruction,
    CurveModel,
    ExponentVector,
    FermatType,
    OrbifoldStructure,
    curve_model,
    fermat_genus,
    fixed_point_classification,
    generators,
    homology_cover_construction,
    orbifold_structure,
    permutation_action,
)
from .uniqueness import (
    coexistence_check,
    cyclic_case_signatures,
    diophantine_check,
    genus_collision_scan,
    klein_case_signatures,
    quotient_cone_order,
)
from .catalog import (
    CatalogEntry,
    check_bounds,
    enumerate_homology_signatures,
    paper_fixtures,
    verify_fixtures,
)

__version__ = "0.1.0"
