"""Exact-arithmetic invariants for mirror pairs of degenerations and fibrations.

Subpackages by topic: ``polytopes`` (exact convex geometry over Z),
``nef`` (nef partitions, duals and fibre/genus counts), ``lattices`` (even
quadratic forms and the mirror-lattice construction), ``hodge`` (diamond
arithmetic and gluing/smoothing identities), ``family`` (the mirror-quartic
threefold family calculator), and ``cli`` (the batch front-end).
"""

__version__ = "0.1.0"

from .errors import MirrorcheckError
from .polytopes import (
    LatticePolytope,
    Face,
    hull,
    polar_dual,
    is_reflexive,
    lattice_points,
    face_lattice,
    dual_face,
    minkowski_sum,
    dilate,
)
from .nef import (
    NefPartition,
    DualNefPartition,
    validate_nef_partition,
    dual_nef_partition,
    check_refinement,
    complement_count,
    curve_invariant,
    divisor_component_count,
    batyrev_hodge,
)
from .lattices import (
    QuadLattice,
    LatticeEmbedding,
    DiscriminantData,
    standard_lattice,
    direct_sum,
    signature,
    determinant,
    discriminant,
    orthogonal_complement,
    dn_mirror,
    find_isotropic,
    invariants_match,
    k3_lattice,
    canonical_embedding,
    default_isotropic_vector,
)
from .hodge import (
    HodgeDiamond,
    TyurinData,
    FibrationDescriptor,
    TypeIIDegeneration,
    SlicedFibration,
    euler_char,
    mirror_dual_check,
    lee_smoothing,
    glue_euler_check,
    euler_blowup_curve,
    lg_relative_ranks,
    h2w_formula,
    ell_plus_k_check,
    picard_from_fibration,
    fibre_components,
    slicing_check,
    lmhs_table,
    lmhs_mirror_match,
    conjecture318_report,
)
from .family import (
    FamilyParams,
    FamilyReport,
    w_hodge,
    v_hodge,
    singular_fibre_profile,
    family_consistency_report,
)

__all__ = [name for name in dir() if not name.startswith("_")]
