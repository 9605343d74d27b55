"""Exact homological algebra for bound quiver algebras over prime fields.

Computes Hom/Ext tables, syzygies, approximations and stable-category data
for finite-dimensional bound quiver algebras, models finite extriangulated
contexts (module categories, stable categories of self-injective algebras,
extension-closed subcategories), and mechanically checks n-cotorsion pairs
and cluster-tilting subcategories, including exhaustive verification of
their equivalence on desk-scale categories.
"""

from .algebra import (
    BoundQuiverAlgebra,
    Quiver,
    AlgebraError,
    ParseError,
    parse_algebra,
    nakayama_cyclic,
    linear_quiver_radical_square,
)
from .modules import Representation, ModuleMap, direct_sum, hom_basis, kernel, cokernel, image
from .decompose import decompose, is_isomorphic, fingerprint, DecompositionError
from .homology import (
    projective_cover,
    injective_hull,
    syzygy,
    cosyzygy,
    ext_dim,
    right_approximation,
    left_approximation,
)
from .stable import stable_hom_dim, suspension, loop, cone, NotSelfInjectiveError
from .contexts import (
    Context,
    Conflation,
    RunConfig,
    build_exact_context,
    build_stable_context,
    build_sub_context,
    is_extension_closed,
)
from .checkers import (
    Subcat,
    Verdict,
    orthogonal,
    resdim,
    coresdim,
    wedge,
    vee,
    EXCEEDS,
    check_left_n_cotorsion,
    check_right_n_cotorsion,
    check_n_cotorsion,
    check_cluster_tilting,
    enumerate_cluster_tilting,
    enumerate_cotorsion_diagonal,
    verify_theorem,
    verify_orthogonal_containment,
    verify_left_pair_characterization,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
