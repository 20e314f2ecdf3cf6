"""
hlyforge: exact arithmetic engine for Hom-Lie-Yamaguti algebras.

Structures are given by structure constants over QQ (Fractions) or GF(p);
every identity is checked on all basis tuples and reported with witnesses.
"""

from .exact_core import (
    GF, QQ, DimensionError, Field, FieldMismatch, PreconditionError, image_basis,
    kernel_basis, rank, solve,
)
from .structures import (
    HLYAlgebra, HomLieAlgebra, IdentityReport, as_hlts, as_hly, as_hom_lie, hly, hom_lie,
    induced_hly_from_hom_lie, is_hly_morphism, skew_tensor, structure_tensor,
    verify_hly, verify_hom_lie, verify_multiplicative, yau_twist,
)
from .representations import (
    HLYRep, HomLieRep, RepMorphism, TwistedContext, adjoint_hom_lie_rep, adjoint_rep,
    context, hly_rep, hom_lie_rep, induced_rep_from_top, semidirect, theta_from_rho,
    twisted_semidirect, verify_hly_rep, verify_hom_lie_rep, verify_rep_morphism, zero_rep,
)
from .cohomology import (
    CocyclePair, Complex, cochain_basis, coboundary, cocycle_pair, cohomology_dims,
    g_from_f, hom_lie_2cocycles, hom_lie_pair, partial_T, twisted_complex,
    verify_23cocycle, verify_2cocycle_hom_lie,
)
from .operators import (
    TwistedOperator, check_lambda_two_lambda, graph_is_subalgebra, induced_twisted_from_hom_lie,
    reynolds_context, reynolds_descendent, search_twisted_ops, v_structure, verify_rota_baxter,
    verify_top_morphism, verify_twisted_op, verify_twisted_op_hom_lie,
    verify_weighted_reynolds, verify_weighted_reynolds_hom_lie,
)
from .deformations import (
    EquivalencePair, TruncatedDeformation, assemble_equivalence, deformation,
    infinitesimal_is_cocycle, same_class_check, verify_deformation, verify_equivalence,
)
from .ns_algebras import (
    NSHLY, NSHomLie, adjacent_hom_lie, derived_brackets, ns_from_reynolds, ns_from_twisted_op,
    ns_hly, ns_hly_from_ns_lie, ns_hom_lie, ns_lie_from_twisted_op_hom_lie, subadjacent_hly,
    verify_ns_hly, verify_ns_hom_lie,
)

__version__ = "0.1.0"
