"""Quasisymmetric function invariants of matroids and generalized permutohedra."""
from .config import Budgets, BudgetExceeded, budgets
from .qsym import (
    FUNDAMENTAL,
    MONOMIAL,
    IntValuedPoly,
    QSymFn,
    TensorQSym,
    antipode,
    change_basis,
    complement,
    compositions_of,
    coproduct,
    counit,
    parse,
    product,
    render,
    reverse,
    specialize_ones,
)
from .quotient import QuotientPresentation, QuotientVector, project_mod_m2, quotient_presentation, quotient_ranks
from .posets import (
    BlocksAndZ,
    LabelledPoset,
    blocks_and_z,
    descent_composition,
    disjoint_sum,
    enumerator,
    linear_extensions,
    ordinal_sum,
    ppartition_count,
    psi,
    q_sigma,
    r_sigma,
    stanley_p_alpha,
    standardize,
    w_sigma_descents,
)
from .matroid import (
    Matroid,
    MatroidAxiomError,
    direct_sum,
    freedom_bases_direct,
    freedom_matroid,
    intersect,
    isthmus,
    loop,
    principal_extension,
    rank2_matroid,
    tutte,
    uniform,
)
from .catalog import enumerate_matroids, is_isomorphic, weak_images
from .invariant import (
    F,
    F_bruteforce,
    F_star,
    F_star_bruteforce,
    check_duality,
    check_hopf_morphism,
    check_L_coefficients,
    check_reciprocity,
    flag_coefficient,
    freedom_expansion_check,
    phi,
    phi_star,
)
from .decomp import (
    DecompositionCertificate,
    SemigroupInstance,
    barF,
    check_valuation,
    decomposable_search,
    find_hyperplane_splits,
    hilbert_basis,
)
from .genperm import (
    GenPermGraph,
    SimpleGraph,
    F_genperm,
    chromatic_poly_check,
    chromatic_polynomial,
    from_matroid,
    graphic_zonotope_F,
    vertex_poset,
)

__version__ = "0.1.0"
