"""Exact-arithmetic toolkit for finite-dimensional 2-term L-infinity algebras.

Structure constants over the rationals, a verifier for the defining
equations, Lie algebra cohomology, standard-shape normal forms with explicit
isomorphisms, and certificates deciding isomorphism from classifying data.
"""

from .linalg import (
    Matrix,
    Rational,
    Subspace,
    block_diag,
    complement,
    image_basis,
    invert,
    kernel_basis,
    rref,
    solve,
)
from .core import (
    Element,
    ShuffleSet,
    TwoTermAlgebra,
    VerificationReport,
    bracket,
    coherence_lhs,
    homology_dims,
    shuffles,
    structure_violations,
    verify,
)
from .morphisms import (
    Morphism,
    compose,
    identity_morphism,
    inverse,
    is_isomorphism,
    verify_morphism,
)
from .cohomology import (
    Cochain,
    IntertwinerError,
    LieAlgebra,
    LieMorphismError,
    Quadruple,
    Representation,
    cohomologous,
    cohomology_basis,
    cohomology_dim,
    delta,
    delta_matrix,
    is_coboundary,
    is_cocycle,
    pullback_representation,
)
from .classify import (
    Decomposition,
    InvariantVector,
    InvertibilityError,
    NormalFormResult,
    QuadrupleMaps,
    certify_isomorphism,
    decompose,
    distinguish,
    extract_quadruple_maps,
    extract_triple,
    invariants,
    normal_form,
    skeleton,
    split_normal_form,
    transport,
)
from .builders import (
    RandomProfile,
    abelian,
    adjoint_rep,
    cartan_cocycle,
    direct_sum_rep,
    example27_automorphism,
    heisenberg3,
    killing_form,
    lie_algebra,
    nonabelian2,
    normal_form_algebra,
    parse_quaternion,
    quaternion_example,
    random_algebra,
    representation,
    skeletal_string,
    sl2,
    so3,
    trivial_rep,
)

__version__ = "0.1.0"
