"""Exact algebraic computation of indices of vector fields and 1-forms on singular germs."""

from .errors import (
    ChainError,
    GenericityError,
    InfiniteColengthError,
    InputError,
    MathError,
    NotAlgebraicallyIsolatedError,
    NotTangentError,
    ParseError,
    SingidxError,
)
from .indices import (
    CollectionSpec,
    GenericitySampler,
    ICISPresentation,
    OneFormGerm,
    PoleChain,
    Provenance,
    chern_obstruction_collection,
    collection_index,
    euler_obstruction_of_function_icis,
    gsv_index_1form,
    gsv_index_vf_hypersurface,
    homological_index_1form_icis,
    index_elk,
    index_holomorphic_vf,
    meromorphic_index,
    milnor_number_hypersurface,
    milnor_number_icis,
    radial_index_1form_icis,
)
from .local_algebra import (
    Colength,
    IdealPresentation,
    LocalAlgebra,
    colength,
    colength_truncation_oracle,
    ideal_membership,
    multiply_in_quotient,
    normal_form,
    quotient_basis,
    standard_basis,
)
from .parse import parse_poly
from .poly import Polynomial, RingContext, compare_local, differentiate, substitute_linear
from .quadratic_forms import SymmetricMatrix, VectorFieldGerm, jacobian_determinant, signature
from .strata import (
    StrataPoset,
    StratumIndexData,
    bmps_function_obstruction,
    mobius_inverse,
    obstruction_from_radial,
    radial_from_obstructions,
)

__version__ = "0.1.0"
