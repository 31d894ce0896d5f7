"""kisslat: lattices from binary self-orthogonal codes.

Builds the integer span lattice of a code's 2-adic level set, measures
its minimum norm and kissing number by exact enumeration, checks the
level set's additive closure, concatenates outer GF(2^m) codes with
binary inner codes through self-dual bases, and reproduces the
closed-form rate/exponent constants the asymptotic bounds rest on.
"""

__version__ = "0.1.0"

from .asymptotics import (
    binary_entropy,
    bound_params,
    drinfeld_params,
    exponent_zeros,
    kissing_exponent_constant,
    light_vector_exponent,
    param_table,
    target_relative_distance,
)
from .binary_codes import (
    BinaryCode,
    WeightDistribution,
    codewords_by_weight,
    format_code,
    is_self_orthogonal,
    parse_code,
    row_space,
    weight_distribution,
)
from .certify import Certificate, CertifyError, certify_code, certify_file, emit, parse_certificate
from .code_lattice import (
    ClosureReport,
    LatticeBasis,
    LatticeVerdict,
    ShortVectorReport,
    build_span_basis,
    closure_probe,
    enumerate_short,
    format_basis_file,
    hermite_form,
    lift,
    parse_basis_file,
    set_contains,
    verify_code_lattice,
)
from .concatenation import ConcatSpec, binary_image, concatenate, identity_inner
from .finite_field import (
    FieldTable,
    SelfDualBasis,
    SelfDualSearchError,
    find_self_dual_basis,
    format_basis,
    parse_basis,
)
from .outer_codes import (
    GrsCode,
    RateThresholds,
    build_grs,
    find_self_orthogonal_multipliers,
    is_euclidean_self_orthogonal,
    max_self_orthogonal_dimension,
    minimum_distance,
    parse_grs,
    rate_threshold,
)
