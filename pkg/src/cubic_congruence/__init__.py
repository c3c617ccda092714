"""Roots of X^3 = 2 (mod m): ideals, generators, approximations, spacing
and large sieve measurements in Z[2^(1/3)]."""

__version__ = "0.1.0"

from .cubic_ring import (  # noqa: F401
    EPSILON,
    EPSILON_INV,
    ONE,
    CofactorTriple,
    CubicInt,
    cofactor,
    embed_complex_abs,
    embed_real,
    mul,
    norm,
    trace,
)
from .ideal_correspondence import (  # noqa: F401
    IdealHNF,
    NotAnIdeal,
    ideal_to_root,
    is_ideal_lattice,
    membership,
    root_to_ideal,
)
from .parametrization import (  # noqa: F401
    GammaData,
    InternalError,
    NotPrimitive,
    NotUnimodular,
    RationalPoint,
    approximations,
    enumerate_gamma_data,
    enumerate_generators,
    gamma_data,
    generator_from_root,
    in_domain,
    is_primitive_generator,
    recover_root,
    reduce_to_domain,
    root_from_generator,
    solve_uvw,
)
from .root_finder import (  # noqa: F401
    DomainError,
    NotARoot,
    RootPair,
    enumerate_root_pairs,
    roots_bruteforce,
    roots_fast,
)
