"""Exact arithmetic in the ring of arithmetical functions under
Dirichlet convolution, with ideal-family oracles and element
classification on truncated windows."""

from .primes import Factorization, factorize, is_prime, nth_prime
from .ring import (
    EXACT,
    FLOAT,
    ArithFunc,
    ModeMismatchError,
    NonUnitError,
    NotDivisibleWitness,
    WindowError,
    ZeroFunctionError,
    add,
    convolve,
    delta,
    identity,
    indicator_shift,
    invert,
    make,
    norm,
    power,
    try_divide,
    zeros,
)
from .ideals import (
    ChainLink,
    ChainReport,
    Decomposition,
    IdealSpec,
    NotInIdealError,
    chain,
    decompose_coprime_vanishing,
    divisibility_depth,
    member,
    principal_quotient,
    probe_prime,
    probe_semiprime,
)
from .structure import (
    ElementReport,
    check_nonprime_norm_product,
    classify,
    essential_witness,
    units_group_probe,
)
from .witness import MEMBER, NON_MEMBER, UNDECIDED, Witness
from .zoo import FUNCTION_TAGS, generate, is_additive, is_completely_additive

__all__ = [
    "ArithFunc",
    "ChainLink",
    "ChainReport",
    "Decomposition",
    "ElementReport",
    "EXACT",
    "FLOAT",
    "Factorization",
    "FUNCTION_TAGS",
    "IdealSpec",
    "MEMBER",
    "ModeMismatchError",
    "NON_MEMBER",
    "NonUnitError",
    "NotDivisibleWitness",
    "NotInIdealError",
    "UNDECIDED",
    "WindowError",
    "Witness",
    "ZeroFunctionError",
    "add",
    "chain",
    "check_nonprime_norm_product",
    "classify",
    "convolve",
    "decompose_coprime_vanishing",
    "delta",
    "divisibility_depth",
    "essential_witness",
    "factorize",
    "generate",
    "identity",
    "indicator_shift",
    "invert",
    "is_additive",
    "is_completely_additive",
    "is_prime",
    "make",
    "member",
    "norm",
    "nth_prime",
    "power",
    "principal_quotient",
    "probe_prime",
    "probe_semiprime",
    "try_divide",
    "units_group_probe",
    "zeros",
]
