"""Stanley decompositions of monomial ideals, with exact oracles for checking them."""

from .constructions import (
    ConstructionTrace,
    ci3,
    decompose,
    janet_quotient,
    principal_complement,
    saturated_3var,
    small_ideal,
    three_gen_ideal,
    three_gen_quotient,
    transfer_quotient_down,
    transfer_quotient_up,
)
from .decomposition import Slab, StanleyDecomposition, parse_decomposition, verify
from .kernels import BACKEND
from .monomial import (
    Monomial,
    MonomialIdeal,
    ParseError,
    colon,
    gcd_part,
    intersect,
    is_saturated,
    parse_ideal,
    parse_monomial,
    power,
    saturate,
    stats,
)
from .oracles import BudgetExceeded, depth_exact, sdepth_at_least, sdepth_exact

__all__ = [
    "BACKEND", "BudgetExceeded", "ConstructionTrace", "Monomial", "MonomialIdeal", "ParseError",
    "Slab", "StanleyDecomposition", "ci3", "colon", "decompose", "depth_exact", "gcd_part",
    "intersect", "is_saturated", "janet_quotient", "parse_decomposition", "parse_ideal",
    "parse_monomial", "power", "principal_complement", "saturate", "saturated_3var",
    "sdepth_at_least", "sdepth_exact", "small_ideal", "stats", "three_gen_ideal",
    "three_gen_quotient", "transfer_quotient_down", "transfer_quotient_up", "verify",
]
