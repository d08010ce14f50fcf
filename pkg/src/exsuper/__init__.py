"""Finite-dimensionality of simple modules for D(2|1;zeta), G(3) and F(3|1).

Two independent deciders (odd-reflection transport and the closed-form
clause lists), an exact Euler-characteristic engine, and a harness that
cross-checks them over weight boxes.
"""

from .classifier import (
    Classification,
    NonDominantWeight,
    Verdict,
    classify_by_intermediate,
    classify_by_reflections,
    classify_by_theorem,
    classify_char0,
    list_finite,
)
from .euler import Character, WeylElement, euler_char, top_term, weyl_group
from .field import GENERIC, InadmissibleContext, ScalarContext, UnsupportedCharacteristic, is_zero, reduce
from .harness import VerifyReport, char0_check, verify_box, zeta_sweep
from .lattice_forms import (
    FormValue,
    RootDatum,
    SuperType,
    from_metric,
    is_dominant,
    pair_with_odd_root,
    pairing,
    root_datum,
    to_metric,
)
from .reflection import Branch, ChainResult, ChainStep, chain, odd_reflect

__all__ = [
    "Branch", "ChainResult", "ChainStep", "Character", "Classification", "FormValue",
    "GENERIC", "InadmissibleContext", "NonDominantWeight", "RootDatum", "ScalarContext",
    "SuperType", "UnsupportedCharacteristic", "Verdict", "VerifyReport", "WeylElement",
    "chain", "char0_check", "classify_by_intermediate", "classify_by_reflections",
    "classify_by_theorem", "classify_char0", "euler_char", "from_metric", "is_dominant",
    "is_zero", "list_finite", "odd_reflect", "pair_with_odd_root", "pairing", "reduce",
    "root_datum", "to_metric", "top_term", "verify_box", "weyl_group", "zeta_sweep",
]
