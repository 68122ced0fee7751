"""knotfiber: exact link invariants and fibering verdicts for satellite patterns."""

from .braid import (
    BraidWord,
    braid_permutation,
    closure_components,
    conjugate_search,
    exponent_sum,
    family_braid,
    is_homogeneous,
    parse_braid,
)
from .diagram import (
    LinkDiagram,
    braid_closure_diagram,
    encircle,
    linking_number,
    load_pd,
    reverse_component,
    save_pd,
    winding_number,
)
from .fibering import (
    FiberingVerdict,
    Pattern,
    Verdict,
    conjugacy_separator,
    link_alexander,
    pattern_fibered_check,
    pattern_link,
    satellite_verdict,
    unknot_pattern_from_braid,
)
from .invariants import burau_alexander, homfly, mfw_bound
from .laurent import LaurentPoly, parse_poly
from .presentation import alexander_poly, assign_weights, wirtinger

__all__ = [
    "BraidWord",
    "FiberingVerdict",
    "LaurentPoly",
    "LinkDiagram",
    "Pattern",
    "Verdict",
    "alexander_poly",
    "assign_weights",
    "braid_closure_diagram",
    "braid_permutation",
    "burau_alexander",
    "closure_components",
    "conjugacy_separator",
    "conjugate_search",
    "encircle",
    "exponent_sum",
    "family_braid",
    "homfly",
    "is_homogeneous",
    "link_alexander",
    "linking_number",
    "load_pd",
    "mfw_bound",
    "parse_braid",
    "parse_poly",
    "pattern_fibered_check",
    "pattern_link",
    "reverse_component",
    "satellite_verdict",
    "save_pd",
    "unknot_pattern_from_braid",
    "winding_number",
    "wirtinger",
]
