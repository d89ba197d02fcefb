"""Higher Bruhat orders in types A and B, with exhaustive desk-scale checks."""

from .core import (
    BElem,
    Packet,
    UnsupportedLevelError,
    enumerate_A,
    enumerate_B,
    format_element,
    normalize_orbit,
    packet_A,
    packet_B,
    parse_element,
    standard_key,
    star,
)
from .orders import (
    BruhatPoset,
    FlipError,
    InadmissibleOrderError,
    OrderClass,
    PosetOverflowError,
    TotalOrder,
    build_poset,
    canonical_form,
    chains_bijection_check,
    check_extrema,
    class_flip_candidates,
    class_members,
    commutes,
    enumerate_admissible,
    flip_candidates,
    inv_injectivity_check,
    inversion_set,
    is_admissible,
    maximal_chains,
    packet_flip,
    poset_from_json_obj,
    poset_to_dot,
    poset_to_json,
    poset_to_json_obj,
    rho_max,
    rho_min,
)
from .verify import (
    CaseSpec,
    RelationGraph,
    blocks,
    case_check,
    case_report,
    classify_blocked_flip,
    crosses,
    flip_candidate_by_blocking,
    interval_escape_witness,
    linear_extensions,
    make_case,
    minimal_chain,
    run_suite,
    standard_cases,
    transitive_union,
)
from .weyl import (
    ReducedWord,
    Root,
    SignedPermutation,
    act,
    braid_classify,
    chain_to_word,
    check_root_inversions,
    iso_check,
    order_to_perm,
    positive_roots_b,
    reduced_words_brute,
    root_of,
    weak_order_poset,
    weak_order_poset_a,
    weyl_inversions,
    weyl_length,
)

__all__ = [name for name in dir() if not name.startswith("_")]
