"""Intersecting families of signed sets: injections into the star and exact search."""

from ._core import (
    BoundReport,
    EkrError,
    InjectionCertificate,
    Params,
    Partition,
    PlainFamily,
    SearchResult,
    SignedFamily,
    SignedSet,
    assemble_injection,
    bound_value,
    check_proof_steps,
    enumerate_maximal_intersecting,
    intersects,
    is_intersecting,
    is_maximal_intersecting,
    katona_check,
    make_signed_set,
    match_to_shadow,
    max_intersecting_exact,
    min_pairwise_intersection,
    mod_star,
    parse_plain_family,
    parse_signed_family,
    partition_family,
    random_maximal_intersecting,
    shadow_to,
    star,
    support,
    theta_shift,
    theta_shift_family,
    universe,
    verify_bound,
    verify_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
