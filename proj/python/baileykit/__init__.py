"""Exact truncated q-series and Bailey-pair identity verification.

Series are formal Laurent series in t = q^(1/2) with exact rational coefficients;
exponents are t-exponents throughout. Parameters accept a Monomial, an int, or a
string in the instance grammar such as "-3/2q^(5/2)" or "inf".
"""

from ._baileykit import (
    EXACT_ORDER,
    BaileyPair,
    ConstraintViolation,
    DegenerateParameter,
    FormalDivergence,
    Monomial,
    ParseError,
    RelationCheck,
    Series,
    UnknownIdentity,
    UnknownParameter,
    UnsupportedShift,
    WPBaileyPair,
    ZeroSeriesInversion,
    apply_lemma,
    apply_s1,
    apply_s2,
    build_sides,
    canonical_instance,
    change_base,
    check_pair,
    check_wp_pair,
    count_partitions,
    default_order,
    degeneration_suite,
    identities,
    pentagonal_expansion,
    poch,
    poch_inf,
    qbinom,
    report_json,
    run_cli,
    scale_pair_base,
    shifted_pair,
    sum_unilateral,
    triple_product,
    unit_pair,
    verify,
    wp_inversion_check,
    wp_shifted_pair,
    wp_unit_pair,
)


def q_coefficients(series, q_order=None):
    """Coefficients of a series with only integral q-powers, as a list indexed by q-exponent.

    Starts at q^0; raises ValueError for half-integral powers or negative exponents.
    """
    items = series.items()
    if q_order is not None:
        upto = q_order
    elif series.is_exact:
        upto = max((texp for texp, _ in items), default=0) // 2
    else:
        upto = series.order // 2
    out = [0] * (upto + 1)
    for texp, c in items:
        if texp % 2 or texp < 0:
            raise ValueError(f"t^{texp} is not a nonnegative integral power of q")
        if texp // 2 <= upto:
            out[texp // 2] = c
    return out


__all__ = [name for name in dir() if not name.startswith("_")]
