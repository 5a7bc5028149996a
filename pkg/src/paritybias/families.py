"""Named generating-function families, built as exact truncated series.

Each family id maps to one construction formula. Sums over a term index are
cut once the term's monomial prefactor exponent exceeds the truncation order;
that is exact because every other factor in a term has constant term 1.

Families whose id starts with diff_ are differences of two siblings in a form
that makes the sign pattern visible; the *_transformed ids rebuild a sibling
through its single-sum rewriting. Both kinds exist so equality between
independently built routes can be checked coefficient-wise.
"""

from __future__ import annotations

from .series import (
    FormalSeries,
    MonomialParam,
    add,
    div_binomial,
    make,
    mul,
    one,
    poch_infinite,
    q_power,
    reciprocal,
    scale,
    shift,
    sub,
    times_binomial,
    zero,
)

__all__ = ["FamilyId", "FAMILY_IDS", "build_series", "list_families", "family_parameter_kind", "validate_params"]

FamilyId = str

# parameter kinds: how the optional integer m is interpreted and validated
_NO_PARAM = "none"
_MODULUS = "modulus"
_MIN_PART = "min_part"
_MIN_PART_ODD = "min_part_odd"
_MIN_PART_EVEN = "min_part_even"

_PARAM_DESC = {
    _NO_PARAM: "no params",
    _MODULUS: "m >= 2 (modulus)",
    _MIN_PART: "m >= 1 (minimum part)",
    _MIN_PART_ODD: "odd m >= 1 (minimum part)",
    _MIN_PART_EVEN: "even m >= 2 (minimum part)",
}


def _inv_even_poch(order: int) -> FormalSeries:
    """1 / (q^2; q^2)_infinity."""
    return reciprocal(poch_infinite(q_power(2), 2, order))


def _inv_odd_poch(order: int) -> FormalSeries:
    """1 / (q; q^2)_infinity."""
    return reciprocal(poch_infinite(q_power(1), 2, order))


def _inv_all_ge2_poch(order: int) -> FormalSeries:
    """1 / (q^2; q)_infinity: partitions into parts of size at least 2."""
    return reciprocal(poch_infinite(q_power(2), 1, order))


def _sum_shift_over_poch_sq(order: int, step: int, t: int) -> FormalSeries:
    """Sum over n >= 0 of q^(t*n) / (q^step; q^step)_n squared."""
    acc = zero(order)
    r = one(order)
    n = 0
    while t * n <= order:
        acc = add(acc, shift(mul(r, r), t * n))
        n += 1
        r = div_binomial(r, -1, step * n)
    return acc


def _build_po(order: int) -> FormalSeries:
    return sub(
        _sum_shift_over_poch_sq(order, 2, 3),
        _sum_shift_over_poch_sq(order, 2, 5),
    )


def _build_pe(order: int) -> FormalSeries:
    return sub(_inv_all_ge2_poch(order), _sum_shift_over_poch_sq(order, 2, 3))


def _sum_transformed(order: int, step: int, square_coeff: int, linear: int, drop: int) -> FormalSeries:
    """Sum over n >= 1 of q^(square_coeff*n^2 + linear*n) * (1 - q^(drop*n))
    divided by (q^step; q^step)_n squared."""
    acc = zero(order)
    r = div_binomial(one(order), -1, step)
    n = 1
    while square_coeff * n * n + linear * n <= order:
        term = times_binomial(mul(r, r), -1, drop * n)
        acc = add(acc, shift(term, square_coeff * n * n + linear * n))
        n += 1
        r = div_binomial(r, -1, step * n)
    return acc


def _build_po_transformed(order: int) -> FormalSeries:
    prefactor = reciprocal(poch_infinite(q_power(3), 2, order))
    return mul(prefactor, _sum_transformed(order, 2, 2, 1, 2))


def _build_pe_transformed(order: int) -> FormalSeries:
    prefactor = reciprocal(poch_infinite(q_power(3), 2, order))
    return mul(prefactor, _sum_transformed(order, 2, 2, 0, 3))


def _build_diff_pe_po(order: int) -> FormalSeries:
    prefactor = reciprocal(poch_infinite(q_power(3), 2, order))
    return mul(prefactor, _sum_transformed(order, 2, 2, 0, 1))


def _build_diff_2pe_3po(order: int) -> FormalSeries:
    # summand polynomial factor (1 - q^n)^2 (2 + q^n) = 2 - 3q^n + q^(3n)
    prefactor = reciprocal(poch_infinite(q_power(3), 2, order))
    acc = zero(order)
    r = div_binomial(one(order), -1, 2)
    n = 1
    while 2 * n * n <= order:
        rsq = mul(r, r)
        term = add(sub(scale(rsq, 2), scale(shift(rsq, n), 3)), shift(rsq, 3 * n))
        acc = add(acc, shift(term, 2 * n * n))
        n += 1
        r = div_binomial(r, -1, 2 * n)
    return mul(prefactor, acc)


def _residue_prefactor(order: int, m: int) -> FormalSeries:
    """(q^(m+1); q^m)_inf * (q^m; q^m)_inf / (q^2; q)_inf."""
    num = mul(
        poch_infinite(q_power(m + 1), m, order),
        poch_infinite(q_power(m), m, order),
    )
    return mul(num, _inv_all_ge2_poch(order))


def _build_p10m(order: int, m: int) -> FormalSeries:
    body = sub(
        _sum_shift_over_poch_sq(order, m, m + 1),
        _sum_shift_over_poch_sq(order, m, 2 * m + 1),
    )
    return mul(_residue_prefactor(order, m), body)


def _build_p01m(order: int, m: int) -> FormalSeries:
    held = mul(_residue_prefactor(order, m), _sum_shift_over_poch_sq(order, m, m + 1))
    return sub(_inv_all_ge2_poch(order), held)


def _transformed_prefactor(order: int, m: int) -> FormalSeries:
    """(q^m; q^m)_inf / (q^2; q)_inf."""
    return mul(poch_infinite(q_power(m), m, order), _inv_all_ge2_poch(order))


def _build_p10m_transformed(order: int, m: int) -> FormalSeries:
    return mul(_transformed_prefactor(order, m), _sum_transformed(order, m, m, 1, m))


def _build_p01m_transformed(order: int, m: int) -> FormalSeries:
    return mul(_transformed_prefactor(order, m), _sum_transformed(order, m, m, 0, m + 1))


def _count_parity_exponents(m: int) -> tuple[int, int]:
    """(exponent per even part, exponent per odd part) for minimum part m.

    An even part must be at least the smallest even number >= m, an odd part
    at least the smallest odd number >= m.
    """
    even_e = m if m % 2 == 0 else m + 1
    odd_e = m if m % 2 == 1 else m + 1
    return even_e, odd_e


def _pair_sum(order: int, outer_exp: int, inner_exp: int, odd_counts: bool) -> FormalSeries:
    """Sum over n of q^(outer_exp*n)/(q^2;q^2)_n times the inner prefix sum
    over k <= n-2 of q^(inner_exp*k)/(q^2;q^2)_k, with n and k both even
    (odd_counts False) or both odd (odd_counts True)."""
    acc = zero(order)
    start = 3 if odd_counts else 2
    k_next = 1 if odd_counts else 0
    inner = zero(order)
    r_cache: list[FormalSeries] = [one(order)]

    def r_at(j: int) -> FormalSeries:
        while len(r_cache) <= j:
            r_cache.append(div_binomial(r_cache[-1], -1, 2 * len(r_cache)))
        return r_cache[j]

    n = start
    while outer_exp * n <= order:
        while k_next <= n - 2:
            if inner_exp * k_next <= order:
                inner = add(inner, shift(r_at(k_next), inner_exp * k_next))
            k_next += 2
        acc = add(acc, shift(mul(r_at(n), inner), outer_exp * n))
        n += 2
    return acc


def _pair_diff(order: int, m: int) -> FormalSeries:
    """The count-parity class difference in its sign-split double-sum form.

    Sum over even n >= 2 of q^(m*n)/(q^2;q^2)_n times the inner sum over even
    k <= n-2 of q^((m+1)*k)/(q^2;q^2)_k * (1 - q^(n-k)). The inner sum splits
    into two prefix sums: one with exponent m+1 and one with exponent m
    shifted up by n, because q^((m+1)k) * q^(n-k) = q^(mk + n).
    """
    acc = zero(order)
    inner_hi = zero(order)  # prefix sum with exponent m+1
    inner_lo = zero(order)  # prefix sum with exponent m
    k_next = 0
    r_cache: list[FormalSeries] = [one(order)]

    def r_at(j: int) -> FormalSeries:
        while len(r_cache) <= j:
            r_cache.append(div_binomial(r_cache[-1], -1, 2 * len(r_cache)))
        return r_cache[j]

    n = 2
    while m * n <= order:
        while k_next <= n - 2:
            if (m + 1) * k_next <= order:
                inner_hi = add(inner_hi, shift(r_at(k_next), (m + 1) * k_next))
            if m * k_next <= order:
                inner_lo = add(inner_lo, shift(r_at(k_next), m * k_next))
            k_next += 2
        combined = sub(inner_hi, shift(inner_lo, n))
        acc = add(acc, shift(mul(r_at(n), combined), m * n))
        n += 2
    return acc


def _build_eme(order: int, m: int) -> FormalSeries:
    even_e, odd_e = _count_parity_exponents(m)
    return _pair_sum(order, even_e, odd_e, odd_counts=False)


def _build_ome(order: int, m: int) -> FormalSeries:
    even_e, odd_e = _count_parity_exponents(m)
    return _pair_sum(order, odd_e, even_e, odd_counts=False)


def _build_emo(order: int, m: int) -> FormalSeries:
    even_e, odd_e = _count_parity_exponents(m)
    return _pair_sum(order, even_e, odd_e, odd_counts=True)


def _build_omo(order: int, m: int) -> FormalSeries:
    even_e, odd_e = _count_parity_exponents(m)
    return _pair_sum(order, odd_e, even_e, odd_counts=True)


def _build_peu_ou(order: int) -> FormalSeries:
    return div_binomial(_inv_even_poch(order), -1, 1)


def _build_pou_eu(order: int) -> FormalSeries:
    return div_binomial(sub(_inv_odd_poch(order), _inv_even_poch(order)), -1, 1)


def _build_qeu_ou(order: int) -> FormalSeries:
    return sub(_build_peu_ou(order), shift(_inv_odd_poch(order), 1))


def _build_qou_eu(order: int) -> FormalSeries:
    return sub(_inv_odd_poch(order), times_binomial(_inv_even_poch(order), 1, 1))


def _build_qou_eu_sumform(order: int) -> FormalSeries:
    # term_0 = q^3 / ((1 - q^3) * (q^4; q^2)_inf); successive terms multiply
    # by q^2 * (1 - q^(2n+2)) / (1 - q^(2n+3))
    acc = zero(order)
    if order < 3:
        return acc
    term = shift(
        div_binomial(reciprocal(poch_infinite(q_power(4), 2, order)), -1, 3), 3
    )
    n = 0
    while 2 * n + 3 <= order:
        if n > 0:
            term = shift(
                div_binomial(times_binomial(term, -1, 2 * n + 2), -1, 2 * n + 3), 2
            )
        acc = add(acc, term)
        n += 1
    return acc


def _build_diff_qeu_qou(order: int) -> FormalSeries:
    poly = [0] * (order + 1)
    poly[0] = 1
    n = 1
    while (n + 1) * (n + 2) // 2 + 2 <= order:
        base = (n + 1) * (n + 2) // 2
        for i in range(2, n + 2):
            if base + i <= order:
                poly[base + i] += 1
        n += 1
    return mul(_inv_even_poch(order), make(poly, order))


def _triangular_series(order: int) -> FormalSeries:
    coeffs = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        coeffs[n * (n + 1) // 2] += 1
        n += 1
    return make(coeffs, order)


def _build_diff_pou_peu(order: int) -> FormalSeries:
    body = _triangular_series(order)
    body = sub(body, scale(one(order), 2))
    return mul(_build_peu_ou(order), body)


def _build_a_seq(order: int) -> FormalSeries:
    return div_binomial(_inv_even_poch(order), -1, 1)


def _build_b_seq(order: int) -> FormalSeries:
    return _inv_even_poch(order)


# catalog order is the stable public ordering
_CATALOG: tuple[tuple[str, str, str], ...] = (
    ("po", _NO_PARAM, "non-unitary partitions with more odd parts than even parts"),
    ("pe", _NO_PARAM, "non-unitary partitions with more even parts than odd parts"),
    ("p10m", _MODULUS, "non-unitary partitions with more parts in residue 1 than 0 mod m"),
    ("p01m", _MODULUS, "non-unitary partitions with more parts in residue 0 than 1 mod m"),
    ("p10m_transformed", _MODULUS, "p10m rebuilt from its single-sum transformed form"),
    ("p01m_transformed", _MODULUS, "p01m rebuilt from its single-sum transformed form"),
    ("po_transformed", _NO_PARAM, "po rebuilt from its single-sum transformed form"),
    ("pe_transformed", _NO_PARAM, "pe rebuilt from its single-sum transformed form"),
    ("diff_pe_po", _NO_PARAM, "pe minus po in its nonnegative-summand form"),
    ("diff_2pe_3po", _NO_PARAM, "2*pe minus 3*po in its sign-split summand form"),
    ("eme", _MIN_PART, "parts >= m, evenly many even and odd parts, more even parts"),
    ("ome", _MIN_PART, "parts >= m, evenly many even and odd parts, more odd parts"),
    ("emo", _MIN_PART, "parts >= m, oddly many even and odd parts, more even parts"),
    ("omo", _MIN_PART, "parts >= m, oddly many even and odd parts, more odd parts"),
    ("diff_ome_eme", _MIN_PART_ODD, "ome minus eme in its sign-split double-sum form"),
    ("diff_eme_ome", _MIN_PART_EVEN, "eme minus ome in its sign-split double-sum form"),
    ("peu_ou", _NO_PARAM, "partitions with every even part below every odd part"),
    ("pou_eu", _NO_PARAM, "partitions with every odd part below every even part, all-even excluded"),
    ("qeu_ou", _NO_PARAM, "non-unitary partitions with every even part below every odd part"),
    ("qou_eu", _NO_PARAM, "non-unitary partitions with every odd part below every even part"),
    ("qou_eu_sumform", _NO_PARAM, "qou_eu rebuilt from its least-odd-part sum form"),
    ("diff_qeu_qou", _NO_PARAM, "qeu_ou minus qou_eu in its nonnegative-summand form"),
    ("diff_pou_peu", _NO_PARAM, "pou_eu minus peu_ou in its triangular-number form"),
    ("a_seq", _NO_PARAM, "running even-part partition totals; equals peu_ou"),
    ("b_seq", _NO_PARAM, "partitions into even parts only"),
)

FAMILY_IDS: tuple[str, ...] = tuple(entry[0] for entry in _CATALOG)
_PARAM_KIND = {fid: kind for fid, kind, _ in _CATALOG}

_NO_PARAM_BUILDERS = {
    "po": _build_po,
    "pe": _build_pe,
    "po_transformed": _build_po_transformed,
    "pe_transformed": _build_pe_transformed,
    "diff_pe_po": _build_diff_pe_po,
    "diff_2pe_3po": _build_diff_2pe_3po,
    "peu_ou": _build_peu_ou,
    "pou_eu": _build_pou_eu,
    "qeu_ou": _build_qeu_ou,
    "qou_eu": _build_qou_eu,
    "qou_eu_sumform": _build_qou_eu_sumform,
    "diff_qeu_qou": _build_diff_qeu_qou,
    "diff_pou_peu": _build_diff_pou_peu,
    "a_seq": _build_a_seq,
    "b_seq": _build_b_seq,
}

_PARAM_BUILDERS = {
    "p10m": _build_p10m,
    "p01m": _build_p01m,
    "p10m_transformed": _build_p10m_transformed,
    "p01m_transformed": _build_p01m_transformed,
    "eme": _build_eme,
    "ome": _build_ome,
    "emo": _build_emo,
    "omo": _build_omo,
    "diff_ome_eme": lambda order, m: _pair_diff(order, m),
    "diff_eme_ome": lambda order, m: _pair_diff(order, m),
}


def family_parameter_kind(family: FamilyId) -> str:
    if family not in _PARAM_KIND:
        raise ValueError(f"unknown family {family!r}")
    return _PARAM_KIND[family]


def validate_params(family: FamilyId, m: int | None) -> None:
    """Raise ValueError unless m fits the family's parameter contract."""
    kind = family_parameter_kind(family)
    if kind == _NO_PARAM:
        if m is not None:
            raise ValueError(f"family {family!r} takes no parameter")
        return
    if m is None:
        raise ValueError(f"family {family!r} requires the parameter m")
    if kind == _MODULUS and m < 2:
        raise ValueError(f"family {family!r} requires m >= 2")
    if kind in (_MIN_PART, _MIN_PART_ODD, _MIN_PART_EVEN) and m < 1:
        raise ValueError(f"family {family!r} requires m >= 1")
    if kind == _MIN_PART_ODD and m % 2 == 0:
        raise ValueError(f"family {family!r} requires odd m")
    if kind == _MIN_PART_EVEN and m % 2 == 1:
        raise ValueError(f"family {family!r} requires even m")


def build_series(family: FamilyId, order: int, m: int | None = None) -> FormalSeries:
    """Construct the named family as a series truncated at the given order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    validate_params(family, m)
    if family in _NO_PARAM_BUILDERS:
        return _NO_PARAM_BUILDERS[family](order)
    return _PARAM_BUILDERS[family](order, m)


def list_families() -> list[tuple[str, str, str]]:
    """The stable catalog: (family id, parameter description, what it counts)."""
    return [(fid, _PARAM_DESC[kind], desc) for fid, kind, desc in _CATALOG]
