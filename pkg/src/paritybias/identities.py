"""Two-sided checks of classical q-series identities at chosen substitutions.

Every identity here is stated with both sides built by separate code paths:
closed products on one side, term-by-term summation on the other. A check
passes only when all coefficients agree through the truncation order.

Sums run until the current term vanishes inside the truncation window. Each
term update multiplies by factors of positive valuation, so term valuations
are nondecreasing and the first all-zero term ends the sum exactly. A guard
aborts if that never happens, which means the substitution was divergent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import (
    FormalSeries,
    MonomialParam,
    ZERO_PARAM,
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

__all__ = [
    "IdentityCheck",
    "CheckResult",
    "IDENTITY_IDS",
    "check_identity",
    "compare_series",
    "SUBSTITUTIONS",
    "substitution_checks",
    "run_all_substitutions",
]

IDENTITY_IDS = (
    "heine",
    "euler_transform",
    "sylvester",
    "euler_expansion",
    "gauss_triangular",
    "theta_aux_z_q",
    "theta_aux_z_q2",
    "sylvester_x1_rearranged",
)

# which named substitution slots each identity accepts
_SLOTS = {
    "heine": ("a", "b", "c", "z"),
    "euler_transform": ("a", "b", "c", "z"),
    "sylvester": ("x",),
    "euler_expansion": ("a",),
    "gauss_triangular": (),
    "theta_aux_z_q": (),
    "theta_aux_z_q2": (),
    "sylvester_x1_rearranged": (),
}


@dataclass
class IdentityCheck:
    """One identity instance: substitution slot values, base step, order."""

    identity: str
    order: int
    step: int = 1  # the base is q**step
    slots: dict[str, MonomialParam] = field(default_factory=dict)
    label: str = ""


@dataclass(frozen=True)
class CheckResult:
    identity: str
    label: str
    passed: bool
    verified_order: int
    first_mismatch: int | None  # exponent of the first differing coefficient


def compare_series(lhs: FormalSeries, rhs: FormalSeries) -> tuple[bool, int, int | None]:
    """(equal, order compared through, exponent of first mismatch or None)."""
    order = min(lhs.order, rhs.order)
    for e in range(order + 1):
        if lhs.coeffs[e] != rhs.coeffs[e]:
            return False, order, e
    return True, order, None


def _is_zero(s: FormalSeries) -> bool:
    return not any(s.coeffs)


def _mono_mul(p: MonomialParam, r: MonomialParam) -> MonomialParam:
    if p.is_zero or r.is_zero:
        return ZERO_PARAM
    return MonomialParam(p.coefficient * r.coefficient, p.exponent + r.exponent)


def _mono_div(p: MonomialParam, r: MonomialParam) -> MonomialParam:
    # r has coefficient +-1, so dividing by it multiplies by the same sign
    if p.is_zero:
        return ZERO_PARAM
    if p.exponent < r.exponent:
        raise ValueError("monomial quotient would have negative exponent")
    return MonomialParam(p.coefficient * r.coefficient, p.exponent - r.exponent)


def _mono_str(p: MonomialParam) -> str:
    if p.is_zero:
        return "0"
    sign = "-" if p.coefficient < 0 else ""
    if p.exponent == 0:
        return sign + "1"
    if p.exponent == 1:
        return sign + "q"
    return f"{sign}q^{p.exponent}"


def _times_factor(t: FormalSeries, p: MonomialParam, k: int, step: int) -> FormalSeries:
    """t * (1 - p * Q^k) where Q = q**step."""
    if p.is_zero:
        return t
    return times_binomial(t, -p.coefficient, p.exponent + step * k)


def _div_factor(t: FormalSeries, p: MonomialParam, k: int, step: int) -> FormalSeries:
    """t / (1 - p * Q^k)."""
    if p.is_zero:
        return t
    return div_binomial(t, -p.coefficient, p.exponent + step * k)


def _times_mono(t: FormalSeries, p: MonomialParam) -> FormalSeries:
    """t * p for a plain monomial p."""
    if p.is_zero:
        return zero(t.order)
    return scale(shift(t, p.exponent), p.coefficient)


def _times_diff(t: FormalSeries, b: MonomialParam, c: MonomialParam, k: int, step: int) -> FormalSeries:
    """t * (b - c * Q^k)."""
    lo = _times_mono(t, b)
    hi = _times_mono(t, MonomialParam(c.coefficient, c.exponent + step * k)) if not c.is_zero else None
    if hi is None:
        return lo
    return sub(lo, hi)


def _summed(order: int, first: FormalSeries, update, identity: str) -> FormalSeries:
    acc = zero(order)
    term = first
    n = 0
    while not _is_zero(term):
        acc = add(acc, term)
        n += 1
        if n > 4 * order + 16:
            raise ValueError(
                f"identity {identity!r}: summand never leaves the truncation window"
            )
        term = update(term, n)
    return acc


def _triangular(order: int) -> FormalSeries:
    coeffs = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        coeffs[n * (n + 1) // 2] += 1
        n += 1
    return make(coeffs, order)


def _phi_sum(order: int, step: int, a: MonomialParam, b: MonomialParam,
             c: MonomialParam, z: MonomialParam, identity: str) -> FormalSeries:
    """Sum over n of (a;Q)_n (b;Q)_n z^n / ((Q;Q)_n (c;Q)_n)."""

    def update(t: FormalSeries, n: int) -> FormalSeries:
        t = _times_factor(t, a, n - 1, step)
        t = _times_factor(t, b, n - 1, step)
        t = _times_mono(t, z)
        t = div_binomial(t, -1, step * n)
        t = _div_factor(t, c, n - 1, step)
        return t

    return _summed(order, one(order), update, identity)


def _check_common(chk: IdentityCheck) -> None:
    if chk.identity not in _SLOTS:
        raise ValueError(f"unknown identity {chk.identity!r}")
    if chk.order < 0:
        raise ValueError("order must be nonnegative")
    if chk.step < 1:
        raise ValueError("step must be at least 1")
    allowed = _SLOTS[chk.identity]
    extra = set(chk.slots) - set(allowed)
    if extra:
        raise ValueError(f"identity {chk.identity!r} has no slot {sorted(extra)}")
    if not allowed and chk.step != 1:
        raise ValueError(f"identity {chk.identity!r} is a fixed base-q statement")


def _slot(chk: IdentityCheck, name: str) -> MonomialParam:
    return chk.slots.get(name, ZERO_PARAM)


def _require_positive_exponent(name: str, p: MonomialParam) -> None:
    if not p.is_zero and p.exponent < 1:
        raise ValueError(f"slot {name} needs a positive exponent to converge")


def _sides_heine(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    order, step = chk.order, chk.step
    a, b, c, z = (_slot(chk, s) for s in "abcz")
    if z.is_zero:
        raise ValueError("heine needs a nonzero slot z")
    for name, p in (("a", a), ("b", b), ("c", c), ("z", z)):
        _require_positive_exponent(name, p)
    az = _mono_mul(a, z)

    lhs = _phi_sum(order, step, a, b, c, z, chk.identity)

    numer = mul(
        poch_infinite(b, step, order) if not b.is_zero else one(order),
        poch_infinite(az, step, order) if not az.is_zero else one(order),
    )
    denom = mul(poch_infinite(c, step, order) if not c.is_zero else one(order),
                poch_infinite(z, step, order))
    prefactor = mul(numer, reciprocal(denom))

    def update(t: FormalSeries, n: int) -> FormalSeries:
        t = _times_factor(t, z, n - 1, step)
        t = _times_diff(t, b, c, n - 1, step)
        t = div_binomial(t, -1, step * n)
        t = _div_factor(t, az, n - 1, step)
        return t

    rhs = mul(prefactor, _summed(order, one(order), update, chk.identity))
    return lhs, rhs


def _sides_euler_transform(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    order, step = chk.order, chk.step
    a, b, c, z = (_slot(chk, s) for s in "abcz")
    if z.is_zero or c.is_zero:
        raise ValueError("euler_transform needs nonzero slots c and z")
    for name, p in (("a", a), ("b", b), ("c", c), ("z", z)):
        _require_positive_exponent(name, p)

    lhs = _phi_sum(order, step, a, b, c, z, chk.identity)

    if a.is_zero and b.is_zero:
        w = ZERO_PARAM

        def update(t: FormalSeries, n: int) -> FormalSeries:
            # ratio of consecutive terms of c^n Q^(n(n-1)) z^n / ((Q)_n (c)_n)
            t = _times_mono(t, MonomialParam(c.coefficient, c.exponent + 2 * step * (n - 1)))
            t = _times_mono(t, z)
            t = div_binomial(t, -1, step * n)
            t = _div_factor(t, c, n - 1, step)
            return t

    elif a.is_zero or b.is_zero:
        present = b if a.is_zero else a
        w = ZERO_PARAM

        def update(t: FormalSeries, n: int) -> FormalSeries:
            # ratio of terms of (-1)^n Q^(n(n-1)/2) prod(present - c Q^(k-1)) z^n
            # over ((Q)_n (c)_n)
            t = scale(shift(t, step * (n - 1)), -1)
            t = _times_diff(t, present, c, n - 1, step)
            t = _times_mono(t, z)
            t = div_binomial(t, -1, step * n)
            t = _div_factor(t, c, n - 1, step)
            return t

    else:
        if c.exponent < a.exponent or c.exponent < b.exponent:
            raise ValueError("slots need c exponent >= a and b exponents")
        ca = _mono_div(c, a)
        cb = _mono_div(c, b)
        w = _mono_div(_mono_mul(_mono_mul(a, b), z), c)
        _require_positive_exponent("abz/c", w)

        def update(t: FormalSeries, n: int) -> FormalSeries:
            t = _times_factor(t, ca, n - 1, step)
            t = _times_factor(t, cb, n - 1, step)
            t = _times_mono(t, w)
            t = div_binomial(t, -1, step * n)
            t = _div_factor(t, c, n - 1, step)
            return t

    prefactor = mul(
        poch_infinite(w, step, order) if not w.is_zero else one(order),
        reciprocal(poch_infinite(z, step, order)),
    )
    rhs = mul(prefactor, _summed(order, one(order), update, chk.identity))
    return lhs, rhs


def _sides_sylvester(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    order = chk.order
    x = _slot(chk, "x")
    if x.is_zero:
        raise ValueError("sylvester needs a nonzero slot x")
    cx, ex = x.coefficient, x.exponent

    lhs = poch_infinite(MonomialParam(-cx, ex + 1), 1, order)

    # base_n = [(-xq;q)_n / (q;q)_n] x^n q^(n(3n+1)/2); the summand is
    # base_n * (1 + x q^(2n+1))
    def update(base: FormalSeries, n: int) -> FormalSeries:
        base = times_binomial(base, cx, ex + n)
        base = div_binomial(base, -1, n)
        base = scale(shift(base, ex + 3 * n - 1), cx)
        return base

    acc = zero(order)
    base = one(order)
    n = 0
    while not _is_zero(base):
        acc = add(acc, times_binomial(base, cx, ex + 2 * n + 1))
        n += 1
        if n > 4 * order + 16:
            raise ValueError("identity 'sylvester': summand never leaves the truncation window")
        base = update(base, n)
    return lhs, acc


def _sides_euler_expansion(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    order, step = chk.order, chk.step
    a = _slot(chk, "a")
    if a.is_zero or a.exponent < 1:
        raise ValueError("euler_expansion needs slot a with a positive exponent")

    lhs = reciprocal(poch_infinite(a, step, order))

    def update(t: FormalSeries, n: int) -> FormalSeries:
        return div_binomial(_times_mono(t, a), -1, step * n)

    return lhs, _summed(order, one(order), update, chk.identity)


def _sides_gauss_triangular(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    order = chk.order
    even = poch_infinite(q_power(2), 2, order)
    lhs = mul(mul(even, even), reciprocal(poch_infinite(q_power(1), 1, order)))
    return lhs, _triangular(order)


def _theta_lhs(order: int, numer_exp: int) -> FormalSeries:
    # sum over n of q^(numer_exp * n) / ((-q;q)_n (q;q)_n)
    def update(t: FormalSeries, n: int) -> FormalSeries:
        t = shift(t, numer_exp)
        t = div_binomial(t, 1, n)
        t = div_binomial(t, -1, n)
        return t

    return _summed(order, one(order), update, "theta_aux")


def _theta_prefactor(order: int) -> FormalSeries:
    both = mul(
        poch_infinite(MonomialParam(-1, 1), 1, order),
        poch_infinite(q_power(1), 1, order),
    )
    return reciprocal(both)


def _sides_theta_aux_z_q(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    order = chk.order
    return _theta_lhs(order, 1), mul(_theta_prefactor(order), _triangular(order))


def _sides_theta_aux_z_q2(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    order = chk.order
    coeffs = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        tri = n * (n + 1) // 2
        coeffs[tri] += 1
        if tri + n + 1 <= order:
            coeffs[tri + n + 1] -= 1
        n += 1
    rhs = mul(_theta_prefactor(order), make(coeffs, order))
    return _theta_lhs(order, 2), rhs


def _sides_sylvester_x1_rearranged(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    order = chk.order

    # q^2 (1 - q) / (1 - q^2)^2, divided by (q^3; q^2)_inf
    core = times_binomial(one(order), -1, 1)
    core = div_binomial(div_binomial(core, -1, 2), -1, 2)
    lhs = mul(reciprocal(poch_infinite(q_power(3), 2, order)), shift(core, 2))

    poly = [0] * (order + 1)
    if order >= 3:
        poly[3] = -1
    if order >= 5:
        poly[5] = -1
    mid = shift(times_binomial(div_binomial(one(order), -1, 2), 1, 2), 2)
    rhs = add(make(poly, order), mid)

    # tail: [q^2/(1-q^2)] * sum over n >= 2 of
    # [(-q^2;q)_(n-1) / (q^2;q)_(n-1)] (1 + q^(2n+1)) q^((3n^2+n)/2)
    tail_prefactor = shift(div_binomial(one(order), -1, 2), 2)
    acc = zero(order)
    if order >= 7:
        base = div_binomial(times_binomial(one(order), 1, 2), -1, 2)
        base = shift(base, 7)  # (3*4+2)/2 = 7
        n = 2
        while not _is_zero(base):
            acc = add(acc, times_binomial(base, 1, 2 * n + 1))
            base = times_binomial(base, 1, n + 1)
            base = div_binomial(base, -1, n + 1)
            base = shift(base, 3 * n + 2)
            n += 1
            if n > 4 * order + 16:
                raise ValueError(
                    "identity 'sylvester_x1_rearranged': summand never leaves the truncation window"
                )
    return lhs, add(rhs, mul(tail_prefactor, acc))


_SIDE_BUILDERS = {
    "heine": _sides_heine,
    "euler_transform": _sides_euler_transform,
    "sylvester": _sides_sylvester,
    "euler_expansion": _sides_euler_expansion,
    "gauss_triangular": _sides_gauss_triangular,
    "theta_aux_z_q": _sides_theta_aux_z_q,
    "theta_aux_z_q2": _sides_theta_aux_z_q2,
    "sylvester_x1_rearranged": _sides_sylvester_x1_rearranged,
}


def identity_sides(chk: IdentityCheck) -> tuple[FormalSeries, FormalSeries]:
    """Both sides of the identity, built independently, truncated alike."""
    _check_common(chk)
    return _SIDE_BUILDERS[chk.identity](chk)


def _default_label(chk: IdentityCheck) -> str:
    parts = [f"{name}={_mono_str(p)}" for name, p in sorted(chk.slots.items()) if not p.is_zero]
    if chk.step != 1:
        parts.append(f"base q^{chk.step}")
    return ", ".join(parts) if parts else "plain"


def check_identity(chk: IdentityCheck) -> CheckResult:
    """Build both sides and compare coefficients through the order."""
    lhs, rhs = identity_sides(chk)
    passed, verified, mismatch = compare_series(lhs, rhs)
    label = chk.label or _default_label(chk)
    return CheckResult(chk.identity, label, passed, verified, mismatch)


def _m(coefficient: int, exponent: int) -> MonomialParam:
    return MonomialParam(coefficient, exponent)


# every substitution exercised by the verification suite:
# (identity, step, slots, label)
SUBSTITUTIONS: tuple[tuple[str, int, dict[str, MonomialParam], str], ...] = tuple(
    [
        ("euler_transform", 2, {"c": _m(1, 2), "z": _m(1, 3)}, "c=q^2, z=q^3, base q^2"),
    ]
    + [
        (
            "euler_transform",
            m,
            {"c": _m(1, 2 * m), "z": _m(1, m + 1)},
            f"c=q^{2 * m}, z=q^{m + 1}, base q^{m}",
        )
        for m in range(2, 7)
    ]
    + [
        ("heine", 1, {"c": _m(-1, 1), "z": _m(1, 1)}, "c=-q, z=q"),
        ("heine", 1, {"c": _m(-1, 1), "z": _m(1, 2)}, "c=-q, z=q^2"),
        ("sylvester", 1, {"x": _m(1, 0)}, "x=1"),
        ("sylvester", 1, {"x": _m(-1, 0)}, "x=-1"),
        ("euler_expansion", 2, {"a": _m(1, 1)}, "a=q, base q^2"),
        ("euler_expansion", 2, {"a": _m(1, 2)}, "a=q^2, base q^2"),
        ("gauss_triangular", 1, {}, "plain"),
        ("theta_aux_z_q", 1, {}, "plain"),
        ("theta_aux_z_q2", 1, {}, "plain"),
        ("sylvester_x1_rearranged", 1, {}, "plain"),
    ]
)


def substitution_checks(order: int) -> list[IdentityCheck]:
    """The catalog instantiated at one truncation order."""
    return [
        IdentityCheck(identity=ident, order=order, step=step, slots=dict(slots), label=label)
        for ident, step, slots, label in SUBSTITUTIONS
    ]


def run_all_substitutions(order: int) -> list[CheckResult]:
    """Check every cataloged substitution at the given order."""
    return [check_identity(chk) for chk in substitution_checks(order)]
