"""Exact truncated formal power series in one variable q.

A :class:`FormalSeries` holds integer coefficients c_0..c_N for an explicit
truncation order N. Arithmetic is exact (Python bigints); every binary
operation returns a series at the minimum of the operand orders, so no result
ever reports a coefficient the inputs do not determine.

Substitution parameters that appear inside product and sum builders are
restricted to the shape c * q**e with c in {-1, 0, +1}; see
:class:`MonomialParam`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "FormalSeries",
    "MonomialParam",
    "ZERO_PARAM",
    "q_power",
    "make",
    "zero",
    "one",
    "add",
    "sub",
    "scale",
    "mul",
    "shift",
    "truncate",
    "coefficient",
    "reciprocal",
    "times_binomial",
    "div_binomial",
    "monomial_series",
    "poch_finite",
    "poch_infinite",
]

# mul dispatch thresholds: below _NAIVE_MAX output coefficients the schoolbook
# loop wins; at or below _SPARSE_MAX nonzero terms the term loop wins.
_NAIVE_MAX = 32
_SPARSE_MAX = 8


@dataclass(frozen=True, slots=True)
class FormalSeries:
    """Coefficients c_0..c_order of a truncated integer power series."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        return add(self, other)

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        return sub(self, other)

    def __mul__(self, other: "FormalSeries") -> "FormalSeries":
        return mul(self, other)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:9])
        tail = ", ..." if self.order > 8 else ""
        return f"FormalSeries(order={self.order}, [{head}{tail}])"


@dataclass(frozen=True, slots=True)
class MonomialParam:
    """A substitution value c * q**e with c in {-1, 0, +1} and e >= 0.

    The zero value is normalized to exponent 0 so equal values compare equal.
    """

    coefficient: int
    exponent: int

    def __post_init__(self) -> None:
        if self.coefficient not in (-1, 0, 1):
            raise ValueError("monomial coefficient must be -1, 0 or +1")
        if self.exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        if self.coefficient == 0 and self.exponent != 0:
            raise ValueError("zero monomial must carry exponent 0")

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0


ZERO_PARAM = MonomialParam(0, 0)


def q_power(exponent: int, sign: int = 1) -> MonomialParam:
    """The monomial sign * q**exponent (sign defaults to +1)."""
    return MonomialParam(sign, exponent)


def make(coeffs: Sequence[int], order: int) -> FormalSeries:
    """Series with the given low-order coefficients, zero-padded to order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if len(coeffs) > order + 1:
        raise ValueError("more coefficients than order allows")
    padded = tuple(coeffs) + (0,) * (order + 1 - len(coeffs))
    return FormalSeries(order, padded)


def zero(order: int) -> FormalSeries:
    return make((), order)


def one(order: int) -> FormalSeries:
    return make((1,), order)


def monomial_series(param: MonomialParam, order: int) -> FormalSeries:
    """The monomial c * q**e as a series (zero if e exceeds the order)."""
    if param.is_zero or param.exponent > order:
        return zero(order)
    return make((0,) * param.exponent + (param.coefficient,), order)


def add(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    n = min(a.order, b.order)
    return FormalSeries(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    n = min(a.order, b.order)
    return FormalSeries(n, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def scale(a: FormalSeries, k: int) -> FormalSeries:
    return FormalSeries(a.order, tuple(k * c for c in a.coeffs))


def shift(a: FormalSeries, k: int) -> FormalSeries:
    """Multiply by q**k: coefficients move up by k, truncated at a.order."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if k == 0:
        return a
    if k > a.order:
        return zero(a.order)
    return FormalSeries(a.order, (0,) * k + a.coeffs[: a.order + 1 - k])


def truncate(a: FormalSeries, order: int) -> FormalSeries:
    """Discard coefficients above the given (smaller or equal) order."""
    if order > a.order:
        raise ValueError("cannot extend a series beyond its truncation")
    if order == a.order:
        return a
    return FormalSeries(order, a.coeffs[: order + 1])


def coefficient(a: FormalSeries, n: int) -> int:
    if n < 0 or n > a.order:
        raise ValueError(f"coefficient index {n} is beyond truncation order {a.order}")
    return a.coeffs[n]


def _mul_sparse(a: Sequence[int], b: Sequence[int], n_out: int) -> list[int]:
    out = [0] * n_out
    nz_a = [(i, v) for i, v in enumerate(a[:n_out]) if v]
    nz_b = [(j, w) for j, w in enumerate(b[:n_out]) if w]
    if len(nz_a) > len(nz_b):
        nz_a, nz_b = nz_b, nz_a
    for i, v in nz_a:
        for j, w in nz_b:
            if i + j >= n_out:
                break
            out[i + j] += v * w
    return out


def _mul_naive(a: Sequence[int], b: Sequence[int], n_out: int) -> list[int]:
    out = [0] * n_out
    for i, v in enumerate(a[:n_out]):
        if v:
            row = b[: n_out - i]
            for j, w in enumerate(row):
                if w:
                    out[i + j] += v * w
    return out


def _pack(values: Sequence[int], width_bytes: int) -> int:
    blob = b"".join(v.to_bytes(width_bytes, "little") for v in values)
    return int.from_bytes(blob, "little")


def _unpack(packed: int, width_bytes: int, count: int) -> list[int]:
    # the full product carries more slots than the truncation keeps
    nbytes = max((packed.bit_length() + 7) // 8, width_bytes * count)
    blob = packed.to_bytes(nbytes, "little")
    return [
        int.from_bytes(blob[i * width_bytes : (i + 1) * width_bytes], "little")
        for i in range(count)
    ]


def _mul_kronecker(a: Sequence[int], b: Sequence[int], n_out: int) -> list[int]:
    # Pack coefficients into fixed-width byte slots of one big integer so the
    # convolution becomes a single bigint multiply. Slots must hold the
    # largest possible convolution digit, hence the bound below. Signed input
    # is split into nonnegative positive/negative parts: four nonnegative
    # products, recombined digit-wise.
    a = list(a[:n_out])
    b = list(b[:n_out])
    max_a = max(abs(v) for v in a)
    max_b = max(abs(v) for v in b)
    if max_a == 0 or max_b == 0:
        return [0] * n_out
    bound = max_a * max_b * min(len(a), len(b))
    width_bytes = (bound.bit_length() + 2 + 7) // 8
    a_pos = _pack([v if v > 0 else 0 for v in a], width_bytes)
    a_neg = _pack([-v if v < 0 else 0 for v in a], width_bytes)
    b_pos = _pack([v if v > 0 else 0 for v in b], width_bytes)
    b_neg = _pack([-v if v < 0 else 0 for v in b], width_bytes)
    plus = a_pos * b_pos + a_neg * b_neg
    minus = a_pos * b_neg + a_neg * b_pos
    digits_plus = _unpack(plus, width_bytes, n_out)
    digits_minus = _unpack(minus, width_bytes, n_out)
    return [p - m for p, m in zip(digits_plus, digits_minus)]


def mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product truncated at the minimum operand order."""
    n = min(a.order, b.order)
    n_out = n + 1
    nz_a = sum(1 for v in a.coeffs[:n_out] if v)
    nz_b = sum(1 for v in b.coeffs[:n_out] if v)
    if nz_a == 0 or nz_b == 0:
        return zero(n)
    if min(nz_a, nz_b) <= _SPARSE_MAX:
        out = _mul_sparse(a.coeffs, b.coeffs, n_out)
    elif n_out < _NAIVE_MAX:
        out = _mul_naive(a.coeffs, b.coeffs, n_out)
    else:
        out = _mul_kronecker(a.coeffs, b.coeffs, n_out)
    return FormalSeries(n, tuple(out))


def reciprocal(a: FormalSeries) -> FormalSeries:
    """Series b with a*b = 1 at a.order; requires constant term +1 or -1."""
    lead = a.coeffs[0]
    if lead not in (1, -1):
        raise ValueError("non-invertible series: constant term must be +1 or -1")
    coeffs = a.coeffs
    inv = [lead] + [0] * a.order
    for k in range(1, a.order + 1):
        acc = 0
        for i in range(1, k + 1):
            if coeffs[i]:
                acc += coeffs[i] * inv[k - i]
        inv[k] = -lead * acc
    return FormalSeries(a.order, tuple(inv))


def times_binomial(a: FormalSeries, c: int, e: int) -> FormalSeries:
    """Multiply by the binomial (1 + c*q**e) in linear time."""
    if e < 0:
        raise ValueError("binomial exponent must be nonnegative")
    if c == 0 or e > a.order:
        return a
    src = a.coeffs
    out = list(src)
    for i in range(e, a.order + 1):
        out[i] = src[i] + c * src[i - e]
    return FormalSeries(a.order, tuple(out))


def div_binomial(a: FormalSeries, c: int, e: int) -> FormalSeries:
    """Divide by the binomial (1 + c*q**e); e must be positive."""
    if e <= 0:
        raise ValueError("binomial divisor exponent must be positive")
    if c == 0 or e > a.order:
        return a
    out = list(a.coeffs)
    for i in range(e, a.order + 1):
        out[i] -= c * out[i - e]
    return FormalSeries(a.order, tuple(out))


def poch_finite(a: MonomialParam, step: int, n: int, order: int) -> FormalSeries:
    """The finite product over k = 1..n of (1 - a * q**(step*(k-1)))."""
    if step <= 0:
        raise ValueError("step must be positive")
    if n < 0:
        raise ValueError("factor count must be nonnegative")
    acc = one(order)
    if a.is_zero:
        return acc
    for k in range(n):
        e = a.exponent + step * k
        if e > order:
            break  # remaining factors are 1 at this truncation
        acc = times_binomial(acc, -a.coefficient, e)
    return acc


def poch_infinite(a: MonomialParam, step: int, order: int) -> FormalSeries:
    """The infinite product over k >= 0 of (1 - a * q**(step*k)).

    Only factors whose lowest exponent fits under the order contribute;
    a nonzero parameter with exponent 0 makes the product formally divergent.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if a.is_zero:
        return one(order)
    if a.exponent == 0:
        raise ValueError("divergent product: parameter has exponent 0")
    acc = one(order)
    k = 0
    while a.exponent + step * k <= order:
        acc = times_binomial(acc, -a.coefficient, a.exponent + step * k)
        k += 1
    return acc
