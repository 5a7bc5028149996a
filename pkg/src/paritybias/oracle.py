"""Ground-truth partition counting, independent of all series machinery.

Two tiers: direct enumeration (small n, capped by PB_ENUM_CAP, default 40)
and exact dynamic programming (capped by PB_DP_CAP, default 300). Both work
on explicit partitions or packed big-integer count tables; nothing here
touches q-series code, so agreement between tiers and series coefficients is
a meaningful cross-check.

Counting conventions used throughout:

- "more X than Y" is strict; ties belong to neither class.
- mode even_below_odd admits partitions whose largest even part is smaller
  than the smallest odd part, including all-even and all-odd partitions.
- mode odd_below_even mirrors that; with all_even_excluded set it rejects
  every partition with zero odd parts, the empty partition included.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Literal, Sequence

__all__ = [
    "Partition",
    "ConstraintSpec",
    "BiasSpec",
    "enumeration_cap",
    "dp_cap",
    "enumerate_partitions",
    "residue_counts",
    "count_bias_enum",
    "count_bias_dp",
    "bias_counts_dp",
    "bias_breakdown_dp",
    "count_parity_family",
    "parity_family_counts",
    "count_separated",
    "separated_counts",
    "partition_count",
    "even_partition_count",
]

Partition = tuple[int, ...]

Mode = Literal["ordinary", "even_below_odd", "odd_below_even"]
_MODES = ("ordinary", "even_below_odd", "odd_below_even")

PARITY_CLASSES = ("E_me", "O_me", "E_mo", "O_mo")


def enumeration_cap() -> int:
    return int(os.environ.get("PB_ENUM_CAP", "40"))


def dp_cap() -> int:
    return int(os.environ.get("PB_DP_CAP", "300"))


@dataclass(frozen=True)
class ConstraintSpec:
    """Which partitions of n count: part bounds, structure, parity classes."""

    min_part: int = 1
    forbidden_parts: frozenset[int] = field(default_factory=frozenset)
    mode: Mode = "ordinary"
    count_parity: tuple[int, int] | None = None  # (#even mod 2, #odd mod 2)
    all_even_excluded: bool = False

    def __post_init__(self) -> None:
        if self.min_part < 1:
            raise ValueError("min_part must be at least 1")
        if any(p < 1 for p in self.forbidden_parts):
            raise ValueError("forbidden parts must be positive")
        if self.mode not in _MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.count_parity is not None and not all(
            v in (0, 1) for v in self.count_parity
        ):
            raise ValueError("count parities must be 0 or 1")


@dataclass(frozen=True)
class BiasSpec:
    """Compare the number of parts in residue j against residue k, modulo m."""

    j: int
    k: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("modulus must be at least 2")
        if not (0 <= self.j < self.m and 0 <= self.k < self.m):
            raise ValueError("residues must lie in [0, m)")
        if self.j == self.k:
            raise ValueError("residues must differ")


def _admits(parts: Partition, c: ConstraintSpec) -> bool:
    evens = [p for p in parts if p % 2 == 0]
    odds = [p for p in parts if p % 2 == 1]
    if c.count_parity is not None:
        want_even, want_odd = c.count_parity
        if len(evens) % 2 != want_even or len(odds) % 2 != want_odd:
            return False
    if c.mode == "even_below_odd":
        return not (evens and odds) or max(evens) < min(odds)
    if c.mode == "odd_below_even":
        if not odds:
            return not c.all_even_excluded
        return not evens or max(odds) < min(evens)
    return True


def _descend(remaining: int, largest: int, prefix: Partition, c: ConstraintSpec) -> Iterator[Partition]:
    # reverse-lexicographic: larger leading parts first
    for p in range(min(remaining, largest), c.min_part - 1, -1):
        if p in c.forbidden_parts:
            continue
        if p == remaining:
            yield prefix + (p,)
        else:
            yield from _descend(remaining - p, p, prefix + (p,), c)


def enumerate_partitions(n: int, c: ConstraintSpec) -> list[Partition]:
    """All partitions of n admitted by c, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = enumeration_cap()
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the enumeration cap {cap}; raise PB_ENUM_CAP to go higher"
        )
    if n == 0:
        return [()] if _admits((), c) else []
    return [parts for parts in _descend(n, n, (), c) if _admits(parts, c)]


def residue_counts(parts: Sequence[int], m: int) -> list[int]:
    """How many parts fall in each residue class modulo m."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    out = [0] * m
    for p in parts:
        out[p % m] += 1
    return out


def count_bias_enum(n: int, c: ConstraintSpec, b: BiasSpec) -> int:
    """Enumerated count of admitted partitions with more parts in residue j."""
    total = 0
    for parts in enumerate_partitions(n, c):
        counts = residue_counts(parts, b.m)
        if counts[b.j] > counts[b.k]:
            total += 1
    return total


# ---------------------------------------------------------------------------
# packed-integer dynamic programming
#
# A table row for "remaining weight r" is one big integer holding fixed-width
# slots indexed by the count difference d (#parts in residue j minus #parts
# in residue k), offset so d = -limit-1 sits at slot 0. Adding one part is a
# single shift-and-add on the row; part multiplicities are unbounded because
# rows are updated in ascending r. |d| can never exceed limit (a partition of
# weight <= limit has at most limit parts), so the end slots stay empty and
# shifts cannot bleed across the table edge.
# ---------------------------------------------------------------------------


def _slot_width_bits(limit: int) -> int:
    bound = partition_count(limit)
    return ((bound.bit_length() + 2 + 7) // 8) * 8


def _digit_sums(row: int, width_bits: int, slots: int, center: int) -> tuple[int, int, int]:
    """Sum the slot values below, at, and above the center slot."""
    width_bytes = width_bits // 8
    nbytes = max((row.bit_length() + 7) // 8, width_bytes * slots)
    blob = row.to_bytes(nbytes, "little")
    below = at = above = 0
    for idx in range(slots):
        chunk = blob[idx * width_bytes : (idx + 1) * width_bytes]
        value = int.from_bytes(chunk, "little")
        if not value:
            continue
        if idx < center:
            below += value
        elif idx == center:
            at = value
        else:
            above += value
    return below, at, above


def _round_limit(n: int) -> int:
    cap = dp_cap()
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the DP cap {cap}; raise PB_DP_CAP to go higher"
        )
    return min(cap, max(50, ((n + 49) // 50) * 50))


@lru_cache(maxsize=None)
def _bias_table(
    min_part: int, forbidden: tuple[int, ...], j: int, k: int, m: int, limit: int
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Per-weight counts (more_j, more_k, tied) for weights 0..limit."""
    w = _slot_width_bits(limit)
    center = limit + 1
    slots = 2 * limit + 3
    banned = set(forbidden)
    dp = [0] * (limit + 1)
    dp[0] = 1 << (w * center)
    for p in range(min_part, limit + 1):
        if p in banned:
            continue
        r_mod = p % m
        delta = 1 if r_mod == j else (-1 if r_mod == k else 0)
        sh = delta * w
        if sh == 0:
            for r in range(p, limit + 1):
                v = dp[r - p]
                if v:
                    dp[r] += v
        elif sh > 0:
            for r in range(p, limit + 1):
                v = dp[r - p]
                if v:
                    dp[r] += v << sh
        else:
            for r in range(p, limit + 1):
                v = dp[r - p]
                if v:
                    dp[r] += v >> w
    more_j: list[int] = []
    more_k: list[int] = []
    tied: list[int] = []
    for r in range(limit + 1):
        below, at, above = _digit_sums(dp[r], w, slots, center)
        more_j.append(above)
        more_k.append(below)
        tied.append(at)
    return tuple(more_j), tuple(more_k), tuple(tied)


def _require_dp_constraints(c: ConstraintSpec) -> None:
    if c.mode != "ordinary" or c.count_parity is not None:
        raise ValueError("bias DP supports only ordinary-mode constraints")


def count_bias_dp(n: int, c: ConstraintSpec, b: BiasSpec) -> int:
    """DP count of partitions of n with more parts in residue j than k."""
    _require_dp_constraints(c)
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = _round_limit(n)
    table = _bias_table(
        c.min_part, tuple(sorted(c.forbidden_parts)), b.j, b.k, b.m, limit
    )
    return table[0][n]


def bias_counts_dp(c: ConstraintSpec, b: BiasSpec, max_n: int) -> tuple[int, ...]:
    """count_bias_dp for every n in 0..max_n, from one shared table."""
    _require_dp_constraints(c)
    limit = _round_limit(max_n)
    table = _bias_table(
        c.min_part, tuple(sorted(c.forbidden_parts)), b.j, b.k, b.m, limit
    )
    return table[0][: max_n + 1]


def bias_breakdown_dp(
    c: ConstraintSpec, b: BiasSpec, max_n: int
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """(more_j, more_k, tied) count rows for n in 0..max_n."""
    _require_dp_constraints(c)
    limit = _round_limit(max_n)
    table = _bias_table(
        c.min_part, tuple(sorted(c.forbidden_parts)), b.j, b.k, b.m, limit
    )
    return tuple(row[: max_n + 1] for row in table)


@lru_cache(maxsize=None)
def _parity_table(min_part: int, limit: int) -> dict[str, tuple[int, ...]]:
    """Counts for the four count-parity bias classes at every weight.

    DP state: (#even parts mod 2, #odd parts mod 2, weight) with the count
    difference d = #odd - #even packed into slots as in _bias_table. Four
    cross-coupled rows per weight; adding an odd part flips the odd-count
    parity and shifts d up, an even part flips the even-count parity and
    shifts d down.
    """
    w = _slot_width_bits(limit)
    center = limit + 1
    slots = 2 * limit + 3
    # dp[even_parity][odd_parity][weight]
    dp = [[[0] * (limit + 1) for _ in range(2)] for _ in range(2)]
    dp[0][0][0] = 1 << (w * center)
    for p in range(min_part, limit + 1):
        if p % 2 == 1:
            for pe in range(2):
                rows0 = dp[pe][0]
                rows1 = dp[pe][1]
                for r in range(p, limit + 1):
                    v0 = rows0[r - p]
                    v1 = rows1[r - p]
                    if v1:
                        rows0[r] += v1 << w
                    if v0:
                        rows1[r] += v0 << w
        else:
            for po in range(2):
                rows0 = dp[0][po]
                rows1 = dp[1][po]
                for r in range(p, limit + 1):
                    v0 = rows0[r - p]
                    v1 = rows1[r - p]
                    if v1:
                        rows0[r] += v1 >> w
                    if v0:
                        rows1[r] += v0 >> w
    out: dict[str, list[int]] = {name: [] for name in PARITY_CLASSES}
    for r in range(limit + 1):
        below, _, above = _digit_sums(dp[0][0][r], w, slots, center)
        out["E_me"].append(below)
        out["O_me"].append(above)
        below, _, above = _digit_sums(dp[1][1][r], w, slots, center)
        out["E_mo"].append(below)
        out["O_mo"].append(above)
    return {name: tuple(vals) for name, vals in out.items()}


def count_parity_family(n: int, m: int, which: str) -> int:
    """Partitions of n, parts >= m, in one of the four count-parity classes.

    E_me: even #even and #odd, more even parts. O_me: same parities, more
    odd. E_mo / O_mo: both counts odd. Strict majorities throughout.
    """
    if which not in PARITY_CLASSES:
        raise ValueError(f"unknown class {which!r}")
    if m < 1:
        raise ValueError("minimum part must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = _round_limit(n)
    return _parity_table(m, limit)[which][n]


def parity_family_counts(m: int, max_n: int) -> dict[str, tuple[int, ...]]:
    """All four count-parity class rows for n in 0..max_n."""
    if m < 1:
        raise ValueError("minimum part must be at least 1")
    limit = _round_limit(max_n)
    table = _parity_table(m, limit)
    return {name: vals[: max_n + 1] for name, vals in table.items()}


# ---------------------------------------------------------------------------
# parts separated by parity
#
# Decompose by the exact smallest part s of the upper-parity block: partitions
# of w into parts of that parity all >= s with s present, times partitions of
# n - w into the other parity bounded above by s - 1. Triangular boundary
# tables make each count a short convolution.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _min_ge_table(parity: int, limit: int) -> dict[int, tuple[int, ...]]:
    """rows[t][w]: partitions of w into parts == parity (mod 2), all >= t."""
    start = 1 if parity == 1 else 2
    top = limit + 4 - ((limit + 4 - start) % 2)  # first row of this parity above limit+2
    unit = (1,) + (0,) * limit
    rows: dict[int, tuple[int, ...]] = {top: unit, top + 2: unit}
    for t in range(top - 2, start - 2, -2):
        higher = rows[t + 2]
        row = list(higher)
        for w in range(t, limit + 1):
            row[w] += row[w - t]
        rows[t] = tuple(row)
    return rows


@lru_cache(maxsize=None)
def _max_le_table(parity: int, min_part: int, limit: int) -> dict[int, tuple[int, ...]]:
    """rows[t][w]: partitions of w into parts == parity (mod 2), min_part <= part <= t."""
    start = min_part if min_part % 2 == parity % 2 else min_part + 1
    unit = (1,) + (0,) * limit
    rows: dict[int, tuple[int, ...]] = {start - 2: unit}
    prev = unit
    for t in range(start, limit + 2, 2):
        row = list(prev)
        for w in range(t, limit + 1):
            row[w] += row[w - t]
        prev = tuple(row)
        rows[t] = prev
    return rows


@lru_cache(maxsize=None)
def _separated_counts(mode: str, non_unitary: bool, limit: int) -> tuple[int, ...]:
    if mode == "even_below_odd":
        odd_ge = _min_ge_table(1, limit)
        even_ge = _min_ge_table(0, limit)
        even_le = _max_le_table(0, 2, limit)
        min_odd = 3 if non_unitary else 1
        counts = list(even_ge[2])  # all-even partitions, odd block empty
        for s in range(min_odd, limit + 1, 2):
            upper = odd_ge[s]
            deeper = odd_ge[s + 2]
            bounded = even_le[s - 1]
            for w in range(s, limit + 1):
                exact_min = upper[w] - deeper[w]
                if exact_min:
                    for n in range(w, limit + 1):
                        counts[n] += exact_min * bounded[n - w]
        return tuple(counts)
    if mode == "odd_below_even":
        even_ge = _min_ge_table(0, limit)
        odd_ge = _min_ge_table(1, limit)
        min_odd = 3 if non_unitary else 1
        odd_le = _max_le_table(1, min_odd, limit)
        all_odd = odd_ge[min_odd]
        counts = [0] + list(all_odd[1:])  # all-odd with at least one part
        for s in range(2, limit + 1, 2):
            upper = even_ge[s]
            deeper = even_ge[s + 2]
            bounded = odd_le[s - 1]
            for w in range(s, limit + 1):
                exact_min = upper[w] - deeper[w]
                if exact_min:
                    # n - w >= 1: at least one odd part below the even block
                    for n in range(w + 1, limit + 1):
                        counts[n] += exact_min * bounded[n - w]
        return tuple(counts)
    raise ValueError(f"mode {mode!r} has no separated-count interpretation")


def count_separated(n: int, mode: Mode, non_unitary: bool) -> int:
    """Partitions of n with one parity's parts all below the other's.

    even_below_odd includes all-even and all-odd partitions; odd_below_even
    includes all-odd but excludes every partition with no odd part (the empty
    partition included). non_unitary additionally bans part 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = _round_limit(n)
    return _separated_counts(mode, non_unitary, limit)[n]


def separated_counts(mode: Mode, non_unitary: bool, max_n: int) -> tuple[int, ...]:
    """count_separated for every n in 0..max_n from one shared table."""
    limit = _round_limit(max_n)
    return _separated_counts(mode, non_unitary, limit)[: max_n + 1]


# ---------------------------------------------------------------------------
# unrestricted partition numbers (pentagonal recurrence)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _partition_row(limit: int) -> tuple[int, ...]:
    p = [1] + [0] * limit
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = 1 if k % 2 == 1 else -1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return tuple(p)


def partition_count(n: int) -> int:
    """p(n), the number of unrestricted partitions of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = max(64, ((n + 63) // 64) * 64)
    return _partition_row(limit)[n]


def even_partition_count(n: int) -> int:
    """Partitions of n into even parts: p(n/2) for even n, else 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2 == 1:
        return 0
    return partition_count(n // 2)
