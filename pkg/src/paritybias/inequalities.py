"""Coefficient-wise inequality verdicts for the cataloged theorems.

Each theorem names two counting sequences and a strict order between them
from some starting point on. Every sequence is produced by as many
independent tiers as exist for it (series construction, packed DP oracle,
direct enumeration); tiers must agree wherever they overlap, and any
disagreement is a hard TierDisagreement error, never a silent preference.

Comparison semantics differ by entry point. compare() is raw: every n in
range is judged, so a tie of zeros violates a strict claim. Theorem
verdicts and find_threshold() skip points where both sides vanish, because
the claims quantify over partitions that exist; an impossible weight for
both classes says nothing about bias.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable, Literal, Mapping, Sequence

from . import families
from . import oracle
from .oracle import BiasSpec, ConstraintSpec, Partition

__all__ = [
    "Relation",
    "InequalityReport",
    "TheoremSpec",
    "THEOREM_IDS",
    "TierDisagreement",
    "ORACLE_BACKED",
    "compare",
    "family_oracle_counts",
    "find_threshold",
    "verify_theorem",
    "phi_map",
    "InjectionReport",
    "verify_phi_injective",
    "verify_b_inequalities",
]

Relation = Literal["lt", "gt", "le", "ge"]

_REL_FUNC: dict[str, Callable[[int, int], bool]] = {
    "lt": operator.lt,
    "gt": operator.gt,
    "le": operator.le,
    "ge": operator.ge,
}

THEOREM_IDS = (
    "thm_reverse_1",
    "thm_reverse_2",
    "thm_reverse_3",
    "thm_mm",
    "thm_kim_new",
    "thm_minpart_even",
    "thm_minpart_odd",
    "thm_peu",
    "thm_qeu",
    "conj_3_2",
    "kimkim_original",
)

# theorems taking a parameter m, with the smallest admissible value
_NEEDS_M = {
    "thm_kim_new": 2,
    "thm_minpart_even": 1,
    "thm_minpart_odd": 1,
    "kimkim_original": 2,
}


class TierDisagreement(Exception):
    """Two evaluation tiers produced different values for the same n."""


@dataclass(frozen=True)
class InequalityReport:
    lhs_id: str
    rhs_id: str
    relation: str
    lo: int
    hi: int
    holds: bool
    violations: tuple[tuple[int, int, int], ...]  # (n, lhs value, rhs value)
    threshold: int | None
    sources: tuple[tuple[str, ...], tuple[str, ...]]  # tiers behind (lhs, rhs)
    confirmed: bool = True  # both sides cross-checked by at least two tiers
    vacuous: bool = False  # the requested range was empty


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    m: int | None = None

    def __post_init__(self) -> None:
        if self.id not in THEOREM_IDS:
            raise ValueError(f"unknown theorem {self.id!r}")
        if self.id in _NEEDS_M:
            low = _NEEDS_M[self.id]
            if self.m is None:
                raise ValueError(f"theorem {self.id!r} requires the parameter m")
            if self.m < low:
                raise ValueError(f"theorem {self.id!r} requires m >= {low}")
        elif self.m is not None:
            raise ValueError(f"theorem {self.id!r} takes no parameter")

    @property
    def claimed_range_lo(self) -> int:
        return _claimed_lo(self)


def _claimed_lo(spec: TheoremSpec) -> int:
    m = spec.m
    return {
        "thm_reverse_1": lambda: 8,
        "thm_reverse_2": lambda: 1,
        "thm_reverse_3": lambda: 9,
        "thm_mm": lambda: 8,
        "thm_kim_new": lambda: 4 * m + 3,
        "thm_minpart_even": lambda: 2 * m,
        "thm_minpart_odd": lambda: m,
        "thm_peu": lambda: 7,
        "thm_qeu": lambda: 4,
        "conj_3_2": lambda: 10,
        "kimkim_original": lambda: m * m - m + 1,
    }[spec.id]()


def _check_range(length: int, lo: int, hi: int, what: str) -> None:
    if lo < 0:
        raise ValueError(f"{what}: range start {lo} is negative")
    if hi >= length:
        raise ValueError(f"{what}: range end {hi} exceeds coverage {length - 1}")


def _threshold_from(violations: Sequence[tuple[int, int, int]], lo: int, hi: int) -> int | None:
    if lo > hi:
        return None
    if not violations:
        return lo
    last = max(v[0] for v in violations)
    if last >= hi:
        return None
    return max(lo, last + 1)


def compare(
    lhs: Sequence[int],
    rhs: Sequence[int],
    relation: Relation,
    lo: int,
    hi: int,
    *,
    lhs_id: str = "lhs",
    rhs_id: str = "rhs",
    sources: tuple[tuple[str, ...], tuple[str, ...]] = (("given",), ("given",)),
    confirmed: bool = True,
) -> InequalityReport:
    """Raw strict comparison over [lo, hi]; no point is exempt."""
    if relation not in _REL_FUNC:
        raise ValueError(f"unknown relation {relation!r}")
    if lo > hi:
        return InequalityReport(
            lhs_id, rhs_id, relation, lo, hi, True, (), None, sources, confirmed, True
        )
    _check_range(min(len(lhs), len(rhs)), lo, hi, f"compare {lhs_id} {relation} {rhs_id}")
    rel = _REL_FUNC[relation]
    violations = tuple(
        (n, lhs[n], rhs[n]) for n in range(lo, hi + 1) if not rel(lhs[n], rhs[n])
    )
    return InequalityReport(
        lhs_id,
        rhs_id,
        relation,
        lo,
        hi,
        not violations,
        violations,
        _threshold_from(violations, lo, hi),
        sources,
        confirmed,
        False,
    )


def find_threshold(
    lhs: Sequence[int], rhs: Sequence[int], relation: Relation, max_n: int
) -> tuple[int, tuple[int, ...]]:
    """Empirical starting point of a strict claim, scanning n in [0, max_n].

    Points with both sides zero are skipped: no partition of either class
    exists there, so the claim is vacuously unharmed. Returns the smallest
    threshold t with the relation holding on [t, max_n] (0 if it never
    fails, max_n + 1 if it fails at max_n itself) plus the violating n.
    """
    if relation not in _REL_FUNC:
        raise ValueError(f"unknown relation {relation!r}")
    _check_range(min(len(lhs), len(rhs)), 0, max_n, "find_threshold")
    rel = _REL_FUNC[relation]
    violations = tuple(
        n
        for n in range(max_n + 1)
        if (lhs[n] != 0 or rhs[n] != 0) and not rel(lhs[n], rhs[n])
    )
    threshold = violations[-1] + 1 if violations else 0
    return threshold, violations


# ---------------------------------------------------------------------------
# tier evaluation
# ---------------------------------------------------------------------------

_TIER_ORDER = ("series", "series2", "dp", "enum")

TierMap = Mapping[str, Sequence[int]]


def _merge_tiers(side_id: str, tiers: TierMap, hi: int) -> tuple[list[int], tuple[str, ...], bool]:
    """Cross-check overlapping tiers, return one agreed sequence over [0, hi].

    Confirmed means at least two tiers overlapped somewhere, so no value
    rests on a single code path alone.
    """
    names = [t for t in _TIER_ORDER if t in tiers]
    if not names:
        raise ValueError(f"{side_id}: no evaluation tier produced values")
    overlap_seen = False
    for i, a_name in enumerate(names):
        for b_name in names[i + 1 :]:
            a, b = tiers[a_name], tiers[b_name]
            top = min(len(a), len(b)) - 1
            if top >= 0:
                overlap_seen = True
            for n in range(top + 1):
                if a[n] != b[n]:
                    raise TierDisagreement(
                        f"{side_id}: {a_name} gives {a[n]} but {b_name} gives {b[n]} at n={n}"
                    )
    best = max(names, key=lambda t: len(tiers[t]))
    seq = list(tiers[best])
    if len(seq) <= hi:
        raise ValueError(f"{side_id}: no tier covers n={hi}")
    return seq[: hi + 1], tuple(names), overlap_seen and len(names) >= 2


def _enum_top(hi: int) -> int:
    return min(hi, oracle.enumeration_cap())


def _enum_bias_pair(cons: ConstraintSpec, bias: BiasSpec, hi: int) -> tuple[list[int], list[int]]:
    """(more-j counts, more-k counts) by direct enumeration, n <= cap."""
    lhs: list[int] = []
    rhs: list[int] = []
    for n in range(_enum_top(hi) + 1):
        left = right = 0
        for parts in oracle.enumerate_partitions(n, cons):
            counts = oracle.residue_counts(parts, bias.m)
            if counts[bias.j] > counts[bias.k]:
                left += 1
            elif counts[bias.k] > counts[bias.j]:
                right += 1
        lhs.append(left)
        rhs.append(right)
    return lhs, rhs


def _enum_parity_pair(m: int, parity: tuple[int, int], hi: int) -> tuple[list[int], list[int]]:
    """(more-odd counts, more-even counts) among fixed count-parity classes."""
    cons = ConstraintSpec(min_part=m, count_parity=parity)
    more_odd: list[int] = []
    more_even: list[int] = []
    for n in range(_enum_top(hi) + 1):
        o = e = 0
        for parts in oracle.enumerate_partitions(n, cons):
            evens = sum(1 for p in parts if p % 2 == 0)
            odds = len(parts) - evens
            if odds > evens:
                o += 1
            elif evens > odds:
                e += 1
        more_odd.append(o)
        more_even.append(e)
    return more_odd, more_even


def _enum_separated(mode: str, non_unitary: bool, hi: int) -> list[int]:
    cons = ConstraintSpec(
        min_part=2 if non_unitary else 1,
        mode=mode,  # type: ignore[arg-type]
        all_even_excluded=(mode == "odd_below_even"),
    )
    return [len(oracle.enumerate_partitions(n, cons)) for n in range(_enum_top(hi) + 1)]


def _series(family: str, order: int, m: int | None = None) -> tuple[int, ...]:
    return families.build_series(family, order, m).coeffs


# families whose values can also be produced by counting, not just by series
ORACLE_BACKED: tuple[str, ...] = (
    "po",
    "pe",
    "p10m",
    "p01m",
    "eme",
    "ome",
    "emo",
    "omo",
    "peu_ou",
    "pou_eu",
    "qeu_ou",
    "qou_eu",
    "a_seq",
    "b_seq",
)

_SEPARATED_ROUTE = {
    "peu_ou": ("even_below_odd", False),
    "pou_eu": ("odd_below_even", False),
    "qeu_ou": ("even_below_odd", True),
    "qou_eu": ("odd_below_even", True),
    "a_seq": ("even_below_odd", False),
}


def family_oracle_counts(
    family: str, max_n: int, *, m: int | None = None, tier: str = "dp"
) -> list[int]:
    """Counting-side values for an oracle-backed family, n = 0..max_n.

    tier picks the route: "dp" (packed table) or "enum" (direct listing,
    capped). Families that exist only as series rewrites have no counting
    route and raise ValueError.
    """
    if family not in ORACLE_BACKED:
        raise ValueError(
            f"family {family!r} has no counting route; expand its series instead"
        )
    if tier not in ("dp", "enum"):
        raise ValueError(f"tier must be 'dp' or 'enum', got {tier!r}")
    families.validate_params(family, m)
    use_enum = tier == "enum"
    if use_enum and max_n > oracle.enumeration_cap():
        raise ValueError(
            f"max_n={max_n} exceeds the enumeration cap {oracle.enumeration_cap()}; "
            "raise PB_ENUM_CAP or use the dp tier"
        )

    if family in ("po", "pe", "p10m", "p01m"):
        cons = ConstraintSpec(min_part=2)
        modulus = 2 if family in ("po", "pe") else m
        assert modulus is not None
        j, k = (1, 0) if family in ("po", "p10m") else (0, 1)
        bias = BiasSpec(j, k, modulus)
        if use_enum:
            return _enum_bias_pair(cons, bias, max_n)[0]
        return list(oracle.bias_counts_dp(cons, bias, max_n))

    if family in ("eme", "ome", "emo", "omo"):
        assert m is not None
        parity = (0, 0) if family in ("eme", "ome") else (1, 1)
        if use_enum:
            more_odd, more_even = _enum_parity_pair(m, parity, max_n)
            return more_odd if family in ("ome", "omo") else more_even
        cls = {"eme": "E_me", "ome": "O_me", "emo": "E_mo", "omo": "O_mo"}[family]
        return list(oracle.parity_family_counts(m, max_n)[cls])

    if family == "b_seq":
        if use_enum:
            return [
                sum(
                    1
                    for parts in oracle.enumerate_partitions(n, ConstraintSpec())
                    if all(p % 2 == 0 for p in parts)
                )
                for n in range(_enum_top(max_n) + 1)
            ]
        return [oracle.even_partition_count(n) for n in range(max_n + 1)]

    mode, non_unitary = _SEPARATED_ROUTE[family]
    if use_enum:
        return _enum_separated(mode, non_unitary, max_n)
    return list(oracle.separated_counts(mode, non_unitary, max_n))


# each evaluator returns (lhs_id, rhs_id, relation, lhs tiers, rhs tiers)
SideEval = tuple[str, str, str, dict[str, Sequence[int]], dict[str, Sequence[int]]]


def _eval_forbidden_biased(
    cons: ConstraintSpec, relation: str, tag: str, with_series: bool, hi: int
) -> SideEval:
    # lhs counts the more-odd class, rhs the more-even class
    bias = BiasSpec(1, 0, 2)
    dp_l, dp_r, _ = oracle.bias_breakdown_dp(cons, bias, hi)
    en_l, en_r = _enum_bias_pair(cons, bias, hi)
    lhs: dict[str, Sequence[int]] = {"dp": dp_l, "enum": en_l}
    rhs: dict[str, Sequence[int]] = {"dp": dp_r, "enum": en_r}
    if with_series:
        lhs["series"] = _series("po", hi)
        lhs["series2"] = _series("po_transformed", hi)
        rhs["series"] = _series("pe", hi)
        rhs["series2"] = _series("pe_transformed", hi)
    return f"po{tag}", f"pe{tag}", relation, lhs, rhs


def _eval_reverse_1(m: int | None, hi: int) -> SideEval:
    cons = ConstraintSpec(forbidden_parts=frozenset({1}))
    return _eval_forbidden_biased(cons, "lt", "_forbid_1", True, hi)


def _eval_reverse_2(m: int | None, hi: int) -> SideEval:
    cons = ConstraintSpec(forbidden_parts=frozenset({2}))
    return _eval_forbidden_biased(cons, "gt", "_forbid_2", False, hi)


def _eval_reverse_3(m: int | None, hi: int) -> SideEval:
    cons = ConstraintSpec(forbidden_parts=frozenset({1, 2}))
    return _eval_forbidden_biased(cons, "gt", "_forbid_12", False, hi)


def _eval_mm(m: int | None, hi: int) -> SideEval:
    # same partitions as thm_reverse_1, reached through min_part instead of
    # a forbidden set, so the oracle configuration is independently exercised
    cons = ConstraintSpec(min_part=2)
    lhs_id, rhs_id, relation, lhs, rhs = _eval_forbidden_biased(cons, "lt", "", True, hi)
    return lhs_id, rhs_id, relation, lhs, rhs


def _eval_kim_new(m: int | None, hi: int) -> SideEval:
    assert m is not None
    cons = ConstraintSpec(min_part=2)
    bias = BiasSpec(0, 1, m)
    dp_l, dp_r, _ = oracle.bias_breakdown_dp(cons, bias, hi)
    en_l, en_r = _enum_bias_pair(cons, bias, hi)
    lhs = {
        "series": _series("p01m", hi, m),
        "series2": _series("p01m_transformed", hi, m),
        "dp": dp_l,
        "enum": en_l,
    }
    rhs = {
        "series": _series("p10m", hi, m),
        "series2": _series("p10m_transformed", hi, m),
        "dp": dp_r,
        "enum": en_r,
    }
    return "p01m", "p10m", "gt", lhs, rhs


def _eval_minpart(parity: tuple[int, int], m: int, hi: int) -> SideEval:
    table = oracle.parity_family_counts(m, hi)
    odd_cls, even_cls = ("O_me", "E_me") if parity == (0, 0) else ("O_mo", "E_mo")
    odd_fam, even_fam = ("ome", "eme") if parity == (0, 0) else ("omo", "emo")
    en_o, en_e = _enum_parity_pair(m, parity, hi)
    lhs = {"series": _series(odd_fam, hi, m), "dp": table[odd_cls], "enum": en_o}
    rhs = {"series": _series(even_fam, hi, m), "dp": table[even_cls], "enum": en_e}
    relation = "gt" if m % 2 == 1 else "lt"
    return odd_fam, even_fam, relation, lhs, rhs


def _eval_minpart_even(m: int | None, hi: int) -> SideEval:
    assert m is not None
    return _eval_minpart((0, 0), m, hi)


def _eval_minpart_odd(m: int | None, hi: int) -> SideEval:
    assert m is not None
    return _eval_minpart((1, 1), m, hi)


def _eval_peu(m: int | None, hi: int) -> SideEval:
    lhs = {
        "series": _series("pou_eu", hi),
        "dp": oracle.separated_counts("odd_below_even", False, hi),
        "enum": _enum_separated("odd_below_even", False, hi),
    }
    rhs = {
        "series": _series("peu_ou", hi),
        "dp": oracle.separated_counts("even_below_odd", False, hi),
        "enum": _enum_separated("even_below_odd", False, hi),
    }
    return "pou_eu", "peu_ou", "gt", lhs, rhs


def _eval_qeu(m: int | None, hi: int) -> SideEval:
    lhs = {
        "series": _series("qou_eu", hi),
        "series2": _series("qou_eu_sumform", hi),
        "dp": oracle.separated_counts("odd_below_even", True, hi),
        "enum": _enum_separated("odd_below_even", True, hi),
    }
    rhs = {
        "series": _series("qeu_ou", hi),
        "dp": oracle.separated_counts("even_below_odd", True, hi),
        "enum": _enum_separated("even_below_odd", True, hi),
    }
    return "qou_eu", "qeu_ou", "lt", lhs, rhs


def _eval_conj(m: int | None, hi: int) -> SideEval:
    _, _, _, lhs, rhs = _eval_mm(None, hi)
    lhs3 = {tier: [3 * v for v in seq] for tier, seq in lhs.items()}
    rhs2 = {tier: [2 * v for v in seq] for tier, seq in rhs.items()}
    return "3*po", "2*pe", "lt", lhs3, rhs2


def _eval_kimkim(m: int | None, hi: int) -> SideEval:
    assert m is not None
    cons = ConstraintSpec()
    bias = BiasSpec(1, 0, m)
    dp_l, dp_r, _ = oracle.bias_breakdown_dp(cons, bias, hi)
    en_l, en_r = _enum_bias_pair(cons, bias, hi)
    lhs = {"dp": dp_l, "enum": en_l}
    rhs = {"dp": dp_r, "enum": en_r}
    return "p10m_ordinary", "p01m_ordinary", "gt", lhs, rhs


_EVALUATORS: dict[str, Callable[[int | None, int], SideEval]] = {
    "thm_reverse_1": _eval_reverse_1,
    "thm_reverse_2": _eval_reverse_2,
    "thm_reverse_3": _eval_reverse_3,
    "thm_mm": _eval_mm,
    "thm_kim_new": _eval_kim_new,
    "thm_minpart_even": _eval_minpart_even,
    "thm_minpart_odd": _eval_minpart_odd,
    "thm_peu": _eval_peu,
    "thm_qeu": _eval_qeu,
    "conj_3_2": _eval_conj,
    "kimkim_original": _eval_kimkim,
}


def _claim_violations(
    lhs: Sequence[int], rhs: Sequence[int], relation: str, lo: int, hi: int
) -> list[tuple[int, int, int]]:
    rel = _REL_FUNC[relation]
    out = []
    for n in range(lo, hi + 1):
        left, right = lhs[n], rhs[n]
        if left == 0 and right == 0:
            continue
        if not rel(left, right):
            out.append((n, left, right))
    return out


def verify_theorem(
    t: TheoremSpec | str,
    max_n: int,
    *,
    m: int | None = None,
    lo: int | None = None,
) -> InequalityReport:
    """Multi-tier verdict for one theorem over [claimed lo, max_n].

    Passing lo overrides the claimed starting point (the CLI uses this to
    scan below the claim). Tier disagreement raises TierDisagreement; a
    verdict is only marked confirmed when both sides were cross-checked.
    """
    spec = t if isinstance(t, TheoremSpec) else TheoremSpec(t, m)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    lhs_id, rhs_id, relation, lhs_tiers, rhs_tiers = _EVALUATORS[spec.id](spec.m, max_n)
    lhs_seq, lhs_names, lhs_conf = _merge_tiers(lhs_id, lhs_tiers, max_n)
    rhs_seq, rhs_names, rhs_conf = _merge_tiers(rhs_id, rhs_tiers, max_n)

    lo_eff = spec.claimed_range_lo if lo is None else lo
    vacuous = lo_eff > max_n
    violations = (
        [] if vacuous else _claim_violations(lhs_seq, rhs_seq, relation, max(lo_eff, 0), max_n)
    )
    if spec.id == "thm_kim_new" and 4 * spec.m <= max_n:
        # the difference is also claimed positive at the isolated point 4m
        n0 = 4 * spec.m
        if not lhs_seq[n0] > rhs_seq[n0]:
            extra = (n0, lhs_seq[n0], rhs_seq[n0])
            if extra not in violations:
                violations = sorted(violations + [extra])

    return InequalityReport(
        lhs_id,
        rhs_id,
        relation,
        lo_eff,
        max_n,
        not violations,
        tuple(violations),
        None if vacuous else _threshold_from(violations, max(lo_eff, 0), max_n),
        (lhs_names, rhs_names),
        lhs_conf and rhs_conf,
        vacuous,
    )


# ---------------------------------------------------------------------------
# the removal injection on even-part partitions
# ---------------------------------------------------------------------------


def phi_map(p: Partition, two_n: int) -> Partition:
    """Map an even-part partition of two_n to one of a strictly smaller total.

    The single-part partition maps to (two_n - 4), the all-twos partition to
    (two_n - 6), anything else loses its largest part. Totals that would make
    the image empty are domain errors.
    """
    if two_n <= 0 or two_n % 2:
        raise ValueError("total must be a positive even number")
    parts = tuple(sorted(p, reverse=True))
    if not parts:
        raise ValueError("the empty partition is outside the map's domain")
    if any(x <= 0 or x % 2 for x in parts):
        raise ValueError("every part must be a positive even number")
    if sum(parts) != two_n:
        raise ValueError("parts must sum to the stated total")
    if all(x == 2 for x in parts):
        if two_n - 6 <= 0:
            raise ValueError("all-twos partition of this total has no image")
        image: Partition = (two_n - 6,)
    elif len(parts) == 1:
        if two_n - 4 <= 0:
            raise ValueError("single-part partition of this total has no image")
        image = (two_n - 4,)
    else:
        image = parts[1:]
        assert sum(image) == two_n - parts[0]
    assert image and sum(image) <= two_n - 4
    return image


@dataclass(frozen=True)
class InjectionReport:
    two_n: int
    passed: bool
    total_mapped: int
    collisions: tuple[tuple[Partition, Partition, Partition], ...]  # image, first, second
    escapees: tuple[tuple[Partition, Partition], ...]  # source, out-of-range image


def verify_phi_injective(two_n: int) -> InjectionReport:
    """Apply the map to every even-part partition of two_n and audit it.

    Checks that images are pairwise distinct and that each lands among the
    even-part partitions of some total in [2, two_n - 4]. Domain errors from
    the map itself propagate.
    """
    if two_n <= 0 or two_n % 2:
        raise ValueError("total must be a positive even number")
    if two_n > 2 * oracle.enumeration_cap():
        raise ValueError(
            f"two_n={two_n} exceeds twice the enumeration cap; raise PB_ENUM_CAP"
        )
    # halving parts is a bijection onto unrestricted partitions of two_n / 2
    images: dict[Partition, Partition] = {}
    collisions: list[tuple[Partition, Partition, Partition]] = []
    escapees: list[tuple[Partition, Partition]] = []
    total = 0
    for halves in oracle.enumerate_partitions(two_n // 2, ConstraintSpec()):
        source = tuple(2 * x for x in halves)
        image = phi_map(source, two_n)
        total += 1
        if not image or sum(image) > two_n - 4 or any(x % 2 for x in image):
            escapees.append((source, image))
        if image in images:
            collisions.append((image, images[image], source))
        else:
            images[image] = source
    passed = not collisions and not escapees
    return InjectionReport(two_n, passed, total, tuple(collisions), tuple(escapees))


# ---------------------------------------------------------------------------
# the even-part prefix inequalities behind the n >= 14 positivity argument
# ---------------------------------------------------------------------------


def verify_b_inequalities(max_n: int) -> tuple[InequalityReport, InequalityReport]:
    """Two strict lower bounds on even-part partition counts, n in [7, max_n].

    First: the full prefix sum of b_0, b_2, ..., b_(2n-4) beats b_(2n).
    Second: the four terms b_(2n-4) + b_(2n-6) + b_(2n-8) + b_(2n-10) beat
    b_(2n) on their own. Series values are cross-checked against the
    pentagonal-recurrence oracle before use.
    """
    if max_n < 7:
        raise ValueError("max_n must be at least 7")
    b = families.build_series("b_seq", 2 * max_n).coeffs
    for k in range(max_n + 1):
        expected = oracle.partition_count(k)
        if b[2 * k] != expected:
            raise TierDisagreement(
                f"b_seq: series gives {b[2 * k]} but pentagonal gives {expected} at n={2 * k}"
            )
        if k and b[2 * k - 1] != 0:
            raise TierDisagreement(f"b_seq: odd coefficient at n={2 * k - 1} is nonzero")

    b2n = [b[2 * n] for n in range(max_n + 1)]
    prefix = [sum(b2n[: max(n - 1, 0)]) for n in range(max_n + 1)]
    window = [
        sum(b2n[n - k] for k in (2, 3, 4, 5) if n - k >= 0) for n in range(max_n + 1)
    ]
    sources = (("series", "pentagonal"), ("series", "pentagonal"))
    report_prefix = compare(
        prefix,
        b2n,
        "gt",
        7,
        max_n,
        lhs_id="sum_b2i_to_n_minus_2",
        rhs_id="b_2n",
        sources=sources,
    )
    report_window = compare(
        window,
        b2n,
        "gt",
        7,
        max_n,
        lhs_id="b2n_minus_4_to_10_window",
        rhs_id="b_2n",
        sources=sources,
    )
    return report_prefix, report_window
