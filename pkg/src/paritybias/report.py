"""One deterministic machine-readable report over every cataloged check.

Record order is fixed by the catalog, values are exact, and big counts are
serialized as decimal strings so no consumer ever rounds them. Two runs with
the same configuration differ only in elapsed_ms fields.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Callable

from . import families, oracle
from .identities import CheckResult, substitution_checks, check_identity
from .inequalities import InequalityReport, verify_theorem, verify_b_inequalities, verify_phi_injective

__all__ = ["RunReport", "THEOREM_PLAN", "run_all_checks"]

# every theorem instance the full report verifies, in order
THEOREM_PLAN: tuple[tuple[str, int | None], ...] = (
    ("thm_reverse_1", None),
    ("thm_reverse_2", None),
    ("thm_reverse_3", None),
    ("thm_mm", None),
    *(("thm_kim_new", m) for m in range(2, 7)),
    *(("thm_minpart_even", m) for m in range(1, 6)),
    *(("thm_minpart_odd", m) for m in range(1, 6)),
    ("thm_peu", None),
    ("thm_qeu", None),
    ("conj_3_2", None),
    *(("kimkim_original", m) for m in range(2, 6)),
)


@dataclass
class RunReport:
    name: str
    version: str
    config: dict
    records: list[dict]

    @property
    def holds_all(self) -> bool:
        return all(r.get("holds", True) for r in self.records)

    def to_json(self) -> str:
        payload = {
            "name": self.name,
            "version": self.version,
            "config": self.config,
            "holds_all": self.holds_all,
            "records": self.records,
        }
        return json.dumps(payload, indent=2) + "\n"


def theorem_record(theorem_id: str, m: int | None, rep: InequalityReport, elapsed_ms: int) -> dict:
    return {
        "kind": "theorem",
        "id": theorem_id,
        "params": {} if m is None else {"m": m},
        "lhs": rep.lhs_id,
        "rhs": rep.rhs_id,
        "relation": rep.relation,
        "range": [rep.lo, rep.hi],
        "holds": rep.holds,
        "vacuous": rep.vacuous,
        "violations": [[n, str(left), str(right)] for n, left, right in rep.violations],
        "threshold": rep.threshold,
        "tiers": {"lhs": list(rep.sources[0]), "rhs": list(rep.sources[1])},
        "confirmed": rep.confirmed,
        "elapsed_ms": elapsed_ms,
    }


def identity_record(result: CheckResult, elapsed_ms: int) -> dict:
    return {
        "kind": "identity",
        "id": f"identity:{result.identity}",
        "params": {"label": result.label},
        "range": [0, result.verified_order],
        "holds": result.passed,
        "vacuous": False,
        "first_mismatch": result.first_mismatch,
        "elapsed_ms": elapsed_ms,
    }


def _inequality_record(check_id: str, rep: InequalityReport, elapsed_ms: int) -> dict:
    rec = theorem_record(check_id, None, rep, elapsed_ms)
    rec["kind"] = "inequality"
    return rec


def _timed(fn: Callable):
    t0 = time.perf_counter()
    out = fn()
    return out, int((time.perf_counter() - t0) * 1000)


def _phi_sweep_record() -> dict:
    t0 = time.perf_counter()
    hi = min(60, 2 * oracle.enumeration_cap())
    failures: list[list] = []
    for two_n in range(14, hi + 1, 2):
        rep = verify_phi_injective(two_n)
        if not rep.passed:
            failures.append(
                [two_n, len(rep.collisions), len(rep.escapees)]
            )
    return {
        "kind": "injection",
        "id": "phi_injective_sweep",
        "params": {"two_n_lo": 14, "two_n_hi": hi},
        "range": [14, hi],
        "holds": not failures,
        "vacuous": hi < 14,
        "violations": failures,
        "elapsed_ms": int((time.perf_counter() - t0) * 1000),
    }


def _sequence_fact_records(order: int) -> list[dict]:
    records = []

    t0 = time.perf_counter()
    a = families.build_series("a_seq", order).coeffs
    pair_top = (order - 1) // 2
    pair_viols = [
        [2 * n, str(a[2 * n]), str(a[2 * n + 1])]
        for n in range(pair_top + 1)
        if a[2 * n] != a[2 * n + 1]
    ]
    records.append(
        {
            "kind": "sequence_fact",
            "id": "a_even_equals_next_odd",
            "params": {},
            "range": [0, pair_top],
            "holds": not pair_viols,
            "vacuous": False,
            "violations": pair_viols,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        }
    )

    t0 = time.perf_counter()
    b = families.build_series("b_seq", order).coeffs
    running = 0
    prefix_viols = []
    for n in range(order // 2 + 1):
        running += b[2 * n]
        if a[2 * n] != running:
            prefix_viols.append([2 * n, str(a[2 * n]), str(running)])
    records.append(
        {
            "kind": "sequence_fact",
            "id": "a_even_is_b_prefix_sum",
            "params": {},
            "range": [0, order // 2],
            "holds": not prefix_viols,
            "vacuous": False,
            "violations": prefix_viols,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        }
    )

    t0 = time.perf_counter()
    diff = families.build_series("diff_2pe_3po", order).coeffs
    sign_viols = [
        [e, str(diff[e]), "0"] for e in range(0, order + 1, 2) if diff[e] < 0
    ]
    records.append(
        {
            "kind": "coefficient_sign",
            "id": "diff_2pe_3po_even_nonnegative",
            "params": {},
            "range": [0, order],
            "holds": not sign_viols,
            "vacuous": False,
            "violations": sign_viols,
            "elapsed_ms": int((time.perf_counter() - t0) * 1000),
        }
    )
    return records


def run_all_checks(max_n: int = 200, order: int = 200) -> RunReport:
    """Verify everything: theorems, identities, bounds, injection, facts."""
    import paritybias as _pkg

    records: list[dict] = []
    for theorem_id, m in THEOREM_PLAN:
        rep, ms = _timed(lambda tid=theorem_id, mm=m: verify_theorem(tid, max_n, m=mm))
        records.append(theorem_record(theorem_id, m, rep, ms))

    for chk in substitution_checks(order):
        res, ms = _timed(lambda c=chk: check_identity(c))
        records.append(identity_record(res, ms))

    (prefix_rep, window_rep), ms = _timed(lambda: verify_b_inequalities(max_n))
    records.append(_inequality_record("b_prefix_sum_bound", prefix_rep, ms))
    records.append(_inequality_record("b_window_bound", window_rep, ms))

    records.append(_phi_sweep_record())
    records.extend(_sequence_fact_records(order))

    config = {
        "max_n": max_n,
        "order": order,
        "enum_cap": oracle.enumeration_cap(),
        "dp_cap": oracle.dp_cap(),
    }
    return RunReport(
        name="paritybias", version=_pkg.__version__, config=config, records=records
    )
