"""Why the generating functions can be trusted: the identity catalog.

Each counting function in the catalog is produced by rewriting a basic
hypergeometric series. The rewriting steps are classical identities, and
every specialization used anywhere in the package is checked here,
coefficient by coefficient, as plain polynomial algebra.
"""

from paritybias import (
    add,
    compare_series,
    identity_sides,
    make,
    monomial_series,
    q_power,
    run_all_substitutions,
    substitution_checks,
)

ORDER = 60

results = run_all_substitutions(ORDER)
width = max(len(r.label) for r in results)
for r in results:
    mark = "ok" if r.passed else "MISMATCH at q^%d" % r.first_mismatch
    print(f"  {r.identity:28s} {r.label:{width}s}  {mark}")
print(f"{sum(r.passed for r in results)}/{len(results)} verified to order {ORDER}")
print()

# What a failure would look like. Take one catalog entry, corrupt the
# right-hand side by a single coefficient, and compare again.
chk = next(c for c in substitution_checks(ORDER) if c.identity == "gauss_triangular")
lhs, rhs = identity_sides(chk)
equal, verified_order, first_mismatch = compare_series(lhs, rhs)
print("untouched:", "equal" if equal else "different", "to order", verified_order)

corrupted = add(rhs, monomial_series(q_power(17), ORDER))
equal, _, first_mismatch = compare_series(lhs, corrupted)
print("after adding q^17 to one side: first mismatch at q^%d" % first_mismatch)

# compare_series never guesses: the verdict covers exactly min(order, order)
short = make([0, 1], 1)
long_ = make([0, 1, 5], 2)
equal, verified_order, _ = compare_series(short, long_)
print("short vs long series compared to order", verified_order, "->", equal)
