#########################################
# Recovering thresholds from raw counts #
#########################################

# Every inequality in the catalog claims a starting point. None of those
# numbers are taken on faith: find_threshold scans the actual values and
# reports the smallest index from which the claim never fails again.

from paritybias import build_series, find_threshold

MAX_N = 120


def hunt(lhs_family, rhs_family, relation, label):
    lhs = build_series(lhs_family, MAX_N).coeffs
    rhs = build_series(rhs_family, MAX_N).coeffs
    threshold, violations = find_threshold(lhs, rhs, relation, MAX_N)
    print(f"{label}: holds from n = {threshold}")
    if violations:
        print("  earlier failures at n = " + ", ".join(map(str, violations)))


hunt("pe", "po", "gt", "even-heavy beats odd-heavy (no unit parts)")
hunt("pou_eu", "peu_ou", "gt", "odd-below-even beats even-below-odd")
hunt("qou_eu", "qeu_ou", "lt", "same fight, all parts distinct")

#############################
# The weighted-gap question #
#############################

# Strict domination is cheap; the open question is how wide the gap gets.
# 2*pe - 3*po stays nonnegative at even indices as far as anyone has looked.

diff = build_series("diff_2pe_3po", MAX_N).coeffs
bad = [n for n in range(0, MAX_N + 1, 2) if diff[n] < 0]
print("negative even coefficients of 2*pe - 3*po:", bad if bad else "none")
