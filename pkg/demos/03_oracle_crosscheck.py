# Counting the same thing three ways.
#
# Series coefficients are fast but opaque. The enumeration oracle is slow
# but impossible to argue with: it writes down every partition and counts.
# The packed dynamic-programming tables sit in between. This script shows
# all three agreeing on a small window, which is the property the whole
# test suite is built on.

from paritybias import ConstraintSpec, build_series, enumerate_partitions
from paritybias import family_oracle_counts

N = 12

# every partition of 12 with parts >= 2 and more even parts than odd parts
cons = ConstraintSpec(min_part=2)
witnesses = [
    p for p in enumerate_partitions(N, cons)
    if sum(1 for x in p if x % 2 == 0) > sum(1 for x in p if x % 2 == 1)
]
print(f"even-heavy non-unitary partitions of {N}:")
for p in witnesses:
    print("  " + " + ".join(str(x) for x in p))
print(len(witnesses), "in total")
print()

series_value = build_series("pe", N).coeffs[N]
dp_value = family_oracle_counts("pe", N, tier="dp")[N]
enum_value = family_oracle_counts("pe", N, tier="enum")[N]
print("series:", series_value, " dp:", dp_value, " enum:", enum_value)
assert series_value == dp_value == enum_value == len(witnesses)

# The enumeration route refuses to run above its cap (default 40) rather
# than silently taking minutes. Raise PB_ENUM_CAP if you really want it.
try:
    family_oracle_counts("pe", 60, tier="enum")
except ValueError as exc:
    print()
    print("asking for n = 60 by enumeration:", exc)
