# An injection you can check by hand.
#
# Take the partitions of an even number 2n into even parts. The map below
# sends each of them to a partition of a strictly smaller even total, and
# never sends two inputs to the same output. Injectivity is what makes the
# prefix-sum inequality between the two interleaved sequences go through.

from paritybias import ConstraintSpec, enumerate_partitions, phi_map, verify_phi_injective

TWO_N = 14

even_parts = ConstraintSpec(min_part=2)
domain = [
    p for p in enumerate_partitions(TWO_N, even_parts)
    if all(x % 2 == 0 for x in p)
]

print(f"all-even partitions of {TWO_N} and their images:")
for p in domain:
    image = phi_map(p, TWO_N)
    src = " + ".join(str(x) for x in p)
    dst = " + ".join(str(x) for x in image) if image else "(empty)"
    print(f"  {src:24s} ->  {dst}")

# three rules, in the order they apply:
#   the single part (2n)      maps to the single part (2n - 4)
#   the all-twos partition    maps to the single part (2n - 6)
#   anything else             loses its largest part

report = verify_phi_injective(TWO_N)
print()
print("distinct images:", report.total_mapped, "of", len(domain))
print("collisions:", list(report.collisions) or "none")

# and the same holds across the whole tested window
bad = [k for k in range(14, 61, 2) if not verify_phi_injective(k).passed]
print("failures for 14 <= 2n <= 60:", bad if bad else "none")
