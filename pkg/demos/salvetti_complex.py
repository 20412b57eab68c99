"""
The weighted Salvetti complex of B_2
====================================

Cochains are free on subsets of the nodes.  The coboundary adds one node
and multiplies by a ratio of weighted Poincare polynomials.
"""

from artin_cohomology.salvetti import QMinusOne, build_complex, specialize_complex

cx = build_complex("B", 2)
print(cx.label, "ranks", cx.ranks)

# print each coboundary matrix; rows are indexed by the larger subsets
for k in range(2):
    print(f"delta^{k}: {cx.bases[k]} -> {cx.bases[k + 1]}")
    for row in cx.coboundary(k).rows:
        print("   ", [str(x) for x in row])

print("delta o delta = 0:", not cx.square_defects())

# at q = -1 only t survives as a variable
low = specialize_complex(cx, QMinusOne())
print("over", repr(low.ring))
print("   ", [str(x) for x in low.coboundary(1).rows[0]])
