"""
Weighted Poincare polynomials of B_n
====================================

Each element of the signed permutation group gets the weight
q^(l - n) t^n, where n counts the generators of the second kind in a
reduced word.  Summing over the group gives a product of q,t-numbers.
"""

from artin_cohomology.coxeter import group_poincare_oracle, type_b
from artin_cohomology.poly import BiLaurent, qt_double_factorial

# walk the Cayley graph of B_3 (48 elements) and add up the weights
by_walk = group_poincare_oracle(type_b(3))
print("enumerated:", by_walk)

# the closed product
product = qt_double_factorial(3)
print("product:   ", product)
print("agree:", by_walk == product)

# setting t = q recovers the ordinary length generating function
print("at t = q:", product.subs({"t": BiLaurent.q()}))
