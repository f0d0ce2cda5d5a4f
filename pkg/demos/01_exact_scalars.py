"""The exact coefficient domain: cyclotomic numbers, transcendentals,
quantum binomials, and multiplicative-group analysis.

Everything downstream (rewriting, coproducts, bounds) runs over the field
Q(zeta_N)(q_1, ..., q_k).  This script walks through its arithmetic.
"""

from hopfgrow import (INFINITE, ScalarDomain, multiplicative_order,
                      quantum_binomial, subgroup_rank)

dom = ScalarDomain(6, ("q1", "q2"))
zeta = dom.zeta()
q1, q2 = dom.q(0), dom.q(1)

print("working in Q(zeta_6)(q1, q2)")
print("zeta^6 =", zeta ** 6)
print("1/(1 - zeta) =", dom.one() / (dom.one() - zeta))
print("(1 - q1^2)/(1 - q1) == 1 + q1:",
      (dom.one() - q1 ** 2) / (dom.one() - q1) == dom.one() + q1)
print()

# Gaussian binomials from the q-Pascal recurrence.  At lam = 1 they are the
# ordinary binomials; at a primitive n-th root of unity all the middle
# entries of row n vanish -- the engine behind truncation relations.
print("row 4 of the q-Pascal triangle at lam = q1:")
print("  ", [quantum_binomial(4, s, q1) for s in range(5)])
print("row 3 at a primitive cube root of unity:")
z3 = ScalarDomain(3).zeta()
print("  ", [quantum_binomial(3, s, z3) for s in range(4)])
print()

# Multiplicative orders are decided exactly, but only for unit monomials
# (root of unity times a monomial in the q's); anything else is refused
# rather than guessed.
print("order of zeta      :", multiplicative_order(zeta))
print("order of -1        :", multiplicative_order(dom.rational(-1)))
print("order of q1        :", multiplicative_order(q1),
      "(infinite)" if multiplicative_order(q1) is INFINITE else "")
print("order of 1 + q1    :", multiplicative_order(dom.one() + q1),
      "(not a unit monomial)")
print()

# The torsion-free rank of a multiplicative subgroup is the lattice rank
# of the exponent vectors; roots of unity only contribute torsion.
print("rank <q1, q1^2>        =", subgroup_rank([q1, q1 ** 2]))
print("rank <q1, q2, q1*q2>   =", subgroup_rank([q1, q2, q1 * q2]))
print("rank <zeta>            =", subgroup_rank([zeta]))
