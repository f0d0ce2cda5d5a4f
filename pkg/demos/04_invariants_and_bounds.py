"""Weight/commutator invariants and the three GK-dimension lower bounds.

For each weight g, the primitives are decomposed under inverse
conjugation z -> g^{-1} z g into eigencomponents: the eigenvalue is the
commutator, its nilpotency index the level, and its multiplicative order
splits everything into a torsion part and a free part.  The bounds are:

    independent-family        coradical rank + size of a skew-commuting family
    weight-count              coradical rank + #(weights without primitive powers)
    weight-commutator-count   coradical rank + #(free weight-commutator pairs)
    primitive-quotient        coradical rank + dim(primitives / coradical + torsion part)
"""

from hopfgrow import (all_bounds, compute_invariants, exterior_presentation,
                      qplane_presentation, skew_trunc_presentation,
                      taft_presentation)
from hopfgrow.serialize import element_to_str, scalar_to_expr


def show(p, degree=4, gwb=3, power=4):
    report = compute_invariants(p, degree_bound=degree, group_word_bound=gwb,
                                power_bound=power)
    print(p.name)
    for wc in report.weight_commutators:
        print("  pair (%s, %s): level %d, %s" % (
            p.group.format_element(wc.weight), scalar_to_expr(wc.gamma),
            wc.level, wc.gamma_class))
    print("  torsion span dim %d, free quotient dim %d"
          % (report.dim_torsion_span, report.dim_free_quotient))
    for r in report.witnesses:
        note = (", power %d is primitive again" % r.power_primitive_n
                if r.power_primitive_n else "")
        print("   witness %-14s gamma %-8s level %d%s" % (
            element_to_str(p, r.element), scalar_to_expr(r.gamma),
            r.level, note))
    for b in all_bounds(p, report):
        if b.value is None:
            print("  %-25s no bound (%s)" % (
                b.rule, ", ".join(h.name for h in b.failing())))
        else:
            print("  %-25s GKdim >= %d" % (b.rule, b.value))
    print()


# an arbitrarily large torsion part contributes nothing to any bound:
# all its commutators are roots of unity and all its powers collapse
show(exterior_presentation(3))

# one torsion pair (the truncated generator) plus one free pair
show(skew_trunc_presentation(3, beta=1, v=2))

# the Taft algebra: a single torsion pair, every bound is zero
show(taft_presentation(5), degree=5, power=5)

# the quantum planes: v free pairs and every bound equal to 1 + v
for v in (1, 2, 3):
    show(qplane_presentation(v), degree=3)
