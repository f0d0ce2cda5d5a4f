"""Presentations and the rewriting engine.

A presentation is an abelian group of group-likes, skew-primitive
generators y_i carrying a weight mu_i and characters lambda_i / tau_i,
and deg-lex oriented rules between y-words.  The commutation

    y_i g = lambda_i(g) g y_i + tau_i(g) g (mu_i - 1)

is implied by the generator data.  Normal forms put the group part on the
left; confluence is checked by resolving every overlap ambiguity, never
assumed.
"""

from hopfgrow import (exterior_presentation, parse_element_expr,
                      qplane_presentation, skew_free_presentation,
                      skew_trunc_presentation)
from hopfgrow.serialize import element_to_str

p = qplane_presentation(2)
print("quantum plane over Z:", p)
for expr in ["y2 y1", "y1 g1", "y2 y2 y1 g1^-1"]:
    elt = parse_element_expr(p, expr)
    print("  %-16s ->  %s" % (expr, element_to_str(p, elt)))
print()

x = exterior_presentation(2)
print("anticommuting pair over Z/2:", x)
for expr in ["y1 y1", "y2 y1", "y1 g1"]:
    print("  %-16s ->  %s" % (expr, element_to_str(x, parse_element_expr(x, expr))))
print()

# tau in action: a trivial character with an additive character produces
# the extra g(mu - 1) term when y crosses a group element
t = skew_free_presentation(v=1, tau=1)
print("with tau(g) = 1:")
print("  y1 g1          -> ",
      element_to_str(t, parse_element_expr(t, "y1 g1")))
print()

# Confluence dichotomy for the truncation y1^p = beta (mu1^p - 1): adding
# a group direction that acts through a transcendental breaks it exactly
# at the overlap between the truncation rule and that commutation.
for beta, bad in [(0, True), (1, False), (1, True)]:
    pres = skew_trunc_presentation(3, beta=beta, v=2, bad_gen=bad)
    result = pres.check_confluence()
    print("truncation with beta=%d, extra generator=%s: %s"
          % (beta, bad, "confluent" if result.confluent else "NOT confluent"))
    for failure in result.failures:
        print("   unresolved:", failure.describe())
        print("   the two reductions differ by:",
              element_to_str(pres, failure.difference()))
