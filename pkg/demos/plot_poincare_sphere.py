"""
The Poincare homology sphere
============================

Three routes to the same link: the Brieskorn exponents (2,3,5), the
polynomial z0^5+z1^3+z2^2 and its Seifert invariants.
"""

from sasakijoin import analyze_poly, build_link, link_order, riemann_hurwitz_order, seifert_data

# From the exponents: weights are lcm / a_j
link = build_link((2, 3, 5))
print(link, "w =", link.w, "d =", link.d)

# From the polynomial: the weights come out of an exact linear solve
rep = analyze_poly("z0^5+z1^3+z2^2")
print("weights", rep.weights.w, "degree", rep.weights.d)
print("Fano index", -rep.index, "order", rep.upsilon, "b1", rep.betti)
print("monodromy divisor", rep.divisor)

# Seifert fibration over the (2,3,5) orbifold sphere
sd = seifert_data(link)
print("genus", sd.genus, "euler number", sd.euler)
for c in sd.cones:
    print("  cone", c.alpha, "beta", c.beta)

# The universal cover of the base has 60 sheets: the icosahedral group
print("Riemann-Hurwitz order", riemann_hurwitz_order(sd.alphas, sd.genus))
print("link order", link_order(link))
