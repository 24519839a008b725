"""
Joins of two negative homology spheres
======================================

For two negative Brieskorn homology 3-spheres with coprime products, the
relative indices give a (k, l) that kills c1 of the contact bundle and a
smooth join.
"""

from sasakijoin import SearchConfig, eta_einstein_plan, join_report, scan_eta_einstein, summarize_brieskorn

# A single pair
m1, m2 = summarize_brieskorn((2, 3, 7)), summarize_brieskorn((5, 11, 13))
plan = eta_einstein_plan(m1, m2)
rep = join_report(plan)
print(plan)
print("  smooth", rep.smooth, "c1", rep.c1_coeff, "eta-Einstein", rep.eta_einstein)
print("  pi1:", rep.pi1.describe())
print("  rank H2", rep.h2_rank, "ring", rep.ring.value)

# All pairs with entries up to 13
pairs = scan_eta_einstein(SearchConfig(bound=13))
print()
print(len(pairs), "pairs; the first few:")
for p in pairs[:8]:
    print(f"  {p.a} * {p.b}   (k, l) = ({p.k}, {p.l})")
