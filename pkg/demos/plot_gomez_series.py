"""
Two infinite series of five-dimensional links
=============================================

The Betti numbers and indices follow closed forms in k.  The computed
order of the circle action is printed next to the stated one; in the
first series an extra isotropy group Z_{4k+3} shows up, and when 3 | k it
shares a factor with the index.
"""

from math import gcd

from sasakijoin import analyze_poly, gomez_series

print("second series: z0^4+z1^2+z2^k+z3^k")
for k in range(9, 20, 2):
    m = gomez_series(2, k)
    rep = analyze_poly(m.poly)
    print(f"  k={k:2d} b2={rep.betti:2d} (k-1={k - 1}) I={rep.index} "
          f"order={rep.upsilon} stated={m.stated_upsilon}")

print("first series: z0^4+z1^(8k+2)+z2^(4k+1)*z3+z3^(2k+1)*z2")
for k in range(1, 7):
    m = gomez_series(1, k)
    rep = analyze_poly(m.poly)
    print(f"  k={k} w={rep.weights.w} b2={rep.betti} I={rep.index} "
          f"order={rep.upsilon} gcd(I, order)={gcd(rep.index, rep.upsilon)}")

# The stratum z2 = z3 = 0 carries the isotropy behind the gcd
rep = analyze_poly(gomez_series(1, 3).poly)
for s in rep.strata:
    if s.present and s.isotropy > 1:
        print("  stratum", s.subset, "isotropy", s.isotropy)
