"""
Five sporadic five-dimensional links with I = 1
===============================================

Each row is a polynomial in four variables.  The second Betti number
comes from the monodromy divisor; the first row's listed weights admit no
solution, so the inferred ones are used instead.
"""

from sasakijoin import analyze_poly, sporadic_fixtures

for row in sporadic_fixtures():
    rep = analyze_poly(row.poly_text)
    flag = "" if row.consistent else f"   (listed {row.w_listed} does not fit)"
    print(f"{row.poly_text:28s} w={rep.weights.w!s:18s} d={rep.weights.d:3d} "
          f"b2={rep.betti} I={rep.index} order={rep.upsilon}{flag}")

# The divisor for one row, written as a sum of Lambda_k
rep = analyze_poly("z0^12+z1^6+z2^4+z3^2*z0")
print()
print("divisor:", rep.divisor)
print("Milnor number", rep.milnor, "=", rep.divisor.degree())
