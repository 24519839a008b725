"""Brieskorn-Hamm complete intersection links ``L(a_0, ..., a_n)``.

The link is cut out of ``S^{2n+1}`` by ``n - 1`` generic equations
``sum_j c_ij z_j^{a_j} = 0``; it is a Seifert fibered 3-manifold over an
orbifold ``S^2``.  All quantities below are exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Sequence

from .errors import EuclideanOrbifold, InconsistentSeifertData, InvalidInput, NullType
from .exact import IntVec, lcm_all


class SasakiType(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    STANDARD_SPHERE = "standard_sphere"


POINCARE = (2, 3, 5)


def _check_exponents(a: Sequence[int]) -> IntVec:
    a = tuple(int(x) for x in a)
    if len(a) < 3:
        raise InvalidInput(f"a Brieskorn link needs at least 3 exponents, got {a}")
    if any(x < 1 for x in a):
        raise InvalidInput(f"exponents must be >= 1, got {a}")
    return a


def is_homology_sphere(a: Sequence[int]) -> bool:
    """True iff the exponents are pairwise relatively prime."""
    a = _check_exponents(a)
    return all(gcd(x, y) == 1 for x, y in combinations(a, 2))


@dataclass(frozen=True)
class BrieskornLink:
    a: IntVec  # sorted ascending
    lcm: int
    w: IntVec
    d: int

    @property
    def n(self) -> int:
        return len(self.a) - 1

    @property
    def num_equations(self) -> int:
        return self.n - 1

    @property
    def d_total(self) -> int:
        """|d|: sum of the degrees of the ``n - 1`` defining equations."""
        return (self.n - 1) * self.d

    @property
    def w_total(self) -> int:
        return sum(self.w)

    @property
    def is_standard_sphere(self) -> bool:
        return 1 in self.a

    @property
    def is_homology_sphere(self) -> bool:
        return is_homology_sphere(self.a)

    @property
    def is_poincare(self) -> bool:
        return self.a == POINCARE

    @property
    def product(self) -> int:
        return prod(self.a)

    def __str__(self) -> str:
        return "L(" + ",".join(map(str, self.a)) + ")"


def build_link(a: Sequence[int]) -> BrieskornLink:
    a = tuple(sorted(_check_exponents(a)))
    L = lcm_all(a)
    return BrieskornLink(a=a, lcm=L, w=tuple(L // x for x in a), d=L)


@dataclass(frozen=True)
class Cone:
    alpha: int
    beta: Fraction
    multiplicity: int


@dataclass(frozen=True)
class SeifertData:
    genus: int
    euler: Fraction
    cones: tuple[Cone, ...]

    @property
    def alphas(self) -> IntVec:
        return tuple(c.alpha for c in self.cones)

    @property
    def multiplicities(self) -> IntVec:
        return tuple(c.multiplicity for c in self.cones)


def seifert_data(link: BrieskornLink) -> SeifertData:
    """Unnormalized Seifert invariants of ``link``.

    ``beta_j = a_j / ((n+1) d)`` solves ``sum beta_j w_j = 1``; for
    homology spheres this is the usual choice and it works verbatim in
    general because ``w_j a_j = d``.
    """
    a, n, L = link.a, link.n, link.lcm
    cones = []
    for j in range(n + 1):
        rest = a[:j] + a[j + 1:]
        lcm_rest = lcm_all(rest)
        cones.append(Cone(
            alpha=L // lcm_rest,
            beta=Fraction(a[j], (n + 1) * L),
            multiplicity=prod(rest) // lcm_rest,
        ))
    twice_g = 2 + Fraction((n - 1) * link.product, L) - sum(c.multiplicity for c in cones)
    if twice_g.denominator != 1 or twice_g % 2 or twice_g < 0:
        raise InconsistentSeifertData(f"genus formula gives {twice_g / 2} for {link}")
    euler = -Fraction(link.product, L * L)
    total = sum(c.multiplicity * c.beta / c.alpha for c in cones)
    if total != -euler:
        raise InconsistentSeifertData(f"sum s_j beta_j / alpha_j = {total} != {-euler}")
    return SeifertData(genus=int(twice_g) // 2, euler=euler, cones=tuple(cones))


def canonical_index(link: BrieskornLink) -> int:
    """``|d| - |w|``; a negative value -I means Fano index I."""
    return link.d_total - link.w_total


def sasaki_type(link: BrieskornLink) -> SasakiType:
    if link.is_standard_sphere:
        return SasakiType.STANDARD_SPHERE
    if link.is_poincare:
        return SasakiType.POSITIVE
    if link.is_homology_sphere:
        return SasakiType.NEGATIVE
    c1 = link.w_total - link.d_total
    if c1 == 0:
        raise NullType(f"{link} has |w| == |d| (transversally Calabi-Yau)")
    return SasakiType.POSITIVE if c1 > 0 else SasakiType.NEGATIVE


def link_order(link: BrieskornLink) -> int:
    """Order of the quasi-regular Sasakian structure (lcm of the alpha_j)."""
    return lcm_all(seifert_data(link).alphas)


def riemann_hurwitz_order(cone_orders: Sequence[int], genus: int = 0) -> Fraction:
    """``|G| = chi(S^2) / (2 - 2g - sum(1 - 1/m_i))`` for the orbifold ``S^2(m_1, ...)``.

    A positive integer result is the order of a finite group uniformizing the
    orbifold; a negative or fractional value means there is none.
    """
    if any(m < 2 for m in cone_orders):
        raise InvalidInput(f"cone orders must be >= 2, got {tuple(cone_orders)}")
    if genus < 0:
        raise InvalidInput("genus must be nonnegative")
    chi_orb = 2 - 2 * genus - sum(1 - Fraction(1, m) for m in cone_orders)
    if chi_orb == 0:
        raise EuclideanOrbifold(f"orbifold S^2{tuple(cone_orders)} has zero Euler characteristic")
    return Fraction(2) / chi_orb
