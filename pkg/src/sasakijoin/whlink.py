"""Links of weighted homogeneous hypersurface singularities.

A polynomial is kept only as its exponent matrix; coefficients are
assumed generic throughout.  The Betti number ``b_{n-1}`` of the link is
read off the Milnor-Orlik divisor of the characteristic polynomial of the
monodromy, written in the basis ``Lambda_k = divisor(t^k - 1)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm, prod
from typing import Iterable, Mapping, Sequence

from .brieskorn import SasakiType
from .errors import (
    CalculusError,
    InvalidInput,
    NoSolution,
    NotIsolatedOrInvalid,
    NotUnique,
    NotWeightedHomogeneous,
    NullType,
    TooLarge,
    WeightsUndetermined,
)
from .exact import IntVec, gcd_all, lcm_all, solve_primitive_ray
from .polyparse import parse_terms


@dataclass(frozen=True)
class WeightedPoly:
    nvars: int
    monomials: tuple[IntVec, ...]

    def __post_init__(self):
        if not self.monomials:
            raise InvalidInput("polynomial has no monomials")
        if any(len(m) != self.nvars for m in self.monomials):
            raise InvalidInput("monomial length differs from nvars")
        if any(e < 0 for m in self.monomials for e in m):
            raise InvalidInput("negative exponent")
        if len(set(self.monomials)) != len(self.monomials):
            raise InvalidInput("duplicate monomial")
        missing = [j for j in range(self.nvars) if all(m[j] == 0 for m in self.monomials)]
        if missing:
            raise InvalidInput(f"variables {missing} appear in no monomial")

    @classmethod
    def from_json(cls, obj: Mapping) -> "WeightedPoly":
        return cls(int(obj["nvars"]), tuple(tuple(int(e) for e in m) for m in obj["monomials"]))

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "monomials": [list(m) for m in self.monomials]}

    def render(self) -> str:
        terms = []
        for m in self.monomials:
            factors = [f"z{j}" if e == 1 else f"z{j}^{e}" for j, e in enumerate(m) if e]
            terms.append("*".join(factors) or "1")
        return "+".join(terms)

    def __str__(self) -> str:
        return self.render()


def parse_poly(text: str) -> WeightedPoly:
    """Parse ``"z0^5+z1^3+z2^2"`` style text into a :class:`WeightedPoly`."""
    terms = parse_terms(text)
    nvars = 1 + max((j for t in terms for j in t), default=-1)
    if nvars == 0:
        raise InvalidInput(f"no variables in {text!r}")
    rows = tuple(tuple(t.get(j, 0) for j in range(nvars)) for t in terms)
    return WeightedPoly(nvars, rows)


def brieskorn_pham(a: Sequence[int]) -> WeightedPoly:
    """``z0^a0 + z1^a1 + ...``"""
    n = len(a)
    return WeightedPoly(n, tuple(tuple(a[i] if i == j else 0 for i in range(n)) for j in range(n)))


@dataclass(frozen=True)
class WeightSystem:
    w: IntVec
    d: int

    def __post_init__(self):
        if not self.w or any(x <= 0 for x in self.w) or self.d <= 0:
            raise InvalidInput(f"weights and degree must be positive: {self.w}, {self.d}")

    @property
    def w_total(self) -> int:
        return sum(self.w)

    def is_primitive(self) -> bool:
        return gcd_all(self.w + (self.d,)) == 1


def infer_weights(p: WeightedPoly) -> WeightSystem:
    try:
        w, d = solve_primitive_ray(p.monomials)
    except NoSolution as exc:
        raise NotWeightedHomogeneous(f"{p} is not weighted homogeneous: {exc}") from exc
    except NotUnique as exc:
        raise WeightsUndetermined(f"weights of {p} are not determined: {exc}") from exc
    return WeightSystem(w, d)


def milnor_number(ws: WeightSystem) -> int:
    """``prod_j (d - w_j) / w_j``."""
    if any(x >= ws.d for x in ws.w):
        raise NotIsolatedOrInvalid(f"weight >= degree in {ws}")
    mu = prod(Fraction(ws.d - x, x) for x in ws.w)
    if mu.denominator != 1:
        raise NotIsolatedOrInvalid(f"Milnor number {mu} is not an integer for {ws}")
    return int(mu)


class MonodromyDivisor:
    """Finite sum ``sum_k c_k Lambda_k`` with integer coefficients.

    Encodes ``Delta(t) = prod_k (t^k - 1)^{c_k}``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int]):
        clean = {}
        for k, c in coeffs.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise CalculusError(f"non-integer coefficient {c} of Lambda_{k}")
            if k < 1:
                raise CalculusError(f"bad period {k}")
            if c:
                clean[int(k)] = int(c)
        self._coeffs = dict(sorted(clean.items(), reverse=True))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def __getitem__(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    def __eq__(self, other):
        if isinstance(other, MonodromyDivisor):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def degree(self) -> int:
        """Degree of Delta(t), i.e. the Milnor number."""
        return sum(c * k for k, c in self._coeffs.items())

    def __repr__(self):
        return f"MonodromyDivisor({self._coeffs})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = []
        for k, c in self._coeffs.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            out.append(f"{sign} {mag}Λ{k}")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def lambda_product(x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Product in the ring spanned by ``Lambda_k``: ``L_a L_b = gcd(a,b) L_lcm(a,b)``."""
    out: dict[int, Fraction] = defaultdict(Fraction)
    for a, ca in x.items():
        for b, cb in y.items():
            out[lcm(a, b)] += ca * cb * gcd(a, b)
    return {k: c for k, c in out.items() if c}


def monodromy_divisor(ws: WeightSystem) -> MonodromyDivisor:
    """Milnor-Orlik divisor ``prod_j (Lambda_{u_j} / v_j - 1)``.

    ``u_j = d / gcd(d, w_j)`` and ``v_j = w_j / gcd(d, w_j)``.
    """
    acc: dict[int, Fraction] = {1: Fraction(1)}
    for wj in ws.w:
        g = gcd(ws.d, wj)
        u, v = ws.d // g, wj // g
        factor: dict[int, Fraction] = defaultdict(Fraction)
        factor[u] += Fraction(1, v)
        factor[1] -= 1
        acc = lambda_product(acc, {k: c for k, c in factor.items() if c})
    bad = {k: c for k, c in acc.items() if c.denominator != 1}
    if bad:
        raise CalculusError(f"non-integer divisor coefficients {bad} for {ws}")
    return MonodromyDivisor(acc)


def betti_from_divisor(div: MonodromyDivisor) -> int:
    """Multiplicity of the eigenvalue 1: every ``t^k - 1`` has the root 1 once."""
    b = sum(div.coeffs.values())
    if b < 0:
        raise CalculusError(f"negative Betti number {b} from {div}")
    return b


def betti_bruteforce_bp(a: Sequence[int], budget: int = 5_000_000) -> int:
    """Eigenvalue-1 count of the Brieskorn-Pham monodromy by enumeration.

    Counts ``(j_0, ..., j_n)`` with ``1 <= j_i < a_i`` and ``sum j_i / a_i``
    an integer.
    """
    a = tuple(int(x) for x in a)
    if not a or any(x < 2 for x in a):
        raise InvalidInput(f"Brieskorn-Pham exponents must be >= 2, got {a}")
    size = prod(x - 1 for x in a)
    if size > budget:
        raise TooLarge(f"{size} tuples exceeds budget {budget}")
    L = lcm_all(a)
    steps = [L // x for x in a]
    count = 0
    for js in product(*(range(1, x) for x in a)):
        if sum(j * s for j, s in zip(js, steps)) % L == 0:
            count += 1
    return count


@dataclass(frozen=True)
class StratumReport:
    subset: tuple[int, ...]
    present: bool
    isotropy: int | None


def strata(p: WeightedPoly, ws: WeightSystem) -> list[StratumReport]:
    """Torus strata ``{z_j != 0 iff j in J}`` that meet the hypersurface.

    With generic coefficients a stratum meets ``f = 0`` unless exactly one
    monomial survives restriction to ``J`` (a lone monomial has no zeros on
    the torus; zero monomials vanish identically).
    """
    out = []
    for r in range(1, p.nvars + 1):
        for J in combinations(range(p.nvars), r):
            Jset = set(J)
            surviving = sum(1 for m in p.monomials if all(j in Jset for j, e in enumerate(m) if e))
            present = surviving != 1
            iso = gcd_all(ws.w[j] for j in J) if present else None
            out.append(StratumReport(J, present, iso))
    return out


def order_upsilon(p: WeightedPoly, ws: WeightSystem) -> int:
    return lcm_all([s.isotropy for s in strata(p, ws) if s.present] or [1])


def hypersurface_index(ws: WeightSystem) -> int:
    """Canonical index ``d - |w|``; negative means Fano index ``|w| - d``."""
    return ws.d - ws.w_total


def type_from_index(index: int) -> SasakiType:
    if index == 0:
        raise NullType("canonical index 0 (transversally Calabi-Yau)")
    return SasakiType.NEGATIVE if index > 0 else SasakiType.POSITIVE


@dataclass(frozen=True)
class HypersurfaceReport:
    poly: WeightedPoly
    weights: WeightSystem
    milnor: int
    divisor: MonodromyDivisor
    betti: int
    upsilon: int
    index: int
    strata: tuple[StratumReport, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return 2 * self.poly.nvars - 3

    @property
    def sasaki_type(self) -> SasakiType:
        return type_from_index(self.index)


def analyze_poly(p: WeightedPoly | str, ws: WeightSystem | None = None) -> HypersurfaceReport:
    """Run the whole pipeline: weights, Milnor number, divisor, Betti, order, index."""
    if isinstance(p, str):
        p = parse_poly(p)
    ws = ws or infer_weights(p)
    div = monodromy_divisor(ws)
    st = tuple(strata(p, ws))
    return HypersurfaceReport(
        poly=p,
        weights=ws,
        milnor=milnor_number(ws),
        divisor=div,
        betti=betti_from_divisor(div),
        upsilon=lcm_all([s.isotropy for s in st if s.present] or [1]),
        index=hypersurface_index(ws),
        strata=st,
    )


def primitive(v: Iterable[int]) -> IntVec:
    v = tuple(v)
    g = gcd_all(v)
    return tuple(x // g for x in v) if g else v
