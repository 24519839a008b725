"""Enumeration of examples: coprime exponent tuples, eta-Einstein pairs,
smooth ``(k, l)`` for a join, the two Gomez series and the sporadic table.

Every search is finite (bounded entries plus a result budget) and returns
results in a fixed, documented order.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from importlib import resources
from itertools import islice
from math import gcd
from typing import Iterator

from .brieskorn import SasakiType, build_link, sasaki_type
from .errors import InvalidInput, InvalidParameter, SasakiJoinError
from .exact import IntVec
from .join import JoinSpec, LinkSummary, eta_einstein_plan, join_smooth, summarize_brieskorn
from .whlink import WeightedPoly, infer_weights, parse_poly, primitive


@dataclass(frozen=True)
class SearchConfig:
    n: int = 2
    bound: int = 13
    kl_bound: int = 10
    budget: int = 1000

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInput("tuples need length n + 1 >= 3")
        if self.bound < 2:
            raise InvalidInput("bound must be >= 2")
        if self.budget < 1:
            raise InvalidInput("budget must be >= 1")
        if self.kl_bound < 1:
            raise InvalidInput("kl_bound must be >= 1")


def enum_pairwise_coprime(cfg: SearchConfig) -> Iterator[IntVec]:
    """Strictly increasing pairwise coprime tuples ``2 <= a_0 < ... < a_n <= bound``,
    in lexicographic order."""
    length = cfg.n + 1

    def extend(prefix: tuple[int, ...], start: int):
        if len(prefix) == length:
            yield prefix
            return
        # leave room for the remaining entries
        last = cfg.bound - (length - len(prefix) - 1)
        for x in range(start, last + 1):
            if all(gcd(x, y) == 1 for y in prefix):
                yield from extend(prefix + (x,), x + 1)

    yield from extend((), 2)


@dataclass(frozen=True)
class EtaPair:
    a: IntVec
    b: IntVec
    k: int
    l: int


def scan_eta_einstein(cfg: SearchConfig) -> list[EtaPair]:
    """Pairs ``a < b`` of negative homology-sphere exponents with coprime
    products, each with its relative-index plan ``(k, l)``."""
    tuples = [a for a in enum_pairwise_coprime(cfg)
              if sasaki_type(build_link(a)) is SasakiType.NEGATIVE]
    summaries = {a: summarize_brieskorn(a) for a in tuples}
    out: list[EtaPair] = []
    for i, a in enumerate(tuples):
        for b in tuples[i + 1:]:
            plan = eta_einstein_plan(summaries[a], summaries[b])
            if plan is None:
                continue
            out.append(EtaPair(a, b, plan.k, plan.l))
            if len(out) >= cfg.budget:
                return out
    return out


def scan_joins(m1: LinkSummary, m2: LinkSummary, kl_bound: int, budget: int | None = None) -> list[tuple[int, int]]:
    """Coprime ``(k, l)`` with ``1 <= k, l <= kl_bound`` giving a smooth join,
    ordered by ``(k + l, k)``."""
    pairs = sorted(
        ((k, l) for k in range(1, kl_bound + 1) for l in range(1, kl_bound + 1) if gcd(k, l) == 1),
        key=lambda kl: (kl[0] + kl[1], kl[0]),
    )
    smooth = (kl for kl in pairs if join_smooth(JoinSpec(m1, m2, *kl)))
    return list(islice(smooth, budget))


class Series(enum.Enum):
    FIRST = 1
    SECOND = 2


@dataclass(frozen=True)
class SeriesMember:
    series: Series
    k: int
    poly: WeightedPoly

    @property
    def expected_b2(self) -> int:
        return 2 * self.k + 1 if self.series is Series.FIRST else self.k - 1

    @property
    def expected_index(self) -> int:
        if self.series is Series.FIRST:
            return 16 * self.k * (4 * self.k + 1) - (4 * self.k + 3) ** 2
        return self.k - 8

    @property
    def stated_upsilon(self) -> int:
        """Order as stated alongside the series (differs from the computed one)."""
        return 2 * (4 * self.k + 1) if self.series is Series.FIRST else 2 * self.k


def gomez_series(which: Series | int, k: int) -> SeriesMember:
    which = Series(which)
    if which is Series.FIRST:
        if k < 1:
            raise InvalidParameter(f"first series needs k >= 1, got {k}")
        text = f"z0^4+z1^{8 * k + 2}+z2^{4 * k + 1}*z3+z3^{2 * k + 1}*z2"
    else:
        if k < 9 or k % 2 == 0:
            raise InvalidParameter(f"second series needs odd k >= 9, got {k}")
        text = f"z0^4+z1^2+z2^{k}+z3^{k}"
    return SeriesMember(which, k, parse_poly(text))


@dataclass(frozen=True)
class FixtureRow:
    b2_expected: int
    w_listed: IntVec
    poly_text: str
    consistent: bool
    w_inferred: IntVec | None
    d_inferred: int | None


def sporadic_fixtures() -> list[FixtureRow]:
    """Rows of the sporadic ``I = 1`` table, with a weight consistency flag."""
    raw = json.loads(resources.files("sasakijoin").joinpath("data/sporadic.json").read_text())
    rows = []
    for r in raw:
        p = parse_poly(r["poly"])
        listed = tuple(r["w"])
        try:
            ws = infer_weights(p)
            w_inf, d_inf = ws.w, ws.d
        except SasakiJoinError:
            w_inf = d_inf = None
        rows.append(FixtureRow(
            b2_expected=r["b2"],
            w_listed=listed,
            poly_text=r["poly"],
            consistent=w_inf is not None and primitive(listed) == w_inf,
            w_inferred=w_inf,
            d_inferred=d_inf,
        ))
    return rows
