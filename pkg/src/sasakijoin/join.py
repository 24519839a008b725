"""Arithmetic of the Sasakian join ``M1 *_{k,l} M2``.

Each factor enters only through a :class:`LinkSummary` (order, canonical
index, Betti number, a few flags), so the second factor can be a computed
link or a summary read from JSON.  The metric flags in :class:`JoinReport`
say which existence theorem applies; no metric is constructed.

Index convention: the canonical index ``I = |d| - |w|`` is stored
everywhere; the Fano index of a positive structure is ``-I``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass
from math import gcd
from pathlib import Path
from typing import Mapping

from .brieskorn import (
    BrieskornLink,
    SasakiType,
    build_link,
    canonical_index,
    link_order,
    sasaki_type,
)
from .errors import InvalidInput, TypeMismatch, UnknownInvariant, Unsupported
from .whlink import HypersurfaceReport

POINCARE_ORDER = 30


@dataclass(frozen=True)
class LinkSummary:
    name: str
    dim: int
    upsilon: int
    index: int
    d_total: int
    b2: int | None
    type: SasakiType
    is_homology_sphere: bool
    is_poincare: bool
    is_simply_connected: bool
    has_csc_base: bool

    def __post_init__(self):
        if self.dim < 3 or self.dim % 2 == 0:
            raise InvalidInput(f"{self.name}: dimension must be odd and >= 3, got {self.dim}")
        if self.upsilon < 1:
            raise InvalidInput(f"{self.name}: order must be >= 1")
        if self.type not in (SasakiType.POSITIVE, SasakiType.NEGATIVE):
            raise InvalidInput(f"{self.name}: type must be positive or negative")
        if self.is_poincare and not (
            self.is_homology_sphere and self.type is SasakiType.POSITIVE and self.dim == 3
        ):
            raise InvalidInput(f"{self.name}: inconsistent Poincare flag")

    @property
    def fano_index(self) -> int:
        return -self.index

    @property
    def is_standard_sphere(self) -> bool:
        return self.is_homology_sphere and self.is_simply_connected

    # JSON field names differ slightly from attribute names
    _JSON_KEYS = {
        "is_homology_sphere": "homology_sphere",
        "is_poincare": "poincare",
        "is_simply_connected": "simply_connected",
        "has_csc_base": "csc_base",
    }

    def to_json(self) -> dict:
        out = {}
        for k, v in asdict(self).items():
            out[self._JSON_KEYS.get(k, k)] = v.value if isinstance(v, SasakiType) else v
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "LinkSummary":
        kw = {}
        inverse = {v: k for k, v in cls._JSON_KEYS.items()}
        try:
            for key, value in obj.items():
                kw[inverse.get(key, key)] = value
            kw["type"] = SasakiType(kw["type"])
            b2 = kw.get("b2")
            kw["b2"] = None if b2 is None else int(b2)
            for k in ("dim", "upsilon", "index", "d_total"):
                kw[k] = int(kw[k])
            return cls(**kw)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad link summary {dict(obj)}: {exc}") from exc

    @classmethod
    def load(cls, path: str | Path) -> "LinkSummary":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def summarize_brieskorn(link: BrieskornLink | tuple[int, ...]) -> LinkSummary:
    if not isinstance(link, BrieskornLink):
        link = build_link(link)
    t = sasaki_type(link)
    if t is SasakiType.STANDARD_SPHERE:
        raise Unsupported(f"{link} is the standard sphere; use sphere_summary")
    hs = link.is_homology_sphere
    return LinkSummary(
        name=str(link),
        dim=3,
        upsilon=link_order(link),
        index=canonical_index(link),
        d_total=link.product if hs else 0,
        b2=0 if hs else None,
        type=t,
        is_homology_sphere=hs,
        is_poincare=link.is_poincare,
        is_simply_connected=False,
        # constant Phi-sectional curvature: the base orbifold is Kaehler-Einstein
        has_csc_base=hs,
    )


def sphere_summary(dim: int) -> LinkSummary:
    """Round ``S^{2r+1}``: regular, base ``CP^r``, Fano index ``r + 1``."""
    if dim < 3 or dim % 2 == 0:
        raise InvalidInput(f"sphere dimension must be odd and >= 3, got {dim}")
    r = (dim - 1) // 2
    return LinkSummary(
        name=f"S^{dim}", dim=dim, upsilon=1, index=-(r + 1), d_total=1, b2=0,
        type=SasakiType.POSITIVE, is_homology_sphere=True, is_poincare=False,
        is_simply_connected=True, has_csc_base=True,
    )


def summarize_hypersurface(rep: HypersurfaceReport, name: str | None = None) -> LinkSummary:
    """Summary of a hypersurface link; simply connected once it has >= 4 variables."""
    t = rep.sasaki_type
    return LinkSummary(
        name=name or str(rep.poly),
        dim=rep.dim,
        upsilon=rep.upsilon,
        index=rep.index,
        d_total=0,
        b2=rep.betti if rep.dim == 5 else None,
        type=t,
        is_homology_sphere=False,
        is_poincare=False,
        is_simply_connected=rep.poly.nvars >= 4,
        # negative c1: an orbifold Kaehler-Einstein metric always exists
        has_csc_base=t is SasakiType.NEGATIVE,
    )


POINCARE_SUMMARY = summarize_brieskorn((2, 3, 5))


@dataclass(frozen=True)
class JoinSpec:
    m1: LinkSummary
    m2: LinkSummary
    k: int
    l: int

    def __post_init__(self):
        if self.k <= 0 or self.l <= 0:
            raise InvalidInput(f"k and l must be positive, got ({self.k}, {self.l})")
        if gcd(self.k, self.l) != 1:
            raise InvalidInput(f"k and l must be coprime, got ({self.k}, {self.l})")

    @property
    def dim(self) -> int:
        return self.m1.dim + self.m2.dim - 1

    def __str__(self) -> str:
        return f"{self.m1.name} *_({self.k},{self.l}) {self.m2.name}"


def _order(m: LinkSummary) -> int:
    return m.d_total if m.is_homology_sphere and m.d_total > 0 else m.upsilon


def join_smooth(s: JoinSpec) -> bool:
    """``gcd(upsilon_1 * l, upsilon_2 * k) == 1``."""
    return gcd(_order(s.m1) * s.l, _order(s.m2) * s.k) == 1


def contact_c1(I1: int, I2: int, k: int, l: int) -> int:
    """Coefficient of the generator gamma in ``c_1(D)``: ``I2*k - I1*l``."""
    return I2 * k - I1 * l


def relative_indices(I1: int, I2: int) -> tuple[int, int]:
    """Indices divided by their gcd, returned as the positive pair ``(k, l)``.

    Taking absolute values lets the same pair serve the Fano (negative index)
    case; ``contact_c1`` vanishes on it either way.
    """
    if I1 == 0 or I2 == 0:
        raise InvalidInput("relative indices need nonzero indices")
    if (I1 > 0) != (I2 > 0):
        raise TypeMismatch(f"indices {I1} and {I2} have different signs")
    g = gcd(I1, I2)
    return abs(I1) // g, abs(I2) // g


class Pi1Kind(enum.Enum):
    ICOSAHEDRAL = "icosahedral"
    ICOSAHEDRAL_OR_BINARY = "icosahedral_or_binary"
    ZL_EXTENSION = "zl_extension"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class Pi1Descriptor:
    kind: Pi1Kind
    l: int | None = None

    @property
    def perfect(self) -> bool:
        return self.kind is not Pi1Kind.TRIVIAL

    @property
    def base(self) -> str | None:
        return "pi1(M)/Z" if self.kind is Pi1Kind.ZL_EXTENSION else None

    def describe(self) -> str:
        if self.kind is Pi1Kind.ICOSAHEDRAL:
            return "I (icosahedral, order 60)"
        if self.kind is Pi1Kind.ICOSAHEDRAL_OR_BINARY:
            return "I or I* (undetermined)"
        if self.kind is Pi1Kind.ZL_EXTENSION:
            return f"Z_{self.l} extension of pi1(M)/Z (perfect)"
        return "trivial"

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "perfect": self.perfect}
        if self.kind is Pi1Kind.ZL_EXTENSION:
            out.update(l=self.l, base=self.base)
        return out


def pi1_descriptor(m1: LinkSummary, l: int) -> Pi1Descriptor:
    if not m1.is_homology_sphere:
        raise Unsupported(f"{m1.name} is not a homology sphere")
    if m1.is_standard_sphere:
        return Pi1Descriptor(Pi1Kind.TRIVIAL)
    if m1.is_poincare:
        return Pi1Descriptor(Pi1Kind.ICOSAHEDRAL if l % 2 else Pi1Kind.ICOSAHEDRAL_OR_BINARY)
    return Pi1Descriptor(Pi1Kind.ZL_EXTENSION, l)


def h2_rank(s: JoinSpec) -> int:
    if not s.m1.is_homology_sphere:
        raise Unsupported(f"{s.m1.name} is not a homology sphere")
    if s.m2.b2 is None:
        raise UnknownInvariant(f"b2 of {s.m2.name} is unknown")
    return s.m2.b2 + 1


class Ring(enum.Enum):
    INTEGRAL_S2xS = "integral_S2xS"
    RATIONAL_S2xS = "rational_S2xS"
    H2_SPLIT_ONLY = "H2_split_only"


def ring_prediction(r: int, k: int, l: int) -> Ring:
    """Cohomology ring of ``M^3 *_{k,l} S^{2r+1}`` for a homology 3-sphere ``M^3``."""
    if r < 1 or k < 1 or l < 1:
        raise InvalidInput("need r, k, l >= 1")
    return Ring.INTEGRAL_S2xS if l == 1 or r == 1 else Ring.RATIONAL_S2xS


def _ring_for(s: JoinSpec) -> Ring:
    m2 = s.m2
    if m2.is_standard_sphere:
        return ring_prediction((m2.dim - 1) // 2, s.k, s.l)
    if m2.is_homology_sphere and m2.dim == 3:
        return Ring.INTEGRAL_S2xS
    return Ring.H2_SPLIT_ONLY


def eta_einstein_plan(m1: LinkSummary, m2: LinkSummary) -> JoinSpec | None:
    """The ``(k, l)`` killing ``c_1(D)`` for two negative factors, or None.

    Applicable when both are homology spheres with coprime ``d``, or, for a
    general second factor, when ``gcd(d_a * I2_rel, upsilon_2) == 1``.
    """
    if m1.type is not SasakiType.NEGATIVE or m2.type is not SasakiType.NEGATIVE:
        raise TypeMismatch(f"eta-Einstein joins need two negative factors ({m1.name}, {m2.name})")
    k, l = relative_indices(m1.index, m2.index)
    if m1.is_homology_sphere and m2.is_homology_sphere:
        ok = gcd(m1.d_total, m2.d_total) == 1
    else:
        ok = m1.is_homology_sphere and gcd(m1.d_total * l, m2.upsilon) == 1
    return JoinSpec(m1, m2, k, l) if ok else None


def sasaki_einstein_plan(n: LinkSummary) -> JoinSpec | None:
    """``S^3/I* *_{1, I_F} N`` when ``gcd(30 I_F, upsilon) == 1``.

    ``N`` must be simply connected and positive with a Kaehler-Einstein base;
    the summary's ``has_csc_base`` flag stands in for the latter.
    """
    if not (n.is_simply_connected and n.type is SasakiType.POSITIVE and n.fano_index > 0
            and n.has_csc_base):
        return None
    if gcd(POINCARE_ORDER * n.fano_index, n.upsilon) != 1:
        return None
    return JoinSpec(POINCARE_SUMMARY, n, 1, n.fano_index)


@dataclass(frozen=True)
class JoinReport:
    spec: JoinSpec
    smooth: bool
    dim: int
    c1_coeff: int
    w2_nonzero: bool
    pi1: Pi1Descriptor | None
    h2_rank: int | None
    ring: Ring | None
    csc_ray: bool
    eta_einstein: bool
    lorentzian_se: bool
    sasaki_einstein: bool


def join_report(s: JoinSpec) -> JoinReport:
    smooth = join_smooth(s)
    c1 = contact_c1(s.m1.index, s.m2.index, s.k, s.l)
    hs = s.m1.is_homology_sphere
    pi1 = pi1_descriptor(s.m1, s.l) if hs else None
    try:
        h2 = h2_rank(s)
    except (UnknownInvariant, Unsupported):
        h2 = None
    ring = _ring_for(s) if hs else None

    t1, t2 = s.m1.type, s.m2.type
    eta = sasaki_e = csc = False
    if smooth:
        csc = hs and s.m2.has_csc_base
        if t1 is t2 is SasakiType.NEGATIVE and c1 == 0:
            plan = eta_einstein_plan(s.m1, s.m2)
            eta = plan is not None and (plan.k, plan.l) == (s.k, s.l)
        if t1 is t2 is SasakiType.POSITIVE and c1 == 0:
            sasaki_e = s.m1.has_csc_base and s.m2.has_csc_base
    return JoinReport(
        spec=s, smooth=smooth, dim=s.dim, c1_coeff=c1, w2_nonzero=c1 % 2 == 1,
        pi1=pi1, h2_rank=h2, ring=ring, csc_ray=csc,
        eta_einstein=eta, lorentzian_se=eta, sasaki_einstein=sasaki_e,
    )

