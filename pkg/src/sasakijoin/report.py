"""Conversion of result objects to plain records, and text/JSON rendering.

JSON output is canonical (sorted keys, fixed indentation) so it
re-serializes byte for byte.
"""

from __future__ import annotations

import enum
import json
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .brieskorn import BrieskornLink, canonical_index, link_order, riemann_hurwitz_order, sasaki_type, seifert_data
from .errors import SasakiJoinError
from .join import JoinReport, JoinSpec, LinkSummary, Pi1Descriptor
from .search import EtaPair, FixtureRow
from .whlink import HypersurfaceReport, MonodromyDivisor, WeightedPoly, analyze_poly, WeightSystem


def to_record(obj):
    """Recursively turn results into JSON-compatible values."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (list, tuple)):
        return [to_record(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_record(v) for k, v in obj.items()}
    if isinstance(obj, LinkSummary):
        return obj.to_json()
    if isinstance(obj, Pi1Descriptor):
        return obj.to_json()
    if isinstance(obj, MonodromyDivisor):
        return {str(k): c for k, c in obj.coeffs.items()}
    if isinstance(obj, WeightedPoly):
        return obj.render()
    if isinstance(obj, JoinSpec):
        return {"m1": obj.m1.name, "m2": obj.m2.name, "k": obj.k, "l": obj.l}
    if isinstance(obj, JoinReport):
        rec = {f.name: to_record(getattr(obj, f.name)) for f in fields(obj)}
        rec["pi1_description"] = obj.pi1.describe() if obj.pi1 else None
        return rec
    if isinstance(obj, HypersurfaceReport):
        return hypersurface_record(obj)
    if isinstance(obj, BrieskornLink):
        return brieskorn_record(obj)
    if isinstance(obj, FixtureRow):
        return fixture_record(obj)
    if is_dataclass(obj):
        return {f.name: to_record(getattr(obj, f.name)) for f in fields(obj)}
    raise TypeError(f"cannot render {type(obj).__name__}")


def brieskorn_record(link: BrieskornLink) -> dict:
    sd = seifert_data(link)
    try:
        t = sasaki_type(link).value
    except SasakiJoinError as exc:
        t = f"error: {exc}"
    cone_orders = [c for c in sd.alphas if c > 1]
    try:
        rh = str(riemann_hurwitz_order(cone_orders, sd.genus))
    except SasakiJoinError:
        rh = None
    index = canonical_index(link)
    return {
        "a": list(link.a),
        "w": list(link.w),
        "d": link.d,
        "d_total": link.d_total,
        "w_total": link.w_total,
        "homology_sphere": link.is_homology_sphere,
        "type": t,
        "index": index,
        "fano_index": -index,
        "upsilon": link_order(link),
        "seifert": {
            "genus": sd.genus,
            "euler": str(sd.euler),
            "cones": [{"alpha": c.alpha, "beta": str(c.beta), "s": c.multiplicity} for c in sd.cones],
        },
        "riemann_hurwitz_order": rh,
    }


def hypersurface_record(rep: HypersurfaceReport) -> dict:
    try:
        t = rep.sasaki_type.value
    except SasakiJoinError as exc:
        t = f"error: {exc}"
    return {
        "poly": rep.poly.render(),
        "nvars": rep.poly.nvars,
        "dim": rep.dim,
        "w": list(rep.weights.w),
        "d": rep.weights.d,
        "milnor": rep.milnor,
        "divisor": str(rep.divisor),
        "b2" if rep.dim == 5 else f"b{rep.poly.nvars - 2}": rep.betti,
        "upsilon": rep.upsilon,
        "index": rep.index,
        "type": t,
    }


def fixture_record(row: FixtureRow) -> dict:
    rec = {
        "b2_expected": row.b2_expected,
        "w_listed": list(row.w_listed),
        "poly": row.poly_text,
        "consistent": row.consistent,
        "w_inferred": list(row.w_inferred) if row.w_inferred else None,
    }
    if row.w_inferred:
        rep = analyze_poly(row.poly_text, WeightSystem(row.w_inferred, row.d_inferred))
        rec.update(d=rep.weights.d, b2=rep.betti, index=rep.index, upsilon=rep.upsilon)
    if not row.consistent:
        inferred = "(" + ",".join(map(str, row.w_inferred)) + ")" if row.w_inferred else "none"
        rec["warning"] = f"listed weights inconsistent; using inferred {inferred}"
    return rec


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "(" + ",".join(_scalar(x) for x in v) + ")"
    return str(v)


def _text(rec, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(rec, dict):
        warning = rec.get("warning")
        if warning:
            lines.append(f"{pad}WARNING: {warning}")
        for k, v in rec.items():
            if k == "warning":
                continue
            if isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(rec, list):
        if not rec:
            lines.append(f"{pad}(no results)")
        for item in rec:
            if isinstance(item, dict):
                lines.append(pad + "  ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
            else:
                lines.append(pad + _scalar(item))
    else:
        lines.append(pad + _scalar(rec))
    return lines


def render_json(rec) -> str:
    return json.dumps(rec, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_report(report, fmt: str = "text") -> str:
    rec = to_record(report)
    if fmt == "json":
        return render_json(rec)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(_text(rec)) + "\n"
