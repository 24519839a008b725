from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sasakijoin.errors import (
    CalculusError,
    InvalidInput,
    NotIsolatedOrInvalid,
    NotWeightedHomogeneous,
    NullType,
    PolySyntaxError,
    TooLarge,
    WeightsUndetermined,
)
from sasakijoin.brieskorn import SasakiType
from sasakijoin.whlink import (
    MonodromyDivisor,
    WeightedPoly,
    WeightSystem,
    analyze_poly,
    betti_bruteforce_bp,
    betti_from_divisor,
    brieskorn_pham,
    infer_weights,
    lambda_product,
    milnor_number,
    monodromy_divisor,
    order_upsilon,
    parse_poly,
    strata,
    type_from_index,
)

from oracles import betti_from_spectrum, milnor_from_spectrum

ROW2 = "z0^12+z1^6+z2^4+z3^2*z0"


# -- parsing -----------------------------------------------------------------

@pytest.mark.parametrize("text, rows", [
    ("z0^5+z1^3+z2^2", ((5, 0, 0), (0, 3, 0), (0, 0, 2))),
    ("z_0^{5} + z_1^3 + z_2^{2}", ((5, 0, 0), (0, 3, 0), (0, 0, 2))),
    ("3 z0^2 z1 + z1^3 + z0^5*z1", ((2, 1), (0, 3), (5, 1))),
    ("z0*z0 + z1^2", ((2, 0), (0, 2))),
])
def test_parse(text, rows):
    assert parse_poly(text).monomials == rows


@pytest.mark.parametrize("text", ["", "z0^", "z0^0+z1", "x0^2", "z0^2+", "z0^{2", "z0^2 z1^3 +* z2"])
def test_parse_errors(text):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text)
    assert isinstance(info.value, InvalidInput)


def test_parse_missing_variable():
    with pytest.raises(InvalidInput):
        parse_poly("z0^2+z2^3")


def test_parse_duplicate_monomial():
    with pytest.raises(InvalidInput):
        parse_poly("z0^2+z1^3+z0^2")


monomial_sets = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 20)] * n).filter(any), min_size=1, max_size=6, unique=True)
    .filter(lambda ms: all(any(m[j] for m in ms) for j in range(n)))
    .map(lambda ms: WeightedPoly(n, tuple(ms)))
)


@given(monomial_sets)
def test_render_parse_round_trip(p):
    assert parse_poly(p.render()) == p


@given(monomial_sets)
def test_json_round_trip(p):
    assert WeightedPoly.from_json(p.to_json()) == p


def test_render_row2():
    assert parse_poly(ROW2).render() == "z0^12+z1^6+z2^4+z0*z3^2"


# -- weights -----------------------------------------------------------------

@pytest.mark.parametrize("text, w, d", [
    ("z0^5+z1^3+z2^2", (6, 10, 15), 30),
    (ROW2, (2, 4, 6, 11), 24),
    ("z0^14+z1^12+z2^3+z3^2", (6, 7, 28, 42), 84),
    ("z0^15+z1^12+z2^3+z3^2", (4, 5, 20, 30), 60),
    ("z0^12+z1^9+z2^3+z3^2*z1", (3, 4, 12, 16), 36),
    ("z0^8+z1^4+z2^4+z3^3", (3, 6, 6, 8), 24),
])
def test_infer_weights(text, w, d):
    ws = infer_weights(parse_poly(text))
    assert (ws.w, ws.d) == (w, d)
    assert ws.is_primitive()


def test_infer_weights_errors():
    with pytest.raises(WeightsUndetermined):
        infer_weights(parse_poly("z0^2*z1^2"))
    with pytest.raises(NotWeightedHomogeneous):
        infer_weights(parse_poly("z0^2+z0^3+z1^2"))


def test_weight_system_validation():
    with pytest.raises(InvalidInput):
        WeightSystem((0, 1), 2)


# -- Milnor number and divisor -----------------------------------------------

@pytest.mark.parametrize("w, d, mu", [((6, 10, 15), 30, 8), ((2, 4, 6, 11), 24, 195), ((3, 6, 6, 8), 24, 126)])
def test_milnor_number(w, d, mu):
    assert milnor_number(WeightSystem(w, d)) == mu


def test_milnor_number_invalid():
    with pytest.raises(NotIsolatedOrInvalid):
        milnor_number(WeightSystem((2, 5), 4))
    with pytest.raises(NotIsolatedOrInvalid):
        milnor_number(WeightSystem((2, 3), 4))


def test_lambda_product_rule():
    assert lambda_product({4: 1}, {6: 1}) == {12: 2}
    assert lambda_product({1: 1}, {7: 3}) == {7: 3}


def test_divisor_poincare():
    div = monodromy_divisor(WeightSystem((6, 10, 15), 30))
    assert div == MonodromyDivisor({30: 1, 15: -1, 10: -1, 6: -1, 5: 1, 3: 1, 2: 1, 1: -1})
    assert betti_from_divisor(div) == 0
    assert div.degree() == 8


def test_divisor_row2():
    div = monodromy_divisor(WeightSystem((2, 4, 6, 11), 24))
    assert str(div) == "15Λ24 - 13Λ12 - Λ6 - Λ4 + Λ1"
    assert betti_from_divisor(div) == 1


def test_divisor_str_leading_minus():
    assert str(MonodromyDivisor({3: -2, 1: 1})) == "-2Λ3 + Λ1"
    assert str(MonodromyDivisor({})) == "0"


def test_divisor_rejects_fractions():
    with pytest.raises(CalculusError):
        MonodromyDivisor({4: 0.5})


def test_betti_negative_is_error():
    with pytest.raises(CalculusError):
        betti_from_divisor(MonodromyDivisor({2: -1}))


SPECTRUM_FIXTURES = [
    ((2, 4, 6, 11), 24),
    ((6, 7, 28, 42), 84),
    ((4, 5, 20, 30), 60),
    ((3, 4, 12, 16), 36),
    ((3, 6, 6, 8), 24),
    ((6, 10, 15), 30),
    ((35, 14, 20, 40), 140),
    ((195, 30, 52, 104), 780),
]


@pytest.mark.parametrize("w, d", SPECTRUM_FIXTURES)
def test_divisor_against_spectrum(w, d):
    ws = WeightSystem(w, d)
    div = monodromy_divisor(ws)
    assert betti_from_divisor(div) == betti_from_spectrum(w, d)
    assert div.degree() == milnor_number(ws) == milnor_from_spectrum(w, d)


@pytest.mark.parametrize("a, b", [((14, 12, 3, 2), 2), ((3, 3, 3, 3), 6), ((2, 3, 5), 0), ((2, 2, 2, 2), 1)])
def test_bruteforce_bp(a, b):
    assert betti_bruteforce_bp(a) == b


def test_bruteforce_budget():
    with pytest.raises(TooLarge):
        betti_bruteforce_bp((100, 100, 100, 100), budget=1000)
    with pytest.raises(InvalidInput):
        betti_bruteforce_bp((1, 3, 4))


def test_bp_divisor_matches_enumeration_small_box():
    for a in product(range(2, 6), repeat=4):
        ws = infer_weights(brieskorn_pham(a))
        assert betti_from_divisor(monodromy_divisor(ws)) == betti_bruteforce_bp(a), a


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 12), min_size=2, max_size=5))
def test_bp_divisor_properties(a):
    ws = infer_weights(brieskorn_pham(a))
    div = monodromy_divisor(ws)
    assert div.degree() == milnor_number(ws)
    assert betti_from_divisor(div) == betti_bruteforce_bp(a)
    assert betti_from_divisor(div) == betti_from_spectrum(ws.w, ws.d)


def _chain(a):
    n = len(a)
    rows = []
    for j in range(n):
        r = [0] * n
        r[j] = a[j]
        if j + 1 < n:
            r[j + 1] = 1
        rows.append(tuple(r))
    return WeightedPoly(n, tuple(rows))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 6), min_size=2, max_size=4))
def test_chain_type_against_spectrum(a):
    rep = analyze_poly(_chain(a))
    w, d = rep.weights.w, rep.weights.d
    assert rep.milnor == milnor_from_spectrum(w, d)
    assert rep.betti == betti_from_spectrum(w, d)


# -- strata, order, index ------------------------------------------------------

def test_strata_poincare():
    p = parse_poly("z0^5+z1^3+z2^2")
    ws = infer_weights(p)
    present = {s.subset: s.isotropy for s in strata(p, ws) if s.present}
    # single-coordinate strata miss the hypersurface
    assert all(len(J) >= 2 for J in present)
    assert present[(0, 1)] == 2 and present[(0, 2)] == 3 and present[(1, 2)] == 5
    assert order_upsilon(p, ws) == 30


@pytest.mark.parametrize("text, ups", [
    (ROW2, 22),
    ("z0^4+z1^2+z2^9+z3^9", 36),
    ("z0^4+z1^2+z2^11+z3^11", 44),
])
def test_order(text, ups):
    assert analyze_poly(text).upsilon == ups


def test_order_lone_monomial_strata():
    # z0^2 z1 + z1^3: the {z0} axis carries no monomial at all, so it lies on f = 0
    p = parse_poly("z0^2*z1+z1^3")
    ws = infer_weights(p)
    by_subset = {s.subset: s for s in strata(p, ws)}
    assert by_subset[(0,)].present and by_subset[(0,)].isotropy == ws.w[0]
    assert not by_subset[(1,)].present


@pytest.mark.parametrize("text, index, t", [
    ("z0^5+z1^3+z2^2", -1, SasakiType.POSITIVE),
    ("z0^7+z1^3+z2^2", 1, SasakiType.NEGATIVE),
    (ROW2, 1, SasakiType.NEGATIVE),
])
def test_index_and_type(text, index, t):
    rep = analyze_poly(text)
    assert rep.index == index
    assert rep.sasaki_type is t


def test_null_index():
    with pytest.raises(NullType):
        type_from_index(0)
    with pytest.raises(NullType):
        analyze_poly("z0^3+z1^3+z2^3").sasaki_type


def test_analyze_report_fields():
    rep = analyze_poly(ROW2)
    assert rep.dim == 5
    assert rep.milnor == 195
    assert rep.betti == 1
    assert rep.divisor.degree() == rep.milnor
