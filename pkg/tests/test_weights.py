import pytest
from hypothesis import given, strategies as st

from qgl2.errors import DomainError, RegionError
from qgl2.weights import (
    DominantWeight,
    LpExpansion,
    ModularParams,
    det_shift,
    in_pi,
    is_restricted,
    linkage_partner,
    lp_expansion,
    parse_weight,
    recompose,
)

W = DominantWeight

VALID_PARAMS = [(2, 3), (3, 2), (4, 3), (5, 2), (5, 3), (7, 2), (3, 7), (6, 5)]


def test_dominance_enforced():
    with pytest.raises(DomainError):
        W(0, 1)
    assert W(-2, -3).diff == 1


@pytest.mark.parametrize("ell,p", [(1, 2), (4, 2), (3, 3), (5, 4), (5, 1), (10, 5)])
def test_invalid_params(ell, p):
    with pytest.raises(DomainError):
        ModularParams(ell, p)


@pytest.mark.parametrize("ell,p", VALID_PARAMS)
def test_valid_params(ell, p):
    assert ModularParams(ell, p).ell == ell


@pytest.mark.parametrize(
    "lam,m,expected",
    [((4, 0), 5, True), ((0, 0), 2, True), ((6, 0), 5, False), ((7, 3), 5, True), ((5, 0), 5, False)],
)
def test_is_restricted(lam, m, expected):
    assert is_restricted(W(*lam), m) is expected


@pytest.mark.parametrize("lam,m,expected", [((8, 0), 5, True), ((9, 0), 5, False), ((11, 3), 5, True)])
def test_in_pi(lam, m, expected):
    assert in_pi(W(*lam), m) is expected


@given(st.integers(-50, 50), st.integers(2, 20))
def test_in_pi_on_diagonal(a, m):
    assert in_pi(W(a, a), m)


@pytest.mark.parametrize(
    "lam,m,expected", [((6, 0), 5, (4, 2)), ((5, 0), 5, (4, 1)), ((2, 0), 2, (1, 1)), ((8, 0), 5, (4, 4))]
)
def test_linkage_partner(lam, m, expected):
    assert linkage_partner(W(*lam), m) == W(*expected)


def test_linkage_partner_by_subtraction():
    # (1,0)⊗(1,0) at m = 2 has monomials x^2 + 2xy + y^2; removing chi(2,0) leaves xy = chi(1,1)
    product = {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    for key in [(2, 0), (1, 1), (0, 2)]:
        product[key] -= 1
    leftover = {k: v for k, v in product.items() if v}
    partner = linkage_partner(W(2, 0), 2)
    assert leftover == {(partner.a, partner.b): 1}


@pytest.mark.parametrize("lam,m", [((4, 0), 5), ((9, 0), 5), ((0, 0), 2)])
def test_linkage_partner_domain(lam, m):
    with pytest.raises(RegionError):
        linkage_partner(W(*lam), m)


@given(st.integers(2, 30), st.data())
def test_linkage_partner_properties(m, data):
    diff = data.draw(st.integers(m, 2 * (m - 1)))
    b = data.draw(st.integers(-20, 20))
    lam = W(b + diff, b)
    mu = linkage_partner(lam, m)
    assert mu.degree == lam.degree
    assert is_restricted(mu, m)
    assert mu.diff == 2 * m - 2 - diff


@pytest.mark.parametrize(
    "a,ell,p,tau,digits", [(7, 5, 2, 2, (1,)), (3, 5, 2, 3, ()), (23, 5, 2, 3, (0, 0, 1)), (0, 2, 3, 0, ())]
)
def test_lp_expansion(a, ell, p, tau, digits):
    params = ModularParams(ell, p)
    exp = lp_expansion(a, params)
    assert exp == LpExpansion(tau, digits)
    assert recompose(exp, params) == a


def test_lp_expansion_negative():
    with pytest.raises(DomainError):
        lp_expansion(-1, ModularParams(5, 2))


@pytest.mark.parametrize("exp", [LpExpansion(5, ()), LpExpansion(1, (2,)), LpExpansion(1, (1, 0))])
def test_recompose_rejects_noncanonical(exp):
    with pytest.raises(DomainError):
        recompose(exp, ModularParams(5, 2))


@given(st.integers(0, 10**6), st.sampled_from(VALID_PARAMS))
def test_lp_round_trip(a, ell_p):
    params = ModularParams(*ell_p)
    exp = lp_expansion(a, params)
    exp.check(params)
    assert recompose(exp, params) == a


def test_huge_inputs_are_exact():
    params = ModularParams(7, 3)
    a = 10**40 + 12345
    assert recompose(lp_expansion(a, params), params) == a


@pytest.mark.parametrize("lam,k,expected", [((3, 1), -1, (2, 0)), ((4, 2), 0, (4, 2)), ((2, 0), 3, (5, 3))])
def test_det_shift(lam, k, expected):
    assert det_shift(W(*lam), k) == W(*expected)


@given(st.integers(-100, 100), st.integers(0, 100), st.integers(-100, 100))
def test_det_shift_inverse(b, diff, k):
    lam = W(b + diff, b)
    assert det_shift(det_shift(lam, k), -k) == lam


@pytest.mark.parametrize("text,expected", [("4", (4, 0)), ("3,1", (3, 1)), (" 2 , -1 ", (2, -1))])
def test_parse_weight(text, expected):
    assert parse_weight(text) == W(*expected)


@pytest.mark.parametrize("text", ["1,2", "x", "1,2,3"])
def test_parse_weight_rejects(text):
    with pytest.raises(DomainError):
        parse_weight(text)
