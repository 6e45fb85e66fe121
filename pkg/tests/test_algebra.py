import pytest
from hypothesis import given, settings, strategies as st

from grothlab.algebra import (
    ExactDivisionError,
    Polynomial,
    TruncatedSeries,
    antisymmetrize,
    apply_permutation,
    coset_permutations,
    coset_sum,
    divide_exact,
    geometric_factor,
    h_polynomial,
    perm_sign,
    vandermonde,
    x_var,
)


def poly_st(nx=2, nt=1, max_exp=3, max_terms=4):
    mono = st.tuples(
        st.tuples(*([st.integers(0, max_exp)] * nx)),
        st.tuples(*([st.integers(0, 1)] * nt)),
    )
    term = st.tuples(mono, st.integers(-3, 3))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: Polynomial(nx, nt, {m: c for m, c in ts})
    )


def test_add_neg_cancel():
    x1, x2 = x_var(0, 2), x_var(1, 2)
    p = x1 * x1 + 2 * x2
    assert not (p + (-p))
    assert (x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2


def test_block_mismatch_raises():
    with pytest.raises(ValueError):
        x_var(0, 2) + x_var(0, 3)


@settings(max_examples=60)
@given(poly_st(), poly_st(), poly_st())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


def test_perm_sign():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((2, 0, 1)) == 1


def test_apply_permutation():
    p = Polynomial.monomial((2, 1), ())
    assert apply_permutation(p, (0, 1)) == p
    assert apply_permutation(p, (1, 0)) == Polynomial.monomial((1, 2), ())


@settings(max_examples=40)
@given(poly_st(nx=3, nt=0))
def test_apply_permutation_composes(p):
    sigma, tau = (1, 2, 0), (0, 2, 1)
    composed = tuple(sigma[tau[i]] for i in range(3))
    assert apply_permutation(apply_permutation(p, tau), sigma) == apply_permutation(
        p, composed
    )


def test_vandermonde():
    assert vandermonde(1) == Polynomial.constant(1, 1, 0)
    x1, x2 = x_var(0, 2), x_var(1, 2)
    assert vandermonde(2) == x1 - x2
    v3 = vandermonde(3)
    assert len(v3.terms) == 6
    assert all(abs(c) == 1 for c in v3.terms.values())
    assert v3.x_degree() == 3


def test_antisymmetrize():
    sym = x_var(0, 2) * x_var(1, 2)
    assert not antisymmetrize(sym)
    stair = Polynomial.monomial((2, 1, 0), ())
    assert antisymmetrize(stair) == vandermonde(3)


@settings(max_examples=40)
@given(poly_st(nx=3, nt=0))
def test_antisymmetrize_is_alternating(p):
    a = antisymmetrize(p)
    for swap in ((1, 0, 2), (0, 2, 1)):
        assert apply_permutation(a, swap) == -a


def test_divide_exact_linear():
    x1, x2 = x_var(0, 2), x_var(1, 2)
    assert divide_exact(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2
    v3 = vandermonde(3)
    assert divide_exact(v3, v3) == Polynomial.constant(1, 3, 0)


def test_divide_exact_bialternant_matches_tableau_count():
    num = antisymmetrize(Polynomial.monomial((4, 2, 0), ()))
    s = divide_exact(num, vandermonde(3))
    # eight semistandard tableaux of shape (2,1) on three letters
    assert sum(s.terms.values()) == 8
    assert s.coefficient((1, 1, 1)) == 2


def test_divide_exact_signals_failure():
    x1, x2 = x_var(0, 2), x_var(1, 2)
    with pytest.raises(ExactDivisionError):
        divide_exact(x1 * x1 + x2, x1 - x2)


@settings(max_examples=40)
@given(poly_st(nx=3, nt=0))
def test_divide_exact_inverts_multiplication(f):
    for g in (x_var(0, 3) - x_var(1, 3), vandermonde(3)):
        assert divide_exact(f * g, g) == f


def test_coset_permutations():
    assert coset_permutations(3, 3) == sorted(
        [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    )
    assert coset_permutations(3, 0) == [(0, 1, 2)]
    reps = coset_permutations(3, 1)
    assert reps == [(0, 1, 2), (1, 0, 2), (2, 0, 1)]
    assert [perm_sign(s) for s in reps] == [1, -1, 1]


def test_coset_sum_extremes():
    p = Polynomial.monomial((2, 0, 0), ())
    assert coset_sum(p, 3, 3) == antisymmetrize(p)
    assert coset_sum(p, 3, 0) == p


def test_geometric_factor():
    g = geometric_factor(0, 0, 2, 1, x_cap=1, t_cap=5)
    assert g.poly == Polynomial.monomial((1, 0), (0,))
    g = geometric_factor(0, 0, 2, 1, x_cap=2, t_cap=0)
    assert g.poly == Polynomial.monomial((1, 0), (0,))
    g = geometric_factor(0, 0, 1, 1, x_cap=4, t_cap=2)
    expected = {
        ((1,), (0,)): 1,
        ((2,), (1,)): 1,
        ((3,), (2,)): 1,
    }
    assert g.poly.terms == expected


def test_h_polynomial():
    assert h_polynomial(0, 2, 3) == Polynomial.constant(1, 3, 0)
    assert h_polynomial(2, 0, 3) == Polynomial.zero(3, 0)
    h2 = h_polynomial(2, 2, 2)
    assert h2.terms == {
        ((2, 0), ()): 1,
        ((1, 1), ()): 1,
        ((0, 2), ()): 1,
    }


def test_series_caps():
    x = Polynomial.monomial((1,), (0,))
    t = Polynomial.monomial((0,), (1,))
    s = TruncatedSeries(x + t * 0, 3, 1)
    geo = geometric_factor(0, 0, 1, 1, 3, 1)
    prod = geo * geo
    assert all(sum(xe) <= 3 and sum(te) <= 1 for xe, te in prod.poly.terms)
    with pytest.raises(ValueError):
        s + TruncatedSeries(x, 2, 1)


def test_series_division_adjusts_cap():
    geo = geometric_factor(0, 0, 2, 1, x_cap=4, t_cap=2)
    v = vandermonde(2, 1)
    numerator = geo * v
    q = divide_exact(numerator, v)
    assert q.x_cap == 3
    assert q.poly == geo.truncate(x_cap=3).poly


def test_series_division_requires_homogeneous_divisor():
    geo = geometric_factor(0, 0, 2, 1, x_cap=4, t_cap=2)
    bad = Polynomial.constant(1, 2, 0) + x_var(0, 2)
    with pytest.raises(ValueError):
        divide_exact(geo, bad)


def test_sorted_terms_order_is_graded_lex():
    p = (
        Polynomial.monomial((0, 2), (0,))
        + Polynomial.monomial((1, 1), (0,))
        + Polynomial.monomial((1, 0), (1,))
    )
    order = [xe for xe, te, c in p.sorted_terms()]
    assert order == [(1, 1), (0, 2), (1, 0)]
