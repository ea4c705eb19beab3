import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symfund.oracle import monomial_to_schur, plethysm_oracle, schur_plethysm_oracle
from symfund.splethysm import (
    SLabeledVector,
    SupportError,
    chain_rule,
    d_s,
    decompose_support,
    hall_s,
    is_supported,
    plethysm,
    plethysm_general,
    plethysm_left,
    plethysm_power,
    star,
    support_bound,
    transpose_vector,
)
from symfund.partition import transpose
from symfund.symfun import (
    PowerVector,
    SchurVector,
    hall_schur,
    power,
    power_to_schur,
    product,
    schur,
    schur_to_power,
)

from conftest import homogeneous_st, pairs_up_to, parts_list


def L(*terms):
    """L((f, k), ...) = sum f * k^s."""
    acc = SLabeledVector.zero()
    for f, k in terms:
        if isinstance(f, int):
            f = SchurVector.one().scale(f)
        acc = acc + SLabeledVector.from_components({k: f})
    return acc


P4 = schur(4) - schur(3, 1) + schur(2, 1, 1) - schur(1, 1, 1, 1)


def test_d_s_examples():
    assert d_s(schur(2)) == L((schur(1), 1), (1, 2))
    assert d_s(schur(4)) == L((schur(3), 1), (schur(2), 2), (schur(1), 3), (1, 4))
    assert d_s(schur(2, 2)) == L((schur(2, 1), 1), (schur(2) - schur(1, 1), 2), (-schur(1), 3))
    assert d_s(schur(3, 1)) == L((schur(3) + schur(2, 1), 1), (schur(1, 1), 2), (-1, 4))
    assert d_s(schur(2, 1, 1)) == L((schur(2, 1) + schur(1, 1, 1), 1), (-schur(2), 2), (1, 4))
    assert d_s(schur(1, 1, 1, 1)) == L(
        (schur(1, 1, 1), 1), (-schur(1, 1), 2), (schur(1), 3), (-1, 4)
    )
    assert d_s(power_to_schur(power(5))) == L((5, 5))


def test_d_s_text():
    assert d_s(schur(4)).to_text() == "s[3]*1^s + s[2]*2^s + s[1]*3^s + 4^s"


def test_d_s_forgets_to_derive():
    for d in range(1, 8):
        for alpha in parts_list(d):
            F = d_s(schur(*alpha))
            total = sum(F.components().values(), SchurVector.zero())
            from symfund.derivation import derive

            assert total == derive(schur(*alpha))
            assert F.degrees() == {d}


def test_hall_s_examples():
    assert hall_s(L((schur(1), 1)), L((schur(1), 2))) == 0
    assert hall_s(d_s(schur(2)), d_s(schur(2))) == 2
    assert hall_s(d_s(schur(3, 1)), d_s(schur(2, 2))) == 0


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 10).flatmap(lambda d: st.tuples(homogeneous_st(d), homogeneous_st(d), st.just(d))))
def test_d_s_quasi_isometry(fgd):
    f, g, d = fgd
    assert hall_s(d_s(f), d_s(g)) == d * hall_schur(f, g)


def test_star_examples():
    left = L((schur(2), 1), (1, 2))
    right = L((schur(1), 1), (1, 2))
    assert star(left, right) == L(
        (schur(3) + schur(2, 1), 1), (2 * schur(2) - schur(1, 1), 2), (1, 4)
    )
    assert star(L((1, 2)), L((1, 3))) == L((1, 6))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 3).flatmap(homogeneous_st), st.integers(0, 3).flatmap(homogeneous_st))
def test_star_on_label_one_is_the_product(f, g):
    assert star(L((f, 1)), L((g, 1))) == L((product(f, g), 1))


def test_plethysm_power_examples():
    assert plethysm_power(2, power(3)) == power(6)
    half = Fraction(1, 2)
    assert plethysm_power(2, schur_to_power(schur(2))) == PowerVector(
        {(0, 2): half, (0, 0, 0, 1): half}
    )
    assert plethysm_power(2, schur(2)) == monomial_to_schur(
        plethysm_oracle(power(2), schur(2), 4), 4
    )
    g = schur(2, 1) + 3 * schur(1)
    assert plethysm_power(1, g) == g
    with pytest.raises(ValueError):
        plethysm_power(0, g)


def test_plethysm_left_examples():
    assert plethysm_left(d_s(schur(2)), schur(2)) == L((schur(2), 1), (1, 2))
    F = d_s(schur(3, 1)) + L((schur(2, 2), 3))
    assert plethysm_left(F, schur(1)) == F
    assert d_s(schur(1, 1)) == L((schur(1), 1), (-1, 2))
    assert plethysm_left(d_s(schur(1, 1)), schur(1, 1)) == L((schur(1, 1), 1), (-1, 2))


def test_chain_rule_examples():
    assert chain_rule(schur(2), schur(2)) == L(
        (schur(3) + schur(2, 1), 1), (2 * schur(2) - schur(1, 1), 2), (1, 4)
    )
    assert chain_rule(schur(2), schur(1, 1)) == L(
        (schur(1, 1, 1) + schur(2, 1), 1), (schur(2) - 2 * schur(1, 1), 2), (-1, 4)
    )
    assert chain_rule(schur(1, 1), schur(1, 1)) == L(
        (schur(2, 1) + schur(1, 1, 1), 1), (-schur(2), 2), (1, 4)
    )


def test_support_bound_examples():
    assert support_bound((1, 1), (1, 1)) == (2, 4)
    assert support_bound((2,), (2,)) == (4, 2)
    assert support_bound((1,), (3, 1)) == (3, 2)


def test_plethysm_examples():
    assert plethysm((2,), (2,)) == schur(4) + schur(2, 2)
    assert plethysm((2,), (1, 1)) == schur(2, 2) + schur(1, 1, 1, 1)
    assert plethysm((1, 1), (1, 1)) == schur(2, 1, 1)
    assert plethysm((3,), (2,)) == schur(6) + schur(4, 2) + schur(2, 2, 2)
    assert plethysm((2, 1), (2,)) == schur(5, 1) + schur(4, 2) + schur(3, 2, 1)
    assert plethysm((), (3,)) == 1
    assert plethysm((1,), (3, 1)) == schur(3, 1)
    assert plethysm((2,), ()) == 1
    assert plethysm((1, 1), ()) == 0


def test_plethysm_threads_and_prune_agree(fresh_plethysm_cache):
    a = plethysm((2, 1), (2, 1), threads=4)
    fresh_plethysm_cache.clear()
    b = plethysm((2, 1), (2, 1), prune=False)
    fresh_plethysm_cache.clear()
    c = plethysm((2, 1), (2, 1))
    assert a == b == c
    assert c == schur_plethysm_oracle((2, 1), (2, 1))


def test_plethysm_general_examples():
    g = schur(2)
    assert plethysm_general(power_to_schur(power(2)), g) == plethysm_power(2, g)
    assert plethysm_general(schur(1), schur(3, 1) - schur(2)) == schur(3, 1) - schur(2)


@settings(max_examples=40, deadline=None)
@given(homogeneous_st(3), homogeneous_st(3), homogeneous_st(2))
def test_plethysm_general_is_linear_in_f(f1, f2, g):
    assert plethysm_general(f1 + f2, g) == plethysm_general(f1, g) + plethysm_general(f2, g)


def test_plethysm_general_matches_recursion():
    for alpha, beta in pairs_up_to(12, product=True):
        assert plethysm_general(schur(*alpha), schur(*beta)) == plethysm(alpha, beta)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([(a, b) for a in range(1, 6) for b in range(1, 6) if a * b <= 10]).flatmap(
        lambda ab: st.tuples(homogeneous_st(ab[0], 3, 3), homogeneous_st(ab[1], 3, 3))
    )
)
def test_chain_rule_on_random_inputs(fg):
    f, g = fg
    assert d_s(plethysm_general(f, g)) == chain_rule(f, g)


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from([(a, b, c) for a in (1, 2) for b in (1, 2) for c in (1, 2) if a * b * c <= 8]).flatmap(
        lambda abc: st.tuples(*(homogeneous_st(k, 3, 3) for k in abc))
    )
)
def test_plethysm_associative(fgh):
    f, g, h = fgh
    assert plethysm_general(f, plethysm_general(g, h)) == plethysm_general(plethysm_general(f, g), h)


def test_transpose_rule():
    # w(f[g]) = f[w g] for |g| even and (w f)[w g] for |g| odd
    for alpha, beta in pairs_up_to(10, product=True):
        lhs = plethysm(transpose(alpha), transpose(beta))
        twisted = transpose(alpha) if sum(beta) % 2 == 0 else alpha
        assert lhs == transpose_vector(plethysm(twisted, beta))


def test_transpose_rule_parity_is_not_the_other_way_round():
    # |beta| odd: s_{1,1}[s_1] = s_{1,1}, not w(s_{1,1}[s_1]) = s_2
    assert plethysm((1, 1), (1,)) == schur(1, 1)
    assert transpose_vector(plethysm((1, 1), (1,))) == schur(2)
    # |beta| even: s_{1,1}[s_{1,1}] = s_{2,1,1}, not w(s_2[s_2]) = s_{2,2} + s_{1,1,1,1}
    assert plethysm((1, 1), (1, 1)) == schur(2, 1, 1)
    assert transpose_vector(plethysm((2,), (2,))) == schur(2, 2) + schur(1, 1, 1, 1)


def test_decompose_examples():
    assert decompose_support(P4, 0) == (SchurVector.zero(), 1)
    assert decompose_support(P4 + schur(2, 2), 2) == (schur(2, 2), 1)
    assert decompose_support(schur(1, 1, 1, 1), 1) == (schur(1, 1, 1, 1), 0)
    assert decompose_support(schur(4), 1, "rows") == (schur(4), 0)
    assert decompose_support(-P4, 0, "rows") == (SchurVector.zero(), -1)


def test_decompose_errors():
    with pytest.raises(SupportError, match=r"label"):
        decompose_support(schur(2, 2), 1)
    with pytest.raises(ValueError):
        decompose_support(schur(2) + schur(1), 1)
    with pytest.raises(ValueError):
        decompose_support(schur(2, 2), 4)
    with pytest.raises(ValueError):
        decompose_support(schur(2, 2), 1, "diagonals")
    with pytest.raises(ValueError):
        decompose_support(SchurVector.zero(), 0)


def worked_case(t, a, b, c, d, e):
    """The degree-4 case table: impose the relations for D_s(f) on t columns."""
    if t <= 2:
        b = -a
    if t <= 1:
        c, d = 0, a
    if t == 0:
        e = -a
    f = a * schur(4) + b * schur(3, 1) + c * schur(2, 2) + d * schur(2, 1, 1) + e * schur(1, 1, 1, 1)
    expected = {
        3: (b + a) * schur(3, 1) + c * schur(2, 2) + (d - a) * schur(2, 1, 1) + (e + a) * schur(1, 1, 1, 1),
        2: c * schur(2, 2) + (d - a) * schur(2, 1, 1) + (e + a) * schur(1, 1, 1, 1),
        1: (e + a) * schur(1, 1, 1, 1),
        0: SchurVector.zero(),
    }[t]
    return f, expected


def test_degree_four_case_table():
    rng = random.Random(4)
    for t in (3, 2, 1, 0):
        for _ in range(25):
            a, b, c, d, e = (rng.randint(-9, 9) for _ in range(5))
            f, expected = worked_case(t, a, b, c, d, e)
            assert f == a * P4 + expected
            assert is_supported(d_s(f), t)
            assert decompose_support(f, t) == (expected, a)
    # with generic coefficients the support is exact
    for t in (3, 2, 1):
        f, _ = worked_case(t, 1, 2, 3, 5, 7)
        assert not is_supported(d_s(f), t - 1)


def random_supported(rng, d, t, mode):
    shapes = [a for a in parts_list(d) if (a[0] if mode == "columns" else len(a)) <= t]
    g = SchurVector({alpha: rng.randint(-5, 5) for alpha in rng.sample(shapes, min(len(shapes), 4))})
    m = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return g, m


@pytest.mark.parametrize("mode", ["columns", "rows"])
def test_decompose_recovers_random_constructions(mode):
    rng = random.Random(7 if mode == "columns" else 11)
    for _ in range(100):
        d = rng.randint(1, 9)
        t = rng.randint(0, d - 1)
        g, m = random_supported(rng, d, t, mode)
        f = g + power_to_schur(PowerVector({(0,) * (d - 1) + (1,): m}))
        if not f:
            continue
        assert decompose_support(f, t, mode) == (g, m)
