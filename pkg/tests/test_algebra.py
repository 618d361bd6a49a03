"""The algebra A: relations, Hopf structure, tau elements, q-combinatorics."""

import pytest

from taftvar.algebra import make_algebra

CTXS = [make_algebra(2, 2, 5), make_algebra(3, 2, 7), make_algebra(2, 3, 5)]


@pytest.mark.parametrize("ctx", CTXS, ids=["l2m2", "l3m2", "l2m3"])
def test_defining_relations(ctx):
    F = ctx.field
    one = ctx.one()
    for i in range(ctx.m):
        assert (ctx.x(i) ** ctx.ell).is_zero()
        assert ctx.g(i) ** ctx.ell == one
        for j in range(ctx.m):
            lhs = ctx.g(i) * ctx.x(j)
            scale = F.q if i == j else 1
            assert lhs == (ctx.x(j) * ctx.g(i)) * scale
            assert ctx.x(i) * ctx.x(j) == ctx.x(j) * ctx.x(i)
            assert ctx.g(i) * ctx.g(j) == ctx.g(j) * ctx.g(i)


@pytest.mark.parametrize("ctx", CTXS, ids=["l2m2", "l3m2", "l2m3"])
def test_tau_nilpotent_of_exact_order(ctx):
    lam = [1] * ctx.m
    t = ctx.tau(lam)
    assert not (t ** (ctx.ell - 1)).is_zero()
    assert (t ** ctx.ell).is_zero()


def test_tau_m1_is_x():
    ctx = make_algebra(3, 1, 7)
    assert ctx.tau([1]) == ctx.x(0)


@pytest.mark.parametrize("ctx", CTXS, ids=["l2m2", "l3m2", "l2m3"])
def test_idempotents(ctx):
    chars = ctx.characters()
    es = [ctx.idempotent(chi) for chi in chars]
    total = ctx.zero()
    for e in es:
        total = total + e
        assert e * e == e
    assert total == ctx.one()
    for a, ea in zip(chars, es):
        for b, eb in zip(chars, es):
            if a != b:
                assert (ea * eb).is_zero()


@pytest.mark.parametrize("ctx", CTXS, ids=["l2m2", "l3m2", "l2m3"])
def test_hopf_axioms_on_generators(ctx):
    from taftvar.algebra import AlgElem

    for u in [ctx.x(i) for i in range(ctx.m)] + [ctx.g(i) for i in range(ctx.m)]:
        d = ctx.coproduct(u)
        assert d.apply_counit_left() == u
        assert d.apply_counit_right() == u
        anti = d.map_left(ctx.antipode).contract_mul()
        assert anti == AlgElem(ctx, {0: ctx.counit(u)})


def test_coproduct_is_multiplicative():
    ctx = make_algebra(3, 2, 7)
    u = ctx.x(0) * ctx.g(1) + ctx.x(1)
    v = ctx.g(0) * ctx.x(1)
    assert ctx.coproduct(u * v) == ctx.coproduct(u) * ctx.coproduct(v)


def test_antipode_is_antihomomorphism():
    ctx = make_algebra(3, 2, 7)
    u = ctx.x(0) * ctx.g(1)
    v = ctx.x(1) + ctx.g(0)
    assert ctx.antipode(u * v) == ctx.antipode(v) * ctx.antipode(u)


def test_q_combinatorics():
    ctx = make_algebra(3, 1, 7)
    assert ctx.field.q == 2
    # [2]_q = 1 + q = 3; [3]_q = 1 + q + q^2 = 7 = 0 in F_7
    assert ctx.q_int(2) == 3
    assert ctx.q_int(3) == 0
    assert ctx.q_factorial(2) == 3
    # Gaussian binomial (2 choose 1)_q = 1 + q = 3
    assert ctx.q_binomial(2, 1) == 3
    # (3 choose 1)_q = [3]_q = 0 at a primitive 3rd root
    assert ctx.q_binomial(3, 1) == 0


def test_x_power_truncation_in_products():
    ctx = make_algebra(2, 1, 5)
    x = ctx.x(0)
    assert (x * x).is_zero()
    g = ctx.g(0)
    assert g * g == ctx.one()


def test_h_elements():
    ctx = make_algebra(3, 2, 7)
    assert ctx.h_elem(0) == ctx.one()
    assert ctx.h_elem(1) == ctx.g(0)
