import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import gf_mul, gf_trace
from qbch.finite_field import (
    TABLE_BASIS_EXPONENTS,
    FieldTower,
    basis_from_exponents,
    default_basis,
    expand_element,
    find_self_dual_basis,
    gf,
    is_irreducible,
    is_self_dual_basis,
    minimal_polynomial,
    poly_eval,
    reconstruct_element,
    smallest_irreducible,
    trace,
)

U3 = 0b1011  # u^3 = u + 1
V4 = 0b10011  # v^4 = v + 1
W5 = 0b100101  # w^5 = w^2 + 1
Z6 = 0b1011011  # z^6 = z^4 + z^3 + z + 1


def test_default_moduli_match_caption_fields():
    assert [gf(ell).modulus for ell in (3, 4, 5, 6)] == [U3, V4, W5, Z6]
    assert gf(2).modulus == 0b111


@pytest.mark.parametrize("ell", range(1, 11))
def test_field_ctx_invariants(ell):
    ctx = gf(ell)
    assert is_irreducible(ctx.modulus)
    x, order = ctx.generator, 1
    while x != 1:
        x = ctx.mul(x, ctx.generator)
        order += 1
    assert order == ctx.order - 1


def test_smallest_irreducible_is_lexicographic():
    assert smallest_irreducible(2) == 0b111
    assert smallest_irreducible(3) == 0b1011
    assert smallest_irreducible(8) == 0b100011011


def test_reducible_modulus_rejected():
    from qbch.finite_field import FieldCtx

    with pytest.raises(ValueError):
        FieldCtx(2, 0b101)


@pytest.mark.parametrize("ell", [2, 3, 5, 6])
def test_mul_matches_shift_and_add_oracle(ell):
    ctx = gf(ell)
    for a in range(ctx.order):
        for b in range(ctx.order):
            assert ctx.mul(a, b) == gf_mul(a, b, ctx.modulus)


@pytest.mark.parametrize("ell", [17, 20])
def test_mul_without_tables(ell):
    ctx = gf(ell)
    for a, b in [(3, 5), (ctx.order - 1, 12345), (1 << (ell - 1), 7)]:
        assert ctx.mul(a, b) == gf_mul(a, b, ctx.modulus)


elements = st.integers(min_value=1, max_value=6).flatmap(
    lambda ell: st.tuples(
        st.just(ell), *[st.integers(min_value=0, max_value=(1 << ell) - 1) for _ in range(3)]
    )
)


@settings(max_examples=300)
@given(elements)
def test_field_axioms(sample):
    ell, a, b, c = sample
    ctx = gf(ell)
    assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
    assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)
    assert ctx.mul(a ^ b, a ^ b) == ctx.mul(a, a) ^ ctx.mul(b, b)
    if a:
        assert ctx.mul(a, ctx.inv(a)) == 1
        assert ctx.div(ctx.mul(a, b), a) == b


@settings(max_examples=200)
@given(elements)
def test_trace_linear_and_binary(sample):
    ell, a, b, _ = sample
    ctx = gf(ell)
    assert trace(a ^ b, ctx) == trace(a, ctx) ^ trace(b, ctx)
    assert trace(a, ctx) == gf_trace(a, ctx.modulus) in (0, 1)


def test_trace_examples():
    assert trace(1, gf(1)) == 1
    assert trace(0b10, gf(2)) == 1  # w + w^2 = 1
    for ell in range(1, 7):
        ctx = gf(ell)
        assert trace(0, ctx) == 0
        assert {trace(x, ctx) for x in range(ctx.order)} == {0, 1}


@pytest.mark.parametrize(
    "ell, exponents",
    [(3, (3, 6, 5)), (4, (3, 7, 13, 12)), (5, (9, 18, 5, 10, 20)), (6, (12, 24, 48, 33, 3, 6))],
)
def test_caption_bases_are_self_dual(ell, exponents):
    ctx = gf(ell)
    basis = basis_from_exponents(exponents, ctx)
    assert is_self_dual_basis(basis, ctx)
    assert TABLE_BASIS_EXPONENTS[ell] == exponents
    # oracle: trace Gram matrix by brute force
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            assert gf_trace(gf_mul(a, b, ctx.modulus), ctx.modulus) == (i == j)


def test_polynomial_basis_is_not_self_dual():
    assert not is_self_dual_basis((1, 0b10, 0b100), gf(3))


def test_basis_length_mismatch():
    with pytest.raises(ValueError):
        is_self_dual_basis((1, 2), gf(3))


@pytest.mark.parametrize("ell", range(1, 9))
def test_found_self_dual_basis(ell):
    ctx = gf(ell)
    assert is_self_dual_basis(find_self_dual_basis(ctx), ctx)
    assert is_self_dual_basis(default_basis(ell), ctx)


def test_gram_test_matches_bruteforce_on_all_gf8_triples():
    ctx = gf(3)
    for a in range(1, 8):
        for b in range(1, 8):
            for c in range(1, 8):
                basis = (a, b, c)
                brute = all(
                    gf_trace(gf_mul(x, y, ctx.modulus), ctx.modulus) == (i == j)
                    for i, x in enumerate(basis)
                    for j, y in enumerate(basis)
                )
                assert is_self_dual_basis(basis, ctx) == brute


def test_expand_examples():
    ctx = gf(2)
    basis = (0b10, 0b11)  # (w, w^2)
    assert expand_element(1, basis, ctx) == [1, 1]
    assert expand_element(0, basis, ctx) == [0, 0]
    b8 = default_basis(3)
    assert expand_element(b8[0], b8, gf(3)) == [1, 0, 0]
    with pytest.raises(ValueError):
        expand_element(1, (1, 2, 4), gf(3))


@pytest.mark.parametrize("ell", range(1, 7))
def test_expand_then_reconstruct_is_identity(ell):
    ctx = gf(ell)
    basis = default_basis(ell)
    for x in range(ctx.order):
        assert reconstruct_element(expand_element(x, basis, ctx), basis) == x


def test_minimal_polynomial_examples():
    tower = FieldTower(gf(1), 3)
    big = tower.big
    assert minimal_polynomial(0, tower) == [0, 1]
    assert minimal_polynomial(1, tower) == [1, 1]
    alpha = 0b10
    assert big.modulus == 0b1011
    assert minimal_polynomial(alpha, tower) == [1, 1, 0, 1]


@pytest.mark.parametrize("q, m", [(2, 4), (2, 6), (4, 3), (8, 2), (16, 2)])
def test_minimal_polynomial_properties(q, m):
    small = gf(q.bit_length() - 1)
    tower = FieldTower(small, m)
    big = tower.big
    for beta in range(1, big.order, max(1, big.order // 40)):
        poly = minimal_polynomial(beta, tower)
        assert poly[-1] == 1
        lifted = [tower.to_big(c) for c in poly]
        assert poly_eval(lifted, beta, big) == 0
        # degree = size of the orbit under x -> x^q
        orbit, x = {beta}, big.pow(beta, q)
        while x not in orbit:
            orbit.add(x)
            x = big.pow(x, q)
        assert len(poly) - 1 == len(orbit)


def test_tower_embedding_is_a_homomorphism():
    tower = FieldTower(gf(2), 3)
    small, big = tower.small, tower.big
    for a in range(4):
        for b in range(4):
            assert tower.to_big(small.mul(a, b)) == big.mul(tower.to_big(a), tower.to_big(b))
            assert tower.to_big(a ^ b) == tower.to_big(a) ^ tower.to_big(b)
    with pytest.raises(ValueError):
        tower.to_small(next(x for x in range(big.order) if not tower.in_subfield(x)))


def test_degree_limits():
    from qbch.finite_field import MAX_DEGREE, FieldCtx, splitting_tower

    with pytest.raises(ValueError):
        FieldCtx(MAX_DEGREE + 1)
    tower, alpha = splitting_tower(37, 2)  # ord_37(2) = 36
    assert tower.big.ell == 36
    assert tower.big.pow(alpha, 37) == 1 and alpha != 1
