import numpy as np
import pytest

from oracles import all_codewords, min_weight, poly_mul_gf2, rank_gf2
from qbch import linalg
from qbch.cyclic_code import (
    LinearCode,
    binary_image,
    bits_to_symbols,
    code_from_zero_set,
    conjugate,
    contains,
    dual_code,
    even_weight_subcode,
    generator_polynomial,
    hermitian_form,
    hermitian_orthogonal_gf4,
    is_cyclic,
    symbols_to_bits,
)
from qbch.cyclotomic import ZeroSet, all_cosets, dual_zero_set, enumerate_self_dual_zero_sets
from qbch.finite_field import field_for_size, poly_divmod


def Z(n, q, *residues):
    return ZeroSet.of(n, q, residues)


def as_int(coeffs):
    return sum(c << i for i, c in enumerate(coeffs))


def test_generator_polynomial_hamming():
    g = generator_polynomial(Z(7, 2, 1, 2, 4))
    assert g == [1, 1, 0, 1]  # X^3 + X + 1
    # divides X^7 - 1: (X^3+X+1)(X^4+X^2+X+1) = X^7+1
    assert poly_mul_gf2(as_int(g), 0b10111) == (1 << 7) | 1


def test_generator_polynomial_trivial_cases():
    assert generator_polynomial(Z(7, 2, 0)) == [1, 1]
    assert generator_polynomial(Z(7, 2)) == [1]


@pytest.mark.parametrize("n, q", [(15, 2), (21, 2), (5, 4), (15, 4), (7, 8), (9, 16)])
def test_generator_polynomial_divides_xn_minus_1(n, q):
    ctx = field_for_size(q)
    for b in all_cosets(n, q):
        zs = ZeroSet(n, q, tuple(b))
        g = generator_polynomial(zs)
        assert len(g) - 1 == len(zs) and g[-1] == 1
        _, rem = poly_divmod([1] + [0] * (n - 1) + [1], g, ctx)
        assert rem == []


def test_code_from_zero_set_examples(hamming7, simplex7):
    assert (hamming7.n, hamming7.k) == (7, 4)
    assert min_weight(all_codewords(hamming7.gen, 2, 0b11)) == 3
    assert (simplex7.n, simplex7.k) == (7, 3)
    assert min_weight(all_codewords(simplex7.gen, 2, 0b11)) == 4
    full = code_from_zero_set(Z(7, 2))
    assert full.k == 7 and full == LinearCode.full(7)


@pytest.mark.parametrize("n, q", [(15, 2), (31, 2), (13, 4), (21, 4), (7, 8)])
def test_codes_are_cyclic_with_right_dimension(n, q):
    for zs in enumerate_self_dual_zero_sets(n, q, hermitian=q == 4)[:20]:
        code = code_from_zero_set(zs)
        assert code.k == n - len(zs)
        assert is_cyclic(code)
        assert linalg.rank(code.gen, code.field) == code.k


def test_dual_code_examples(hamming7, simplex7):
    dual = dual_code(hamming7)
    assert dual == simplex7
    assert not linalg.matmul(hamming7.gen, dual.gen.T, linalg.GF2).any()
    assert dual_code(LinearCode.full(7)).k == 0
    assert dual.zero_set == dual_zero_set(hamming7.zero_set)


def test_dual_via_check_polynomial_matches_kernel():
    # h(X) = (X^15 - 1) / g(X); the dual is generated by the reversal of h
    zs = Z(15, 2, 1, 2, 4, 8)
    code = code_from_zero_set(zs)
    g = generator_polynomial(zs)
    h, rem = poly_divmod([1] + [0] * 14 + [1], g, field_for_size(2))
    assert rem == []
    rev = h[::-1]
    rows = np.zeros((15 - len(h) + 1, 15), dtype=np.int64)
    for i in range(rows.shape[0]):
        rows[i, i : i + len(rev)] = rev
    assert linalg.row_space_equal(rows, dual_code(code).gen)
    assert rank_gf2(rows) == 15 - code.k


@pytest.mark.parametrize("n", [7, 15, 21, 23, 31])
def test_dual_zero_set_matches_kernel_dual(n):
    for zs in enumerate_self_dual_zero_sets(n, 2):
        dual = dual_code(code_from_zero_set(zs))
        direct = code_from_zero_set(dual_zero_set(zs))
        assert dual == direct


def test_hermitian_orthogonal_examples():
    code = code_from_zero_set(Z(5, 4, 0, 1, 4))
    star = hermitian_orthogonal_gf4(code)
    assert (star.n, star.k) == (5, 3)
    assert star.zero_set.residues == (1, 4)
    assert star == code_from_zero_set(Z(5, 4, 1, 4))
    assert not hermitian_form(code.gen, star.gen).any()
    assert hermitian_orthogonal_gf4(star) == code
    assert hermitian_orthogonal_gf4(LinearCode.zero(5, 4)).k == 5
    with pytest.raises(ValueError):
        hermitian_orthogonal_gf4(code_from_zero_set(Z(7, 2, 0)))


def test_conjugate_is_involution():
    code = code_from_zero_set(Z(15, 4, 1, 4))
    assert conjugate(conjugate(code)) == code


def test_contains_examples(hamming7, simplex7):
    assert contains(hamming7, simplex7)
    assert not contains(simplex7, hamming7)
    assert contains(hamming7, hamming7)
    with pytest.raises(ValueError):
        contains(hamming7, LinearCode.full(5))


def test_even_weight_subcode_examples(hamming7, simplex7):
    even = even_weight_subcode(hamming7)
    assert even.k == 3 and even == simplex7
    assert even_weight_subcode(simplex7) == simplex7
    with pytest.raises(ValueError):
        even_weight_subcode(code_from_zero_set(Z(5, 4, 0)))


def test_even_weight_subcode_of_49_bch():
    big = dual_code(code_from_zero_set(ZeroSet.from_cosets(49, 2, [0, 1, 7])))
    assert big.k == 25
    even = even_weight_subcode(big)
    assert even.k == 24
    assert even == code_from_zero_set(ZeroSet.from_cosets(49, 2, [0, 1, 7]))


def test_generator_in_rref_and_full_rank(rng):
    for _ in range(20):
        rows = rng.integers(0, 2, size=(8, 12))
        code = LinearCode(12, 2, rows)
        assert code.k == rank_gf2(rows)
        assert linalg.row_space_equal(rows, code.gen)
        reduced, _ = linalg.rref(code.gen)
        assert np.array_equal(reduced, code.gen)


def test_binary_image_block_weights():
    code = code_from_zero_set(Z(7, 8, 1))
    image = binary_image(code)
    assert (image.n, image.k) == (21, 3 * code.k)
    words = code.encode(np.eye(code.k, dtype=np.int64))
    bits = symbols_to_bits(words, 3)
    assert np.array_equal(bits_to_symbols(bits, 3), words)
    assert linalg.in_row_space(bits, image.gen)


def test_json_roundtrip(hamming7):
    assert LinearCode.from_json(hamming7.to_json()) == hamming7
    assert set(hamming7.to_json()) == {"n", "q", "k", "generator_rows"}


@pytest.mark.parametrize("n, q", [(21, 2), (45, 4), (7, 8), (51, 16)])
def test_generator_polynomial_matches_direct_root_product(n, q):
    from qbch.finite_field import product_of_linear_factors, splitting_tower

    tower, alpha = splitting_tower(n, q)
    for zs in enumerate_self_dual_zero_sets(n, q)[:10]:
        roots = [tower.big.pow(alpha, z) for z in zs.residues]
        direct = [tower.to_small(c) for c in product_of_linear_factors(roots, tower.big)]
        assert generator_polynomial(zs) == direct
