import numpy as np
import pytest

from qbch import linalg
from qbch.basis_expand import basis_from_json, basis_to_json, collapse_word, expand_code, expanded_dual_consistency
from qbch.cyclic_code import code_from_zero_set, dual_code
from qbch.cyclotomic import ZeroSet, enumerate_self_dual_zero_sets
from qbch.distance import blockwise_min_weight, min_weight_exhaustive
from qbch.finite_field import default_basis, expand_element, gf
from sweeps import expansion_consistency


def test_ell_one_is_identity(hamming7):
    assert expand_code(hamming7, (1,)) == hamming7
    assert expanded_dual_consistency(hamming7, (1,))


def test_gf4_expansion_reconstructs():
    code = code_from_zero_set(ZeroSet.of(5, 4, [0, 1, 4]))
    basis = (0b10, 0b11)
    image = expand_code(code, basis)
    assert (image.n, image.k) == (10, 4)
    for row in image.gen:
        symbols = collapse_word(row, basis, 4)
        assert code.contains_word(symbols)


def test_f8_expansion_dimensions():
    zs = ZeroSet.from_cosets(21, 8, [0, 1, 3, 5, 7, 9])
    code = code_from_zero_set(ZeroSet(21, 8, tuple(z for z in range(21) if z in zs.residues)))
    image = expand_code(code, default_basis(3))
    assert image.n == 63 and image.k == 3 * code.k


def test_f8_code_of_21_9_entry():
    found = [z for z in enumerate_self_dual_zero_sets(7, 8) if 7 - 2 * (7 - len(z)) == 3]
    assert found
    code = code_from_zero_set(found[0])
    image = expand_code(code, default_basis(3))
    assert (image.n, image.k) == (21, 3 * code.k) == (21, 6)


def test_non_self_dual_basis_rejected_and_breaks_duality():
    code = code_from_zero_set(ZeroSet.of(7, 8, [1]))
    poly = (1, 0b10, 0b100)
    with pytest.raises(ValueError, match="self-dual"):
        expand_code(code, poly)
    counterexamples = [
        zs for zs in enumerate_self_dual_zero_sets(7, 8) if not expanded_dual_consistency(code_from_zero_set(zs), poly)
    ]
    assert counterexamples


def test_expansion_sweep_n21_f8():
    checked, failures = expansion_consistency(21, 8)
    assert checked > 100 and not failures


@pytest.mark.parametrize("n, q", [(7, 8), (5, 16), (9, 8), (3, 16)])
def test_block_weight_equals_symbol_weight(n, q):
    ell = gf(q.bit_length() - 1).ell
    basis = default_basis(ell)
    for zs in enumerate_self_dual_zero_sets(n, q)[:12]:
        for code in (code_from_zero_set(zs), dual_code(code_from_zero_set(zs))):
            if code.k == 0 or q**code.k > 1 << 16:
                continue
            image = expand_code(code, basis)
            dq = blockwise_min_weight(image, ell)
            assert dq == min_weight_exhaustive(code)
            assert min_weight_exhaustive(image) >= dq


def test_expansion_preserves_weak_self_duality():
    for zs in enumerate_self_dual_zero_sets(15, 8)[:20]:
        image = expand_code(code_from_zero_set(zs), default_basis(3))
        assert not linalg.matmul(image.gen, image.gen.T, linalg.GF2).any()


def test_basis_json_roundtrip():
    basis = default_basis(4)
    data = basis_to_json(basis, 16)
    assert data["ell"] == 4 and data["modulus"] == 0b10011
    assert basis_from_json(data) == basis


def test_expanded_codewords_collapse_back():
    basis = default_basis(3)
    ctx = gf(3)
    code = code_from_zero_set(ZeroSet.of(7, 8, [1, 2, 4]))
    image = expand_code(code, basis)
    for w in code.encode(np.eye(code.k, dtype=np.int64)):
        bits = np.array([c for x in w for c in expand_element(int(x), basis, ctx)])
        assert linalg.in_row_space(bits[None, :], image.gen)
        assert list(collapse_word(bits, basis, 8)) == list(w)
