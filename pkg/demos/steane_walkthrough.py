"""
From cyclotomic cosets to a seven-qubit code
============================================

Cosets mod 7, a weakly self-dual zero set, the nested pair C <= C^perp,
and the code states with their Hadamard images.
"""

import numpy as np

from qbch.cyclic_code import code_from_zero_set, dual_code, generator_polynomial
from qbch.cyclotomic import ZeroSet, all_cosets, dual_zero_set, is_weakly_self_dual
from qbch.distance import min_weight_exhaustive, min_weight_outside_subcode
from qbch.quantum import build_qbch, code_states, hadamard_identity_error, orthonormality_error

# cosets of 2 mod 7
print([sorted(c) for c in all_cosets(7, 2)])

zs = ZeroSet.from_cosets(7, 2, [0, 3])
print("Z =", zs.residues, " Z_perp =", dual_zero_set(zs).residues, " weakly self-dual:", is_weakly_self_dual(zs))

c = code_from_zero_set(zs)
big = dual_code(c)
print("g(X) coefficients:", generator_polynomial(zs))
print(f"C = [7,{c.k},{min_weight_exhaustive(c)}]   C_perp = [7,{big.k},{min_weight_exhaustive(big)}]")
print("d' over C_perp minus C:", min_weight_outside_subcode(big, c))

record = build_qbch(zs)
print(record.label, record.flags)

states = code_states(c)
print("states:", states.shape, " nonzero amplitudes per state:", np.count_nonzero(states, axis=1))
print(f"orthonormality error {orthonormality_error(states):.1e}, Hadamard identity error {hadamard_identity_error(c):.1e}")
