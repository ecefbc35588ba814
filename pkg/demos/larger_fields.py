"""
Quaternary and extension-field codes
====================================

A Hermitian self-orthogonal GF(4) code, then an F_8 code expanded in a
self-dual basis, with binary and blockwise distances side by side.
"""

from qbch.basis_expand import expand_code, expanded_dual_consistency
from qbch.cyclic_code import code_from_zero_set, dual_code, hermitian_orthogonal_gf4
from qbch.cyclotomic import ZeroSet, orthogonal_zero_set_gf4
from qbch.distance import min_weight_exhaustive
from qbch.finite_field import default_basis, gf, is_self_dual_basis
from qbch.quantum import build_qbch, search_qbch

zs = ZeroSet.from_cosets(5, 4, [0, 1])
c = code_from_zero_set(zs)
star = hermitian_orthogonal_gf4(c)
print("Z =", zs.residues, " Z* =", orthogonal_zero_set_gf4(zs).residues)
print(f"C = [5,{c.k},{min_weight_exhaustive(c)}]   C* = [5,{star.k},{min_weight_exhaustive(star)}]")
print(build_qbch(zs).label)

# F_8 with u^3 = u + 1 and the basis (u^3, u^6, u^5)
basis = default_basis(3)
print("basis", [bin(b) for b in basis], "self-dual:", is_self_dual_basis(basis, gf(3)))

c8 = code_from_zero_set(ZeroSet.of(7, 8, [0, 1, 2, 3, 4]))
image = expand_code(c8, basis)
print(f"[7,{c8.k}] over F_8 -> [{image.n},{image.k}] binary; duality kept: {expanded_dual_consistency(c8, basis)}")
print("dual of the image has", dual_code(image).k, "rows")

for r in search_qbch(7, 8, "extension"):
    print(f"{r.label:<16} Z={r.zero_set.representatives()}  d2={r.d2} dq={r.dq}")
