#!/usr/bin/env python3
"""Tour of the self-dual matrix cones over R, C, and H.

Everything is exact: positive definiteness is decided by rational LDL*
pivots, the LDL* factors witness homogeneity, the trace pairing exhibits
self-duality, and the 2x2 real cone is secretly a Lorentz cone.
"""

from fractions import Fraction

from amplecones import (
    AlgebraMatrix,
    HermitianMatrix,
    LorentzVector,
    RationalQuaternion,
    ScalarKind,
    act,
    hermitian_dimension,
    is_positive_definite,
    ldl_witness,
    lorentz_member,
    negative_certificate,
    quadratic_value,
    trace_inner_product,
)

R, C, H = ScalarKind.REAL, ScalarKind.COMPLEX, ScalarKind.QUATERNION

print("dimensions of the spaces of self-adjoint r x r matrices:")
for r in range(1, 5):
    dims = [hermitian_dimension(kind, r) for kind in (R, C, H)]
    print(f"  r={r}: over R -> {dims[0]}, over C -> {dims[1]}, over H -> {dims[2]}")

# membership and the constructive witness
d = HermitianMatrix(R, [[2, -1], [-1, 2]])
print(f"\n{d!r} positive definite: {is_positive_definite(d)}")
lower, delta = ldl_witness(d)
print(f"LDL* witness: L={lower!r}, delta={delta}")
print(f"recomposes exactly: {act(lower.star(), HermitianMatrix.diagonal(R, delta)) == d}")

# a quaternionic example: diagonal 2s with a j off the diagonal
j = RationalQuaternion(0, 0, 1, 0)
q = HermitianMatrix(H, [[2, j], [-j, 2]])
print(f"\nquaternionic {q!r}: pd={is_positive_definite(q)}, <q, q>={trace_inner_product(q, q)}")

# a failed membership comes with a direction of negativity
bad = HermitianMatrix(R, [[1, 2], [2, 1]])
v = negative_certificate(bad)
print(f"\n{bad!r} is indefinite; v={v} gives v*Dv = {quadratic_value(bad, v)}")

# the P_2(R) <-> Lorentz dictionary: [[p,q],[q,s]] ~ (p+s, p-s, 2q)
print("\nLorentz dictionary on a few sample forms:")
for p, q_, s in [(2, 1, 3), (1, 1, 1), (Fraction(5, 2), -1, 1)]:
    m = HermitianMatrix(R, [[p, q_], [q_, s]])
    vec = LorentzVector([p + s, p - s, 2 * q_])
    print(
        f"  [[{p},{q_}],[{q_},{s}]]: pd={is_positive_definite(m)}, "
        f"lorentz={lorentz_member(vec)}"
    )

# the action D -> M* D M moves points around the cone without leaving it
m = AlgebraMatrix(R, [[1, 1], [0, 1]])
moved = act(m, d)
print(f"\nacting by {m!r}: {moved!r} (still pd: {is_positive_definite(moved)})")
