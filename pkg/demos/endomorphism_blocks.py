#!/usr/bin/env python3
"""From isogeny data to ample cones.

A model records the simple factors up to isogeny: each carries the real
form of its endomorphism division algebra and a multiplicity.  The real
endomorphism algebra is then a product of matrix algebras over R, C, H;
divisor classes are the self-adjoint elements, the Picard number is the
dimension count, and the ample cone is the direct sum of the blocks'
positive-definite cones.
"""

from amplecones import (
    AbelianVarietyModel,
    AlbertForm,
    AlbertRealType,
    SimpleFactor,
    ample_cone,
    bauer_rational_polyhedral,
    endo_real_decomposition,
    picard_number,
    surface_nef_data,
)


def show(label, model):
    blocks = endo_real_decomposition(model).blocks
    desc = " + ".join(f"H_{b.size}({b.kind.value})[{b.origin}]" for b in blocks)
    print(f"{label}:")
    print(f"  blocks: {desc}")
    print(f"  Picard number: {picard_number(model)}")
    print(f"  ample cone: {ample_cone(model)!r}")
    print(f"  nef cone rational polyhedral: {bauer_rational_polyhedral(model)}")


def factor(fid, form, m=1, n=1):
    return SimpleFactor(id=fid, albert=AlbertRealType(form=form, m=m), multiplicity=n)


# two non-isogenous elliptic curves: a finite automorphism group suffices
show(
    "E1 x E2 (non-isogenous)",
    AbelianVarietyModel([
        factor("E1", AlbertForm.REAL_SPLIT),
        factor("E2", AlbertForm.REAL_SPLIT),
    ]),
)

# the square of a non-CM elliptic curve: a genuinely round cone P_2(R)
show("E x E (no CM)", AbelianVarietyModel([factor("E", AlbertForm.REAL_SPLIT, n=2)]))

# with complex multiplication the blocks become complex Hermitian
show("E x E (CM)", AbelianVarietyModel([factor("E", AlbertForm.COMPLEX_SPLIT, n=2)]))

# a simple surface with real multiplication: two blocks, one factor
show("real-multiplication surface", AbelianVarietyModel([
    factor("J", AlbertForm.REAL_SPLIT, m=2),
]))

# a supersingular-type factor contributes a quaternionic block
show("quaternionic factor, squared", AbelianVarietyModel([
    factor("S", AlbertForm.QUATERNION_SPLIT, n=2),
]))

# the surface dichotomy in coordinates: diag(a, -b) intersection forms
print("\nboundary rays of diag(a, -b) surfaces:")
for a, b in [(1, 1), (4, 1), (1, 2), (9, 4), (5, 3)]:
    data = surface_nef_data(a, b)
    if data.rational_polyhedral:
        print(f"  a={a}, b={b}: rational rays {list(data.rays)}")
    else:
        print(f"  a={a}, b={b}: irrational rays v1 +- ({data.rays[0]}) v2")
