#!/usr/bin/env python3
"""Reduction of positive-definite binary quadratic forms under SL(2, Z).

Every form is equivalent to exactly one reduced representative with
0 <= 2|g12| <= g11 <= g22 (and g12 >= 0 on the boundary); the change of
basis comes back as an explicit SL(2, Z) matrix.
"""

import random

from amplecones import IntegralForm, UnimodularMatrix, minkowski_reduce

examples = [
    (1, 0, 1),
    (5, 4, 5),
    (1, 3, 10),
    (43, 37, 32),
    (122, 111, 101),
]
print("form (g11, g12, g22) -> reduced form, with basis change U:")
for triple in examples:
    form = IntegralForm(*triple)
    gred, u = minkowski_reduce(form)
    assert form.transformed(u) == gred
    print(f"  {triple} -> ({gred.g11}, {gred.g12}, {gred.g22})   U = {u.rows()}")

# reduction never changes the determinant, and the orbit collapses:
# equivalent forms land on the same representative
rng = random.Random(0)
base = IntegralForm(2, 1, 3)
print(f"\nrandomly scrambled copies of ({base.g11}, {base.g12}, {base.g22}):")
for _ in range(5):
    scrambled = base
    for _ in range(6):
        step = rng.choice(
            [UnimodularMatrix.shear(rng.randint(-3, 3)), UnimodularMatrix.swap()]
        )
        scrambled = scrambled.transformed(step)
    gred, _ = minkowski_reduce(scrambled)
    print(
        f"  ({scrambled.g11}, {scrambled.g12}, {scrambled.g22}) "
        f"-> ({gred.g11}, {gred.g12}, {gred.g22})"
    )
