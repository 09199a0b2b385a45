#!/usr/bin/env python3
"""Walk through the rank-1 fundamental-domain construction.

For an abelian surface whose endomorphisms form the real quadratic field
Q(sqrt(d)), the nef cone {x1^2 - d*x2^2 >= 0, x1 >= 0} has irrational
boundary rays, yet the unit group tiles it by rational polyhedral cones:
take a rational ray R, act by the square of the fundamental unit, and the
wedge between R and g(R) is a fundamental domain.
"""

from amplecones import (
    fundamental_unit,
    is_totally_positive,
    real_mult_fundamental_domain,
    translate_locate,
    verify_fundamental_domain,
)
from amplecones.cli import render_svg

d = 2
unit = fundamental_unit(d)
print(f"fundamental unit of Z[sqrt({d})]: {unit.value}  (norm {unit.norm})")
eta = unit.value * unit.value
print(f"its square {eta} is totally positive: {is_totally_positive(eta)}")

pi, action = real_mult_fundamental_domain(d, (1, 0))
print(f"generator g = {action.generator_json()}  (multiplication by {eta})")
print(f"candidate domain pi = cone{list(pi.rays)}")

# where do individual points land in the tiling g^k(pi)?
for point in [(1, 0), (17, 12), (3, -2), (99, 70)]:
    k = translate_locate(point, pi, action)
    print(f"  {point} lies in g^{k}(pi)")

report = verify_fundamental_domain(pi, action, samples=500, max_word=12, seed=0)
print(
    f"verification: covering_ok={report.covering_ok}, "
    f"disjoint_ok={report.disjoint_ok}, deepest translate |k|={report.words_used}"
)

# the same construction works for every squarefree d
for d in (3, 5, 7, 11, 13):
    pi_d, action_d = real_mult_fundamental_domain(d, (1, 0))
    rep = verify_fundamental_domain(pi_d, action_d, samples=200, max_word=12, seed=0)
    print(f"d={d:2}: g={action_d.generator_json()}  ok={rep.covering_ok and rep.disjoint_ok}")

svg = render_svg(pi, action, k_range=4)
out = "real_multiplication_d2.svg"
with open(out, "w", encoding="utf-8") as handle:
    handle.write(svg)
print(f"wrote a picture of the tiling to {out}")
