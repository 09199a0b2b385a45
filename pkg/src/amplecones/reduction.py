"""Desk-scale reduction theory in rank 2.

Three pieces: Lagrange-Gauss reduction of positive-definite integral binary
forms to the classical reduced domain 0 <= 2|g12| <= g11 <= g22 (with a sign
convention on the boundary), location of points inside translates of a
candidate cone under an infinite-cyclic group action on a quadratic cone,
and a sampling verifier for the two fundamental-domain axioms: translates
cover the open cone, and distinct translates have disjoint interiors.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    InvalidInput,
    NotFundamental,
    NotInCone,
    NotPositiveDefinite,
    PreconditionViolated,
    ShapeMismatch,
)
from .polyhedral import PolyhedralCone, cone_intersection, poly_member, primitive_vector


@dataclass(frozen=True)
class IntegralForm:
    """Gram matrix [[g11, g12], [g12, g22]] of a positive-definite form."""

    g11: int
    g12: int
    g22: int

    def __post_init__(self):
        if self.g11 <= 0 or self.g11 * self.g22 - self.g12 * self.g12 <= 0:
            raise NotPositiveDefinite(
                f"form ({self.g11}, {self.g12}, {self.g22}) is not positive definite"
            )

    @property
    def det(self) -> int:
        return self.g11 * self.g22 - self.g12 * self.g12

    def is_reduced(self) -> bool:
        return 0 <= 2 * abs(self.g12) <= self.g11 <= self.g22

    def transformed(self, u: "UnimodularMatrix") -> "IntegralForm":
        """The equivalent form U^T G U."""
        a, b, c, d = u.a, u.b, u.c, u.d
        g11 = self.g11 * a * a + 2 * self.g12 * a * c + self.g22 * c * c
        g12 = (
            self.g11 * a * b
            + self.g12 * (a * d + b * c)
            + self.g22 * c * d
        )
        g22 = self.g11 * b * b + 2 * self.g12 * b * d + self.g22 * d * d
        return IntegralForm(g11, g12, g22)


@dataclass(frozen=True)
class UnimodularMatrix:
    """[[a, b], [c, d]] with integer entries and determinant +1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise InvalidInput("matrix is not in SL(2, Z)")

    @classmethod
    def identity(cls) -> "UnimodularMatrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def shear(cls, k: int) -> "UnimodularMatrix":
        """The power T^k of the standard shear T = [[1, 1], [0, 1]]."""
        return cls(1, k, 0, 1)

    @classmethod
    def swap(cls) -> "UnimodularMatrix":
        """The standard rotation S = [[0, -1], [1, 0]]."""
        return cls(0, -1, 1, 0)

    def __mul__(self, other):
        if not isinstance(other, UnimodularMatrix):
            return NotImplemented
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


def minkowski_reduce(G: IntegralForm) -> tuple[IntegralForm, UnimodularMatrix]:
    """Canonical reduced representative of G under SL(2, Z), with the change
    of basis: returns (Gred, U) with Gred = U^T G U, 0 <= 2|g12| <= g11 <= g22,
    and g12 >= 0 whenever 2|g12| = g11 or g11 = g22.

    Alternately shears g12 into [-g11/2, g11/2] and swaps the diagonal when
    g11 > g22; g11 strictly decreases across swaps, so this terminates.
    """
    g = G
    u = UnimodularMatrix.identity()
    while True:
        # round(-g12/g11) with ties upward puts g12 + k*g11 in (-g11/2, g11/2],
        # so 2|g12| = g11 already lands on the g12 >= 0 side
        k = (g.g11 - 2 * g.g12) // (2 * g.g11)
        if k != 0:
            t = UnimodularMatrix.shear(k)
            g = g.transformed(t)
            u = u * t
        if g.g11 > g.g22:
            s = UnimodularMatrix.swap()
            g = g.transformed(s)
            u = u * s
            continue
        break
    if g.g12 < 0 and g.g11 == g.g22:
        s = UnimodularMatrix.swap()
        g = g.transformed(s)
        u = u * s
    return g, u


def _fraction_matrix(rows):
    out = [tuple(Fraction(c) for c in row) for row in rows]
    if len(out) != 2 or any(len(r) != 2 for r in out):
        raise ShapeMismatch("expected a 2 x 2 matrix")
    return tuple(out)


def _scale_to_int_matrix(rows):
    lcm = 1
    for row in rows:
        for c in row:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [[int(c * lcm) for c in row] for row in rows]
    g = 0
    for row in ints:
        for c in row:
            g = math.gcd(g, c)
    return tuple(tuple(c // g for c in row) for row in ints)


def _mat_vec(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


class GroupAction2D:
    """An infinite-cyclic group action on the quadratic cone
    {a*x1^2 - b*x2^2 > 0, x1 > 0}.

    The generator must preserve the form a*x1^2 - b*x2^2 up to a positive
    scalar and map the x1 > 0 sheet to itself.  Internally a primitive
    integer scaling of the generator (and of its inverse) is kept, which is
    all that ray computations need.
    """

    __slots__ = ("generator", "a", "b", "_fwd", "_bwd")

    def __init__(self, generator, a, b) -> None:
        a, b = Fraction(a), Fraction(b)
        if a <= 0 or b <= 0:
            raise InvalidInput("cone parameters a, b must be positive")
        rows = _fraction_matrix(generator)
        det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        if det == 0:
            raise InvalidInput("generator is singular")
        # form preservation up to a positive scalar mu
        g11, g12, g21, g22 = rows[0][0], rows[0][1], rows[1][0], rows[1][1]
        q11 = a * g11 * g11 - b * g21 * g21
        q12 = a * g11 * g12 - b * g21 * g22
        q22 = a * g12 * g12 - b * g22 * g22
        mu = q11 / a
        if mu <= 0 or q12 != 0 or q22 != -mu * b:
            raise InvalidInput("generator does not preserve the quadratic cone")
        if g11 <= 0:
            raise InvalidInput("generator swaps the two sheets of the cone")
        fwd = _scale_to_int_matrix(rows)
        d = fwd[0][0] * fwd[1][1] - fwd[0][1] * fwd[1][0]
        sign = 1 if d > 0 else -1
        bwd = (
            (sign * fwd[1][1], -sign * fwd[0][1]),
            (-sign * fwd[1][0], sign * fwd[0][0]),
        )
        object.__setattr__(self, "generator", rows)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "_fwd", fwd)
        object.__setattr__(self, "_bwd", bwd)

    def __setattr__(self, name, value):
        raise AttributeError("GroupAction2D is immutable")

    def form_value(self, v) -> Fraction:
        x1, x2 = Fraction(v[0]), Fraction(v[1])
        return self.a * x1 * x1 - self.b * x2 * x2

    def open_member(self, v) -> bool:
        return Fraction(v[0]) > 0 and self.form_value(v) > 0

    def closed_member(self, v) -> bool:
        return Fraction(v[0]) >= 0 and self.form_value(v) >= 0

    def apply(self, v, k: int = 1):
        """g^k applied to a rational vector, exactly."""
        x = (Fraction(v[0]), Fraction(v[1]))
        m = self.generator
        if k < 0:
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
            m = (
                (m[1][1] / det, -m[0][1] / det),
                (-m[1][0] / det, m[0][0] / det),
            )
            k = -k
        for _ in range(k):
            x = _mat_vec(m, x)
        return x

    def ray_image(self, ray, k: int = 1) -> tuple[int, ...]:
        """Primitive integer direction of g^k applied to a ray."""
        v = primitive_vector(ray)
        m = self._fwd if k >= 0 else self._bwd
        for _ in range(abs(k)):
            v = _mat_vec(m, v)
        return primitive_vector(v)

    def translate_cone(self, pi: PolyhedralCone, k: int) -> PolyhedralCone:
        return PolyhedralCone(2, [self.ray_image(r, k) for r in pi.rays])

    def generator_json(self) -> list[list]:
        return [
            [_fraction_json(c) for c in row] for row in self.generator
        ]


def _fraction_json(f: Fraction):
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class DomainReport:
    """Outcome of a fundamental-domain verification run."""

    covering_ok: bool
    disjoint_ok: bool
    witnesses: tuple = field(default_factory=tuple)
    words_used: int = 0

    def __post_init__(self):
        if not self.covering_ok and not any(
            w.get("kind") == "uncovered" for w in self.witnesses
        ):
            raise InvalidInput("covering failure requires a witness point")

    @property
    def ok(self) -> bool:
        return self.covering_ok and self.disjoint_ok

    def to_json_dict(self) -> dict:
        return {
            "covering_ok": self.covering_ok,
            "disjoint_ok": self.disjoint_ok,
            "witnesses": [dict(w) for w in self.witnesses],
            "words_used": self.words_used,
        }


def _upper_boundary_ray(pi: PolyhedralCone, action: GroupAction2D):
    """The generator of pi that the action carries the other generator onto,
    if pi is of the form cone{R, g(R)}; None otherwise.

    Points on that ray belong to the next translate, making the located
    index a well-defined, shift-equivariant function.
    """
    if len(pi.rays) != 2:
        return None
    u, v = pi.rays
    if action.ray_image(u, 1) == v:
        return v
    if action.ray_image(v, 1) == u:
        return u
    return None


def _on_ray(v, ray) -> bool:
    pivot = next(i for i, c in enumerate(ray) if c)
    if v[pivot] * ray[pivot] <= 0:
        return False
    return all(v[i] * ray[pivot] == ray[i] * v[pivot] for i in range(len(ray)))


def translate_locate(
    p,
    pi: PolyhedralCone,
    action: GroupAction2D,
    max_word: int = 24,
) -> int:
    """The index k with g^(-k) p in pi, scanning |k| <= max_word.

    Cells are half open: a point on the shared ray of pi and g(pi) is
    assigned to the translate on whose lower boundary it sits, so locating
    commutes with the group action.
    """
    p = (Fraction(p[0]), Fraction(p[1]))
    if not action.open_member(p):
        raise NotInCone(f"point {p} is outside the open cone")
    if pi.dim != 2:
        raise ShapeMismatch("translate location works in the plane")
    upper = _upper_boundary_ray(pi, action)
    v = primitive_vector(p)
    q = action.ray_image(v, max_word)  # g^(-k) p for k = -max_word
    for k in range(-max_word, max_word + 1):
        if poly_member(pi, q, interior=False) and (
            upper is None or not _on_ray(q, upper)
        ):
            return k
        q = action.ray_image(q, -1)
    raise NotFundamental(
        f"translates g^k pi with |k| <= {max_word} miss the point {p}"
    )


def verify_fundamental_domain(
    pi: PolyhedralCone,
    action: GroupAction2D,
    samples: int = 500,
    max_word: int = 12,
    seed: int = 0,
) -> DomainReport:
    """Check both fundamental-domain axioms at desk scale.

    Covering: every one of ``samples`` seeded rational points of the open
    cone lies in some translate g^k pi with |k| <= max_word.  Disjointness:
    for 1 <= |k| <= max_word the interiors of pi and g^k pi do not meet
    (tested exactly through cone intersection).  The report is a
    deterministic function of (pi, action, samples, max_word, seed); each
    sample's verdict is independent of the others.
    """
    if samples < 1 or max_word < 1:
        raise InvalidInput("samples and max_word must be positive")
    for ray in pi.rays:
        if not action.closed_member(ray):
            raise PreconditionViolated(
                f"generator {ray} of pi is outside the closed cone"
            )
    rng = random.Random(seed)
    # the form is proportional to A*x1^2 - B*x2^2 with integer A, B
    A = action.a.numerator * action.b.denominator
    B = action.b.numerator * action.a.denominator
    points = []
    while len(points) < samples:
        n1, d1 = rng.randint(1, 60), rng.randint(1, 20)
        n2, d2 = rng.randint(-60, 60), rng.randint(1, 20)
        x, y = n1 * d2, n2 * d1
        if A * x * x > B * y * y:
            points.append((Fraction(n1, d1), Fraction(n2, d2), (x, y)))

    witnesses = []
    covering_ok = True
    words_used = 0
    for x1, x2, direction in points:
        try:
            k = translate_locate(direction, pi, action, max_word=max_word)
        except NotFundamental:
            covering_ok = False
            witnesses.append(
                {
                    "kind": "uncovered",
                    "point": [_fraction_json(x1), _fraction_json(x2)],
                }
            )
            continue
        words_used = max(words_used, abs(k))

    disjoint_ok = True
    for k in [k for step in range(1, max_word + 1) for k in (step, -step)]:
        translate = action.translate_cone(pi, k)
        overlap = cone_intersection(pi, translate)
        if overlap is None or len(overlap.rays) < 2:
            continue  # meets in at most a ray: interiors stay disjoint
        disjoint_ok = False
        interior_point = tuple(
            sum(r[i] for r in overlap.rays) for i in range(2)
        )
        witnesses.append(
            {
                "kind": "overlap",
                "k": k,
                "point": [int(c) for c in primitive_vector(interior_point)],
            }
        )

    return DomainReport(
        covering_ok=covering_ok,
        disjoint_ok=disjoint_ok,
        witnesses=tuple(witnesses),
        words_used=words_used,
    )
