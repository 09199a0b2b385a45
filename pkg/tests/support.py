"""Shared generators and independent oracles for the test suite.

Everything here is deliberately implemented from first principles (brute
force, enumeration, direct linear algebra) so that library code paths are
checked against genuinely independent computations.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from amplecones import (
    AbelianVarietyModel,
    AlbertForm,
    AlbertRealType,
    AlgebraMatrix,
    GaussianRational,
    HermitianMatrix,
    RationalQuaternion,
    ScalarKind,
    SimpleFactor,
)

MATRIX_KINDS = (ScalarKind.REAL, ScalarKind.COMPLEX, ScalarKind.QUATERNION)


# --- random scalars -----------------------------------------------------------

def random_fraction(rng: random.Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def random_scalar(rng: random.Random, kind: ScalarKind, span: int = 3):
    if kind is ScalarKind.REAL:
        return random_fraction(rng, span)
    if kind is ScalarKind.COMPLEX:
        return GaussianRational(random_fraction(rng, span), random_fraction(rng, span))
    return RationalQuaternion(
        random_fraction(rng, span),
        random_fraction(rng, span),
        random_fraction(rng, span),
        random_fraction(rng, span),
    )


def conj_scalar(value):
    return value if isinstance(value, Fraction) else value.conjugate()


# --- random matrices ----------------------------------------------------------

def random_algebra_matrix(
    rng: random.Random, kind: ScalarKind, size: int, span: int = 3
) -> AlgebraMatrix:
    return AlgebraMatrix(
        kind,
        [[random_scalar(rng, kind, span) for _ in range(size)] for _ in range(size)],
    )


def random_invertible_matrix(
    rng: random.Random, kind: ScalarKind, size: int, span: int = 3
) -> AlgebraMatrix:
    while True:
        m = random_algebra_matrix(rng, kind, size, span)
        if m.is_invertible():
            return m


def random_pd_matrix(
    rng: random.Random, kind: ScalarKind, size: int, span: int = 3
) -> HermitianMatrix:
    m = random_invertible_matrix(rng, kind, size, span)
    prod = m.star() * m
    return HermitianMatrix(kind, prod.entries)


def random_hermitian_matrix(
    rng: random.Random, kind: ScalarKind, size: int, span: int = 4
) -> HermitianMatrix:
    rows = [[None] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = Fraction(rng.randint(-span, span))
        for j in range(i + 1, size):
            v = random_scalar(rng, kind, span)
            rows[i][j] = v
            rows[j][i] = conj_scalar(v)
    return HermitianMatrix(kind, rows)


def rank_one_plus_shift(v, kind: ScalarKind, shift: Fraction) -> HermitianMatrix:
    """The positive-definite matrix v v* + shift * I (shift > 0)."""
    n = len(v)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = v[i] * conj_scalar(v[j])
            if i == j:
                entry = entry + shift
            row.append(entry)
        rows.append(row)
    return HermitianMatrix(kind, rows)


# --- brute-force number theory -------------------------------------------------

def pell_scan(d: int, bound: int) -> tuple[int, int, int] | None:
    """Smallest (a, b, norm) with a^2 - d b^2 = +-1, scanning b = 1..bound."""
    for b in range(1, bound + 1):
        for norm in (1, -1):
            a2 = d * b * b + norm
            if a2 < 0:
                continue
            a = math.isqrt(a2)
            if a * a == a2 and a > 0:
                return a, b, norm
    return None


def square_scan(q: Fraction) -> bool:
    """Is q a rational square?  Linear scan, no isqrt."""
    n = q.numerator * q.denominator  # q = n / den^2
    s = 0
    while s * s < n:
        s += 1
    return s * s == n


# --- SL(2, Z) word oracle -------------------------------------------------------

_S = ((0, -1), (1, 0))
_T = ((1, 1), (0, 1))
_TINV = ((1, -1), (0, 1))


def _mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _form_transform(form, u):
    g11, g12, g22 = form
    a, b = u[0]
    c, d = u[1]
    return (
        g11 * a * a + 2 * g12 * a * c + g22 * c * c,
        g11 * a * b + g12 * (a * d + b * c) + g22 * c * d,
        g11 * b * b + 2 * g12 * b * d + g22 * d * d,
    )


def form_lex_key(form):
    g11, g12, g22 = form
    sign = (g12 > 0) - (g12 < 0)
    return (g11, g22, abs(g12), -sign)


def sl2z_word_minimum(form, max_length: int = 6):
    """Lexicographic minimum of U^T G U over all words of length <= max_length
    in the generators S, T (inverses included)."""
    identity = ((1, 0), (0, 1))
    frontier = {identity}
    seen = {identity}
    best = form
    for _ in range(max_length):
        nxt = set()
        for u in frontier:
            for gen in (_S, _T, _TINV):
                w = _mat_mul(u, gen)
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        frontier = nxt
        for u in frontier:
            candidate = _form_transform(form, u)
            if form_lex_key(candidate) < form_lex_key(best):
                best = candidate
    return best


def random_pd_form(rng: random.Random, span: int = 50):
    while True:
        g11 = rng.randint(1, span)
        g12 = rng.randint(-span, span)
        g22 = rng.randint(1, span)
        if g11 > 0 and g11 * g22 - g12 * g12 > 0:
            return (g11, g12, g22)


# --- 2D slope-interval oracle ---------------------------------------------------

def random_right_halfplane_cone_rays(rng: random.Random, span: int = 9):
    """Two non-proportional integer rays with positive first coordinate."""
    while True:
        u = (rng.randint(1, span), rng.randint(-span, span))
        v = (rng.randint(1, span), rng.randint(-span, span))
        if u[0] * v[1] - u[1] * v[0] != 0:
            return [u, v]


def slope_interval(rays) -> tuple[Fraction, Fraction]:
    slopes = sorted(Fraction(y, x) for x, y in rays)
    return slopes[0], slopes[-1]


def slope_interval_intersection(rays_a, rays_b):
    """Rays of the intersection of two right-halfplane sectors, or None."""
    lo = max(slope_interval(rays_a)[0], slope_interval(rays_b)[0])
    hi = min(slope_interval(rays_a)[1], slope_interval(rays_b)[1])
    if lo > hi:
        return None
    rays = {(s.denominator, s.numerator) for s in {lo, hi}}
    return sorted(rays)


# --- random abelian-variety models ----------------------------------------------

def random_model(rng: random.Random, max_factors: int = 4) -> AbelianVarietyModel:
    count = rng.randint(1, max_factors)
    factors = []
    for index in range(count):
        form = rng.choice(list(AlbertForm))
        factors.append(
            SimpleFactor(
                id=f"X{index}",
                albert=AlbertRealType(form=form, m=rng.randint(1, 3)),
                multiplicity=rng.randint(1, 3),
            )
        )
    return AbelianVarietyModel(factors=tuple(factors))


# --- exact rank over Q -----------------------------------------------------------

def _scalar_components(value):
    if isinstance(value, Fraction):
        return [value]
    if isinstance(value, GaussianRational):
        return [value.re, value.im]
    return [value.w, value.x, value.y, value.z]


def flatten_hermitian(matrix: HermitianMatrix) -> list[Fraction]:
    out = []
    for row in matrix.entries:
        for value in row:
            out.extend(_scalar_components(value))
    return out


def rational_rank(vectors) -> int:
    rows = [list(map(Fraction, v)) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_col = 0
    while rank < len(rows) and pivot_col < cols:
        pivot = next(
            (r for r in range(rank, len(rows)) if rows[r][pivot_col] != 0), None
        )
        if pivot is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][pivot_col]
        for r in range(rank + 1, len(rows)):
            if rows[r][pivot_col] != 0:
                factor = rows[r][pivot_col] / lead
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        pivot_col += 1
    return rank
