"""Exact rational polyhedral cones in low dimension.

Cones are stored by generators (primitive integer rays, orientation
preserved).  Closed membership is decided by Fourier-Motzkin feasibility of
the nonnegative-combination system; interior membership and intersections go
through the double description method, which converts between generators and
facet inequalities over exact rationals.  Intersections are supported up to
ambient dimension 4.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import InvalidInput, ShapeMismatch, UnsupportedDimension

MAX_INTERSECTION_DIM = 4


def primitive_vector(v) -> tuple[int, ...]:
    """Scale a nonzero rational vector by a positive factor to a primitive
    integer vector (orientation is preserved)."""
    vt = tuple(v)
    if all(type(c) is int for c in vt):
        g = 0
        for c in vt:
            g = math.gcd(g, c)
        if g == 0:
            raise InvalidInput("zero vector has no primitive representative")
        return vt if g == 1 else tuple(c // g for c in vt)
    fracs = [Fraction(c) for c in vt]
    if not any(fracs):
        raise InvalidInput("zero vector has no primitive representative")
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return tuple(c // g for c in ints)


class RayClass:
    """A rational ray, stored as its primitive integer direction vector.

    Orientation matters: the rays through v and -v are different objects.
    When an unoriented comparison is wanted, use :meth:`unoriented_key`,
    which flips the sign so the first nonzero coordinate is positive.
    """

    __slots__ = ("vector",)

    def __init__(self, vector) -> None:
        object.__setattr__(self, "vector", primitive_vector(vector))

    def __setattr__(self, name, value):
        raise AttributeError("RayClass is immutable")

    def unoriented_key(self) -> tuple[int, ...]:
        v = self.vector
        for c in v:
            if c != 0:
                return v if c > 0 else tuple(-x for x in v)
        raise InvalidInput("zero ray")

    def __eq__(self, other):
        if not isinstance(other, RayClass):
            return NotImplemented
        return self.vector == other.vector

    def __hash__(self):
        return hash(self.vector)

    def __repr__(self):
        return f"RayClass({list(self.vector)})"


def _dot(a, b) -> Fraction:
    return sum(Fraction(x) * Fraction(y) for x, y in zip(a, b))


# --- Fourier-Motzkin feasibility -------------------------------------------
#
# A constraint is (coeffs, const, strict) meaning sum(c_i x_i) + const >= 0,
# with > instead of >= when strict is set.

def _fm_feasible(constraints, nvars: int) -> bool:
    cons = [(tuple(Fraction(c) for c in coeffs), Fraction(const), strict)
            for coeffs, const, strict in constraints]
    for j in range(nvars):
        keep, lower, upper = [], [], []
        for c in cons:
            cj = c[0][j]
            if cj == 0:
                keep.append(c)
            elif cj > 0:
                lower.append(c)
            else:
                upper.append(c)
        cons = keep
        for lo in lower:
            for up in upper:
                s, t = lo[0][j], -up[0][j]
                coeffs = tuple(
                    t * a + s * b for a, b in zip(lo[0], up[0])
                )
                cons.append((coeffs, t * lo[1] + s * up[1], lo[2] or up[2]))
    for coeffs, const, strict in cons:
        if strict:
            if const <= 0:
                return False
        elif const < 0:
            return False
    return True


_FM_FREE_VAR_LIMIT = 4


def _nonneg_combination_feasible(rays, v, dim: int) -> bool:
    """Is v a nonnegative rational combination of the given rays?

    The equalities sum(lambda_i r_i) = v are eliminated first by exact
    Gaussian substitution, so Fourier-Motzkin only ever sees the handful of
    free variables left over.  With many generators (so many leftover free
    variables) FM would still blow up; membership is then decided through
    the dual description instead, which stays exact and small here.
    """
    m = len(rays)
    # augmented system [A | v] with A's columns the rays
    rows = [
        [Fraction(rays[i][coord]) for i in range(m)] + [Fraction(v[coord])]
        for coord in range(dim)
    ]
    pivots: list[tuple[int, int]] = []  # (row, column)
    row = 0
    for col in range(m):
        pivot = next((r for r in range(row, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        lead = rows[row][col]
        rows[row] = [x / lead for x in rows[row]]
        for r in range(len(rows)):
            if r != row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[row])]
        pivots.append((row, col))
        row += 1
        if row == len(rows):
            break
    for r in range(row, len(rows)):
        if rows[r][m] != 0:
            return False  # v is not even in the span of the rays
    pivot_cols = {col for _, col in pivots}
    free_cols = [c for c in range(m) if c not in pivot_cols]
    if len(free_cols) > _FM_FREE_VAR_LIMIT:
        lin_dual, facets = _extreme_rays(rays, dim)
        if any(_dot(l, v) != 0 for l in lin_dual):
            return False
        return all(_dot(f, v) >= 0 for f in facets)
    index = {c: k for k, c in enumerate(free_cols)}
    # lambda_i >= 0 as affine constraints in the free variables
    cons = []
    for r, col in pivots:
        coeffs = [Fraction(0)] * len(free_cols)
        for c in free_cols:
            coeffs[index[c]] = -rows[r][c]
        cons.append((tuple(coeffs), rows[r][m], False))
    for c in free_cols:
        unit = tuple(
            Fraction(1) if k == index[c] else Fraction(0)
            for k in range(len(free_cols))
        )
        cons.append((unit, Fraction(0), False))
    return _fm_feasible(cons, len(free_cols))


# --- Double description ------------------------------------------------------

def _extreme_rays(normals, dim: int):
    """Lineality basis and extreme rays of {x : <a, x> >= 0 for all a}.

    Standard incremental double description with the combinatorial adjacency
    test; ray vectors are kept primitive to control coefficient growth.
    """
    lin = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))
           for i in range(dim)]
    rays: list[dict] = []
    for idx, a in enumerate(normals):
        scores = [_dot(a, l) for l in lin]
        hit = next((i for i, s in enumerate(scores) if s != 0), None)
        if hit is not None:
            l0, s0 = lin[hit], scores[hit]
            if s0 < 0:
                l0 = tuple(-c for c in l0)
                s0 = -s0
            new_lin = []
            for i, (l, s) in enumerate(zip(lin, scores)):
                if i == hit:
                    continue
                new_lin.append(tuple(c - (s / s0) * c0 for c, c0 in zip(l, l0)))
            lin = new_lin
            for r in rays:
                s = _dot(a, r["v"])
                if s != 0:
                    r["v"] = primitive_vector(
                        tuple(c - (s / s0) * c0 for c, c0 in zip(r["v"], l0))
                    )
                r["zero"].add(idx)
            rays.append({"v": primitive_vector(l0), "zero": set(range(idx))})
            continue
        pos, zero, neg = [], [], []
        for r in rays:
            s = _dot(a, r["v"])
            if s > 0:
                pos.append((r, s))
            elif s == 0:
                zero.append(r)
            else:
                neg.append((r, s))
        for r in zero:
            r["zero"].add(idx)
        fresh = []
        current = [r for r, _ in pos] + zero + [r for r, _ in neg]
        for p, sp in pos:
            for n, sn in neg:
                common = p["zero"] & n["zero"]
                if any(
                    r is not p and r is not n and common <= r["zero"]
                    for r in current
                ):
                    continue
                combo = tuple(
                    sp * cn - sn * cp for cp, cn in zip(p["v"], n["v"])
                )
                fresh.append(
                    {"v": primitive_vector(combo), "zero": (common | {idx})}
                )
        rays = [r for r, _ in pos] + zero + fresh
    return lin, [r["v"] for r in rays]


def _prune_redundant(rays, dim: int):
    """Drop duplicate rays and rays generated by the remaining ones."""
    unique = []
    for r in rays:
        if r not in unique:
            unique.append(r)
    kept = list(unique)
    for r in list(kept):
        others = [s for s in kept if s is not r]
        if others and _nonneg_combination_feasible(others, r, dim):
            kept.remove(r)
    return kept


def _facet_description(cone: "PolyhedralCone"):
    """Equations and facet inequalities cutting out the cone.

    The dual cone of cone(R) is {y : <y, r> >= 0}; its lineality basis gives
    equations (the span constraints) and its extreme rays give the facet
    normals.
    """
    lin, facets = _extreme_rays(cone.rays, cone.dim)
    return lin, facets


class PolyhedralCone:
    """Finitely many rational generator rays in a fixed-dimension space.

    Rays are normalized to primitive integer vectors with orientation kept.
    Construction rejects proportional ray pairs (in particular v and -v)
    and cones whose closure contains a line.
    """

    __slots__ = ("dim", "rays")

    def __init__(self, dim: int, rays) -> None:
        if dim < 1:
            raise InvalidInput("ambient dimension must be positive")
        normalized = []
        for ray in rays:
            ray = tuple(ray)
            if len(ray) != dim:
                raise ShapeMismatch(
                    f"ray {ray} does not live in dimension {dim}"
                )
            normalized.append(primitive_vector(ray))
        if not normalized:
            raise InvalidInput("a polyhedral cone needs at least one ray")
        unoriented = set()
        for v in normalized:
            key = v if next(c for c in v if c) > 0 else tuple(-c for c in v)
            if key in unoriented:
                raise InvalidInput(f"proportional rays detected: {v}")
            unoriented.add(key)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rays", tuple(normalized))
        if self._contains_line():
            raise InvalidInput("cone closure contains a line")

    def __setattr__(self, name, value):
        raise AttributeError("PolyhedralCone is immutable")

    def _contains_line(self) -> bool:
        # cone(R) is non-pointed iff -r lies in cone(R) for some generator r
        if len(self.rays) == 1:
            return False
        if self.dim == 2 and len(self.rays) == 2:
            return False  # non-proportional rays in the plane span a sector
        for r in self.rays:
            if _nonneg_combination_feasible(
                self.rays, tuple(-c for c in r), self.dim
            ):
                return True
        return False

    def transform(self, matrix) -> "PolyhedralCone":
        """Image cone under an invertible integer/rational matrix (rows)."""
        rows = [tuple(Fraction(c) for c in row) for row in matrix]
        if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
            raise ShapeMismatch("matrix shape does not match cone dimension")
        images = []
        for ray in self.rays:
            images.append(tuple(_dot(row, ray) for row in rows))
        return PolyhedralCone(self.dim, images)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rays]

    def __eq__(self, other):
        if not isinstance(other, PolyhedralCone):
            return NotImplemented
        return self.dim == other.dim and set(self.rays) == set(other.rays)

    def __hash__(self):
        return hash((self.dim, frozenset(self.rays)))

    def __repr__(self):
        return f"PolyhedralCone({self.dim}, {[list(r) for r in self.rays]})"


def poly_member(cone: PolyhedralCone, v, interior: bool = False) -> bool:
    """Closed mode: is v a nonnegative combination of the rays?  Interior
    mode: does v lie in the topological interior relative to the ambient
    space (empty unless the cone is full-dimensional)?"""
    v = tuple(v)
    if len(v) != cone.dim:
        raise ShapeMismatch(f"point {v} does not live in dimension {cone.dim}")
    if not interior:
        if not any(v):
            return True
        target = primitive_vector(v)
        if cone.dim == 2 and len(cone.rays) == 2:
            (u1, u2), (w1, w2) = cone.rays
            det = u1 * w2 - u2 * w1
            alpha = target[0] * w2 - target[1] * w1
            beta = u1 * target[1] - u2 * target[0]
            if det < 0:
                alpha, beta = -alpha, -beta
            return alpha >= 0 and beta >= 0
        if len(cone.rays) == 1:
            ray = cone.rays[0]
            pivot = next(i for i, c in enumerate(ray) if c)
            if target[pivot] * ray[pivot] <= 0:
                return False
            return all(
                target[i] * ray[pivot] == ray[i] * target[pivot]
                for i in range(cone.dim)
            )
        return _nonneg_combination_feasible(cone.rays, target, cone.dim)
    equations, facets = _facet_description(cone)
    if equations:
        return False  # not full-dimensional: empty interior
    return all(_dot(f, v) > 0 for f in facets)


def cone_intersection(a: PolyhedralCone, b: PolyhedralCone):
    """Generators of the intersection via double description, or None when
    the cones meet only at the origin."""
    if a.dim != b.dim:
        raise ShapeMismatch("cones live in different dimensions")
    if a.dim > MAX_INTERSECTION_DIM:
        raise UnsupportedDimension(
            f"intersections are supported up to dimension {MAX_INTERSECTION_DIM}"
        )
    normals = []
    for cone in (a, b):
        equations, facets = _facet_description(cone)
        for e in equations:
            normals.append(e)
            normals.append(tuple(-c for c in e))
        normals.extend(facets)
    lin, rays = _extreme_rays(normals, a.dim)
    assert not lin, "intersection of pointed cones cannot contain a line"
    rays = _prune_redundant([primitive_vector(r) for r in rays], a.dim)
    if not rays:
        return None
    return PolyhedralCone(a.dim, sorted(rays))


def is_square_rational(q) -> bool:
    """Is the positive rational q the square of a rational number?"""
    q = Fraction(q)
    if q <= 0:
        raise InvalidInput(f"expected a positive rational, got {q}")
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    return rn * rn == num and rd * rd == den
