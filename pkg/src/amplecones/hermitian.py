"""Symmetric and Hermitian matrix cones over R, C, and H, with exact verdicts.

The open cone of positive-definite matrices in each Hermitian space is
homogeneous and self-dual for the pairing Re Tr(x y*); membership is decided
by exact LDL* elimination (all pivots are rational because Hermitian
diagonals are), and the witness D = L diag(delta) L* doubles as a
constructive homogeneity certificate.  The invertible matrices act by
D -> M* D M.  Direct sums of these cones and of Lorentz cones are described
by :class:`ConeSpec`.

The 27-dimensional exceptional cone is representable as a block tag only;
every arithmetic operation on it raises :class:`~amplecones.errors.Unsupported`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidInput,
    NotPositiveDefinite,
    ShapeMismatch,
    SingularMatrix,
    Unsupported,
)
from .scalars import GaussianRational, RationalQuaternion

_RationalLike = (int, Fraction)


class ScalarKind(enum.Enum):
    REAL = "R"
    COMPLEX = "C"
    QUATERNION = "H"
    OCTONION = "O"

    @property
    def imaginary_units(self):
        if self is ScalarKind.REAL:
            return ()
        if self is ScalarKind.COMPLEX:
            return (GaussianRational(0, 1),)
        if self is ScalarKind.QUATERNION:
            return (
                RationalQuaternion(0, 1, 0, 0),
                RationalQuaternion(0, 0, 1, 0),
                RationalQuaternion(0, 0, 0, 1),
            )
        raise Unsupported("octonion arithmetic is not provided")


def hermitian_dimension(kind: ScalarKind, r: int) -> int:
    """Real dimension of the space of r x r self-adjoint matrices over kind."""
    if r < 1:
        raise InvalidInput(f"matrix size must be positive, got {r}")
    if kind is ScalarKind.REAL:
        return r * (r + 1) // 2
    if kind is ScalarKind.COMPLEX:
        return r * r
    if kind is ScalarKind.QUATERNION:
        return r * (2 * r - 1)
    if r != 3:
        raise Unsupported("the exceptional cone exists only in size 3")
    return 27


def _coerce_entry(kind: ScalarKind, value):
    if kind is ScalarKind.REAL:
        if isinstance(value, _RationalLike):
            return Fraction(value)
    elif kind is ScalarKind.COMPLEX:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, _RationalLike):
            return GaussianRational(value)
    elif kind is ScalarKind.QUATERNION:
        if isinstance(value, RationalQuaternion):
            return value
        if isinstance(value, _RationalLike):
            return RationalQuaternion(value)
    else:
        raise Unsupported("octonion entries are not supported")
    raise ShapeMismatch(f"entry {value!r} does not belong to scalar kind {kind.value}")


def _conj(v):
    return v if isinstance(v, Fraction) else v.conjugate()


def _real_part(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, GaussianRational):
        return v.re
    return v.w


def _zero(kind: ScalarKind):
    return _coerce_entry(kind, 0)


def _one(kind: ScalarKind):
    return _coerce_entry(kind, 1)


class AlgebraMatrix:
    """Square matrix over one scalar kind, with no symmetry constraint."""

    __slots__ = ("kind", "size", "entries")

    def __init__(self, kind: ScalarKind, rows) -> None:
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ShapeMismatch("matrix must be square and nonempty")
        entries = tuple(
            tuple(_coerce_entry(kind, v) for v in row) for row in rows
        )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraMatrix is immutable")

    @classmethod
    def identity(cls, kind: ScalarKind, n: int) -> "AlgebraMatrix":
        one, zero = _one(kind), _zero(kind)
        return cls(kind, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, kind: ScalarKind, values) -> "AlgebraMatrix":
        values = list(values)
        zero = _zero(kind)
        return cls(
            kind,
            [
                [values[i] if i == j else zero for j in range(len(values))]
                for i in range(len(values))
            ],
        )

    def _require_compatible(self, other):
        if self.kind is not other.kind or self.size != other.size:
            raise ShapeMismatch(
                f"incompatible matrices: {self.kind.value}^{self.size} vs "
                f"{other.kind.value}^{other.size}"
            )

    def __mul__(self, other):
        if isinstance(other, HermitianMatrix):
            other = other.to_algebra()
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        self._require_compatible(other)
        n = self.size
        a, b = self.entries, other.entries
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = a[i][0] * b[0][j]
                for k in range(1, n):
                    acc = acc + a[i][k] * b[k][j]
                row.append(acc)
            rows.append(row)
        return AlgebraMatrix(self.kind, rows)

    def __add__(self, other):
        if isinstance(other, HermitianMatrix):
            other = other.to_algebra()
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        self._require_compatible(other)
        return AlgebraMatrix(
            self.kind,
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.size)]
                for i in range(self.size)
            ],
        )

    def __neg__(self):
        return AlgebraMatrix(
            self.kind, [[-v for v in row] for row in self.entries]
        )

    def star(self) -> "AlgebraMatrix":
        """Conjugate transpose."""
        n = self.size
        return AlgebraMatrix(
            self.kind,
            [[_conj(self.entries[j][i]) for j in range(n)] for i in range(n)],
        )

    def is_invertible(self) -> bool:
        """Exact Gaussian elimination over the (possibly skew) scalar field."""
        n = self.size
        a = [list(row) for row in self.entries]
        for col in range(n):
            pivot_row = None
            for i in range(col, n):
                if a[i][col]:
                    pivot_row = i
                    break
            if pivot_row is None:
                return False
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv = (
                1 / a[col][col]
                if isinstance(a[col][col], Fraction)
                else a[col][col].inverse()
            )
            for i in range(col + 1, n):
                if not a[i][col]:
                    continue
                factor = a[i][col] * inv
                a[i] = [a[i][j] - factor * a[col][j] for j in range(n)]
        return True

    def __eq__(self, other):
        if isinstance(other, HermitianMatrix):
            other = other.to_algebra()
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        return (
            self.kind is other.kind
            and self.size == other.size
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.kind, self.entries))

    def __repr__(self):
        rows = ", ".join(
            "[" + ", ".join(str(v) for v in row) + "]" for row in self.entries
        )
        return f"AlgebraMatrix({self.kind.value}, [{rows}])"


class HermitianMatrix:
    """Square matrix equal to its conjugate transpose.

    The constructor verifies entries[i][j] == conj(entries[j][i]); in
    particular diagonal entries have vanishing imaginary or vector part.
    """

    __slots__ = ("kind", "size", "entries")

    def __init__(self, kind: ScalarKind, rows) -> None:
        m = AlgebraMatrix(kind, rows)
        for i in range(m.size):
            for j in range(i, m.size):
                if m.entries[i][j] != _conj(m.entries[j][i]):
                    raise InvalidInput(
                        f"matrix is not self-adjoint at position ({i}, {j})"
                    )
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "size", m.size)
        object.__setattr__(self, "entries", m.entries)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianMatrix is immutable")

    @classmethod
    def identity(cls, kind: ScalarKind, n: int) -> "HermitianMatrix":
        return cls(kind, AlgebraMatrix.identity(kind, n).entries)

    @classmethod
    def diagonal(cls, kind: ScalarKind, values) -> "HermitianMatrix":
        return cls(kind, AlgebraMatrix.diagonal(kind, values).entries)

    def to_algebra(self) -> AlgebraMatrix:
        return AlgebraMatrix(self.kind, self.entries)

    def diagonal_values(self) -> tuple[Fraction, ...]:
        return tuple(_real_part(self.entries[i][i]) for i in range(self.size))

    def __eq__(self, other):
        if isinstance(other, HermitianMatrix):
            return (
                self.kind is other.kind
                and self.size == other.size
                and self.entries == other.entries
            )
        if isinstance(other, AlgebraMatrix):
            return self.to_algebra() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.entries))

    def __repr__(self):
        rows = ", ".join(
            "[" + ", ".join(str(v) for v in row) + "]" for row in self.entries
        )
        return f"HermitianMatrix({self.kind.value}, [{rows}])"


def _require_same_space(x, y):
    if x.kind is not y.kind or x.size != y.size:
        raise ShapeMismatch(
            f"operands live in different spaces: {x.kind.value}^{x.size} vs "
            f"{y.kind.value}^{y.size}"
        )


def trace_inner_product(x: HermitianMatrix, y: HermitianMatrix) -> Fraction:
    """Real part of Tr(x y*): the pairing making each matrix cone self-dual."""
    _require_same_space(x, y)
    total = Fraction(0)
    for i in range(x.size):
        for j in range(x.size):
            total += _real_part(x.entries[i][j] * _conj(y.entries[i][j]))
    return total


def _ldl(D: HermitianMatrix):
    """Attempt D = L diag(delta) L*; return (L rows, delta) or None if a
    pivot fails to be positive.

    Pivots are the real diagonal values of successive Schur complements,
    so the elimination stays rational even over the quaternions.
    """
    n = D.size
    a = [list(row) for row in D.entries]
    one, zero = _one(D.kind), _zero(D.kind)
    lower = [[one if i == j else zero for j in range(n)] for i in range(n)]
    delta = []
    for k in range(n):
        pivot = _real_part(a[k][k])
        if pivot <= 0:
            return None
        delta.append(pivot)
        inv = Fraction(1) / pivot
        for i in range(k + 1, n):
            m = a[i][k] * inv
            lower[i][k] = m
            for j in range(k + 1, n):
                a[i][j] = a[i][j] - m * a[k][j]
            a[i][k] = zero
    return lower, tuple(delta)


def is_positive_definite(D: HermitianMatrix) -> bool:
    """Membership in the open cone: all pivots of exact LDL* are positive."""
    return _ldl(D) is not None


def ldl_witness(D: HermitianMatrix):
    """Unit lower-triangular L and positive diagonal delta with
    D = L diag(delta) L*, i.e. act(L*, diag(delta)) = D exactly."""
    result = _ldl(D)
    if result is None:
        raise NotPositiveDefinite("matrix has a non-positive pivot")
    lower, delta = result
    return AlgebraMatrix(D.kind, lower), delta


def is_positive_semidefinite(D: HermitianMatrix) -> bool:
    """Membership in the closed cone, with exact zero-pivot handling."""
    n = D.size
    a = [list(row) for row in D.entries]
    for k in range(n):
        pivot = _real_part(a[k][k])
        if pivot < 0:
            return False
        if pivot == 0:
            # a semidefinite matrix with zero diagonal entry has zero row
            if any(a[k][j] for j in range(k + 1, n)) or any(
                a[i][k] for i in range(k + 1, n)
            ):
                return False
            continue
        inv = Fraction(1) / pivot
        for i in range(k + 1, n):
            m = a[i][k] * inv
            for j in range(k + 1, n):
                a[i][j] = a[i][j] - m * a[k][j]
    return True


def quadratic_value(D: HermitianMatrix, v) -> Fraction:
    """The (automatically real) value v* D v for a coordinate vector v."""
    if len(v) != D.size:
        raise ShapeMismatch("vector length does not match matrix size")
    vv = [_coerce_entry(D.kind, c) for c in v]
    total = None
    for i in range(D.size):
        for j in range(D.size):
            term = _conj(vv[i]) * (D.entries[i][j] * vv[j])
            total = term if total is None else total + term
    return _real_part(total)


def negative_certificate(D: HermitianMatrix):
    """A vector v with v* D v < 0, or None when D is positive semidefinite.

    Found by running the LDL* elimination until it breaks and transporting
    the violating direction back through the recorded eliminations.
    """

    def recurse(a, n):
        if n == 0:
            return None
        pivot = _real_part(a[0][0])
        zero = _zero(D.kind)
        if pivot < 0:
            return [_one(D.kind)] + [zero] * (n - 1)
        if pivot == 0:
            bad = None
            for j in range(1, n):
                if a[j][0]:
                    bad = j
                    break
            if bad is None:
                w = recurse([row[1:] for row in a[1:]], n - 1)
                if w is None:
                    return None
                return [zero] + w
            entry = a[bad][0]
            c = _real_part(a[bad][bad])
            scale = (c + 1) / (2 * _real_part(entry * _conj(entry)))
            t = -scale * _conj(entry)
            v = [zero] * n
            v[0] = t
            v[bad] = _one(D.kind)
            return v
        inv = Fraction(1) / pivot
        mults = [a[i][0] * inv for i in range(1, n)]
        schur = [
            [a[i][j] - mults[i - 1] * a[0][j] for j in range(1, n)]
            for i in range(1, n)
        ]
        w = recurse(schur, n - 1)
        if w is None:
            return None
        head = None
        for m, wi in zip(mults, w):
            term = _conj(m) * wi
            head = term if head is None else head + term
        return [-head] + w

    v = recurse([list(row) for row in D.entries], D.size)
    return None if v is None else tuple(v)


def act(M: AlgebraMatrix, D: HermitianMatrix) -> HermitianMatrix:
    """The cone automorphism D -> M* D M for invertible M."""
    if M.kind is not D.kind or M.size != D.size:
        raise ShapeMismatch("matrix and Hermitian operand are incompatible")
    if not M.is_invertible():
        raise SingularMatrix("action matrix is singular")
    result = M.star() * D.to_algebra() * M
    return HermitianMatrix(D.kind, result.entries)


class LorentzVector:
    """A point (x0, ..., xn) of the ambient space of the spherical cone."""

    __slots__ = ("coords",)

    def __init__(self, coords) -> None:
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) < 2:
            raise InvalidInput("Lorentz vectors need at least two coordinates")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("LorentzVector is immutable")

    def __eq__(self, other):
        if not isinstance(other, LorentzVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"LorentzVector({list(self.coords)})"


def lorentz_member(v: LorentzVector, *, closed: bool = False) -> bool:
    """x0 > sqrt(x1^2 + ... + xn^2), decided without square roots."""
    x0 = v.coords[0]
    rest = sum(c * c for c in v.coords[1:])
    if closed:
        return x0 >= 0 and x0 * x0 >= rest
    return x0 > 0 and x0 * x0 > rest


@dataclass(frozen=True)
class PDBlock:
    kind: ScalarKind
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise InvalidInput("block size must be positive")
        if self.kind is ScalarKind.OCTONION and self.size != 3:
            raise Unsupported("the exceptional block exists only in size 3")

    @property
    def dimension(self) -> int:
        return hermitian_dimension(self.kind, self.size)


@dataclass(frozen=True)
class LorentzBlock:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("Lorentz block needs n >= 1")

    @property
    def dimension(self) -> int:
        return self.n + 1


class ConeSpec:
    """Formal direct sum of positive-definite matrix cones and Lorentz cones."""

    __slots__ = ("blocks",)

    def __init__(self, blocks) -> None:
        blocks = tuple(blocks)
        if not blocks:
            raise InvalidInput("a cone needs at least one block")
        for b in blocks:
            if not isinstance(b, (PDBlock, LorentzBlock)):
                raise InvalidInput(f"unknown block descriptor {b!r}")
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("ConeSpec is immutable")

    @property
    def dimension(self) -> int:
        return sum(b.dimension for b in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, ConeSpec):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"ConeSpec({list(self.blocks)})"


def cone_member(spec: ConeSpec, parts, *, closed: bool = False) -> bool:
    """Blockwise membership in the direct sum; every block must pass.

    ``parts`` pairs each PD block with a HermitianMatrix and each Lorentz
    block with a LorentzVector, in block order.
    """
    parts = list(parts)
    if len(parts) != len(spec.blocks):
        raise ShapeMismatch(
            f"expected {len(spec.blocks)} block components, got {len(parts)}"
        )
    for block, part in zip(spec.blocks, parts):
        if isinstance(block, PDBlock):
            if block.kind is ScalarKind.OCTONION:
                raise Unsupported("membership in the exceptional block is not provided")
            if not isinstance(part, HermitianMatrix):
                raise ShapeMismatch(f"PD block needs a HermitianMatrix, got {part!r}")
            if part.kind is not block.kind or part.size != block.size:
                raise ShapeMismatch(
                    f"component {part.kind.value}^{part.size} does not match "
                    f"block {block.kind.value}^{block.size}"
                )
            ok = (
                is_positive_semidefinite(part)
                if closed
                else is_positive_definite(part)
            )
        else:
            if not isinstance(part, LorentzVector):
                raise ShapeMismatch(f"Lorentz block needs a LorentzVector, got {part!r}")
            if len(part.coords) != block.n + 1:
                raise ShapeMismatch(
                    f"Lorentz component has {len(part.coords)} coordinates, "
                    f"block needs {block.n + 1}"
                )
            ok = lorentz_member(part, closed=closed)
        if not ok:
            return False
    return True


def hermitian_basis(kind: ScalarKind, r: int) -> list[HermitianMatrix]:
    """Explicit basis of the r x r self-adjoint matrices over kind.

    Diagonal units E_ii, symmetric pairs E_ij + E_ji, and for each imaginary
    unit u the skew combinations u(E_ij - E_ji); the count always equals
    hermitian_dimension(kind, r).
    """
    if kind is ScalarKind.OCTONION:
        raise Unsupported("no basis is provided for the exceptional block")
    zero, one = _zero(kind), _one(kind)
    basis = []

    def build(assign):
        rows = [[zero] * r for _ in range(r)]
        for (i, j), v in assign.items():
            rows[i][j] = v
        return HermitianMatrix(kind, rows)

    for i in range(r):
        basis.append(build({(i, i): one}))
    for i in range(r):
        for j in range(i + 1, r):
            basis.append(build({(i, j): one, (j, i): one}))
            for u in kind.imaginary_units:
                basis.append(build({(i, j): u, (j, i): -u}))
    assert len(basis) == hermitian_dimension(kind, r)
    return basis
