"""From isogeny-type data of an abelian variety to its ample cone and back.

A model lists simple factors (an opaque isogeny-class id, the real form of
the endomorphism division algebra with its positive involution, and a
multiplicity).  From that the real endomorphism algebra decomposes into
matrix blocks over R, C, H; the self-adjoint parts of the blocks assemble
the Neron-Severi space, whose dimension is the Picard number, and the ample
cone is the direct sum of the positive-definite cones of the blocks, acted
on blockwise by M* D M.

For surfaces with intersection form diag(a, -b) the boundary rays of the
nef cone are rational exactly when a/b is a rational square; in the real
multiplication case the unit group supplies an explicit rational polyhedral
cone between a rational ray and its image, which the reduction module can
certify as a fundamental domain.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, NotInCone, ShapeMismatch
from .hermitian import (
    AlgebraMatrix,
    ConeSpec,
    HermitianMatrix,
    PDBlock,
    ScalarKind,
    act,
    hermitian_basis,
    hermitian_dimension,
)
from .polyhedral import PolyhedralCone, RayClass, is_square_rational, primitive_vector
from .reduction import GroupAction2D
from .scalars import (
    QuadIrrational,
    dirichlet_rank,
    fundamental_unit,
    is_totally_positive,
)


class AlbertForm(enum.Enum):
    """Real form of the endomorphism algebra of a simple factor, with its
    positive involution (conjugate transpose in every case)."""

    REAL_SPLIT = "RealSplit"          # R x ... x R
    COMPLEX_SPLIT = "ComplexSplit"    # C x ... x C
    QUATERNION_SPLIT = "QuaternionSplit"  # H x ... x H
    MAT2_REAL = "Mat2Real"            # M_2(R) x ... x M_2(R)
    MAT2_COMPLEX = "Mat2Complex"      # M_2(C) x ... x M_2(C)


_FORM_RULES = {
    AlbertForm.REAL_SPLIT: (ScalarKind.REAL, 1),
    AlbertForm.COMPLEX_SPLIT: (ScalarKind.COMPLEX, 1),
    AlbertForm.QUATERNION_SPLIT: (ScalarKind.QUATERNION, 1),
    AlbertForm.MAT2_REAL: (ScalarKind.REAL, 2),
    AlbertForm.MAT2_COMPLEX: (ScalarKind.COMPLEX, 2),
}


@dataclass(frozen=True)
class AlbertRealType:
    form: AlbertForm
    m: int

    def __post_init__(self):
        if not isinstance(self.form, AlbertForm):
            raise InvalidInput(f"unknown Albert form {self.form!r}")
        if self.m < 1:
            raise InvalidInput("number of simple summands m must be positive")


@dataclass(frozen=True)
class SimpleFactor:
    id: str
    albert: AlbertRealType
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise InvalidInput("factor multiplicity must be positive")


@dataclass(frozen=True)
class AbelianVarietyModel:
    factors: tuple[SimpleFactor, ...]

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise InvalidInput("a model needs at least one simple factor")
        ids = [f.id for f in factors]
        if len(set(ids)) != len(ids):
            raise InvalidInput("simple factors must have pairwise distinct ids")
        object.__setattr__(self, "factors", factors)


@dataclass(frozen=True)
class Block:
    kind: ScalarKind
    size: int
    origin: str

    @property
    def dimension(self) -> int:
        return hermitian_dimension(self.kind, self.size)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]


def endo_real_decomposition(model: AbelianVarietyModel) -> BlockDecomposition:
    """Matrix blocks of the real endomorphism algebra, in model order.

    A factor of multiplicity n with division algebra splitting into m copies
    of k (or of the 2 x 2 matrices over k) contributes m blocks of size n
    (or 2n) over k, all tagged with the factor's id.
    """
    blocks = []
    for factor in model.factors:
        kind, scale = _FORM_RULES[factor.albert.form]
        size = scale * factor.multiplicity
        blocks.extend(
            Block(kind=kind, size=size, origin=factor.id)
            for _ in range(factor.albert.m)
        )
    return BlockDecomposition(blocks=tuple(blocks))


def picard_number(model: AbelianVarietyModel) -> int:
    """Dimension of the Neron-Severi space: the sum of the self-adjoint
    dimensions of the blocks."""
    return sum(b.dimension for b in endo_real_decomposition(model).blocks)


def ample_cone(model: AbelianVarietyModel) -> ConeSpec:
    """The ample cone as a direct sum of positive-definite matrix cones."""
    return ConeSpec(
        PDBlock(kind=b.kind, size=b.size)
        for b in endo_real_decomposition(model).blocks
    )


def rosati_fixed_basis(decomp: BlockDecomposition) -> list[list[HermitianMatrix]]:
    """Per block, an explicit basis of the self-adjoint matrices: the fixed
    space of conjugate transposition, which realizes the Rosati involution
    in block coordinates."""
    return [hermitian_basis(b.kind, b.size) for b in decomp.blocks]


def aut_action(
    decomp: BlockDecomposition,
    matrices: list[AlgebraMatrix],
    divisors: list[HermitianMatrix],
) -> list[HermitianMatrix]:
    """Blockwise D -> M* D M; shapes must match the decomposition."""
    if len(matrices) != len(decomp.blocks) or len(divisors) != len(decomp.blocks):
        raise ShapeMismatch("one matrix and one divisor block per decomposition block")
    out = []
    for block, m, d in zip(decomp.blocks, matrices, divisors):
        if (
            m.kind is not block.kind
            or m.size != block.size
            or d.kind is not block.kind
            or d.size != block.size
        ):
            raise ShapeMismatch(
                f"block over {block.kind.value}^{block.size} got "
                f"{m.kind.value}^{m.size} and {d.kind.value}^{d.size}"
            )
        out.append(act(m, d))
    return out


def squarefree_part(n: int) -> tuple[int, int]:
    """n = s^2 * d with d squarefree; returns (s, d)."""
    s, d = 1, 1
    p = 2
    m = n
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= m
    return s, d


@dataclass(frozen=True)
class SurfaceConeData:
    """Nef-cone data of an abelian surface with intersection form diag(a, -b).

    ``rays`` holds primitive integer boundary rays when a/b is a rational
    square, and otherwise the symbolic coefficient c = sqrt(a/b) of the
    boundary pair v1 +- c*v2 as a quadratic irrational.
    """

    a: Fraction
    b: Fraction
    rational_polyhedral: bool
    rays: tuple

    def contains(self, x1, x2) -> bool:
        """Open ample-cone membership a*x1^2 - b*x2^2 > 0, x1 > 0."""
        x1, x2 = Fraction(x1), Fraction(x2)
        return x1 > 0 and self.a * x1 * x1 - self.b * x2 * x2 > 0


def surface_nef_data(a, b) -> SurfaceConeData:
    """Boundary-ray data for the form diag(a, -b), exact in both regimes."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise InvalidInput("intersection form needs positive a and b")
    ratio = a / b
    if is_square_rational(ratio):
        root = Fraction(math.isqrt(ratio.numerator), math.isqrt(ratio.denominator))
        plus = primitive_vector((1, root))
        minus = primitive_vector((1, -root))
        return SurfaceConeData(
            a=a, b=b, rational_polyhedral=True, rays=(plus, minus)
        )
    # sqrt(a/b) = (s/q) * sqrt(d) with d squarefree
    s, d = squarefree_part(ratio.numerator * ratio.denominator)
    coeff = QuadIrrational(d, 0, Fraction(s, ratio.denominator))
    return SurfaceConeData(
        a=a, b=b, rational_polyhedral=False, rays=(coeff, -coeff)
    )


def bauer_rational_polyhedral(model: AbelianVarietyModel) -> bool:
    """Is the nef cone rational polyhedral?  True exactly when every factor
    has multiplicity one and its own Picard number is one."""
    for factor in model.factors:
        if factor.multiplicity != 1:
            return False
        single = AbelianVarietyModel(
            factors=(SimpleFactor(id=factor.id, albert=factor.albert, multiplicity=1),)
        )
        if picard_number(single) != 1:
            return False
    return True


def real_mult_fundamental_domain(
    d: int,
    ray,
    square_unit: bool = True,
) -> tuple[PolyhedralCone, GroupAction2D]:
    """The rank-1 construction: a rational polyhedral cone between a rational
    ray R and g(R), where g multiplies by the square of the fundamental unit
    of Z[sqrt(d)] in the basis {1, sqrt(d)}.

    Squaring makes the multiplier totally positive of norm +1, so g preserves
    the quadratic cone {x1^2 - d*x2^2 > 0, x1 > 0} and fixes each boundary
    ray.  With ``square_unit=False`` the fundamental unit itself is used; it
    must already be totally positive of norm +1.
    """
    if isinstance(ray, RayClass):
        ray = ray.vector
    unit = fundamental_unit(d)  # validates d
    if square_unit:
        multiplier = unit.value * unit.value
    else:
        if unit.norm != 1 or not is_totally_positive(unit.value):
            raise InvalidInput(
                f"fundamental unit of Z[sqrt({d})] is not totally positive of "
                "norm +1; keep square_unit=True"
            )
        multiplier = unit.value
    p, q = multiplier.a, multiplier.b
    generator = [[p, d * q], [q, p]]
    action = GroupAction2D(generator, 1, d)
    if not action.open_member(ray):
        raise NotInCone(f"ray {tuple(ray)} is outside the open cone x1^2 > {d} x2^2")
    base = primitive_vector(ray)
    pi = PolyhedralCone(2, [base, action.ray_image(base, 1)])
    return pi, action


def dirichlet_data(d: int) -> tuple[int, int, int]:
    """Signature and unit rank (r1, r2, r1 + r2 - 1) of Q(sqrt(d)): always
    (2, 0, 1) for real quadratic fields."""
    fundamental_unit(d)  # validates d: >= 2, squarefree
    r1, r2 = 2, 0
    return r1, r2, dirichlet_rank(r1, r2)


# --- model (de)serialization -------------------------------------------------

def model_from_json_dict(data) -> AbelianVarietyModel:
    """Parse {"factors": [{"id": ..., "albert": {"form": ..., "m": ...},
    "n": ...}]} with strict validation."""
    if not isinstance(data, dict) or "factors" not in data:
        raise InvalidInput('model JSON must be an object with a "factors" list')
    raw = data["factors"]
    if not isinstance(raw, list) or not raw:
        raise InvalidInput('"factors" must be a nonempty list')
    factors = []
    for item in raw:
        if not isinstance(item, dict):
            raise InvalidInput(f"factor entry {item!r} is not an object")
        try:
            fid = item["id"]
            albert = item["albert"]
            n = item["n"]
            form_name = albert["form"]
            m = albert["m"]
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"factor entry {item!r} is missing {exc}") from None
        if not isinstance(fid, str):
            raise InvalidInput("factor id must be a string")
        try:
            form = AlbertForm(form_name)
        except ValueError:
            raise InvalidInput(f"unknown Albert form {form_name!r}") from None
        if not isinstance(m, int) or not isinstance(n, int):
            raise InvalidInput("m and n must be integers")
        factors.append(
            SimpleFactor(
                id=fid,
                albert=AlbertRealType(form=form, m=m),
                multiplicity=n,
            )
        )
    return AbelianVarietyModel(factors=factors)


def model_to_json_dict(model: AbelianVarietyModel) -> dict:
    return {
        "factors": [
            {
                "id": f.id,
                "albert": {"form": f.albert.form.value, "m": f.albert.m},
                "n": f.multiplicity,
            }
            for f in model.factors
        ]
    }
