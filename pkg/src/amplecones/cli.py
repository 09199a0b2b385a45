"""Command-line front end.

Subcommands mirror the pipeline stages: ``decompose``, ``picard``,
``amplecone``, ``bauer`` consume a model JSON file; ``surface``, ``reduce``,
``funddomain``, ``verify``, ``render`` take inline arguments.  All reports
are JSON (rationals as "p/q" strings, integer vectors as plain numbers);
``render`` emits an SVG picture of the cone, the candidate domain, and its
translates.  Exit codes: 0 success, 1 a verification report came back false,
2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import abelian, reduction
from .errors import AmpleconesError, UnsupportedDimension
from .hermitian import LorentzBlock, PDBlock
from .polyhedral import PolyhedralCone
from .scalars import is_squarefree

_DEFAULT_SEED = 0
_DEFAULT_SAMPLES = 500
_DEFAULT_MAX_WORD = 12


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _emit_json(payload: dict, output: str | None) -> None:
    _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", output)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise AmpleconesError(f"cannot parse rational {text!r}: {exc}") from None


def _parse_vector(text: str) -> tuple[Fraction, ...]:
    return tuple(_parse_fraction(part) for part in text.split(","))


def _parse_rays(text: str) -> list[tuple[Fraction, ...]]:
    return [_parse_vector(chunk) for chunk in text.split(";") if chunk]


def _load_model(path: str) -> abelian.AbelianVarietyModel:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise AmpleconesError(f"cannot read model file {path!r}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise AmpleconesError(f"malformed JSON in {path!r}: {exc}") from None
    return abelian.model_from_json_dict(data)


def _cmd_decompose(args) -> int:
    decomp = abelian.endo_real_decomposition(_load_model(args.model))
    payload = {
        "blocks": [
            {"kind": b.kind.value, "size": b.size, "origin": b.origin}
            for b in decomp.blocks
        ]
    }
    _emit_json(payload, args.output)
    return 0


def _cmd_picard(args) -> int:
    _emit_json(
        {"picard_number": abelian.picard_number(_load_model(args.model))},
        args.output,
    )
    return 0


def _cmd_amplecone(args) -> int:
    spec = abelian.ample_cone(_load_model(args.model))
    blocks = []
    for b in spec.blocks:
        if isinstance(b, PDBlock):
            blocks.append(
                {
                    "type": "pd",
                    "kind": b.kind.value,
                    "size": b.size,
                    "dim": b.dimension,
                }
            )
        else:
            assert isinstance(b, LorentzBlock)
            blocks.append({"type": "lorentz", "n": b.n, "dim": b.dimension})
    _emit_json({"dimension": spec.dimension, "blocks": blocks}, args.output)
    return 0


def _cmd_bauer(args) -> int:
    verdict = abelian.bauer_rational_polyhedral(_load_model(args.model))
    _emit_json({"rational_polyhedral": verdict}, args.output)
    return 0


def _sqrt_text(n: int) -> str:
    root = math.isqrt(n)
    if root * root == n:
        return str(root)
    s, d = abelian.squarefree_part(n)
    prefix = "" if s == 1 else str(s)
    return f"{prefix}√{d}"


def _cmd_surface(args) -> int:
    data = abelian.surface_nef_data(args.a, args.b)
    if data.rational_polyhedral:
        rays = [list(r) for r in data.rays]
    else:
        ratio = data.a / data.b
        rays = f"v1 ± ({_sqrt_text(ratio.numerator)}/{_sqrt_text(ratio.denominator)}) v2"
    _emit_json({"rational_polyhedral": data.rational_polyhedral, "rays": rays}, args.output)
    return 0


def _cmd_reduce(args) -> int:
    parts = args.form.split(",")
    if len(parts) != 3:
        raise AmpleconesError("--form wants three integers g11,g12,g22")
    try:
        g11, g12, g22 = (int(p) for p in parts)
    except ValueError:
        raise AmpleconesError(f"--form entries must be integers: {args.form!r}") from None
    gred, u = reduction.minkowski_reduce(reduction.IntegralForm(g11, g12, g22))
    _emit_json(
        {"gred": [gred.g11, gred.g12, gred.g22], "u": u.rows()}, args.output
    )
    return 0


def _require_squarefree_d(d: int) -> None:
    if d < 2 or not is_squarefree(d):
        raise AmpleconesError(f"--d must be a squarefree integer >= 2, got {d}")


def _funddomain_pieces(args):
    _require_squarefree_d(args.d)
    ray = _parse_vector(args.ray)
    if len(ray) != 2:
        raise AmpleconesError("--ray wants two coordinates x1,x2")
    return abelian.real_mult_fundamental_domain(args.d, ray)


def _cmd_funddomain(args) -> int:
    pi, action = _funddomain_pieces(args)
    report = reduction.verify_fundamental_domain(
        pi, action, samples=args.samples, max_word=args.max_word, seed=args.seed
    )
    payload = {
        "pi": pi.to_json(),
        "g": action.generator_json(),
        "report": report.to_json_dict(),
    }
    _emit_json(payload, args.output)
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    _require_squarefree_d(args.d)
    rays = _parse_rays(args.pi)
    if not rays:
        raise AmpleconesError("--pi wants rays like '1,0;3,2'")
    pi = PolyhedralCone(2, rays)
    if args.g is not None:
        entries = args.g.split(",")
        if len(entries) != 4:
            raise AmpleconesError("--g wants four entries a,b,c,d (row major)")
        matrix = [
            [_parse_fraction(entries[0]), _parse_fraction(entries[1])],
            [_parse_fraction(entries[2]), _parse_fraction(entries[3])],
        ]
        action = reduction.GroupAction2D(matrix, 1, args.d)
    else:
        _, action = abelian.real_mult_fundamental_domain(args.d, pi.rays[0])
    report = reduction.verify_fundamental_domain(
        pi, action, samples=args.samples, max_word=args.max_word, seed=args.seed
    )
    _emit_json(report.to_json_dict(), args.output)
    return 0 if report.ok else 1


def render_svg(pi: PolyhedralCone, g: reduction.GroupAction2D, k_range: int) -> str:
    """Picture of the quadratic cone with pi shaded and its translates
    g^k pi for |k| <= k_range; deterministic bytes for fixed inputs.

    One <path> wedge per translate (2*k_range + 1 in total) plus two
    boundary <line> elements along the float slopes +-sqrt(a/b).
    """
    if pi.dim != 2:
        raise UnsupportedDimension("rendering draws planar cones only")
    if k_range < 0:
        raise AmpleconesError("--k-range must be nonnegative")
    width = height = 420.0
    origin_x, origin_y = 30.0, height / 2.0
    radius = 360.0

    def to_screen(direction) -> tuple[float, float]:
        dx, dy = float(direction[0]), float(direction[1])
        scale = radius / math.hypot(dx, dy)
        return origin_x + scale * dx, origin_y - scale * dy

    def fmt(x: float) -> str:
        return f"{x:.3f}"

    slope = math.sqrt(float(g.a) / float(g.b))
    lines = []
    for sign in (1, -1):
        x, y = to_screen((1.0, sign * slope))
        lines.append(
            f'<line x1="{fmt(origin_x)}" y1="{fmt(origin_y)}" '
            f'x2="{fmt(x)}" y2="{fmt(y)}" stroke="#333333" stroke-width="1.5"/>'
        )
    wedges = []
    for k in range(-k_range, k_range + 1):
        rays = [g.ray_image(r, k) for r in pi.rays]
        pts = [to_screen(r) for r in rays]
        fill = "#e05a33" if k == 0 else ("#7a9ec9" if k % 2 else "#b8cde3")
        path = (
            f'M {fmt(origin_x)},{fmt(origin_y)} '
            + " ".join(f"L {fmt(x)},{fmt(y)}" for x, y in pts)
            + " Z"
        )
        wedges.append(
            f'<path d="{path}" fill="{fill}" fill-opacity="0.65" '
            f'stroke="#1f3551" stroke-width="0.6"/>'
        )
    body = "\n".join(wedges + lines)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(width)}" '
        f'height="{int(height)}" viewBox="0 0 {int(width)} {int(height)}">\n'
        f"{body}\n</svg>\n"
    )


def _cmd_render(args) -> int:
    pi, action = _funddomain_pieces(args)
    _emit(render_svg(pi, action, args.k_range), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amplecones",
        description="Exact cones, reduction, and fundamental domains for abelian varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", help="write the report here instead of stdout")

    def add_sampling(p):
        p.add_argument("--seed", type=int, default=_DEFAULT_SEED)
        p.add_argument("--samples", type=int, default=_DEFAULT_SAMPLES)
        p.add_argument("--max-word", dest="max_word", type=int, default=_DEFAULT_MAX_WORD)

    p = sub.add_parser("decompose", help="matrix blocks of the real endomorphism algebra")
    p.add_argument("--model", required=True, help="model JSON file")
    add_output(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("picard", help="Picard number of a model")
    p.add_argument("--model", required=True)
    add_output(p)
    p.set_defaults(func=_cmd_picard)

    p = sub.add_parser("amplecone", help="ample cone block structure of a model")
    p.add_argument("--model", required=True)
    add_output(p)
    p.set_defaults(func=_cmd_amplecone)

    p = sub.add_parser("surface", help="boundary rays for the form diag(a, -b)")
    p.add_argument("--a", type=_parse_fraction, required=True)
    p.add_argument("--b", type=_parse_fraction, required=True)
    add_output(p)
    p.set_defaults(func=_cmd_surface)

    p = sub.add_parser("bauer", help="is the nef cone rational polyhedral?")
    p.add_argument("--model", required=True)
    add_output(p)
    p.set_defaults(func=_cmd_bauer)

    p = sub.add_parser("reduce", help="reduce a positive-definite binary form")
    p.add_argument("--form", required=True, help="g11,g12,g22")
    add_output(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser(
        "funddomain", help="construct and verify the real-multiplication domain"
    )
    p.add_argument("--d", type=int, required=True, help="squarefree integer >= 2")
    p.add_argument("--ray", default="1,0", help="rational starting ray x1,x2")
    add_sampling(p)
    add_output(p)
    p.set_defaults(func=_cmd_funddomain)

    p = sub.add_parser("verify", help="verify a candidate cone against an action")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--pi", required=True, help="rays like '1,0;3,2'")
    p.add_argument("--g", help="override generator a,b,c,d (row major)")
    add_sampling(p)
    add_output(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="SVG of the cone, the domain, and translates")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ray", default="1,0")
    p.add_argument("--k-range", dest="k_range", type=int, default=3)
    add_output(p)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags, which matches the input-error code
        return int(exc.code or 0)
    try:
        return args.func(args)
    except AmpleconesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
