"""Command-line interface: generate equations, verify properties, report invariants.

Subcommands
-----------
generate    print one hypersurface equation (plain, LaTeX, or JSON)
verify      run property checks over a range of dimensions, JSON report
symmetries  solve for the affine symmetry algebra of a surface, JSON
invariants  signature / Pick / Hessian / ruling bundle for one surface, JSON

All output is deterministic: identical invocations produce identical bytes.
Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import generate as gen
from . import geometry, symmetry
from .poly import (
    Polynomial,
    format_latex,
    format_plain,
    poly_from_json_dict,
    poly_to_json_dict,
    weighted_degree_check,
)

DEFAULT_MAX_N = 20

CHECK_ORDER = [
    "annihilation",
    "abelian",
    "homogeneity",
    "isotropy",
    "traces",
    "pick",
    "signature",
    "ruling",
    "hessian",
    "orbit",
]

# Checks meaningful for the variant surface (the commuting shift fields and
# the weight grading are specific to the main family).
VARIANT_CHECKS = ["isotropy", "traces", "pick", "signature", "ruling", "hessian"]

ORBIT_SAMPLES = 100
ORBIT_ROUND_TRIPS = 10


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _max_n() -> int:
    try:
        return int(os.environ.get("CAYLEY_MAX_N", str(DEFAULT_MAX_N)))
    except ValueError:
        return DEFAULT_MAX_N


def _guard_n(parser: argparse.ArgumentParser, values: list[int], force: bool) -> None:
    limit = _max_n()
    worst = max(values)
    if worst > limit and not force:
        parser.error(f"n={worst} exceeds the guard ({limit}); pass --force or set CAYLEY_MAX_N")


# -- check implementations ---------------------------------------------------


def _check_annihilation(n: int, phi: Polynomial) -> tuple[bool, str]:
    fields = symmetry.cayley_fields(n)
    ok = all(not f.apply(phi) for f in fields)
    return ok, f"X_p Phi = 0 for p = 1..{n - 1}"


def _check_abelian(n: int, phi: Polynomial) -> tuple[bool, str]:
    fields = symmetry.cayley_fields(n)
    ok = True
    for i, x in enumerate(fields):
        for y in fields[i:]:
            if not symmetry.commutator(x, y).is_zero():
                ok = False
    return ok, f"all pairwise commutators of the {n - 1} shift fields vanish"


def _check_homogeneity(n: int, phi: Polynomial) -> tuple[bool, str]:
    graded = weighted_degree_check(phi, list(range(1, n + 1)), n)
    euler = symmetry.euler_field(n)
    scales = euler.apply(phi) == phi * n
    return graded and scales, f"weight-{n} homogeneous and H Phi = {n} Phi"


def _check_isotropy(n: int, phi: Polynomial, variant: bool) -> tuple[bool, str]:
    iso = symmetry.isotropy_at_origin(phi)
    if variant:
        return iso.dimension == 2, f"linear isotropy dimension {iso.dimension} (expected 2)"
    ok = iso.dimension == 1 and symmetry.span_contains(iso, [symmetry.euler_field(n)])
    return ok, f"linear isotropy dimension {iso.dimension} (expected 1, spanned by H)"


def _graph_tensors(n: int, phi: Polynomial):
    f = geometry.graph_of(phi, n)
    return f, geometry.taylor_tensor(f, 2), geometry.taylor_tensor(f, 3)


def _check_traces(n: int, phi: Polynomial, variant: bool) -> tuple[bool, str]:
    f, g_taylor, _ = _graph_tensors(n, phi)
    ok = True
    top = max(f.total_degree(), 3)
    g_taylor_inv = geometry.metric_inverse(g_taylor)
    for m in range(3, top + 1):
        if not geometry.trace(geometry.taylor_tensor(f, m), g_taylor_inv).is_zero():
            ok = False
    if not variant:
        g_ind = geometry.indicator_tensor(n, 2)
        g_ind_inv = geometry.metric_inverse(g_ind)
        for m in range(3, n + 1):
            if not geometry.trace(geometry.indicator_tensor(n, m), g_ind_inv).is_zero():
                ok = False
    return ok, f"metric traces of orders 3..{top} all vanish"


def _check_pick(n: int, phi: Polynomial, variant: bool) -> tuple[bool, str]:
    _, g_taylor, a_taylor = _graph_tensors(n, phi)
    values = {"taylor": geometry.pick_invariant(g_taylor, a_taylor)}
    if not variant:
        values["indicator"] = geometry.pick_invariant(
            geometry.indicator_tensor(n, 2), geometry.indicator_tensor(n, 3)
        )
    ok = all(v == 0 for v in values.values())
    detail = ", ".join(f"{k} {v}" for k, v in values.items())
    return ok, f"Pick invariant: {detail}"


def _check_signature(n: int, phi: Polynomial, variant: bool) -> tuple[bool, str]:
    _, g_taylor, _ = _graph_tensors(n, phi)
    sig = geometry.signature(g_taylor)
    detail = f"signature ({sig.positive}, {sig.negative}, {sig.zero})"
    if variant:
        return sig.zero == 0, detail + " nondegenerate"
    expected = (n // 2, (n - 1) - n // 2, 0)
    return (sig.positive, sig.negative, sig.zero) == expected, detail + f" expected {expected}"


def _check_ruling(n: int, phi: Polynomial) -> tuple[bool, str]:
    dim, linear = geometry.ruling_check(n, phi)
    return linear, f"linear in the upper block; ruled by {dim}-planes"


def _check_hessian(n: int, phi: Polynomial) -> tuple[bool, str]:
    f = geometry.graph_of(phi, n)
    hess = geometry.hessian_determinant(f)
    if hess.is_constant():
        return True, f"Hessian determinant constant = {hess.coefficient({})}"
    return False, "Hessian determinant is not constant"


def _check_orbit(n: int, phi: Polynomial) -> tuple[bool, str]:
    rng = random.Random(20_000 + n)

    def rand_params():
        return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n - 1)]

    ok = True
    for _ in range(ORBIT_SAMPLES):
        point = symmetry.orbit_point(n, rand_params())
        if phi.evaluate(point) != 0:
            ok = False
    for _ in range(ORBIT_ROUND_TRIPS):
        t = rand_params()
        point = symmetry.orbit_point(n, t)
        if symmetry.parameters_for_point(n, point[: n - 1]) != tuple(t):
            ok = False
    return ok, f"{ORBIT_SAMPLES} random orbit points on the surface; {ORBIT_ROUND_TRIPS} round trips"


def _run_check(name: str, n: int, phi: Polynomial, variant: bool) -> tuple[bool, str]:
    if name == "annihilation":
        return _check_annihilation(n, phi)
    if name == "abelian":
        return _check_abelian(n, phi)
    if name == "homogeneity":
        return _check_homogeneity(n, phi)
    if name == "isotropy":
        return _check_isotropy(n, phi, variant)
    if name == "traces":
        return _check_traces(n, phi, variant)
    if name == "pick":
        return _check_pick(n, phi, variant)
    if name == "signature":
        return _check_signature(n, phi, variant)
    if name == "ruling":
        return _check_ruling(n, phi)
    if name == "hessian":
        return _check_hessian(n, phi)
    if name == "orbit":
        return _check_orbit(n, phi)
    raise ValueError(f"unknown check {name!r}")


# -- subcommand drivers -------------------------------------------------------


def _target_poly(parser, n: int | None, b: Fraction | None, variant: bool) -> tuple[int, Polynomial, str]:
    if variant:
        if b is not None:
            parser.error("--variant does not take --b")
        if n not in (None, 4):
            parser.error("the variant surface exists only for n = 4")
        return 4, gen.variant_surface_4(), "variant"
    if n is None:
        parser.error("--n is required")
    if n < 1:
        parser.error("n must be a positive integer")
    if b is not None and b != 0:
        return n, gen.family_poly(n, b), "family"
    return n, gen.cayley_poly(n), "cayley"


def _cmd_generate(parser, args) -> int:
    n, phi, _ = _target_poly(parser, args.n, args.b, args.variant)
    _guard_n(parser, [n], args.force)
    if args.format == "json":
        print(json.dumps(poly_to_json_dict(phi), indent=2))
    elif args.format == "latex":
        f = geometry.graph_of(phi, n)
        index = str(n) if n < 10 else "{" + str(n) + "}"
        print(f"x_{index} = {format_latex(f)}")
    else:
        f = geometry.graph_of(phi, n)
        print(f"x{n} = {format_plain(f)}")
    return 0


def _cmd_verify(parser, args) -> int:
    allowed = VARIANT_CHECKS if args.variant else CHECK_ORDER
    if args.checks == "all":
        names = list(allowed)
    else:
        names = [c.strip() for c in args.checks.split(",")]
    for name in names:
        if name not in CHECK_ORDER:
            parser.error(f"unknown check {name!r}; choose from {', '.join(CHECK_ORDER)}")
        if name not in allowed:
            parser.error(f"check {name!r} is not applicable to the variant surface")
    ns = args.n
    if min(ns) < 3:
        parser.error("verify needs n >= 3")
    _guard_n(parser, ns, args.force)
    if args.variant and ns != [4]:
        parser.error("the variant surface exists only for n = 4")

    reports = []
    overall = True
    for n in ns:
        phi = gen.variant_surface_4() if args.variant else gen.cayley_poly(n)
        checks = []
        target_pass = True
        for name in names:
            ok, detail = _run_check(name, n, phi, args.variant)
            checks.append({"name": name, "status": "pass" if ok else "fail", "detail": detail})
            target_pass = target_pass and ok
        target: dict = {"n": n}
        if args.variant:
            target["variant"] = True
        reports.append({"target": target, "checks": checks, "pass": target_pass})
        overall = overall and target_pass
    print(json.dumps({"reports": reports, "pass": overall}, indent=2))
    return 0 if overall else 1


def _algebra_json(algebra: symmetry.SymmetryAlgebra) -> list[dict]:
    return [
        symmetry.field_to_json_dict(f, c)
        for f, c in zip(algebra.basis, algebra.eigenvalues)
    ]


def _cmd_symmetries(parser, args) -> int:
    if args.file:
        try:
            with open(args.file, "r", encoding="utf-8") as handle:
                phi = poly_from_json_dict(json.load(handle))
        except (OSError, ValueError, json.JSONDecodeError) as exc:
            parser.error(f"cannot read polynomial file: {exc}")
        n, source = phi.n, "file"
    else:
        n, phi, source = _target_poly(parser, args.n, args.b, args.variant)
        _guard_n(parser, [n], args.force)
    if not phi:
        parser.error("the zero polynomial has no symmetry algebra")
    algebra = symmetry.symmetry_algebra(phi)
    out = {
        "n": n,
        "source": source,
        "dimension": algebra.dimension,
        "basis": _algebra_json(algebra),
    }
    if source == "family":
        out["b"] = str(args.b)
    if phi.evaluate([0] * n) == 0:
        iso = symmetry.isotropy_at_origin(phi)
        out["isotropy"] = {"dimension": iso.dimension, "basis": _algebra_json(iso)}
    else:
        out["isotropy"] = None
    print(json.dumps(out, indent=2))
    return 0


def _cmd_invariants(parser, args) -> int:
    n, phi, source = _target_poly(parser, args.n, args.b, args.variant)
    _guard_n(parser, [n], args.force)
    if n < 3:
        parser.error("invariants need n >= 3")
    bundle = geometry.invariants_bundle(n, phi)
    bundle["source"] = source
    print(json.dumps(bundle, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley",
        description="Exact generation and verification of Cayley hypersurfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="print one hypersurface equation")
    p_gen.add_argument("--n", type=int, default=None, help="ambient dimension")
    p_gen.add_argument("--b", type=_rational, default=None, help="family parameter (default 0)")
    p_gen.add_argument("--variant", action="store_true", help="use the variant surface (n = 4)")
    p_gen.add_argument("--format", choices=["plain", "latex", "json"], default="plain")
    p_gen.add_argument("--force", action="store_true", help="bypass the large-n guard")

    p_ver = sub.add_parser("verify", help="run property checks over a range of n")
    p_ver.add_argument("--n", type=_n_range, required=True, help="dimension or range A..B")
    p_ver.add_argument("--checks", default="all", help="comma list of checks, or 'all'")
    p_ver.add_argument("--variant", action="store_true", help="check the variant surface")
    p_ver.add_argument("--force", action="store_true", help="bypass the large-n guard")

    p_sym = sub.add_parser("symmetries", help="affine symmetry algebra of a surface")
    p_sym.add_argument("--n", type=int, default=None, help="ambient dimension")
    p_sym.add_argument("--b", type=_rational, default=None, help="family parameter")
    p_sym.add_argument("--variant", action="store_true", help="use the variant surface")
    p_sym.add_argument("--file", default=None, help="polynomial JSON file to analyze")
    p_sym.add_argument("--force", action="store_true", help="bypass the large-n guard")

    p_inv = sub.add_parser("invariants", help="geometric invariants bundle")
    p_inv.add_argument("--n", type=int, default=None, help="ambient dimension")
    p_inv.add_argument("--b", type=_rational, default=None, help="family parameter")
    p_inv.add_argument("--variant", action="store_true", help="use the variant surface")
    p_inv.add_argument("--force", action="store_true", help="bypass the large-n guard")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "generate":
        return _cmd_generate(parser, args)
    if args.command == "verify":
        return _cmd_verify(parser, args)
    if args.command == "symmetries":
        return _cmd_symmetries(parser, args)
    return _cmd_invariants(parser, args)


if __name__ == "__main__":
    sys.exit(main())
