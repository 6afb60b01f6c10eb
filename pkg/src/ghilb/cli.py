"""Command-line interface.

Every command prints a JSON report (or text with --format text).  Exit codes:
0 when every check passes, 1 when a check fails, 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from . import acceptance, gcx
from .errors import GhilbError, NotStandardForm
from .exact import Matrix, charpoly, eval_poly_pair, parse_scalar
from .exact.scalars import format_scalar
from .hilb import CommutingPair, centralizer_coordinates, chow, classify, cyclicity, mu2_verify
from .ideals import (
    YoungDiagram,
    chart_change_D,
    d_chart_staircase,
    haiman_coords,
    idealic_map,
    points_ideal,
    present_in_chart,
    read_chart_one,
    read_chart_two,
    symplectic_rectangle_check,
)
from .liealg import (
    SliceParams,
    build_spec,
    matrix_S,
    param_names,
    principal_nilpotent,
    principal_sl2_triple,
    principal_slice,
    slice_charpoly_expected,
)
from .realforms import build_split, classify_real, sl2R_orbit_check


class InputError(Exception):
    pass


class Report:
    def __init__(self, suite, seed=None):
        self.suite = suite
        self.seed = seed
        self.checks = []
        self.result = {}
        self.started = time.perf_counter()

    def check(self, id, claim, ok, payload=None):
        self.checks.append(
            {"id": id, "claim": claim, "status": "pass" if ok else "fail", "payload": payload or {}}
        )

    @property
    def ok(self):
        return all(c["status"] == "pass" for c in self.checks)

    def to_json(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "result": self.result,
            "checks": self.checks,
            "timing": {"seconds": round(time.perf_counter() - self.started, 3)},
        }

    def to_text(self):
        lines = ["%s (seed %s)" % (self.suite, self.seed)]
        for key, value in self.result.items():
            lines.append("  %s: %s" % (key, json.dumps(value)))
        for c in self.checks:
            lines.append("  [%s] %s: %s" % (c["status"].upper(), c["id"], c["claim"]))
        return "\n".join(lines)


# -- input helpers ------------------------------------------------------------------

def _load_json(path, flag):
    if path is None:
        raise InputError("missing %s" % flag)
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError("%s: cannot read %s (%s)" % (flag, path, exc.strerror))
    except json.JSONDecodeError as exc:
        raise InputError("%s: invalid JSON in %s (%s)" % (flag, path, exc))


def _spec(args):
    if not args.spec:
        raise InputError("missing --spec")
    try:
        return build_spec(args.spec)
    except ValueError as exc:
        raise InputError("--spec: %s" % exc)


def _pair(args, spec):
    obj = _load_json(args.pair, "--pair")
    try:
        a = Matrix.from_json(obj["A"])
        b = Matrix.from_json(obj["B"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("--pair: expected {\"A\": matrix, \"B\": matrix} (%s)" % exc)
    return CommutingPair(spec, a, b).validate()


def _vector(args):
    if args.vector is None:
        return None
    obj = _load_json(args.vector, "--vector")
    try:
        return [parse_scalar(x) for x in obj]
    except (TypeError, ValueError) as exc:
        raise InputError("--vector: %s" % exc)


def _points(args):
    obj = _load_json(args.points, "--points")
    try:
        return [(parse_scalar(p[0]), parse_scalar(p[1])) for p in obj]
    except (TypeError, ValueError, IndexError) as exc:
        raise InputError("--points: expected a list of [x, y] pairs (%s)" % exc)


def _slice_params(spec, text, tau=None):
    names = param_names(spec)
    values = {n: Fraction(0) for n in names}
    if text:
        for item in text.split(","):
            if "=" not in item:
                raise InputError("--slice: expected name=value, got %r" % item)
            key, val = item.split("=", 1)
            key = key.strip()
            if key not in values:
                raise InputError("--slice: unknown parameter %r (expected %s)" % (key, ", ".join(names)))
            try:
                values[key] = parse_scalar(val)
            except ValueError as exc:
                raise InputError("--slice: %s" % exc)
    t = [values[n] for n in names if n != "tau"]
    return SliceParams(t, values.get("tau", 0))


def _fmt_points(points):
    return [[format_scalar(x), format_scalar(y)] for x, y in points]


# -- commands ----------------------------------------------------------------------

def cmd_construct(args, rep):
    spec = _spec(args)
    rep.result["spec"] = {
        "name": spec.name,
        "m": spec.m,
        "dim": spec.dim,
        "rank": spec.rank,
        "exponents": list(spec.exponents),
    }
    obj = args.object
    if obj == "slice" or args.slice:
        params = _slice_params(spec, args.slice)
        x = principal_slice(spec, params)
        chi = charpoly(x)
        rep.result["matrix"] = x.to_json()
        rep.result["charpoly"] = str(chi)
        rep.check("charpoly", "characteristic polynomial matches the closed formula", chi == slice_charpoly_expected(spec, params))
        rep.check("member", "slice lies in g", spec.is_member(x))
    elif obj == "f":
        rep.result["matrix"] = principal_nilpotent(spec).to_json()
    elif obj == "S":
        rep.result["matrix"] = matrix_S(spec).to_json()
    elif obj == "triple":
        e, f, h = principal_sl2_triple(spec)
        rep.result.update({"e": e.to_json(), "f": f.to_json(), "h": h.to_json()})


def cmd_classify(args, rep):
    spec = _spec(args)
    pair = _pair(args, spec)
    hc = classify(pair, seed=args.seed, trials=args.trials)
    rep.result["class"] = hc.to_json()


def cmd_mu2(args, rep):
    spec = _spec(args)
    pair = _pair(args, spec)
    if pair.A != principal_nilpotent(spec):
        raise NotStandardForm("A must be the standard principal nilpotent of %s" % spec.name)
    value = centralizer_coordinates(spec, pair.B)["f^1"]
    rep.result["mu2"] = format_scalar(value)
    rep.check(
        "mu2",
        "B - mu2 f is irregular and B - mu f regular at sampled mu",
        mu2_verify(spec, pair.B, value, seed=args.seed),
    )


def cmd_chow(args, rep):
    spec = _spec(args)
    rep.result["chow"] = chow(_pair(args, spec)).to_json()


def _cyclic_vector(args, pair):
    v = _vector(args)
    if v is not None:
        return v
    c = cyclicity(pair.A, pair.B, seed=args.seed, trials=args.trials)
    if c.status != "certified-yes":
        raise InputError("no cyclic vector found (%s); pass --vector" % c.status)
    return list(c.witness)


def cmd_ideal(args, rep):
    spec = _spec(args)
    pair = _pair(args, spec)
    pres = idealic_map(pair.A, pair.B, _cyclic_vector(args, pair), check=False)
    rep.result["ideal"] = pres.to_json()
    vanish = all(eval_poly_pair(g, pair.A, pair.B).is_zero() for g in pres.generators())
    rep.check("reconstruction", "every border generator vanishes at (A, B)", vanish)


def cmd_haiman(args, rep):
    diagram = _diagram(args)
    points = _points(args)
    coords = haiman_coords(points_ideal(points), diagram)
    rep.result["diagram"] = list(diagram.rows)
    rep.result["coords"] = [
        {"box": list(box), "b_r": format_scalar(br), "b_b": format_scalar(bb)} for box, br, bb in coords.values
    ]


def _diagram(args):
    if not args.diagram:
        raise InputError("missing --diagram")
    try:
        return YoungDiagram.parse(args.diagram)
    except ValueError as exc:
        raise InputError("--diagram: %s" % exc)


def cmd_chart_change(args, rep):
    spec = _spec(args)
    if spec.type != "D":
        raise InputError("--spec: chart-change needs a D-type algebra")
    pair = _pair(args, spec)
    v = _cyclic_vector(args, pair)
    n = spec.n
    two = read_chart_two(present_in_chart(pair.A, pair.B, v, d_chart_staircase(n, "2n-1,1")), n)
    formula = chart_change_D(two)
    one = read_chart_one(idealic_map(pair.A, pair.B, v), n)
    rep.result["chart [2n-1,1]"] = {
        "u": {str(k): format_scalar(c) for k, c in two.u.items()},
        "u_y": format_scalar(two.u_y),
        "v": {str(k): format_scalar(c) for k, c in two.v.items()},
    }
    rep.result["chart [2n]"] = {
        "t": {str(k): format_scalar(c) for k, c in one.t.items()},
        "tau2": format_scalar(one.tau2),
        "mu": {str(k): format_scalar(c) for k, c in one.mu.items()},
    }
    rep.check("chart-change", "formulas reproduce the directly computed [2n] chart", formula == one)


def cmd_symplectic(args, rep):
    if args.diagram:
        diagram = _diagram(args)
        rows = set(diagram.rows)
        if len(rows) != 1:
            raise InputError("--diagram: the symplectic check needs a rectangle")
        k, l = len(diagram.rows), diagram.rows[0]
    else:
        k, l = args.k, args.l
    points = _points(args) if args.points else None
    res = symplectic_rectangle_check(k, l, points=points, seed=args.seed)
    rep.result["points"] = _fmt_points(res.points)
    rep.result["sign"] = res.sign
    rep.check("symplectic", "J^T Omega_b J = +-Omega_xy on the %dx%d chart" % (k, l), res.equal)


def cmd_gcx(args, rep):
    try:
        spec = build_spec(args.shape)
    except ValueError as exc:
        raise InputError("--shape: %s" % exc)
    for s in range(args.seeds):
        rng = random.Random(args.seed * 1000 + s)
        ideal = gcx.random_fiber_ideal(spec, rng, degree=args.degree)
        ok, residuals = gcx.verify_coisotropy(ideal)
        rep.check(
            "coisotropy/%d" % s,
            "{f_i, f_j} = 0 mod I",
            ok,
            {"residuals": {"%d,%d" % k: str(v) for k, v in residuals.items()}},
        )
        rep.check("confluence/%d" % s, "rewrite system is confluent", gcx.is_confluent(ideal))
        h = gcx.const(0)
        for a in range(spec.m + 1):
            for b in range(3):
                h = h + gcx.fiber_monomial(a, b, gcx.random_coefficient(rng, args.degree))
        bad = {}
        for k, g in enumerate(ideal.generators()):
            lhs = gcx.reduce_mod(ideal, gcx.poisson(h, g))
            rhs = gcx.reduce_mod(ideal, gcx.poisson(gcx.reduce_mod(ideal, h), g))
            if lhs != rhs:
                bad[str(k)] = str(lhs - rhs)
        rep.check("reduction/%d" % s, "{H, f} mod I = {H mod I, f} mod I", not bad, {"residuals": bad})


def cmd_spectral(args, rep):
    spec = _spec(args)
    rng = random.Random(args.seed)
    t = gcx.random_t(spec, rng, holomorphic=not args.antiholomorphic)
    ok, residual = gcx.lagrangian_order1_check(gcx.spectral_pair(spec, t))
    rep.result["residual"] = str(residual)
    rep.check("lagrangian", "{P, Q} = 0 mod <P, Q> to first order in t", ok)


def cmd_real(args, rep):
    if args.real_command == "sl2r-check":
        report = sl2R_orbit_check()
        for key, value in report.items():
            if isinstance(value, bool):
                rep.check(key, key, value)
            else:
                rep.result[key] = format_scalar(value)
        return
    spec = _spec(args) if args.spec else build_spec("A1")
    obj = _load_json(args.pair, "--pair")
    try:
        a, b = Matrix.from_json(obj["A"]), Matrix.from_json(obj["B"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("--pair: %s" % exc)
    rep.result["class"] = classify_real(build_split(spec), a, b).to_json()


def cmd_verify_all(args, rep):
    for chk in acceptance.run_all(args.seed):
        rep.check(chk.id, chk.title, chk.passed, {"parts": chk.parts, "notes": chk.notes})


# -- parser --------------------------------------------------------------------------

def _common(p):
    p.add_argument("--spec", help="Lie algebra, e.g. A2, B3, C2, D4")
    p.add_argument("--pair", help="JSON file with matrices A and B")
    p.add_argument("--vector", help="JSON file with a cyclic vector")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--out", help="write the report to this file")
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser():
    parser = argparse.ArgumentParser(prog="ghilb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build f, S, the sl2 triple or a slice")
    _common(p)
    p.add_argument("--object", choices=("f", "S", "triple", "slice"), default="f")
    p.add_argument("--slice", help="slice parameters, e.g. t2=1,t4=2 (tau=... for D)")
    p.set_defaults(func=cmd_construct)

    for name, func, text in (
        ("classify", cmd_classify, "classify a commuting pair"),
        ("mu2", cmd_mu2, "the mu_2 coordinate of a standard-form pair"),
        ("chow", cmd_chow, "the Chow map"),
        ("ideal", cmd_ideal, "the idealic map"),
        ("chart-change", cmd_chart_change, "D-type chart change"),
    ):
        p = sub.add_parser(name, help=text)
        _common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("hilb", help="alias group: hilb classify")
    hsub = p.add_subparsers(dest="hilb_command", required=True)
    hp = hsub.add_parser("classify")
    _common(hp)
    hp.set_defaults(func=cmd_classify)

    p = sub.add_parser("haiman", help="Haiman coordinates of the ideal of points")
    _common(p)
    p.add_argument("--diagram", help="e.g. 2x2 or 3,1")
    p.add_argument("--points", help="JSON list of [x, y]")
    p.set_defaults(func=cmd_haiman)

    p = sub.add_parser("symplectic-check", help="canonical coordinates on a rectangle chart")
    _common(p)
    p.add_argument("--diagram")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--l", type=int, default=2)
    p.add_argument("--points")
    p.set_defaults(func=cmd_symplectic)

    p = sub.add_parser("gcx", help="fiber ideal calculus")
    gsub = p.add_subparsers(dest="gcx_command", required=True)
    gp = gsub.add_parser("verify")
    _common(gp)
    gp.add_argument("--shape", required=True)
    gp.add_argument("--degree", type=int, default=2)
    gp.add_argument("--seeds", type=int, default=3)
    gp.set_defaults(func=cmd_gcx)

    p = sub.add_parser("spectral", help="first-order Lagrangian check of (P, Q)")
    _common(p)
    p.add_argument("--antiholomorphic", action="store_true", help="let t depend on zb")
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("real", help="split real forms")
    rsub = p.add_subparsers(dest="real_command", required=True)
    rp = rsub.add_parser("sl2r-check")
    _common(rp)
    rp.set_defaults(func=cmd_real)
    rp = rsub.add_parser("classify")
    _common(rp)
    rp.set_defaults(func=cmd_real)

    p = sub.add_parser("verify-all", help="run the acceptance suite")
    _common(p)
    p.set_defaults(func=cmd_verify_all)
    return parser


def _suite_name(args):
    parts = [args.command]
    for attr in ("hilb_command", "gcx_command", "real_command"):
        if getattr(args, attr, None):
            parts.append(getattr(args, attr))
    return " ".join(parts)


def run_command(argv):
    """Returns (exit code, report dict or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    rep = Report(_suite_name(args), args.seed)
    try:
        args.func(args, rep)
    except (InputError, GhilbError) as exc:
        err = {"suite": rep.suite, "error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err), file=sys.stderr)
        return 2, err
    payload = rep.to_json()
    text = rep.to_text() if args.format == "text" else json.dumps(payload, indent=2, default=str)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return (0 if rep.ok else 1), payload


def main(argv=None):
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
