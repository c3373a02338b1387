"""Command-line front end: ``curvatura solve | check | figure``.

Exit codes: 0 success, 1 a geometric failure (failed proposition or an
error response from ``solve``), 2 a usage or schema error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from curvatura import figures, parallelism, quad, suites, trig
from curvatura.errors import GeometryError, SchemaError, UnknownSuite
from curvatura.geom import Kind, SpaceForm

DEFAULT_TOL = 1e-9


# ---------------------------------------------------------------------------
# number formatting


def _round(x: float):
    """15 significant digits, then the shortest repr that round-trips."""
    if not math.isfinite(x):
        return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
    if x == 0:
        return 0.0
    return float(f"{x:.15g}")


def _clean(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return _round(value)
    if isinstance(value, dict):
        return {str(k): _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(doc) -> str:
    return json.dumps(_clean(doc), sort_keys=True, ensure_ascii=False, allow_nan=False)


def env_tol() -> float | None:
    raw = os.environ.get("CURVATURA_TOL")
    if raw is None or raw == "":
        return None
    try:
        tol = float(raw)
    except ValueError:
        raise SchemaError(f"CURVATURA_TOL is not a number: {raw!r}") from None
    if not tol > 0:
        raise SchemaError("CURVATURA_TOL must be positive")
    return tol


# ---------------------------------------------------------------------------
# solve


def _typed(value, kind, where):
    if kind == "number":
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise SchemaError(f"{where} must be a finite number")
        return float(value)
    if kind == "count":
        if isinstance(value, bool) or not isinstance(value, int):
            raise SchemaError(f"{where} must be an integer")
        return value
    if kind == "numbers":
        if not isinstance(value, list) or not value:
            raise SchemaError(f"{where} must be a non-empty list of numbers")
        return [_typed(v, "number", f"{where}[{i}]") for i, v in enumerate(value)]
    if kind == "bool":
        if not isinstance(value, bool):
            raise SchemaError(f"{where} must be true or false")
        return value
    raise AssertionError(kind)


def _check_keys(mapping, allowed, where):
    if not isinstance(mapping, dict):
        raise SchemaError(f"{where} must be an object")
    extra = sorted(set(mapping) - set(allowed))
    if extra:
        raise SchemaError(f"{where}: unexpected keys {extra}")


def parse_space(doc, tol=None) -> SpaceForm:
    _check_keys(doc, ("kind", "radius"), "space")
    kind = doc.get("kind")
    if kind not in ("spherical", "euclidean", "hyperbolic"):
        raise SchemaError("space.kind must be 'spherical', 'euclidean' or 'hyperbolic'")
    radius = 1.0
    if "radius" in doc:
        radius = _typed(doc["radius"], "number", "space.radius")
        if not radius > 0:
            raise SchemaError("space.radius must be positive")
        if kind == "euclidean" and radius != 1.0:
            raise SchemaError("the Euclidean plane has no radius")
    return SpaceForm(Kind(kind), radius=radius, tol=tol or DEFAULT_TOL)


TASK_PARAMS = {
    "triangle-sss": {"a": "number", "b": "number", "c": "number"},
    "triangle-sas": {"b": "number", "c": "number", "A": "number"},
    "lambert-quad": {"a": "number", "b": "number"},
    "saccheri": {"base": "number", "leg": "number"},
    "profile": {"h0": "number", "t": "numbers"},
    "parallelism-angle": {"p": "number"},
    "canonical-unit": {"angle": "number", "angle_deg_min_sec": "numbers"},
    "chain": {"s": "number", "theta": "number", "n": "count", "centered": "bool"},
}
OPTIONAL = {"canonical-unit": {"angle", "angle_deg_min_sec"}, "chain": {"centered"}}


def _params(task, doc):
    schema = TASK_PARAMS[task]
    _check_keys(doc, schema, "params")
    optional = OPTIONAL.get(task, set())
    out = {}
    for key, kind in schema.items():
        if key in doc:
            out[key] = _typed(doc[key], kind, f"params.{key}")
        elif key not in optional:
            raise SchemaError(f"params: missing {key!r}")
    return out


def _triangle(space, tri: trig.Triangle):
    result = {
        "a": tri.a, "b": tri.b, "c": tri.c,
        "A": tri.A, "B": tri.B, "C": tri.C,
        "angle_sum": tri.angle_sum,
    }
    if space.curved:
        result["area"] = trig.area_from_angles(space, tri.A, tri.B, tri.C)
        result["excess" if space.kind is Kind.SPHERICAL else "defect"] = abs(tri.excess)
    return result


def _task_triangle_sss(space, p):
    return _triangle(space, trig.Triangle.from_sides(space, p["a"], p["b"], p["c"]))


def _task_triangle_sas(space, p):
    a = trig.side_from_sas(space, p["b"], p["c"], p["A"])
    return _triangle(space, trig.Triangle.from_sides(space, a, p["b"], p["c"]))


def _task_lambert(space, p):
    q = quad.lambert_quadrilateral(space, p["a"], p["b"])
    return {"a": q.a, "b": q.b, "c": q.c, "d": q.d, "phi": q.phi}


def _task_saccheri(space, p):
    q = quad.saccheri_quadrilateral(space, p["base"], p["leg"])
    return {
        "base": q.base, "leg": q.leg, "summit": q.summit,
        "summit_angle": q.summit_angle, "midline": q.midline,
    }


def _task_profile(space, p):
    prof = quad.perpendicular_profile(space, p["h0"], p["t"])
    return {
        "h0": prof.h0,
        "samples": [{"t": s.t, "h": s.h, "phi": s.phi} for s in prof.samples],
        "closed_form_residual": prof.closed_form_residual,
    }


def _task_parallelism(space, p):
    angle = parallelism.angle_of_parallelism(space, p["p"])
    result = {"p": p["p"], "angle": angle}
    if space.kind is Kind.EUCLIDEAN:
        result["euclidean"] = True
    return result


def _task_canonical_unit(space, p):
    if ("angle" in p) == ("angle_deg_min_sec" in p):
        raise SchemaError("params: give exactly one of 'angle' and 'angle_deg_min_sec'")
    if "angle" in p:
        alpha = p["angle"]
    else:
        dms = p["angle_deg_min_sec"]
        if len(dms) != 3:
            raise SchemaError("params.angle_deg_min_sec must be [degrees, minutes, seconds]")
        alpha = math.radians(dms[0] + dms[1] / 60 + dms[2] / 3600)
    s = trig.equilateral_side_for_angle(space, alpha)
    excess = 3 * alpha - math.pi
    return {
        "angle": alpha,
        "s": s,
        "defect" if excess < 0 else "excess": abs(excess),
        "area": space.radius**2 * abs(excess),
    }


def _task_chain(space, p):
    chain = parallelism.build_chain(
        space, p["s"], p["theta"], p["n"], centered=p.get("centered", space.kind is Kind.HYPERBOLIC)
    )
    center = parallelism.classify_chain_center(chain)
    result = {"n": chain.n, "vertices": len(chain.vertices), "center": center.tag.value}
    if center.radius is not None:
        result["radius"] = center.radius
    if center.offset is not None:
        result["offset"] = center.offset
    if space.kind is Kind.HYPERBOLIC:
        result["s_crit"] = parallelism.critical_chain_side_closed_form(space, p["theta"])
    return result


TASKS = {
    "triangle-sss": _task_triangle_sss,
    "triangle-sas": _task_triangle_sas,
    "lambert-quad": _task_lambert,
    "saccheri": _task_saccheri,
    "profile": _task_profile,
    "parallelism-angle": _task_parallelism,
    "canonical-unit": _task_canonical_unit,
    "chain": _task_chain,
}


def solve(request, tol=None) -> dict:
    """Answer one request document; raises SchemaError for malformed input."""
    _check_keys(request, ("space", "task", "params"), "request")
    if "space" not in request or "task" not in request:
        raise SchemaError("request needs 'space' and 'task'")
    task = request["task"]
    if task not in TASKS:
        raise SchemaError(f"unknown task {task!r}")
    space = parse_space(request["space"], tol)
    params = _params(task, request.get("params", {}))
    try:
        return {"ok": True, "result": TASKS[task](space, params)}
    except GeometryError as exc:
        return {"ok": False, "error": {"code": exc.code, "detail": str(exc)}}


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{what} is not valid JSON: {exc}") from None


def cmd_solve(args) -> int:
    request = _load_json(_read(args.request), "request")
    response = solve(request, env_tol())
    print(dumps(response))
    return 0 if response["ok"] else 1


# ---------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    tol = args.tol if args.tol is not None else env_tol()
    config = suites.CheckConfig(
        suites=tuple(args.suite or ["all"]),
        samples=args.samples,
        seed=args.seed,
        tol=tol,
        spaces=tuple(args.space or ("spherical", "euclidean", "hyperbolic")),
        jobs=args.jobs,
    )
    report = suites.run_checks(config)
    for r in report["results"]:
        status = "PASS" if r["failures"] == 0 else "FAIL"
        worst = r["worst_residual"]
        worst = f"{worst:.3g}" if isinstance(worst, float) else worst
        print(
            f"{status} {r['id']:<14} {r['space']:<11} samples={r['samples']:<5} "
            f"failures={r['failures']:<4} worst={worst}"
        )
    total = len(report["results"])
    failed = sum(1 for r in report["results"] if r["failures"])
    print(f"{total - failed}/{total} suite runs passed (seed {config.seed}, samples {config.samples})")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(report) + "\n")
    return 0 if report["failures"] == 0 else 1


# ---------------------------------------------------------------------------
# figure


def cmd_figure(args) -> int:
    params = {}
    if args.params:
        text = args.params if args.params.lstrip().startswith("{") else _read(args.params)
        params = _load_json(text, "params")
        if not isinstance(params, dict):
            raise SchemaError("params must be a JSON object")
    params = dict(params)
    space_doc = params.pop("space", {"kind": figures.DEFAULT_KIND.get(args.id, "euclidean")})
    space = parse_space(space_doc, env_tol())
    try:
        svg = figures.build(args.id, space, params).to_svg()
    except GeometryError as exc:
        print(dumps({"ok": False, "error": {"code": exc.code, "detail": str(exc)}}), file=sys.stderr)
        return 1
    if args.out == "-":
        sys.stdout.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curvatura", description="Constant-curvature plane geometry.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="answer a JSON task request")
    p.add_argument("request", help="request file, or - for stdin")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="run the property suites")
    p.add_argument("--suite", action="append", help="suite id or 'all' (repeatable)")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None, help="override residual thresholds")
    p.add_argument("--space", action="append", choices=("spherical", "euclidean", "hyperbolic"))
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", help="write the full JSON report here")
    p.add_argument("--list", action="store_true", help="list suites and exit")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("figure", help="render a figure as SVG")
    p.add_argument("--id", required=True, choices=sorted(figures.BUILDERS))
    p.add_argument("--params", help="JSON file, inline JSON object, or - for stdin")
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check":
        if args.list:
            for sid, entry in suites.SUITES.items():
                print(f"{sid:<14} {','.join(entry.spaces):<32} {entry.summary}")
            return 0
        if args.samples < 1:
            parser.error("--samples must be at least 1")
        if args.tol is not None and not args.tol > 0:
            parser.error("--tol must be positive")
    try:
        return args.func(args)
    except SchemaError as exc:
        print(dumps({"ok": False, "error": {"code": exc.code, "detail": str(exc)}}))
        return 2
    except UnknownSuite as exc:
        print(exc.args[0] if exc.args else "unknown suite", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"curvatura: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
