"""Batch command-line front end.

Every subcommand reads a single JSON config (--config) and prints a
deterministic report (JSON by default, aligned text with --format table).
Exit codes: 0 success, 1 domain failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import algebra, clifford, cocycle, isolab
from .rings import DEFAULT_GRID, DEFAULT_TOL, RingValue
from .serialize import (ConfigError, cocycle_to_json, element_to_json,
                        parse_cocycle, parse_descriptor, parse_element,
                        parse_value, value_to_json)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def _fmt12(x: float) -> str:
    return f"{float(x):.12g}"


def _emit(payload: dict, args) -> None:
    if args.format == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        lines = []

        def walk(prefix, obj):
            if isinstance(obj, dict):
                for k in sorted(obj):
                    walk(f"{prefix}{k}.", obj[k])
            elif isinstance(obj, list):
                lines.append(f"{prefix[:-1]:<40} {json.dumps(obj)}")
            else:
                lines.append(f"{prefix[:-1]:<40} {obj}")

        walk("", payload)
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_config(args) -> dict:
    try:
        with open(args.config) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc


# -- subcommands -----------------------------------------------------------

def cmd_validate(args) -> int:
    cfg = _load_config(args)
    f = parse_cocycle(cfg["cocycle"])
    report = cocycle.validate(f, tol=args.tol)
    payload = {
        "valid": report.ok,
        "violations": [
            {"check": c, "where": [str(w) for w in where],
             "residual": _fmt12(r)}
            for c, where, r in report.violations[:50]
        ],
    }
    _emit(payload, args)
    return EXIT_OK if report.ok else EXIT_DOMAIN


def cmd_mul(args) -> int:
    cfg = _load_config(args)
    f = parse_cocycle(cfg["cocycle"])
    _require_valid_cli(f, args.tol)
    x = parse_element(f, cfg["x"])
    y = parse_element(f, cfg["y"])
    _emit({"result": element_to_json(algebra.alg_mul(x, y))}, args)
    return EXIT_OK


def cmd_star(args) -> int:
    cfg = _load_config(args)
    f = parse_cocycle(cfg["cocycle"])
    _require_valid_cli(f, args.tol)
    x = parse_element(f, cfg["x"])
    _emit({"result": element_to_json(algebra.alg_star(x))}, args)
    return EXIT_OK


def cmd_norm(args) -> int:
    cfg = _load_config(args)
    f = parse_cocycle(cfg["cocycle"])
    _require_valid_cli(f, args.tol)
    x = parse_element(f, cfg["x"])
    _emit({"norm": _fmt12(algebra.alg_norm(x, grid=args.grid))}, args)
    return EXIT_OK


def cmd_classify(args) -> int:
    cfg = _load_config(args)
    d = parse_descriptor(cfg.get("descriptor", "complex"))
    if d.kind not in ("complex", "laurent"):
        raise ConfigError("classify supports complex scalars and Laurent "
                          "rings only")
    vectors = cfg["alphas"]
    if not vectors:
        raise ConfigError("classify needs at least one parameter vector")
    n = len(vectors[0]) + 1
    parsed = []
    for vec in vectors:
        if len(vec) != n - 1:
            raise ConfigError("all parameter vectors must share one length")
        parsed.append([parse_value(d, a) for a in vec])
    classes = []           # list of (representative index, member list)
    witnesses = {}
    for i, alphas in enumerate(parsed):
        placed = False
        for rep, members in classes:
            lam = cocycle.equivalent_cyclic(parsed[rep], alphas,
                                            descriptor=d, tol=args.tol)
            if lam is not None:
                members.append(i)
                witnesses[i] = [value_to_json(v) for v in lam.values]
                placed = True
                break
        if not placed:
            classes.append((i, [i]))
    payload = {
        "n": n,
        "class_count": len(classes),
        "classes": [{"representative": rep, "members": members}
                    for rep, members in classes],
        "witnesses": {str(i): w for i, w in sorted(witnesses.items())},
    }
    _emit(payload, args)
    return EXIT_OK


def _report_payload(rep: isolab.MorphismReport) -> dict:
    out = rep.to_dict()
    for k in ("unit_residual", "mult_residual", "star_residual"):
        out[k] = _fmt12(out[k])
    return out


def _build_iso(cfg, tol):
    name = cfg.get("constructor")
    params = cfg.get("params", {})

    def cval(key, d):
        return parse_value(d, params[key])

    if name == "identity":
        return isolab.identity_morphism(parse_cocycle(cfg["cocycle"]))
    if name == "lambda":
        f = parse_cocycle(cfg["cocycle"])
        vals = [parse_value(f.descriptor, v) for v in params["lambda"]]
        lam = cocycle.Lambda(f.group, f.descriptor, vals)
        return isolab.lambda_isomorphism(f, lam)
    if name == "z2_split":
        f = parse_cocycle(cfg["cocycle"])
        x = (parse_value(f.descriptor, params["x"])
             if "x" in params else None)
        return isolab.z2_split(f, x=x, tol=tol)
    if name == "z2_complexify":
        return isolab.z2_complexify(parse_cocycle(cfg["cocycle"]), tol=tol)
    if name in ("klein_split4", "klein_complex_pair", "klein_quaternion",
                "klein_matrix"):
        d = parse_descriptor(cfg.get("descriptor", "complex"))
        a, b, g = cval("alpha", d), cval("beta", d), cval("gamma", d)
        kw = {"tol": tol}
        for root in ("x", "y"):
            if root in params:
                kw[root] = parse_value(d, params[root])
        if name == "klein_complex_pair":
            kw["variant"] = int(params.get("variant", 1))
        return getattr(isolab, name)(a, b, g, **kw)
    if name == "char_decompose_z2n":
        return isolab.char_decompose_z2n(parse_cocycle(cfg["cocycle"]),
                                         tol=tol)
    if name == "cyclic_decompose":
        d = parse_descriptor(cfg.get("descriptor", "complex"))
        alphas = [parse_value(d, a) for a in params["alphas"]]
        f = cocycle.make_f_alpha(len(alphas) + 1, alphas, d)
        beta = parse_value(d, params["beta"]) if "beta" in params else None
        return isolab.cyclic_decompose(f, alphas, beta=beta, tol=tol)
    if name == "z2z4_decompose":
        return isolab.z2z4_decompose(tol=tol)
    raise ConfigError(f"unknown iso constructor {name!r}")


def cmd_iso(args) -> int:
    cfg = _load_config(args)
    try:
        morphism = _build_iso(cfg, args.tol)
    except ConfigError:
        raise
    except ValueError as exc:
        _emit({"verified": False, "error": str(exc)}, args)
        return EXIT_DOMAIN
    rep = isolab.verify_morphism(morphism, tol=args.tol)
    verified = (rep.ok(args.tol) and rep.injective in (True, None)
                and rep.surjective in (True, None))
    _emit({"verified": verified, "report": _report_payload(rep)}, args)
    return EXIT_OK if verified else EXIT_DOMAIN


def cmd_clifford(args) -> int:
    cfg = _load_config(args)
    d = parse_descriptor(cfg.get("field", cfg.get("descriptor", "complex")))
    values = [parse_value(d, v) for v in cfg["rho"]]
    labels = cfg.get("labels", list(range(1, len(values) + 1)))
    spec = clifford.CliffordSpec(labels, values, d, tol=args.tol)
    f = clifford.clifford_cocycle(spec)
    payload = {"cocycle": cocycle_to_json(f)}

    relations = {"anticommute": True, "squares": True}
    worst = 0.0
    for i in range(spec.size):
        vi = algebra.generator(f, 1 << i)
        sq = algebra.alg_mul(vi, vi)
        want = algebra.unit(f).scale_ring(spec.values[i])
        worst = max(worst, max((a - b).abs_bound()
                               for a, b in zip(sq.coeffs, want.coeffs)))
        for j in range(i):
            vj = algebra.generator(f, 1 << j)
            anti = algebra.alg_mul(vi, vj) + algebra.alg_mul(vj, vi)
            worst = max(worst, max(c.abs_bound() for c in anti.coeffs))
    relations["residual"] = _fmt12(worst)
    relations["anticommute"] = relations["squares"] = worst <= args.tol
    payload["relations"] = relations

    ok = worst <= args.tol
    per = cfg.get("periodicity")
    if per:
        op = per.get("op")
        if op == "extend_two_matrix":
            m = clifford.extend_two_matrix(
                spec, parse_value(d, per["alpha1"]),
                parse_value(d, per["alpha2"]), tol=args.tol)
        elif op == "extend_two_quaternion":
            m = clifford.extend_two_quaternion(
                spec, parse_value(d, per["alpha1"]),
                parse_value(d, per["alpha2"]), tol=args.tol)
        elif op == "complexify_odd":
            m = clifford.complexify_odd(spec, tol=args.tol)
        elif op == "split_odd":
            m = clifford.split_odd(spec, tol=args.tol)[3]
        else:
            raise ConfigError(f"unknown periodicity op {op!r}")
        rep = isolab.verify_morphism(m, tol=args.tol)
        payload["periodicity"] = {"op": op, "report": _report_payload(rep)}
        ok = ok and rep.bijective(args.tol)
    _emit(payload, args)
    return EXIT_OK if ok else EXIT_DOMAIN


def _require_valid_cli(f, tol):
    rep = cocycle.validate(f, tol=tol)
    if not rep.ok:
        raise ValueError(f"invalid cocycle: {rep}")


# -- entry point -----------------------------------------------------------

_COMMANDS = {
    "validate": cmd_validate,
    "mul": cmd_mul,
    "star": cmd_star,
    "norm": cmd_norm,
    "classify": cmd_classify,
    "iso": cmd_iso,
    "clifford": cmd_clifford,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="twistalg",
        description="Twisted group algebra toolkit (batch mode)")
    sub = p.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--config", required=True)
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
        sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
        sp.add_argument("--format", choices=("json", "table"),
                        default="json")
        sp.add_argument("--out", default=None)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if args.tol <= 0 or args.grid <= 0:
        sys.stderr.write("tol and grid must be positive\n")
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        sys.stderr.write(f"config error: {exc}\n")
        return EXIT_USAGE
    except (KeyError, TypeError) as exc:
        sys.stderr.write(f"config error: missing or malformed field "
                         f"{exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
