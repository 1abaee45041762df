"""JSON-compatible config parsing and deterministic emission.

Scalars travel as "a+bi" strings, Laurent values as [exponents, coeff]
term lists, matrices as row lists, quaternions as 4-tuples, product values
as per-factor lists.  Groups are {kind: cyclic|product|subsets, ...} and
cocycles are either explicit tables or named constructor shorthands.
"""
from __future__ import annotations

import numpy as np

from .cocycle import SchurFunction, klein_table, make_f_alpha
from .groups import GroupTable, direct_product, make_cyclic, make_subset_group
from .rings import (COMPLEX, REAL, RingDescriptor, RingValue, laurent,
                    matrix_ring, product_ring)


class ConfigError(ValueError):
    """Raised for malformed configs (CLI exit code 2)."""


# -- descriptors -----------------------------------------------------------

_SCALAR_KINDS = {"complex": COMPLEX, "real": REAL}


def parse_descriptor(obj) -> RingDescriptor:
    if isinstance(obj, str):
        if obj in _SCALAR_KINDS:
            return _SCALAR_KINDS[obj]
        if obj == "quaternion":
            from .rings import QUATERNION
            return QUATERNION
        raise ConfigError(f"unknown ring descriptor {obj!r}")
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ConfigError("ring descriptor must be a string or a kind dict")
    kind = obj["kind"]
    if kind in ("complex", "real", "quaternion"):
        return parse_descriptor(kind)
    if kind == "laurent":
        return laurent(m=int(obj.get("m", 1)),
                       field=obj.get("field", "complex"))
    if kind == "matrix":
        return matrix_ring(int(obj["k"]), field=obj.get("field", "complex"))
    if kind == "product":
        return product_ring(*(parse_descriptor(f) for f in obj["factors"]))
    raise ConfigError(f"unknown ring descriptor kind {kind!r}")


def descriptor_to_json(d: RingDescriptor):
    if d.kind in ("complex", "real", "quaternion"):
        return d.kind
    if d.kind == "laurent":
        return {"kind": "laurent", "m": d.m, "field": d.field}
    if d.kind == "matrix":
        return {"kind": "matrix", "k": d.k, "field": d.field}
    if d.kind == "product":
        return {"kind": "product",
                "factors": [descriptor_to_json(f) for f in d.factors]}
    raise ConfigError(f"unserializable descriptor {d}")


# -- scalars ---------------------------------------------------------------

def parse_scalar(obj) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, list) and len(obj) == 2:
        return complex(float(obj[0]), float(obj[1]))
    if isinstance(obj, str):
        s = obj.strip().replace(" ", "").replace("i", "j")
        try:
            return complex(s)
        except ValueError as exc:
            raise ConfigError(f"bad scalar literal {obj!r}") from exc
    raise ConfigError(f"bad scalar literal {obj!r}")


def _fmt_float(x: float) -> str:
    out = f"{x:.12g}"
    return "0" if out in ("-0", "0") else out


def scalar_to_json(c: complex) -> str:
    re, im = _fmt_float(c.real), _fmt_float(abs(c.imag))
    if c.imag == 0:
        return re
    sign = "+" if c.imag >= 0 else "-"
    return f"{re}{sign}{im}i"


# -- ring values -----------------------------------------------------------

def parse_value(d: RingDescriptor, obj) -> RingValue:
    if d.kind in ("complex", "real"):
        return RingValue.scalar(d, parse_scalar(obj))
    if d.kind == "laurent":
        terms = []
        for term in obj:
            if not isinstance(term, list) or len(term) != 2:
                raise ConfigError("Laurent term must be [exponents, coeff]")
            exps, coeff = term
            if isinstance(exps, int):
                exps = [exps]
            if len(exps) != d.m:
                raise ConfigError("exponent vector length mismatch")
            terms.append((tuple(int(e) for e in exps), parse_scalar(coeff)))
        acc = {}
        for exps, c in terms:
            acc[exps] = acc.get(exps, 0j) + c
        return RingValue.poly(d, acc)
    if d.kind == "matrix":
        rows = [[parse_scalar(e) for e in row] for row in obj]
        if len(rows) != d.k or any(len(r) != d.k for r in rows):
            raise ConfigError(f"matrix literal must be {d.k}x{d.k}")
        return RingValue.mat(d, rows)
    if d.kind == "quaternion":
        if len(obj) != 4:
            raise ConfigError("quaternion literal must have 4 coordinates")
        return RingValue.quaternion([float(x) for x in obj])
    if d.kind == "product":
        if len(obj) != len(d.factors):
            raise ConfigError("product literal component count mismatch")
        return RingValue.tuple_value(
            d, [parse_value(f, o) for f, o in zip(d.factors, obj)])
    raise ConfigError(f"cannot parse value of kind {d.kind}")


def value_to_json(v: RingValue):
    d = v.descriptor
    if d.kind in ("complex", "real"):
        return scalar_to_json(complex(v.payload))
    if d.kind == "laurent":
        return [[list(e), scalar_to_json(c)]
                for e, c in sorted(v.payload.items())]
    if d.kind == "matrix":
        return [[scalar_to_json(v.payload[i, j]) for j in range(d.k)]
                for i in range(d.k)]
    if d.kind == "quaternion":
        return [_fmt_float(float(x)) for x in v.payload]
    if d.kind == "product":
        return [value_to_json(c) for c in v.payload]
    raise ConfigError(f"unserializable value kind {d.kind}")


# -- groups ----------------------------------------------------------------

def parse_group(obj) -> GroupTable:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ConfigError("group must be a kind dict")
    kind = obj["kind"]
    if kind == "cyclic":
        return make_cyclic(int(obj["n"]))
    if kind == "product":
        factors = [parse_group(f) for f in obj["factors"]]
        if len(factors) < 2:
            raise ConfigError("product group needs at least two factors")
        out = factors[0]
        for f in factors[1:]:
            out = direct_product(out, f)
        return out
    if kind == "subsets":
        return make_subset_group(obj["labels"])
    if kind == "table":
        try:
            return GroupTable(obj["mul"], labels=obj.get("labels"))
        except ValueError as exc:
            raise ConfigError(f"bad group table: {exc}") from exc
    raise ConfigError(f"unknown group kind {kind!r}")


def group_to_json(g: GroupTable):
    return {"kind": "table", "labels": list(map(str, g.labels)),
            "mul": [[int(e) for e in row] for row in g.mul]}


# -- cocycles --------------------------------------------------------------

def parse_cocycle(obj) -> SchurFunction:
    if not isinstance(obj, dict):
        raise ConfigError("cocycle must be a dict")
    d = parse_descriptor(obj.get("descriptor", "complex"))
    if "table" in obj:
        g = parse_group(obj["group"])
        table = obj["table"]
        if len(table) != g.order or any(len(r) != g.order for r in table):
            raise ConfigError("cocycle table shape mismatch")
        vals = [[parse_value(d, e) for e in row] for row in table]
        return SchurFunction(g, d, vals)
    if "f_alpha" in obj:
        alphas = [parse_value(d, a) for a in obj["f_alpha"]]
        return make_f_alpha(len(alphas) + 1, alphas, d)
    if "klein_table" in obj:
        p = obj["klein_table"]
        try:
            return klein_table(parse_value(d, p["alpha"]),
                               parse_value(d, p["beta"]),
                               parse_value(d, p["gamma"]),
                               parse_value(d, p["eps"]))
        except KeyError as exc:
            raise ConfigError(f"klein_table missing parameter {exc}") from exc
    if "clifford_rho" in obj:
        from .clifford import CliffordSpec, clifford_cocycle
        values = [parse_value(d, a) for a in obj["clifford_rho"]]
        labels = obj.get("labels", list(range(1, len(values) + 1)))
        return clifford_cocycle(CliffordSpec(labels, values, d))
    raise ConfigError("cocycle needs a table or a named constructor")


def cocycle_to_json(f: SchurFunction):
    return {
        "descriptor": descriptor_to_json(f.descriptor),
        "group": group_to_json(f.group),
        "table": [[value_to_json(v) for v in row] for row in f.values],
    }


# -- elements --------------------------------------------------------------

def parse_element(f: SchurFunction, obj):
    from .algebra import AlgebraElement
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ConfigError("element must be {coeffs: {label: value}}")
    x = AlgebraElement.zero(f)
    labels = {str(l): i for i, l in enumerate(f.group.labels)}
    for label, val in obj["coeffs"].items():
        if str(label) not in labels:
            raise ConfigError(f"unknown group element label {label!r}")
        x.coeffs[labels[str(label)]] = parse_value(f.descriptor, val)
    return x


def element_to_json(x):
    out = {}
    for t, c in enumerate(x.coeffs):
        if not c.is_zero(0.0):
            out[str(x.cocycle.group.labels[t])] = value_to_json(c)
    return {"coeffs": out}


def regular_matrix_csv(x) -> str:
    """Flattened complex regular matrix with real/imag interleaved."""
    from .algebra import regular_matrix
    m = regular_matrix(x).flatten()
    lines = []
    for row in np.asarray(m):
        cells = []
        for c in row:
            cells.append(_fmt_float(c.real))
            cells.append(_fmt_float(c.imag))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
