"""Schur functions (2-cocycles) with values in the unitary group of E.

A Schur function on a finite group T is a table f: T x T -> Un(E) with
f(1,1)=1 and f(r,s)f(rs,t)=f(r,st)f(s,t).  All values are required central
in E, which matches every construction implemented here and keeps the
coefficientwise maps of the iso-lab module E-linear.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .groups import GroupTable, make_cyclic, direct_product
from .rings import (DEFAULT_TOL, RingDescriptor, RingValue, COMPLEX, REAL)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, where, residual: float):
        self.violations.append((check, where, float(residual)))

    def __str__(self):
        if self.ok:
            return "valid"
        lines = [f"{len(self.violations)} violation(s):"]
        for check, where, res in self.violations[:50]:
            lines.append(f"  {check} at {where}: residual {res:.3e}")
        if len(self.violations) > 50:
            lines.append(f"  ... {len(self.violations) - 50} more")
        return "\n".join(lines)


def _monomial_table(values, descriptor):
    """Extract (coeff, exponent) arrays when every entry is a unimodular
    monomial (scalars count, with empty exponent vector); else None."""
    n = len(values)
    if descriptor.kind in ("complex", "real"):
        coeff = np.array([[complex(v.payload) for v in row] for row in values])
        return coeff, np.zeros((n, n, 0), dtype=np.int64)
    if descriptor.kind == "laurent":
        coeff = np.empty((n, n), dtype=complex)
        exps = np.empty((n, n, descriptor.m), dtype=np.int64)
        for s in range(n):
            for t in range(n):
                mono = values[s][t].is_monomial()
                if mono is None:
                    return None
                coeff[s, t], exps[s, t] = mono[0], mono[1]
        return coeff, exps
    return None


class SchurFunction:
    def __init__(self, group: GroupTable, descriptor: RingDescriptor, values):
        if len(values) != group.order or any(len(r) != group.order for r in values):
            raise ValueError("value table shape mismatch")
        for row in values:
            for v in row:
                if v.descriptor != descriptor:
                    raise ValueError("value descriptor mismatch")
        self.group = group
        self.descriptor = descriptor
        self.values = [list(row) for row in values]

    def value(self, s: int, t: int) -> RingValue:
        return self.values[s][t]

    def tilde(self, t: int) -> RingValue:
        """f(t, t^{-1})^*."""
        return self.values[t][self.group.inverse(t)].star()

    def validate(self, tol: float = DEFAULT_TOL) -> ValidationReport:
        return validate(self, tol)

    def __repr__(self):
        return (f"SchurFunction(group order {self.group.order}, "
                f"E={self.descriptor})")


def validate(f: SchurFunction, tol: float = DEFAULT_TOL) -> ValidationReport:
    """Exhaustive check of all Schur-function invariants.

    Violations are reported as data; nothing raises.  The cocycle identity
    over all triples is vectorized when every table entry is a unimodular
    monomial (which covers scalar tables), and falls back to a direct loop
    otherwise.
    """
    rep = ValidationReport()
    g, n = f.group, f.group.order
    unit = RingValue.unit(f.descriptor)
    e = g.identity

    if not f.values[e][e].close(unit, tol):
        rep.add("unit", (e, e), (f.values[e][e] - unit).abs_bound())
    for t in range(n):
        for (s1, s2), v in (((t, e), f.values[t][e]), ((e, t), f.values[e][t])):
            if not v.close(unit, tol):
                rep.add("normalization", (s1, s2), (v - unit).abs_bound())
    for s in range(n):
        for t in range(n):
            v = f.values[s][t]
            if not v.is_unitary(tol):
                rep.add("unitary", (s, t), (v * v.star() - unit).abs_bound())
            if not v.is_central(tol):
                rep.add("central", (s, t), 1.0)
    for t in range(n):
        ti = g.inverse(t)
        d = f.values[t][ti] - f.values[ti][t]
        if not d.is_zero(tol):
            rep.add("inverse-symmetry", (t, ti), d.abs_bound())

    mono = _monomial_table(f.values, f.descriptor)
    if mono is not None:
        coeff, exps = mono
        mul = g.mul
        # LHS[r,s,t] = f(r,s) f(rs,t); RHS[r,s,t] = f(r,st) f(s,t)
        cl = coeff[:, :, None] * coeff[mul]
        cr = coeff[:, mul] * coeff[None, :, :]
        el = exps[:, :, None, :] + exps[mul]
        er = exps[:, mul, :] + exps[None, :, :, :]
        bad = (np.abs(cl - cr) > tol) | np.any(el != er, axis=-1)
        for r, s, t in zip(*np.nonzero(bad)):
            res = abs(cl[r, s, t] - cr[r, s, t])
            if np.any(el[r, s, t] != er[r, s, t]):
                res = max(res, 2.0)
            rep.add("cocycle", (int(r), int(s), int(t)), res)
    else:
        for r in range(n):
            for s in range(n):
                rs = g.op(r, s)
                frs = f.values[r][s]
                for t in range(n):
                    lhs = frs * f.values[rs][t]
                    rhs = f.values[r][g.op(s, t)] * f.values[s][t]
                    d = lhs - rhs
                    if not d.is_zero(tol):
                        rep.add("cocycle", (r, s, t), d.abs_bound())
    return rep


def _require_valid(f: SchurFunction, what: str, tol: float = DEFAULT_TOL):
    rep = validate(f, tol)
    if not rep.ok:
        raise ValueError(f"{what} produced an invalid cocycle:\n{rep}")
    return f


# -- pointwise group structure on cocycles ---------------------------------

def cocycle_mul(f: SchurFunction, g: SchurFunction) -> SchurFunction:
    if f.group is not g.group and not np.array_equal(f.group.mul, g.group.mul):
        raise ValueError("group mismatch")
    if f.descriptor != g.descriptor:
        raise ValueError("descriptor mismatch")
    vals = [[f.values[s][t] * g.values[s][t] for t in range(f.group.order)]
            for s in range(f.group.order)]
    return SchurFunction(f.group, f.descriptor, vals)


def cocycle_inverse(f: SchurFunction) -> SchurFunction:
    vals = [[v.star() for v in row] for row in f.values]
    return SchurFunction(f.group, f.descriptor, vals)


def hat(f: SchurFunction) -> SchurFunction:
    """(s,t) -> f(t^{-1}, s^{-1}); an involutive automorphism of the group
    of Schur functions."""
    g = f.group
    vals = [[f.values[g.inverse(t)][g.inverse(s)] for t in range(g.order)]
            for s in range(g.order)]
    return SchurFunction(g, f.descriptor, vals)


def tilde(f: SchurFunction, t: int) -> RingValue:
    return f.tilde(t)


# -- coboundaries ----------------------------------------------------------

class Lambda:
    """A normalized family of central unitaries lambda: T -> Un(E)."""

    def __init__(self, group: GroupTable, descriptor: RingDescriptor, values,
                 tol: float = DEFAULT_TOL):
        values = list(values)
        if len(values) != group.order:
            raise ValueError("lambda needs one value per group element")
        unit = RingValue.unit(descriptor)
        if not values[group.identity].close(unit, tol):
            raise ValueError("lambda(1) must be 1")
        for i, v in enumerate(values):
            if v.descriptor != descriptor:
                raise ValueError("descriptor mismatch")
            if not v.is_unitary(tol):
                raise ValueError(f"lambda({i}) is not unitary")
            if not v.is_central(tol):
                raise ValueError(f"lambda({i}) is not central")
        self.group = group
        self.descriptor = descriptor
        self.values = values

    def value(self, t: int) -> RingValue:
        return self.values[t]

    def mul(self, other: "Lambda") -> "Lambda":
        return Lambda(self.group, self.descriptor,
                      [a * b for a, b in zip(self.values, other.values)])

    def star(self) -> "Lambda":
        return Lambda(self.group, self.descriptor,
                      [v.star() for v in self.values])

    def hat(self) -> "Lambda":
        g = self.group
        return Lambda(g, self.descriptor,
                      [self.values[g.inverse(t)] for t in range(g.order)])


def coboundary(lam: Lambda) -> SchurFunction:
    """delta lambda (s,t) = lambda(s) lambda(t) lambda(st)^*."""
    g = lam.group
    vals = [[lam.values[s] * lam.values[t] * lam.values[g.op(s, t)].star()
             for t in range(g.order)] for s in range(g.order)]
    return SchurFunction(g, lam.descriptor, vals)


# -- named constructors ----------------------------------------------------

def trivial_cocycle(group: GroupTable, descriptor: RingDescriptor) -> SchurFunction:
    unit = RingValue.unit(descriptor)
    vals = [[unit for _ in range(group.order)] for _ in range(group.order)]
    return SchurFunction(group, descriptor, vals)


def make_f_alpha(n: int, alphas, descriptor: RingDescriptor = None,
                 tol: float = DEFAULT_TOL) -> SchurFunction:
    """The cocycle on Z/n with parameters (alpha_1, ..., alpha_{n-1}):

        f(p,q) = (prod_{j=p}^{p+q-1} alpha_j) (prod_{k=1}^{q-1} alpha_k^*)

    with alpha_n := 1 and indices taken in 1..n (the group identity 0 is
    identified with n).  f(1,1) = alpha_1.
    """
    alphas = list(alphas)
    if len(alphas) != n - 1:
        raise ValueError(f"need {n - 1} parameters for Z/{n}")
    if descriptor is None:
        if not alphas:
            raise ValueError("descriptor required for n=1")
        descriptor = alphas[0].descriptor
    unit = RingValue.unit(descriptor)
    for i, a in enumerate(alphas):
        if a.descriptor != descriptor:
            raise ValueError("parameter descriptor mismatch")
        if not a.is_unitary(tol):
            raise ValueError(f"alpha_{i + 1} is not unitary")
        if not a.is_central(tol):
            raise ValueError(f"alpha_{i + 1} is not central")
    ext = alphas + [unit]                     # ext[j-1] = alpha_j, alpha_n = 1

    def a_at(j):                              # index in 1..n, mod n
        return ext[(j - 1) % n]

    g = make_cyclic(n)
    vals = []
    for p in range(n):
        pp = p if p >= 1 else n
        row = []
        for q in range(n):
            v = unit
            for j in range(pp, pp + q):
                v = v * a_at(j)
            for k in range(1, q):
                v = v * a_at(k).star()
            row.append(v)
        vals.append(row)
    return _require_valid(SchurFunction(g, descriptor, vals), "make_f_alpha", tol)


# Klein four-group element indices under direct_product(Z/2, Z/2),
# row-major: 0=(0,0)=identity, b=(0,1), a=(1,0), c=(1,1)=ab.
KLEIN_A = 2
KLEIN_B = 1
KLEIN_C = 3


def klein_table(alpha, beta, gamma, eps, tol: float = DEFAULT_TOL) -> SchurFunction:
    """The cocycle on Z/2 x Z/2 with f(t,1)=f(1,t)=1 and the block

            a          b          c
        a   beta*gamma gamma      beta
        b   eps*gamma  eps*alpha*gamma  alpha
        c   eps*beta   eps*alpha  alpha*beta

    where alpha, beta, gamma are central unitaries and eps^2 = 1.
    """
    d = alpha.descriptor
    unit = RingValue.unit(d)
    for name, v in (("alpha", alpha), ("beta", beta), ("gamma", gamma),
                    ("eps", eps)):
        if v.descriptor != d:
            raise ValueError("parameter descriptor mismatch")
        if not v.is_unitary(tol) or not v.is_central(tol):
            raise ValueError(f"{name} must be central unitary")
    if not (eps * eps).close(unit, tol):
        raise ValueError("eps^2 must be 1")
    g = direct_product(make_cyclic(2), make_cyclic(2))
    vals = [[unit for _ in range(4)] for _ in range(4)]
    a, b, c = KLEIN_A, KLEIN_B, KLEIN_C
    block = {
        (a, a): beta * gamma, (a, b): gamma, (a, c): beta,
        (b, a): eps * gamma, (b, b): eps * alpha * gamma, (b, c): alpha,
        (c, a): eps * beta, (c, b): eps * alpha, (c, c): alpha * beta,
    }
    for (s, t), v in block.items():
        vals[s][t] = v
    return _require_valid(SchurFunction(g, d, vals), "klein_table", tol)


# -- cyclic powers and the integer group -----------------------------------

def cyclic_power_value(f: SchurFunction, t: int, m: int, n: int,
                       tol: float = DEFAULT_TOL) -> RingValue:
    """f(t^m, t^n) via the closed product formula

        f(t^m,t^n) = (prod_{j=0}^{m-1} f(t^{n+j}, t)) (prod_{k=1}^{m-1} f(t^k, t))^*

    asserted equal to the table value; in particular f(t^m,t^n)=f(t^n,t^m).
    """
    if m < 0 or n < 0:
        raise ValueError("powers must be nonnegative")
    g = f.group
    unit = RingValue.unit(f.descriptor)
    v = unit
    for j in range(m):
        v = v * f.values[g.power(t, n + j)][t]
    for k in range(1, m):
        v = v * f.values[g.power(t, k)][t].star()
    table = f.values[g.power(t, m)][g.power(t, n)]
    if not v.close(table, tol):
        raise ValueError(
            f"cyclic power formula disagrees with the table at t={t}, "
            f"m={m}, n={n}: residual {(v - table).abs_bound():.3e}")
    return table


def z_coboundary_witness(f_window, N: int, descriptor: RingDescriptor,
                         tol: float = DEFAULT_TOL):
    """For a cocycle window f on [-N,N]^2 of the integers, build lambda on
    [-N,N] with (delta lambda)(s,t) = f(s,t) wherever s, t, s+t all lie in
    the window.  f_window is a callable (s,t) -> RingValue.

    lambda(0)=lambda(1)=1 and lambda(k+1) = f(k,1)^* lambda(k) going up,
    lambda(k-1) = f(k-1,1) lambda(k) going down.
    """
    if N < 2:
        raise ValueError("window too small (need N >= 2)")
    lam = {0: RingValue.unit(descriptor), 1: RingValue.unit(descriptor)}
    for k in range(1, N):
        lam[k + 1] = f_window(k, 1).star() * lam[k]
    for k in range(0, -N, -1):
        lam[k - 1] = f_window(k - 1, 1) * lam[k]
    for k, v in lam.items():
        if not v.is_unitary(tol) or not v.is_central(tol):
            raise ValueError(f"window data gave non-unitary lambda({k})")
    return lam


# -- classification on Z/n -------------------------------------------------

def equivalent_cyclic(alphas, betas, descriptor: RingDescriptor = None,
                      tol: float = DEFAULT_TOL):
    """A coboundary witness between f_alpha and f_beta on Z/n, or None.

    f_alpha = f_beta * (delta lambda) holds iff prod_j alpha_j beta_j^* has
    an n-th root gamma in the central unitaries; then lambda(1) = gamma and
    lambda(p) = gamma^p prod_{j=1}^{p-1} (alpha_j^* beta_j).
    """
    alphas, betas = list(alphas), list(betas)
    if len(alphas) != len(betas):
        raise ValueError("parameter vectors must have equal length")
    n = len(alphas) + 1
    if descriptor is None:
        descriptor = alphas[0].descriptor if alphas else None
    if descriptor is None:
        raise ValueError("descriptor required")
    unit = RingValue.unit(descriptor)
    prod = unit
    for a, b in zip(alphas, betas):
        prod = prod * a * b.star()
    gamma = prod.nth_root(n)
    if gamma is None:
        return None
    values = []
    corr = unit
    gp = unit
    for p in range(n):
        if p > 0:
            gp = gp * gamma
            if p > 1:
                corr = corr * alphas[p - 2].star() * betas[p - 2]
        values.append(gp * corr if p > 0 else unit)
    return Lambda(make_cyclic(n), descriptor, values, tol=tol)


def winding(u: RingValue, variable: int = 0) -> int:
    """Exponent of the chosen torus variable in a unimodular monomial."""
    mono = u.is_monomial()
    if mono is None:
        raise ValueError("winding number needs a Laurent monomial")
    c, exps = mono
    if abs(abs(c) - 1) > 1e-7:
        raise ValueError("winding number needs a unimodular monomial")
    return int(exps[variable])


# -- tensor products -------------------------------------------------------

def _tensor_descriptor(d1: RingDescriptor, d2: RingDescriptor):
    """Combined descriptor plus a value-combiner for central values."""
    scalar = ("complex", "real")
    if d1.kind in scalar and d2.kind in scalar:
        d = COMPLEX if "complex" in (d1.kind, d2.kind) else REAL
        def comb(x, y):
            return RingValue.scalar(d, complex(x.payload) * complex(y.payload))
        return d, comb
    if d1.kind in scalar:
        def comb(x, y):
            return y.scale(complex(x.payload))
        return d2, comb
    if d2.kind in scalar:
        def comb(x, y):
            return x.scale(complex(y.payload))
        return d1, comb
    if d1.kind == "matrix" and d2.kind == "matrix":
        if d1.field != d2.field:
            raise ValueError("mixed matrix fields in tensor")
        from .rings import matrix_ring
        d = matrix_ring(d1.k * d2.k, d1.field)
        def comb(x, y):
            return RingValue(d, np.kron(x.payload, y.payload))
        return d, comb
    raise ValueError(f"unsupported tensor combination {d1} x {d2}")


def tensor_cocycle(f: SchurFunction, g: SchurFunction,
                   tol: float = DEFAULT_TOL) -> SchurFunction:
    """h((t1,s1),(t2,s2)) = f(t1,t2) (x) g(s1,s2) on the product group."""
    d, comb = _tensor_descriptor(f.descriptor, g.descriptor)
    prod = direct_product(f.group, g.group)
    ns = g.group.order
    vals = []
    for i in range(prod.order):
        t1, s1 = divmod(i, ns)
        row = []
        for j in range(prod.order):
            t2, s2 = divmod(j, ns)
            row.append(comb(f.values[t1][t2], g.values[s1][s2]))
        vals.append(row)
    return _require_valid(SchurFunction(prod, d, vals), "tensor_cocycle", tol)
