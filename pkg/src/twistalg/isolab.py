"""Named isomorphisms between twisted algebras and concrete models.

A model is an algebra we can compute in: a twisted algebra, a coefficient
ring, k x k matrices over a model, a complexification, a quaternion tensor,
or a finite direct sum.  A morphism from S(f) stores one image per
generator and acts E-linearly; the verifier measures multiplicativity and
star residuals and certifies bijectivity by real-linear rank over the
flattened coefficient basis.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, alg_mul, alg_star, generator, regular_matrix
from .cocycle import (KLEIN_A, KLEIN_B, KLEIN_C, Lambda, SchurFunction,
                      coboundary, cocycle_mul, klein_table, tensor_cocycle)
from .groups import direct_product, make_cyclic
from .rings import (COMPLEX, DEFAULT_TOL, RingDescriptor, RingValue, laurent,
                    real_basis, real_dim)


# -- algebra models --------------------------------------------------------

class AlgebraModel:
    """Common interface: elements are opaque; all operations live here."""

    base: RingDescriptor

    def slots(self, a):
        raise NotImplementedError

    def diff(self, a, b) -> float:
        return max((x - y).abs_bound()
                   for x, y in zip(self.slots(a), self.slots(b)))

    def nslots(self) -> int:
        return len(self.slots(self.unit()))

    def total_real_dim(self):
        try:
            return self.nslots() * real_dim(self.base)
        except ValueError:
            return None


class RingModel(AlgebraModel):
    def __init__(self, descriptor: RingDescriptor):
        self.base = descriptor

    def zero(self):
        return RingValue.zero(self.base)

    def unit(self):
        return RingValue.unit(self.base)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def star(self, a):
        return a.star()

    def scale(self, c, a):
        return a.scale(c)

    def scale_left(self, x: RingValue, a):
        return x * a

    def slots(self, a):
        return [a]


class TwistedModel(AlgebraModel):
    def __init__(self, f: SchurFunction):
        self.f = f
        self.base = f.descriptor

    def zero(self):
        return AlgebraElement.zero(self.f)

    def unit(self):
        return generator(self.f, self.f.group.identity)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return alg_mul(a, b)

    def star(self, a):
        return alg_star(a)

    def scale(self, c, a):
        return a.scale(c)

    def scale_left(self, x: RingValue, a):
        return a.scale_ring(x)

    def slots(self, a):
        return list(a.coeffs)


class MatrixModel(AlgebraModel):
    """k x k matrices with entries in an inner model."""

    def __init__(self, k: int, inner: AlgebraModel):
        self.k = k
        self.inner = inner
        self.base = inner.base

    def _map(self, fn, *elems):
        return [[fn(*(e[i][j] for e in elems)) for j in range(self.k)]
                for i in range(self.k)]

    def zero(self):
        return [[self.inner.zero() for _ in range(self.k)]
                for _ in range(self.k)]

    def unit(self):
        out = self.zero()
        for i in range(self.k):
            out[i][i] = self.inner.unit()
        return out

    def add(self, a, b):
        return self._map(self.inner.add, a, b)

    def neg(self, a):
        return self._map(self.inner.neg, a)

    def mul(self, a, b):
        out = self.zero()
        for i in range(self.k):
            for j in range(self.k):
                acc = self.inner.zero()
                for l in range(self.k):
                    acc = self.inner.add(acc, self.inner.mul(a[i][l], b[l][j]))
                out[i][j] = acc
        return out

    def star(self, a):
        return [[self.inner.star(a[j][i]) for j in range(self.k)]
                for i in range(self.k)]

    def scale(self, c, a):
        return self._map(lambda e: self.inner.scale(c, e), a)

    def scale_left(self, x, a):
        return self._map(lambda e: self.inner.scale_left(x, e), a)

    def slots(self, a):
        out = []
        for row in a:
            for e in row:
                out.extend(self.inner.slots(e))
        return out


class DirectSumModel(AlgebraModel):
    def __init__(self, *models: AlgebraModel):
        if not models:
            raise ValueError("direct sum needs at least one summand")
        self.models = models
        self.base = models[0].base

    def _map(self, op, *elems):
        return tuple(getattr(m, op)(*(e[i] for e in elems))
                     for i, m in enumerate(self.models))

    def zero(self):
        return tuple(m.zero() for m in self.models)

    def unit(self):
        return tuple(m.unit() for m in self.models)

    def add(self, a, b):
        return self._map("add", a, b)

    def neg(self, a):
        return self._map("neg", a)

    def mul(self, a, b):
        return self._map("mul", a, b)

    def star(self, a):
        return self._map("star", a)

    def scale(self, c, a):
        return tuple(m.scale(c, a[i]) for i, m in enumerate(self.models))

    def scale_left(self, x, a):
        return tuple(m.scale_left(x, a[i]) for i, m in enumerate(self.models))

    def slots(self, a):
        out = []
        for m, e in zip(self.models, a):
            out.extend(m.slots(e))
        return out

    def total_real_dim(self):
        dims = [m.total_real_dim() for m in self.models]
        if any(d is None for d in dims):
            return None
        return sum(dims)


class ComplexifiedModel(AlgebraModel):
    """Pairs (a, b) representing a + ib over a real inner model."""

    def __init__(self, inner: AlgebraModel):
        if not inner.base.is_real:
            raise ValueError("complexification needs a real inner model")
        self.inner = inner
        self.base = inner.base

    def zero(self):
        return (self.inner.zero(), self.inner.zero())

    def unit(self):
        return (self.inner.unit(), self.inner.zero())

    def add(self, a, b):
        return (self.inner.add(a[0], b[0]), self.inner.add(a[1], b[1]))

    def neg(self, a):
        return (self.inner.neg(a[0]), self.inner.neg(a[1]))

    def mul(self, a, b):
        inn = self.inner
        re = inn.add(inn.mul(a[0], b[0]), inn.neg(inn.mul(a[1], b[1])))
        im = inn.add(inn.mul(a[0], b[1]), inn.mul(a[1], b[0]))
        return (re, im)

    def star(self, a):
        return (self.inner.star(a[0]), self.inner.neg(self.inner.star(a[1])))

    def scale(self, c, a):
        c = complex(c)
        inn = self.inner
        re = inn.add(inn.scale(c.real, a[0]), inn.scale(-c.imag, a[1]))
        im = inn.add(inn.scale(c.imag, a[0]), inn.scale(c.real, a[1]))
        return (re, im)

    def scale_left(self, x, a):
        return (self.inner.scale_left(x, a[0]), self.inner.scale_left(x, a[1]))

    def slots(self, a):
        return self.inner.slots(a[0]) + self.inner.slots(a[1])


# structure constants of the quaternion units: _QMUL[p][q] = (r, sign)
_QMUL = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, -1), (0, -1), (1, 1)],
    [(3, 1), (2, 1), (1, -1), (0, -1)],
]


class QuaternionTensorModel(AlgebraModel):
    """4-tuples (x0, x1, x2, x3) representing x0 + i x1 + j x2 + k x3 with
    components in a real inner model (H tensor E)."""

    def __init__(self, inner: AlgebraModel):
        if not inner.base.is_real:
            raise ValueError("quaternion tensor needs a real inner model")
        self.inner = inner
        self.base = inner.base

    def zero(self):
        return tuple(self.inner.zero() for _ in range(4))

    def unit(self):
        return (self.inner.unit(),) + tuple(self.inner.zero() for _ in range(3))

    def add(self, a, b):
        return tuple(self.inner.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.inner.neg(x) for x in a)

    def mul(self, a, b):
        inn = self.inner
        out = [inn.zero() for _ in range(4)]
        for p in range(4):
            for q in range(4):
                r, sign = _QMUL[p][q]
                term = inn.mul(a[p], b[q])
                if sign < 0:
                    term = inn.neg(term)
                out[r] = inn.add(out[r], term)
        return tuple(out)

    def star(self, a):
        inn = self.inner
        return (inn.star(a[0]),) + tuple(inn.neg(inn.star(x)) for x in a[1:])

    def scale(self, c, a):
        return tuple(self.inner.scale(c, x) for x in a)

    def scale_left(self, x, a):
        return tuple(self.inner.scale_left(x, e) for e in a)

    def slots(self, a):
        out = []
        for e in a:
            out.extend(self.inner.slots(e))
        return out


# -- flattening and rank ---------------------------------------------------

def _expand_products(slotlists):
    out = []
    for slots in slotlists:
        row = []
        for v in slots:
            if v.descriptor.kind == "product":
                row.extend(v.payload)
            else:
                row.append(v)
        out.append(row)
    if any(v.descriptor.kind == "product" for row in out for v in row):
        return _expand_products(out)
    return out


def flat_rows(slotlists) -> np.ndarray:
    """One real row vector per slot list, with consistent coordinates
    (Laurent slots use the union of all occurring exponents)."""
    slotlists = _expand_products(slotlists)
    cols = list(zip(*slotlists))
    pieces = []
    for col in cols:
        d = col[0].descriptor
        if d.kind == "laurent":
            exps = sorted({e for v in col for e in v.payload})
            arr = np.zeros((len(col), 2 * max(len(exps), 1)))
            for i, v in enumerate(col):
                for j, e in enumerate(exps):
                    c = v.payload.get(e, 0j)
                    arr[i, 2 * j] = c.real
                    arr[i, 2 * j + 1] = c.imag
        else:
            arr = np.stack([v.real_flat() for v in col])
        pieces.append(arr)
    return np.hstack(pieces)


# -- morphisms -------------------------------------------------------------

@dataclass
class MorphismReport:
    unit_residual: float
    mult_residual: float
    star_residual: float
    source_dim: int
    image_rank: int
    target_dim: object       # int or None (infinite-dimensional target)
    injective: object        # bool or None
    surjective: object       # bool or None

    def ok(self, tol: float = DEFAULT_TOL) -> bool:
        return (self.unit_residual <= tol and self.mult_residual <= tol
                and self.star_residual <= tol)

    def bijective(self, tol: float = DEFAULT_TOL) -> bool:
        return (self.ok(tol) and self.injective is True
                and self.surjective is True)

    def to_dict(self):
        return {
            "unit_residual": self.unit_residual,
            "mult_residual": self.mult_residual,
            "star_residual": self.star_residual,
            "source_dim": self.source_dim,
            "image_rank": self.image_rank,
            "target_dim": self.target_dim,
            "injective": self.injective,
            "surjective": self.surjective,
        }


class Morphism:
    """An E-linear map S(f) -> target determined by generator images."""

    def __init__(self, source: SchurFunction, target: AlgebraModel, images):
        images = list(images)
        if len(images) != source.group.order:
            raise ValueError("need one image per group element")
        self.source = source
        self.target = target
        self.images = images

    def apply(self, x: AlgebraElement):
        acc = self.target.zero()
        for t, c in enumerate(x.coeffs):
            if not c.is_zero(0.0):
                acc = self.target.add(acc,
                                      self.target.scale_left(c, self.images[t]))
        return acc


def verify_morphism(m: Morphism, tol: float = DEFAULT_TOL) -> MorphismReport:
    f, g, tgt = m.source, m.source.group, m.target
    unit_res = tgt.diff(m.images[g.identity], tgt.unit())
    mult_res = 0.0
    for s in range(g.order):
        for t in range(g.order):
            lhs = tgt.mul(m.images[s], m.images[t])
            rhs = tgt.scale_left(f.values[s][t], m.images[g.op(s, t)])
            mult_res = max(mult_res, tgt.diff(lhs, rhs))
    star_res = 0.0
    for t in range(g.order):
        lhs = tgt.star(m.images[t])
        rhs = tgt.scale_left(f.tilde(t), m.images[g.inverse(t)])
        star_res = max(star_res, tgt.diff(lhs, rhs))

    try:
        e_dim = real_dim(f.descriptor)
    except ValueError:
        e_dim = None
    if e_dim is None:
        return MorphismReport(unit_res, mult_res, star_res,
                              -1, -1, None, None, None)
    basis = real_basis(f.descriptor)
    rows = []
    for t in range(g.order):
        for b in basis:
            rows.append(tgt.slots(tgt.scale_left(b, m.images[t])))
    mat = flat_rows(rows)
    rank = int(np.linalg.matrix_rank(mat))
    source_dim = g.order * e_dim
    target_dim = tgt.total_real_dim()
    injective = rank == source_dim
    surjective = None if target_dim is None else rank == target_dim
    return MorphismReport(unit_res, mult_res, star_res, source_dim, rank,
                          target_dim, injective, surjective)


def identity_morphism(f: SchurFunction) -> Morphism:
    return Morphism(f, TwistedModel(f),
                    [generator(f, t) for t in range(f.group.order)])


def extend_generator_images(f: SchurFunction, gen_images: dict,
                            target: AlgebraModel) -> Morphism:
    """Complete a partial image assignment to all of T by writing each
    element as a product of the given generators (breadth-first), using
    V_r V_g = f(r,g) V_{rg} to peel off the cocycle values."""
    g = f.group
    images = [None] * g.order
    images[g.identity] = target.unit()
    for t, im in gen_images.items():
        images[t] = im
    frontier = [t for t in range(g.order) if images[t] is not None]
    while frontier:
        new = []
        for r in frontier:
            for s in gen_images:
                t = g.op(r, s)
                if images[t] is None:
                    prod = target.mul(images[r], images[s])
                    images[t] = target.scale_left(f.values[r][s].star(), prod)
                    new.append(t)
        frontier = new
    if any(im is None for im in images):
        raise ValueError("given generators do not generate the group")
    return Morphism(f, target, images)


# -- coefficientwise S-isomorphism -----------------------------------------

def lambda_isomorphism(f: SchurFunction, lam: Lambda) -> Morphism:
    """X -> (lambda(t)^* X_t)_t from S(f) onto S(f delta-lambda)."""
    g2 = cocycle_mul(f, coboundary(lam))
    target = TwistedModel(g2)
    images = [generator(g2, t).scale_ring(lam.value(t).star())
              for t in range(f.group.order)]
    return Morphism(f, target, images)


# -- order-2 group ---------------------------------------------------------

def z2_split(f: SchurFunction, x: RingValue = None,
             tol: float = DEFAULT_TOL) -> Morphism:
    """X -> (X_0 + x X_1, X_0 - x X_1) for central unitary x with
    x^2 = f(1,1)."""
    if f.group.order != 2:
        raise ValueError("z2_split needs a group of order 2")
    c = f.values[1][1]
    if x is None:
        x = c.nth_root(2)
        if x is None:
            raise ValueError("no central unitary square root of f(1,1)")
    if not (x * x).close(c, tol):
        raise ValueError("x^2 != f(1,1)")
    e = RingModel(f.descriptor)
    target = DirectSumModel(e, e)
    images = [target.unit(), (x, -x)]
    return Morphism(f, target, images)


def z2_complexify(f: SchurFunction, tol: float = DEFAULT_TOL) -> Morphism:
    """Real f with f(1,1) = -1: X -> X_0 + i X_1 in the complexification."""
    if f.group.order != 2:
        raise ValueError("z2_complexify needs a group of order 2")
    if not f.descriptor.is_real:
        raise ValueError("z2_complexify needs a real coefficient ring")
    unit = RingValue.unit(f.descriptor)
    if not f.values[1][1].close(-unit, tol):
        raise ValueError("z2_complexify needs f(1,1) = -1")
    inner = RingModel(f.descriptor)
    target = ComplexifiedModel(inner)
    images = [target.unit(), (inner.zero(), inner.unit())]
    return Morphism(f, target, images)


# -- Klein four-group ------------------------------------------------------

def _klein_roots(alpha, beta, gamma, x, y, sq_a, sq_b, tol):
    """Resolve roots x, y with x^2 = sq_a, y^2 = sq_b."""
    if x is None:
        x = sq_a.nth_root(2)
        if x is None:
            raise ValueError("no central unitary root for x")
    if y is None:
        y = sq_b.nth_root(2)
        if y is None:
            raise ValueError("no central unitary root for y")
    if not (x * x).close(sq_a, tol):
        raise ValueError("root hypothesis x^2 violated")
    if not (y * y).close(sq_b, tol):
        raise ValueError("root hypothesis y^2 violated")
    return x, y


def klein_split4(alpha, beta, gamma, x=None, y=None,
                 tol: float = DEFAULT_TOL) -> Morphism:
    """eps = 1 case: X -> (X_0 + l x X_a + m y X_b + l m z X_c) over the
    four sign patterns (l, m), with x^2 = beta gamma, y^2 = alpha gamma,
    z = x y gamma^*."""
    unit = RingValue.unit(alpha.descriptor)
    f = klein_table(alpha, beta, gamma, unit, tol=tol)
    x, y = _klein_roots(alpha, beta, gamma, x, y,
                        beta * gamma, alpha * gamma, tol)
    z = x * y * gamma.star()
    e = RingModel(f.descriptor)
    target = DirectSumModel(e, e, e, e)
    images = [None] * 4
    images[0] = target.unit()
    images[KLEIN_A] = (x, x, -x, -x)
    images[KLEIN_B] = (y, -y, y, -y)
    images[KLEIN_C] = (z, -z, -z, z)
    return Morphism(f, target, images)


def klein_complex_pair(alpha, beta, gamma, variant: int = 1, x=None, y=None,
                       tol: float = DEFAULT_TOL) -> Morphism:
    """Real eps = 1 case onto two copies of the complexification.

    variant 1: x^2 = -beta gamma, y^2 = alpha gamma,
        X -> (X_0 + i x X_a + y X_b + i z X_c,
              X_0 + i x X_a - y X_b - i z X_c);
    variant 2: x^2 = -beta gamma, y^2 = -alpha gamma,
        X -> (X_0 + i x X_a + i y X_b - z X_c,
              X_0 + i x X_a - i y X_b + z X_c);
    in both cases z = x y gamma^*.
    """
    if not alpha.descriptor.is_real:
        raise ValueError("klein_complex_pair needs a real coefficient ring")
    unit = RingValue.unit(alpha.descriptor)
    f = klein_table(alpha, beta, gamma, unit, tol=tol)
    sq_b = alpha * gamma if variant == 1 else -(alpha * gamma)
    x, y = _klein_roots(alpha, beta, gamma, x, y, -(beta * gamma), sq_b, tol)
    z = x * y * gamma.star()
    inner = RingModel(f.descriptor)
    comp = ComplexifiedModel(inner)
    target = DirectSumModel(comp, comp)
    zero = inner.zero()
    images = [None] * 4
    images[0] = target.unit()
    images[KLEIN_A] = ((zero, x), (zero, x))
    if variant == 1:
        images[KLEIN_B] = ((y, zero), (-y, zero))
        images[KLEIN_C] = ((zero, z), (zero, -z))
    else:
        images[KLEIN_B] = ((zero, y), (zero, -y))
        images[KLEIN_C] = ((-z, zero), (z, zero))
    return Morphism(f, target, images)


def klein_quaternion(alpha, beta, gamma, x=None, y=None,
                     tol: float = DEFAULT_TOL) -> Morphism:
    """Real eps = -1 case onto H tensor E: X -> X_0 + i x X_a + j y X_b +
    k z X_c with x^2 = -beta gamma, y^2 = alpha gamma, z = x y gamma^*."""
    if not alpha.descriptor.is_real:
        raise ValueError("klein_quaternion needs a real coefficient ring")
    unit = RingValue.unit(alpha.descriptor)
    f = klein_table(alpha, beta, gamma, -unit, tol=tol)
    x, y = _klein_roots(alpha, beta, gamma, x, y,
                        -(beta * gamma), alpha * gamma, tol)
    z = x * y * gamma.star()
    inner = RingModel(f.descriptor)
    target = QuaternionTensorModel(inner)
    zero = inner.zero()
    images = [None] * 4
    images[0] = target.unit()
    images[KLEIN_A] = (zero, x, zero, zero)
    images[KLEIN_B] = (zero, zero, y, zero)
    images[KLEIN_C] = (zero, zero, zero, z)
    return Morphism(f, target, images)


def klein_matrix(alpha, beta, gamma, x=None, y=None,
                 tol: float = DEFAULT_TOL) -> Morphism:
    """eps = -1 case onto 2 x 2 matrices over E:

        X -> [[X_0 + x X_a,            alpha (y X_b + z X_c)],
              [-gamma y^* X_b + beta z^* X_c,   X_0 - x X_a]]

    with x^2 = beta gamma, y any central unitary (default 1), and
    z = gamma^* x y.  The projection (1/2)(V_1 + x^* V_a) maps to the
    upper-left matrix unit.
    """
    unit = RingValue.unit(alpha.descriptor)
    f = klein_table(alpha, beta, gamma, -unit, tol=tol)
    if x is None:
        x = (beta * gamma).nth_root(2)
        if x is None:
            raise ValueError("no central unitary root for x")
    if not (x * x).close(beta * gamma, tol):
        raise ValueError("root hypothesis x^2 = beta gamma violated")
    if y is None:
        y = unit
    if not y.is_unitary(tol) or not y.is_central(tol):
        raise ValueError("y must be central unitary")
    z = gamma.star() * x * y
    inner = RingModel(f.descriptor)
    target = MatrixModel(2, inner)
    zero = inner.zero()
    images = [None] * 4
    images[0] = target.unit()
    images[KLEIN_A] = [[x, zero], [zero, -x]]
    images[KLEIN_B] = [[zero, alpha * y], [-(gamma * y.star()), zero]]
    images[KLEIN_C] = [[zero, alpha * z], [beta * z.star(), zero]]
    return Morphism(f, target, images)


# -- characters of (Z/2)^n -------------------------------------------------

def char_decompose_z2n(f: SchurFunction, tol: float = DEFAULT_TOL) -> Morphism:
    """For the constant cocycle on a group of exponent 2 (indices acting by
    XOR), X -> (sum_s <t,s> X_s)_t with <t,s> = (-1)^{popcount(t & s)}."""
    g = f.group
    n = g.order
    idx = np.arange(n)
    if not np.array_equal(g.mul, idx[:, None] ^ idx[None, :]):
        raise ValueError("group indices must compose by XOR")
    unit = RingValue.unit(f.descriptor)
    for row in f.values:
        for v in row:
            if not v.close(unit, tol):
                raise ValueError("character decomposition needs the "
                                 "constant cocycle")
    e = RingModel(f.descriptor)
    target = DirectSumModel(*([e] * n))
    images = []
    for s in range(n):
        images.append(tuple(
            unit if (t & s).bit_count() % 2 == 0 else -unit
            for t in range(n)))
    return Morphism(f, target, images)


def character_pairing(t: int, s: int) -> int:
    return -1 if (t & s).bit_count() % 2 else 1


# -- cyclic decomposition over C -------------------------------------------

def cyclic_decompose(f: SchurFunction, alphas, beta: RingValue = None,
                     tol: float = DEFAULT_TOL) -> Morphism:
    """For f = f_alpha on Z/n over a complex ring, the map
    X -> (w_k X)_{k} with

        w_k X = sum_{j=1}^{n} beta^j (prod_{l<j} alpha_l^*) e^{2 pi i jk/n} X_j

    (j = n standing for the identity) where beta^n = prod_j alpha_j."""
    if f.descriptor.is_real:
        raise ValueError("cyclic_decompose needs a complex coefficient ring")
    g = f.group
    n = g.order
    alphas = list(alphas)
    if len(alphas) != n - 1:
        raise ValueError("parameter count mismatch")
    unit = RingValue.unit(f.descriptor)
    prod = unit
    for a in alphas:
        prod = prod * a
    if beta is None:
        beta = prod.nth_root(n)
        if beta is None:
            raise ValueError("no central unitary n-th root of prod alpha")
    bn = unit
    for _ in range(n):
        bn = bn * beta
    if not bn.close(prod, tol):
        raise ValueError("beta^n != prod alpha")
    e = RingModel(f.descriptor)
    target = DirectSumModel(*([e] * n))
    # coefficient in front of X_j, independent of k
    pref = []
    acc = unit
    bpow = unit
    for j in range(1, n + 1):
        bpow = bpow * beta
        pref.append(bpow * acc)                   # beta^j prod_{l<j} alpha_l^*
        if j <= n - 1:
            acc = acc * alphas[j - 1].star()
    images = [None] * n
    for j in range(1, n + 1):
        t = j % n                                 # group index of V_j
        images[t] = tuple(
            pref[j - 1].scale(cmath.exp(2j * cmath.pi * j * k / n))
            for k in range(n))
    return Morphism(f, target, images)


# -- tensor structure ------------------------------------------------------

def tensor_structure_check(f: SchurFunction, g: SchurFunction,
                           tol: float = DEFAULT_TOL):
    """Entrywise Kronecker identity of regular matrices: for every
    generator pair, matrix(V^h_{(t,s)}) equals matrix(V^f_t) (x)
    matrix(V^g_s).  Returns (h, max residual)."""
    from .cocycle import _tensor_descriptor
    h = tensor_cocycle(f, g, tol=tol)
    _, comb = _tensor_descriptor(f.descriptor, g.descriptor)
    ns = g.group.order
    worst = 0.0
    for t in range(f.group.order):
        mf = regular_matrix(generator(f, t))
        for s in range(g.group.order):
            mg = regular_matrix(generator(g, s))
            mh = regular_matrix(generator(h, t * ns + s))
            for p1 in range(f.group.order):
                for p2 in range(ns):
                    for q1 in range(f.group.order):
                        for q2 in range(ns):
                            want = comb(mf.entries[p1][q1], mg.entries[p2][q2])
                            got = mh.entries[p1 * ns + p2][q1 * ns + q2]
                            worst = max(worst, (want - got).abs_bound())
    return h, worst


# -- Laurent substitution rewrites -----------------------------------------

@dataclass
class SubstitutionReport:
    mult_residual: float
    star_residual: float
    pairs_checked: int
    injective: bool

    def ok(self, tol: float = 0.0) -> bool:
        return (self.mult_residual <= tol and self.star_residual <= tol
                and self.injective)


def _torus_rewrite_phi(f: SchurFunction, x: AlgebraElement) -> RingValue:
    """Phi(X) = sum_I lambda_I(z) X_I(z^2), lambda_I = prod_{i in I} z_i."""
    d = f.descriptor
    acc = RingValue.zero(d)
    for mask, c in enumerate(x.coeffs):
        if c.is_zero(0.0):
            continue
        exps = tuple((mask >> i) & 1 for i in range(d.m))
        lam = RingValue.monomial(d, 1, exps)
        acc = acc + lam * c.substitute_square()
    return acc


def z2n_torus_rewrite(n: int, degree: int = 4, max_pairs: int = None,
                      seed: int = 0) -> SubstitutionReport:
    """Exact symbolic verification that X -> sum_I lambda_I(z) X_I(z^2) is
    an injective *-homomorphism for the cocycle f(I,J) = lambda_{I cap J}
    on the subsets of {1..n} over Laurent polynomials in n variables.

    Checked on the monomial basis z^e V_I with all |e_i| <= degree; all
    basis pairs when their number is moderate, otherwise a deterministic
    sample of max_pairs pairs.
    """
    from itertools import product as iproduct
    from .groups import make_subset_group

    g = make_subset_group(list(range(1, n + 1)))
    d = laurent(m=n)
    vals = []
    for a in range(g.order):
        row = []
        for b in range(g.order):
            exps = tuple(((a & b) >> i) & 1 for i in range(n))
            row.append(RingValue.monomial(d, 1, exps))
        vals.append(row)
    f = SchurFunction(g, d, vals)

    basis = []
    for mask in range(g.order):
        for e in iproduct(range(-degree, degree + 1), repeat=n):
            x = AlgebraElement.zero(f)
            x.coeffs[mask] = RingValue.monomial(d, 1, e)
            basis.append(x)

    star_res = 0.0
    images = []
    for x in basis:
        lhs = _torus_rewrite_phi(f, alg_star(x))
        rhs = _torus_rewrite_phi(f, x).star()
        star_res = max(star_res, (lhs - rhs).abs_bound())
        images.append(_torus_rewrite_phi(f, x))

    # basis images are distinct monomials (parity of exponents separates
    # the group label from the doubled input exponents)
    seen = set()
    injective = True
    for im in images:
        mono = im.is_monomial()
        if mono is None or mono[1] in seen:
            injective = False
            break
        seen.add(mono[1])

    nb = len(basis)
    all_pairs = nb * nb
    mult_res = 0.0
    if max_pairs is None or all_pairs <= max_pairs:
        pairs = ((i, j) for i in range(nb) for j in range(nb))
        checked = all_pairs
    else:
        rng = np.random.default_rng(seed)
        pairs = zip(rng.integers(0, nb, max_pairs),
                    rng.integers(0, nb, max_pairs))
        checked = max_pairs
    for i, j in pairs:
        lhs = _torus_rewrite_phi(f, alg_mul(basis[i], basis[j]))
        rhs = images[i] * images[j]
        mult_res = max(mult_res, (lhs - rhs).abs_bound())
    return SubstitutionReport(mult_res, star_res, checked, injective)


def laurent_z2_rewrite(degree: int = 4, max_pairs: int = None,
                       seed: int = 0) -> SubstitutionReport:
    """The one-variable case: f(1,1) = z on Z/2 and
    X -> X_0(z^2) + z X_1(z^2)."""
    return z2n_torus_rewrite(1, degree=degree, max_pairs=max_pairs, seed=seed)


# -- the Z/2 x Z/4 instance ------------------------------------------------

def z2z4_cocycle(descriptor: RingDescriptor = COMPLEX) -> SchurFunction:
    """The displayed order-8 table on Z/2 x Z/4 with parameters
    alpha = beta = gamma = 1, delta = -1: f((j,p),(k,q)) = -1 exactly when
    k = 1 and the row is one of (0,1), (0,2), (0,3), (1,0).  Note that this
    table violates the cocycle identity (see z2z4_corrected_cocycle for the
    multiplicative repair); it is kept verbatim for the record."""
    g = direct_product(make_cyclic(2), make_cyclic(4))
    unit = RingValue.unit(descriptor)
    vals = [[unit for _ in range(8)] for _ in range(8)]
    for s in range(8):
        j, p = divmod(s, 4)
        for t in range(8):
            k, q = divmod(t, 4)
            if k == 1 and ((j == 0 and p != 0) or (j, p) == (1, 0)):
                vals[s][t] = -unit
    return SchurFunction(g, descriptor, vals)


def z2z4_corrected_cocycle(descriptor: RingDescriptor = COMPLEX
                           ) -> SchurFunction:
    """The bicharacter f((j,p),(k,q)) = (-1)^((j+p)k) on Z/2 x Z/4: the
    sign pattern of z2z4_cocycle with the non-multiplicative condition
    "p != 0" replaced by "p odd", which restores the cocycle identity.
    The resulting algebra splits as two copies of the 2 x 2 matrices."""
    g = direct_product(make_cyclic(2), make_cyclic(4))
    unit = RingValue.unit(descriptor)
    vals = []
    for s in range(8):
        j, p = divmod(s, 4)
        row = []
        for t in range(8):
            k, q = divmod(t, 4)
            row.append(-unit if ((j + p) * k) % 2 else unit)
        vals.append(row)
    return SchurFunction(g, descriptor, vals)


def z2z4_decompose(tol: float = DEFAULT_TOL) -> Morphism:
    """The displayed decomposition of the order-8 instance into 2 x 2
    matrices over E plus four scalar functionals:

        Z -> ([[Z_0 + Z_(1,2), Z_(1,0) - Z_(0,2)],
               [Z_(1,0) + Z_(0,2), Z_0 - Z_(1,2)]],
              (phi_{j,k} Z)_{j,k})

    with phi_{j,k} Z = Z_0 + (-1)^j Z_(0,2) + i^j Z_(k,1) - i^j Z_(k,3).
    """
    f = z2z4_cocycle(COMPLEX)
    inner = RingModel(COMPLEX)
    target = DirectSumModel(MatrixModel(2, inner), inner, inner, inner, inner)
    unit = inner.unit()
    zero = inner.zero()

    def mat(a, b, c, d):
        return [[RingValue.scalar(COMPLEX, a), RingValue.scalar(COMPLEX, b)],
                [RingValue.scalar(COMPLEX, c), RingValue.scalar(COMPLEX, d)]]

    zmat = mat(0, 0, 0, 0)
    matrix_part = {0: mat(1, 0, 0, 1), 6: mat(1, 0, 0, -1),
                   4: mat(0, 1, 1, 0), 2: mat(0, -1, 1, 0)}

    def phi_part(t):
        k, q = divmod(t, 4)
        out = []
        for j, kk in ((0, 0), (0, 1), (1, 0), (1, 1)):
            if t == 0:
                c = 1
            elif (k, q) == (0, 2):
                c = (-1) ** j
            elif q == 1 and k == kk:
                c = 1j ** j
            elif q == 3 and k == kk:
                c = -(1j ** j)
            else:
                c = 0
            out.append(RingValue.scalar(COMPLEX, c))
        return tuple(out)

    images = []
    for t in range(8):
        images.append((matrix_part.get(t, zmat),) + phi_part(t))
    return Morphism(f, target, images)
