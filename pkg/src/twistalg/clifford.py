"""Clifford-type cocycles on subset groups and the periodicity maps.

The cocycle is f_rho(A, B) = (-1)^tau prod_{s in A cap B} rho(s) where tau
counts the inversions needed to merge the sorted word of A in front of the
sorted word of B.  Generators V_{s} anticommute and square to rho(s).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (AlgebraElement, alg_mul, alg_star, generator,
                      is_projection, regular_matrix, unit)
from .cocycle import SchurFunction
from .groups import SubsetGroup, make_subset_group
from .isolab import (AlgebraModel, ComplexifiedModel, DirectSumModel,
                     MatrixModel, Morphism, QuaternionTensorModel,
                     TwistedModel, flat_rows)
from .rings import DEFAULT_TOL, RingDescriptor, RingValue, real_basis

MAX_LABELS = 8
MAX_PERIODICITY = 3       # number of adjoined generator pairs / base n


def transposition_sign(a, b) -> int:
    """(-1)^tau for merging word a before word b; positions compare by the
    total order of the base set."""
    a = sorted(a)
    b = sorted(b)
    tau = 0
    for x in a:
        tau += sum(1 for y in b if y < x)
    return -1 if tau % 2 else 1


def _mask_sign(amask: int, bmask: int) -> int:
    # merging a before b counts, for each x in a, elements of b below x
    tau = 0
    for pos_a in range(amask.bit_length()):
        if amask >> pos_a & 1:
            tau += (bmask & ((1 << pos_a) - 1)).bit_count()
    return -1 if tau % 2 else 1


class CliffordSpec:
    """An ordered label set with a central unitary rho value per label."""

    def __init__(self, labels, values, descriptor: RingDescriptor,
                 tol: float = DEFAULT_TOL):
        labels = list(labels)
        values = list(values)
        if len(labels) != len(values):
            raise ValueError("one rho value per label required")
        if len(labels) > MAX_LABELS:
            raise ValueError(f"at most {MAX_LABELS} labels supported")
        for lbl, v in zip(labels, values):
            if v.descriptor != descriptor:
                raise ValueError(f"rho({lbl}) has the wrong coefficient ring")
            if not v.is_unitary(tol) or not v.is_central(tol):
                raise ValueError(f"rho({lbl}) must be central unitary")
        self.labels = labels
        self.values = values
        self.descriptor = descriptor
        self.group = make_subset_group(labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def rho(self, i: int) -> RingValue:
        return self.values[i]

    def extended(self, new_values) -> "CliffordSpec":
        """Append generators after the existing ones in the total order."""
        k = len(self.labels)
        new_labels = [f"+{k + i + 1}" for i in range(len(new_values))]
        if all(isinstance(l, int) for l in self.labels):
            top = max(self.labels, default=0)
            new_labels = [top + i + 1 for i in range(len(new_values))]
        return CliffordSpec(self.labels + new_labels,
                            self.values + list(new_values), self.descriptor)


def clifford_cocycle(spec: CliffordSpec) -> SchurFunction:
    n = 1 << spec.size
    unit_v = RingValue.unit(spec.descriptor)
    vals = []
    for a in range(n):
        row = []
        for b in range(n):
            v = unit_v
            inter = a & b
            i = 0
            while inter >> i:
                if inter >> i & 1:
                    v = v * spec.values[i]
                i += 1
            if _mask_sign(a, b) < 0:
                v = -v
            row.append(v)
        vals.append(row)
    return SchurFunction(spec.group, spec.descriptor, vals)


def universal_map(spec: CliffordSpec, images, target: AlgebraModel,
                  tol: float = DEFAULT_TOL,
                  check_scalars: bool = True) -> Morphism:
    """Extend per-label images satisfying the generator relations to all of
    S(f_rho) by ordered products V_A -> prod_{s in A, ascending} x_s."""
    images = list(images)
    if len(images) != spec.size:
        raise ValueError("one image per label required")
    f = clifford_cocycle(spec)
    one = target.unit()
    for i, x in enumerate(images):
        sq = target.mul(x, x)
        if target.diff(sq, target.scale_left(spec.values[i], one)) > tol:
            raise ValueError(f"x_{spec.labels[i]}^2 != rho({spec.labels[i]})")
        st = target.star(x)
        if target.diff(st, target.scale_left(spec.values[i].star(), x)) > tol:
            raise ValueError(f"x_{spec.labels[i]}* != rho*({spec.labels[i]})"
                             " x_s")
        for j in range(i):
            y = images[j]
            anti = target.add(target.mul(x, y), target.mul(y, x))
            if target.diff(anti, target.zero()) > tol:
                raise ValueError(f"x_{spec.labels[i]} and x_{spec.labels[j]}"
                                 " do not anticommute")
    if check_scalars:
        try:
            basis = real_basis(spec.descriptor)
        except ValueError:
            basis = []
        for b in basis:
            if not b.is_central(tol):
                continue
            scal = target.scale_left(b, one)
            for i, x in enumerate(images):
                comm = target.add(target.mul(scal, x),
                                  target.neg(target.mul(x, scal)))
                if target.diff(comm, target.zero()) > tol:
                    raise ValueError(f"x_{spec.labels[i]} does not commute "
                                     "with the coefficient ring")
    full = [None] * f.group.order
    full[0] = one
    for mask in range(1, f.group.order):
        acc = one
        for i in range(spec.size):
            if mask >> i & 1:
                acc = target.mul(acc, images[i])
        full[mask] = acc
    return Morphism(f, target, full)


# -- projection families ---------------------------------------------------

def projection_family(f: SchurFunction, entries,
                      tol: float = DEFAULT_TOL):
    """P = (1/2) V_1 + sum_t eps_t X_t V_t and its complement V_1 - P,
    for pairwise odd-pairing order-2 elements t with signs eps_t in {-1,1}
    and coefficients X_t obeying X_t* = f(t,t) X_t and
    sum_t X_t* X_t = (1/4) 1."""
    entries = list(entries)
    if not entries:
        raise ValueError("projection family needs at least one term")
    g = f.group
    if not isinstance(g, SubsetGroup):
        raise ValueError("projection families live on subset groups")
    ts = [t for t, _, _ in entries]
    if len(set(ts)) != len(ts):
        raise ValueError("repeated group elements in family")
    unit_v = RingValue.unit(f.descriptor)
    for t, eps, x in entries:
        if t == g.identity:
            raise ValueError("identity element not allowed in family")
        if eps not in (1, -1):
            raise ValueError(f"eps for {g.labels[t]} must be +-1")
        alpha = f.values[t][t]
        if (x.star() - alpha * x).abs_bound() > tol:
            raise ValueError(f"X for {g.labels[t]} violates X* = f(t,t) X")
    for i, t in enumerate(ts):
        for s in ts[:i]:
            parity = (g.card(s) * g.card(t) - g.card(s & t)) % 2
            if parity != 1:
                raise ValueError(
                    f"elements {g.labels[s]} and {g.labels[t]} do not "
                    "anticommute (even pairing)")
    total = RingValue.zero(f.descriptor)
    for _, _, x in entries:
        total = total + x.star() * x
    if (total - unit_v.scale(0.25)).abs_bound() > tol:
        raise ValueError("sum |X_t|^2 != 1/4")
    p = AlgebraElement.zero(f)
    p.coeffs[g.identity] = unit_v.scale(0.5)
    for t, eps, x in entries:
        p.coeffs[t] = x if eps == 1 else -x
    if not is_projection(p, tol):
        raise ValueError("constructed element failed the projection check")
    return p, unit(f) - p


def corner_projection(f: SchurFunction, t: int, alpha: RingValue,
                      eps: int = 1, tol: float = DEFAULT_TOL):
    """Single-element family with X_t = (1/2) alpha*."""
    return projection_family(f, [(t, eps, alpha.star().scale(0.5))], tol=tol)


# -- periodicity -----------------------------------------------------------

def _full_mask(spec: CliffordSpec) -> int:
    return (1 << spec.size) - 1


def _require_even(spec: CliffordSpec):
    if spec.size % 2:
        raise ValueError("periodicity extensions need an even base size")
    if spec.size > 2 * MAX_PERIODICITY:
        raise ValueError("base size exceeds the periodicity cap")


def extend_two_matrix(spec: CliffordSpec, alpha1: RingValue,
                      alpha2: RingValue, tol: float = DEFAULT_TOL):
    """Adjoining generators with rho values alpha1^2 and -alpha2^2 yields
    2 x 2 matrices over S(rho): V_s -> diag(V_s, -V_s),
    V_{n+1} -> alpha1 offdiag(V_0, V_0), V_{n+2} -> alpha2
    offdiag(-V_0, V_0)."""
    _require_even(spec)
    spec2 = spec.extended([alpha1 * alpha1, -(alpha2 * alpha2)])
    f = clifford_cocycle(spec)
    inner = TwistedModel(f)
    target = MatrixModel(2, inner)
    v0 = unit(f)
    z = inner.zero()
    images = []
    for i in range(spec.size):
        vs = generator(f, 1 << i)
        images.append([[vs, z], [z, -vs]])
    images.append([[z, v0.scale_ring(alpha1)], [v0.scale_ring(alpha1), z]])
    images.append([[z, -(v0.scale_ring(alpha2))], [v0.scale_ring(alpha2), z]])
    return universal_map(spec2, images, target, tol=tol)


def matrix_corner_elements(spec: CliffordSpec, alpha1: RingValue,
                           alpha2: RingValue):
    """The two projections (1/2)(V_0 +- alpha1* alpha2* V_{new pair}) whose
    images under extend_two_matrix are the diagonal matrix units."""
    spec2 = spec.extended([alpha1 * alpha1, -(alpha2 * alpha2)])
    f2 = clifford_cocycle(spec2)
    pair_mask = (1 << spec.size) | (1 << (spec.size + 1))
    c = (alpha1.star() * alpha2.star()).scale(0.5)
    p = AlgebraElement.zero(f2)
    p.coeffs[0] = RingValue.unit(spec.descriptor).scale(0.5)
    p.coeffs[pair_mask] = c
    q = AlgebraElement.zero(f2)
    q.coeffs[0] = RingValue.unit(spec.descriptor).scale(0.5)
    q.coeffs[pair_mask] = -c
    return p, q


def extend_two_quaternion(spec: CliffordSpec, alpha1: RingValue,
                          alpha2: RingValue, tol: float = DEFAULT_TOL):
    """Real case: adjoining generators with rho values -alpha_l^2 tilde(S)
    yields H tensor S(rho): V_s -> V_s x 1, new generators ->
    (alpha_l tilde(S) V_S) x i and x j."""
    if not spec.descriptor.is_real:
        raise ValueError("quaternion extension needs a real coefficient ring")
    _require_even(spec)
    f = clifford_cocycle(spec)
    ft = f.tilde(_full_mask(spec))
    spec2 = spec.extended([-(alpha1 * alpha1) * ft, -(alpha2 * alpha2) * ft])
    inner = TwistedModel(f)
    target = QuaternionTensorModel(inner)
    z = inner.zero()
    vs_full = generator(f, _full_mask(spec))
    images = []
    for i in range(spec.size):
        images.append((generator(f, 1 << i), z, z, z))
    images.append((z, vs_full.scale_ring(alpha1 * ft), z, z))
    images.append((z, z, vs_full.scale_ring(alpha2 * ft), z))
    return universal_map(spec2, images, target, tol=tol)


def complexify_odd(spec: CliffordSpec, tol: float = DEFAULT_TOL):
    """Real case: one extra generator with rho value -tilde(S) yields the
    complexification: V_s -> (V_s, 0), extra -> (0, -tilde(S) V_S)."""
    if not spec.descriptor.is_real:
        raise ValueError("complexification needs a real coefficient ring")
    _require_even(spec)
    f = clifford_cocycle(spec)
    ft = f.tilde(_full_mask(spec))
    spec2 = spec.extended([-ft])
    inner = TwistedModel(f)
    target = ComplexifiedModel(inner)
    z = inner.zero()
    images = [(generator(f, 1 << i), z) for i in range(spec.size)]
    images.append((z, -(generator(f, _full_mask(spec)).scale_ring(ft))))
    return universal_map(spec2, images, target, tol=tol)


# -- one extra generator: direct sum split ---------------------------------

@dataclass
class IsometryPair:
    """Coefficient-space isometries theta_+/- : E^{2^n} -> E^{2^{n+1}} with
    theta* theta = id and theta theta* = P_+- in the regular
    representation."""
    theta_plus: list
    theta_minus: list
    source_f: SchurFunction        # the extended cocycle (domain of Y)
    base_f: SchurFunction

    def theta(self, sign: int):
        return self.theta_plus if sign > 0 else self.theta_minus

    def conjugate(self, y: AlgebraElement, sign: int) -> AlgebraElement:
        """theta* . regular(y) . theta, read back as an element of the base
        algebra via the identity column of its regular matrix."""
        th = self.theta(sign)
        m = regular_matrix(y).entries
        tm = rmat_mul(rmat_adjoint(th), rmat_mul(m, th))
        out = AlgebraElement.zero(self.base_f)
        for a in range(self.base_f.group.order):
            out.coeffs[a] = tm[a][0]
        return out


def rmat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    d = a[0][0].descriptor
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = RingValue.zero(d)
            for l in range(inner):
                acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(row)
    return out


def rmat_adjoint(a):
    return [[a[j][i].star() for j in range(len(a))]
            for i in range(len(a[0]))]


def rmat_residual(a, b) -> float:
    return max((x - y).abs_bound()
               for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def split_odd(spec: CliffordSpec, tol: float = DEFAULT_TOL):
    """One extra generator with rho value tilde(S): S(rho') splits as
    S(rho) + S(rho) through the central projections
    P_+- = (1/2)(V_0 +- V_{S'}).  Returns (P_+, P_-, IsometryPair,
    Morphism)."""
    _require_even(spec)
    f = clifford_cocycle(spec)
    full = _full_mask(spec)
    ft = f.tilde(full)
    spec2 = spec.extended([ft])
    f2 = clifford_cocycle(spec2)
    n2 = f2.group.order                     # 2^{size+1}
    n1 = f.group.order
    top = 1 << spec.size                    # bit of the new generator
    d = spec.descriptor
    half = RingValue.unit(d).scale(0.5)

    ps = []
    for sgn in (1, -1):
        p = AlgebraElement.zero(f2)
        p.coeffs[0] = half
        p.coeffs[full | top] = half if sgn > 0 else -half
        ps.append(p)
    p_plus, p_minus = ps

    c = RingValue.unit(d).scale(1.0 / np.sqrt(2.0))
    thetas = []
    for sgn in (1, -1):
        th = [[RingValue.zero(d) for _ in range(n1)] for _ in range(n2)]
        for a in range(n1):
            th[a][a] = c
            entry = c * f.values[full ^ a][full]
            th[a | top][full ^ a] = entry if sgn > 0 else -entry
        thetas.append(th)
    pair = IsometryPair(thetas[0], thetas[1], f2, f)

    inner = TwistedModel(f)
    target = DirectSumModel(inner, inner)
    images = []
    for t in range(n2):
        vt = generator(f2, t)
        images.append((pair.conjugate(vt, 1), pair.conjugate(vt, -1)))
    return p_plus, p_minus, pair, Morphism(f2, target, images)


# -- up to two extra generators: corner embedding --------------------------

@dataclass
class EvenProjectionReport:
    projection: AlgebraElement
    images: list
    unit_residual: float
    mult_residual: float
    star_residual: float
    image_rank: int
    corner_rank: int
    injective: bool
    surjective: object     # bool for m <= 2, None when not asserted


def extend_even_projection(spec: CliffordSpec, m: int, alphas,
                           tol: float = DEFAULT_TOL):
    """Adjoin m generators with rho values alpha_i^2 tilde(S); then
    P = (1/2) V_0 + (1/(2 sqrt m)) sum_i alpha_i* V_{S union {new_i}} is a
    projection, and X -> (image with phi V_s = P V_s P) embeds S(rho) onto
    a corner of the extension (onto the full corner when m <= 2)."""
    _require_even(spec)
    alphas = list(alphas)
    if m < 1 or len(alphas) != m:
        raise ValueError("need one alpha per extra generator, m >= 1")
    f = clifford_cocycle(spec)
    full = _full_mask(spec)
    ft = f.tilde(full)
    spec2 = spec.extended([(a * a) * ft for a in alphas])
    f2 = clifford_cocycle(spec2)
    g2 = f2.group
    d = spec.descriptor
    c = 1.0 / (2.0 * np.sqrt(m))
    entries = []
    for i, a in enumerate(alphas):
        t = full | (1 << (spec.size + i))
        entries.append((t, 1, a.star().scale(c)))
    p, _ = projection_family(f2, entries, tol=tol)

    def phi_gen(t_mask):
        # t_mask indexes an element of the base subset group
        return alg_mul(alg_mul(p, generator(f2, t_mask)), p)

    images = [phi_gen(t) for t in range(f.group.order)]
    unit_res = 0.0   # by construction phi(V_0) = P, the corner unit
    mult_res = 0.0
    for s in range(f.group.order):
        for t in range(f.group.order):
            lhs = alg_mul(images[s], images[t])
            rhs = images[f.group.op(s, t)].scale_ring(f.values[s][t])
            mult_res = max(mult_res, _elem_residual(lhs, rhs))
    star_res = 0.0
    for t in range(f.group.order):
        lhs = alg_star(images[t])
        rhs = images[f.group.inverse(t)].scale_ring(f.tilde(t))
        star_res = max(star_res, _elem_residual(lhs, rhs))

    basis = real_basis(d)
    tgt = TwistedModel(f2)
    img_rows = [tgt.slots(x.scale_ring(b)) for x in images for b in basis]
    image_rank = int(np.linalg.matrix_rank(flat_rows(img_rows)))
    corner_rows = []
    for u in range(g2.order):
        for b in basis:
            el = alg_mul(alg_mul(p, generator(f2, u).scale_ring(b)), p)
            corner_rows.append(tgt.slots(el))
    corner_rank = int(np.linalg.matrix_rank(flat_rows(corner_rows)))
    source_dim = f.group.order * len(basis)
    injective = image_rank == source_dim
    surjective = image_rank == corner_rank if m <= 2 else None
    return p, EvenProjectionReport(p, images, unit_res, mult_res, star_res,
                                   image_rank, corner_rank, injective,
                                   surjective)


def _elem_residual(x: AlgebraElement, y: AlgebraElement) -> float:
    return max((a - b).abs_bound() for a, b in zip(x.coeffs, y.coeffs))
