import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistalg import (COMPLEX, KLEIN_A, KLEIN_B, KLEIN_C, REAL, Lambda,
                      RingValue, SchurFunction, coboundary, cocycle_inverse,
                      cocycle_mul, cyclic_power_value, direct_product,
                      equivalent_cyclic, hat, klein_table, laurent,
                      make_cyclic, make_f_alpha, matrix_ring, tensor_cocycle,
                      trivial_cocycle, validate, winding,
                      z_coboundary_witness)

L1 = laurent(1)
M2 = matrix_ring(2)


def phase(theta, d=COMPLEX):
    return RingValue.scalar(d, np.exp(1j * theta))


def random_lambda(group, seed, d=COMPLEX):
    rng = np.random.default_rng(seed)
    vals = [RingValue.unit(d)]
    for _ in range(group.order - 1):
        vals.append(phase(rng.uniform(0, 2 * np.pi), d))
    return Lambda(group, d, vals)


# -- validation ------------------------------------------------------------

def test_trivial_and_f_alpha_validate():
    assert validate(trivial_cocycle(make_cyclic(4), COMPLEX)).ok
    f = make_f_alpha(3, [phase(0.3), phase(-1.1)])
    assert validate(f).ok


def test_klein_sixteen_sign_tables_validate():
    one = RingValue.unit(COMPLEX)
    for bits in range(16):
        signs = [one.scale(1 - 2 * (bits >> k & 1)) for k in range(4)]
        assert validate(klein_table(*signs)).ok


def test_random_coboundary_validates():
    for g in (make_cyclic(5), direct_product(make_cyclic(2), make_cyclic(3))):
        f = coboundary(random_lambda(g, seed=g.order))
        assert validate(f).ok


def test_laurent_coboundary_validates():
    g = make_cyclic(3)
    z = RingValue.monomial(L1, 1, (1,))
    lam = Lambda(g, L1, [RingValue.unit(L1), z, z * z])
    assert validate(coboundary(lam)).ok


def test_tensor_of_valid_is_valid():
    f = make_f_alpha(2, [phase(0.7)])
    g = make_f_alpha(3, [phase(-0.2), phase(1.4)])
    h = tensor_cocycle(f, g)
    assert h.group.order == 6
    assert validate(h).ok


def test_mutation_breaks_unitarity():
    f = make_f_alpha(3, [phase(0.3), phase(-1.1)])
    f.values[1][2] = f.values[1][2].scale(1.5)
    rep = validate(f)
    assert any(c == "unitary" for c, _, _ in rep.violations)


def test_mutation_breaks_cocycle_identity():
    # a phase tweak on a single entry of the Z/4 table
    f = make_f_alpha(4, [phase(0.0), phase(0.0), phase(0.0)])
    f.values[1][1] = phase(0.4)
    rep = validate(f)
    assert any(c == "cocycle" for c, _, _ in rep.violations)


def test_mutation_breaks_normalization():
    f = trivial_cocycle(make_cyclic(3), COMPLEX)
    f.values[0][2] = phase(1.0)
    rep = validate(f)
    assert any(c == "normalization" for c, _, _ in rep.violations)


def test_noncentral_value_rejected():
    g = make_cyclic(2)
    unit = RingValue.unit(M2)
    swap = RingValue.mat(M2, [[0, 1], [1, 0]])
    f = SchurFunction(g, M2, [[unit, unit], [unit, swap]])
    rep = validate(f)
    assert any(c == "central" for c, _, _ in rep.violations)


def test_validate_matches_brute_force_on_matrix_ring():
    # phase-times-identity values take the non-vectorized path
    g = make_cyclic(4)
    rng = np.random.default_rng(7)
    vals = [RingValue.unit(M2)]
    for _ in range(3):
        vals.append(RingValue.mat(
            M2, np.exp(1j * rng.uniform(0, 6.28)) * np.eye(2)))
    f = coboundary(Lambda(g, M2, vals))
    assert validate(f).ok
    f.values[2][3] = f.values[2][3] * phase(0.5, M2).scale(np.exp(0.2j))
    assert not validate(f).ok


# -- derived identities ----------------------------------------------------

def test_tilde_identities():
    # f(s,t) tilde(s) = f(s^{-1}, st)^*  and  f(s,t) tilde(t) = f(st, t^{-1})^*
    g = make_cyclic(6)
    f = coboundary(random_lambda(g, seed=11))
    for s in range(6):
        for t in range(6):
            st = g.op(s, t)
            assert (f.values[s][t] * f.tilde(s)).close(
                f.values[g.inverse(s)][st].star())
            assert (f.values[s][t] * f.tilde(t)).close(
                f.values[st][g.inverse(t)].star())


def test_inverse_symmetry():
    f = make_f_alpha(5, [phase(t) for t in (0.1, 0.2, 0.3, 0.4)])
    g = f.group
    for t in range(5):
        assert f.values[t][g.inverse(t)].close(f.values[g.inverse(t)][t])


def test_pointwise_group_structure():
    g = make_cyclic(4)
    f1 = coboundary(random_lambda(g, seed=1))
    f2 = coboundary(random_lambda(g, seed=2))
    prod = cocycle_mul(f1, f2)
    assert validate(prod).ok
    inv = cocycle_inverse(f1)
    both = cocycle_mul(f1, inv)
    triv = trivial_cocycle(g, COMPLEX)
    for s in range(4):
        for t in range(4):
            assert both.values[s][t].close(triv.values[s][t])


def test_hat_is_involutive_automorphism():
    g = make_cyclic(5)
    f1 = coboundary(random_lambda(g, seed=3))
    f2 = coboundary(random_lambda(g, seed=4))
    assert validate(hat(f1)).ok
    hh = hat(hat(f1))
    hm = hat(cocycle_mul(f1, f2))
    mm = cocycle_mul(hat(f1), hat(f2))
    for s in range(5):
        for t in range(5):
            assert hh.values[s][t].close(f1.values[s][t])
            assert hm.values[s][t].close(mm.values[s][t])


def test_hat_of_coboundary_is_coboundary_of_hat():
    g = make_cyclic(6)
    lam = random_lambda(g, seed=5)
    a = hat(coboundary(lam))
    b = coboundary(lam.hat())
    for s in range(6):
        for t in range(6):
            assert a.values[s][t].close(b.values[s][t])


def test_coboundary_is_multiplicative_in_lambda():
    g = make_cyclic(4)
    l1, l2 = random_lambda(g, seed=6), random_lambda(g, seed=7)
    a = coboundary(l1.mul(l2))
    b = cocycle_mul(coboundary(l1), coboundary(l2))
    for s in range(4):
        for t in range(4):
            assert a.values[s][t].close(b.values[s][t])


# -- named constructors ----------------------------------------------------

def test_f_alpha_oracle_values():
    a1, a2 = phase(0.5), phase(-0.9)
    f = make_f_alpha(3, [a1, a2])
    # f(p,0)=f(0,q)=1, f(1,1)=alpha_1, f(2,2)=alpha_2 alpha_1^*
    for q in range(3):
        assert f.values[0][q].close(RingValue.unit(COMPLEX))
        assert f.values[q][0].close(RingValue.unit(COMPLEX))
    assert f.values[1][1].close(a1)
    assert f.values[1][2].close(a1 * a2 * a1.star())
    assert f.values[2][1].close(a2)
    assert f.values[2][2].close(a2 * a1.star())


def test_f_alpha_rejects_nonunitary():
    with pytest.raises(ValueError):
        make_f_alpha(2, [RingValue.scalar(COMPLEX, 2.0)])


def test_klein_table_entries():
    a, b, g_, e = phase(0.2), phase(1.3), phase(-0.4), phase(np.pi)
    f = klein_table(a, b, g_, e)
    assert f.values[KLEIN_A][KLEIN_A].close(b * g_)
    assert f.values[KLEIN_A][KLEIN_B].close(g_)
    assert f.values[KLEIN_B][KLEIN_A].close(e * g_)
    assert f.values[KLEIN_C][KLEIN_C].close(a * b)
    assert f.values[KLEIN_B][KLEIN_C].close(a)


def test_klein_table_rejects_bad_eps():
    one = RingValue.unit(COMPLEX)
    with pytest.raises(ValueError):
        klein_table(one, one, one, phase(0.3))


def test_cyclic_power_value():
    f = make_f_alpha(5, [phase(t) for t in (0.3, 0.7, -0.2, 1.1)])
    for m in range(4):
        for n in range(4):
            v = cyclic_power_value(f, 1, m, n)
            assert v.close(f.values[m % 5][n % 5])
            assert v.close(cyclic_power_value(f, 1, n, m))


def test_z_coboundary_witness_scalar():
    rng = np.random.default_rng(9)
    lam_true = {k: phase(rng.uniform(0, 6.28)) for k in range(-5, 6)}
    lam_true[0] = lam_true[1] = RingValue.unit(COMPLEX)

    def f_window(s, t):
        return lam_true[s] * lam_true[t] * lam_true[s + t].star()

    lam = z_coboundary_witness(f_window, 5, COMPLEX)
    for s in range(-5, 6):
        for t in range(-5, 6):
            if -5 <= s + t <= 5:
                delta = lam[s] * lam[t] * lam[s + t].star()
                assert delta.close(f_window(s, t))


def test_z_coboundary_witness_matrix_central():
    rng = np.random.default_rng(10)
    lam_true = {k: phase(rng.uniform(0, 6.28), M2) for k in range(-3, 4)}
    lam_true[0] = lam_true[1] = RingValue.unit(M2)

    def f_window(s, t):
        return lam_true[s] * lam_true[t] * lam_true[s + t].star()

    lam = z_coboundary_witness(f_window, 3, M2)
    for s in range(-3, 4):
        if -3 <= s + 1 <= 3:
            assert (lam[s] * lam[1] * lam[s + 1].star()).close(f_window(s, 1))


def test_z_coboundary_witness_window_too_small():
    with pytest.raises(ValueError):
        z_coboundary_witness(lambda s, t: RingValue.unit(COMPLEX), 1, COMPLEX)


# -- classification --------------------------------------------------------

def test_equivalent_cyclic_scalar_always():
    # over the complex scalars every pair on Z/n is equivalent
    alphas = [phase(0.3), phase(1.0)]
    betas = [phase(-0.7), phase(0.4)]
    lam = equivalent_cyclic(alphas, betas)
    assert lam is not None
    fa = make_f_alpha(3, alphas)
    fb = make_f_alpha(3, betas)
    prod = cocycle_mul(fb, coboundary(lam))
    for s in range(3):
        for t in range(3):
            assert fa.values[s][t].close(prod.values[s][t])


def test_equivalent_cyclic_laurent_obstruction():
    one = RingValue.unit(L1)
    z = RingValue.monomial(L1, 1, (1,))
    z2 = z * z
    # winding 1 mod 2 obstructs equivalence with the trivial class on Z/2
    assert equivalent_cyclic([z], [one]) is None
    lam = equivalent_cyclic([z2], [one])
    assert lam is not None
    fa = make_f_alpha(2, [z2], L1)
    prod = cocycle_mul(make_f_alpha(2, [one], L1), coboundary(lam))
    for s in range(2):
        for t in range(2):
            assert fa.values[s][t].close(prod.values[s][t])


def test_equivalent_cyclic_real_obstruction():
    mu = RingValue.scalar(REAL, -1.0)
    one = RingValue.unit(REAL)
    assert equivalent_cyclic([mu], [one], REAL) is None
    assert equivalent_cyclic([mu, one], [one, mu], REAL) is not None


def test_winding():
    z = RingValue.monomial(L1, np.exp(0.2j), (3,))
    assert winding(z) == 3
    with pytest.raises(ValueError):
        winding(RingValue.poly(L1, {(0,): 1, (1,): 1}))
    with pytest.raises(ValueError):
        winding(RingValue.monomial(L1, 2, (1,)))


def test_tensor_values_oracle():
    f = make_f_alpha(2, [phase(0.7)])
    g = make_f_alpha(2, [phase(-0.3)])
    h = tensor_cocycle(f, g)
    # index (t,s) -> 2t+s under the product ordering
    for t1 in range(2):
        for s1 in range(2):
            for t2 in range(2):
                for s2 in range(2):
                    want = f.values[t1][t2] * g.values[s1][s2]
                    got = h.values[2 * t1 + s1][2 * t2 + s2]
                    assert got.close(want)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6), st.data())
def test_coboundary_cocycle_identity_random(n, data):
    g = make_cyclic(n)
    thetas = [0.0] + [data.draw(st.floats(0, 6.28)) for _ in range(n - 1)]
    lam = Lambda(g, COMPLEX, [phase(t) for t in thetas])
    f = coboundary(lam)
    assert validate(f).ok
