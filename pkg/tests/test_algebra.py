import random
from fractions import Fraction

import pytest

from quatroots import AlgebraParams, unsplit

H = AlgebraParams(Fraction(-1), Fraction(-1))
G = AlgebraParams(Fraction(-2), Fraction(-3))
HF = AlgebraParams(-1.0, -1.0)


def rand_quat(rng, alg, span=5):
    if alg.exact:
        return alg.quat(*(Fraction(rng.randint(-span, span), rng.choice((1, 2, 3))) for _ in range(4)))
    return alg.quat(*(rng.uniform(-span, span) for _ in range(4)))


def test_rejects_nonnegative_structure_constants():
    with pytest.raises(ValueError):
        AlgebraParams(Fraction(0), Fraction(-1))
    with pytest.raises(ValueError):
        AlgebraParams(Fraction(-1), Fraction(1))
    with pytest.raises(ValueError):
        AlgebraParams(1.5, -1.0)


def test_structure_constants():
    i, j, k = H.i(), H.j(), H.k()
    assert (i * j).coords() == (0, 0, 0, 1)
    assert (j * i).coords() == (0, 0, 0, -1)
    assert (i * i).coords() == (-1, 0, 0, 0)
    assert (G.i() * G.i()).coords() == (-2, 0, 0, 0)
    assert (k * k).coords() == (1 * -1 * -1 * -1, 0, 0, 0)  # k^2 = -ab


def test_hamilton_multiplication_table():
    # Classical Hamilton product on the full 4x4 basis table.
    one, i, j, k = H.one(), H.i(), H.j(), H.k()
    basis = [one, i, j, k]
    expected = {
        (0, 0): one, (0, 1): i, (0, 2): j, (0, 3): k,
        (1, 0): i, (1, 1): -one, (1, 2): k, (1, 3): -j,
        (2, 0): j, (2, 1): -k, (2, 2): -one, (2, 3): i,
        (3, 0): k, (3, 1): j, (3, 2): -i, (3, 3): -one,
    }
    for (r, c), value in expected.items():
        assert basis[r] * basis[c] == value, (r, c)


def test_conjugate():
    q = H.quat(1, 2, 3, 4)
    assert q.conjugate().coords() == (1, -2, -3, -4)
    assert H.scalar(5).conjugate() == H.scalar(5)
    p = H.quat(1, 1, 0, 0)
    assert p.conjugate().conjugate() == p


def test_reduced_invariants():
    assert H.quat(1, 1, 1, 1).reduced_invariants() == (2, 4)
    assert H.j().reduced_invariants() == (0, 1)
    q = G.quat(0, 1, 1, 0)
    assert q.reduced_invariants() == (0, 5)
    assert q * q == G.scalar(-5)


def test_invert():
    i, j = H.i(), H.j()
    assert i.inverse() == -i
    assert H.scalar(2).inverse() == H.scalar(Fraction(1, 2))
    v = i + j
    assert v.inverse() == H.quat(0, Fraction(-1, 2), Fraction(-1, 2), 0)
    assert v * v.inverse() == H.one()
    with pytest.raises(ZeroDivisionError):
        H.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        HF.quat(1e-14, 0, 0, 0).inverse()


def test_split_examples():
    q = H.quat(1, 2, 3, 4)
    u, v = q.split()
    assert (u.re, u.im) == (1, 2)
    assert (v.re, v.im) == (3, -4)
    assert unsplit(u, v) == q

    u, v = H.scalar(7).split()
    assert (u.re, u.im, v.re, v.im) == (7, 0, 0, 0)
    u, v = H.j().split()
    assert (u.re, u.im, v.re, v.im) == (0, 0, 1, 0)


def test_ext_arithmetic():
    x = H.ext(0, 1)
    assert (x * x).re == -1 and (x * x).im == 0
    assert H.ext(2, 5).conj() == H.ext(2, -5)
    y = G.ext(1, 1) * G.ext(1, -1)
    assert (y.re, y.im) == (3, 0)  # norm of 1+i in F(sqrt(-2))
    assert G.ext(1, 1) * G.ext(1, 1).inverse() == G.ext_one()
    with pytest.raises(ZeroDivisionError):
        H.ext_zero().inverse()


@pytest.mark.parametrize("alg", [H, G])
def test_ring_axioms_exact(alg):
    rng = random.Random(11)
    for _ in range(50):
        p, q, r = (rand_quat(rng, alg) for _ in range(3))
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert (p + q) * r == p * r + q * r
        assert (p * q).reduced_norm() == p.reduced_norm() * q.reduced_norm()
        assert (p * q).conjugate() == q.conjugate() * p.conjugate()
        t, n = p.reduced_invariants()
        assert p * p - t * p + alg.scalar(n) == alg.zero()
        u, v = p.split()
        assert unsplit(u, v) == p


def test_ring_axioms_approximate():
    rng = random.Random(12)
    for _ in range(50):
        p, q, r = (rand_quat(rng, HF) for _ in range(3))
        scale = max(1.0, p.norm() * q.norm() * r.norm())
        assert ((p * q) * r).approx_eq(p * (q * r), scale=scale)
        t, n = p.reduced_invariants()
        assert (p * p - t * p + n).approx_eq(HF.zero(), scale=max(1.0, n))


def test_mixing_algebras_rejected():
    with pytest.raises(ValueError):
        H.i() * G.i()
    with pytest.raises(TypeError):
        # float coordinates cannot enter an exact algebra
        H.quat(0.5, 0, 0, 0)
