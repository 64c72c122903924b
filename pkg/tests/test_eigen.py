import random

import pytest

from quatroots import (
    AlgebraParams,
    QuatMatrix,
    StandardPoly,
    char_poly,
    class_representative,
    cluster_classes,
    companion_matrix,
    complex_roots,
    embed,
    from_left_factors,
    is_right_eigenvalue,
    left_companion_eigenvector,
    right_eigenvector,
    root_from_right_pair,
    solve,
)
from quatroots.eigen import LEFT, RIGHT, EigenPair
from quatroots.recovery import KIND_INCONSISTENT

H = AlgebraParams(-1.0, -1.0)


def rand_quat(rng, alg, span=2):
    return alg.quat(*(rng.uniform(-span, span) for _ in range(4)))


def rand_unit_quat(rng, alg):
    while True:
        q = rand_quat(rng, alg, 1)
        if q.norm() > 0.1:
            return q


def test_is_right_eigenvalue_examples():
    rng = random.Random(61)
    amat = QuatMatrix(H, ((H.j(),),))
    assert is_right_eigenvalue(amat, H.j())
    for _ in range(5):
        q = rand_unit_quat(rng, H)
        assert is_right_eigenvalue(amat, q * H.j() * q.inverse())
    ident = QuatMatrix.identity(H, 2)
    assert not is_right_eigenvalue(ident, H.i())
    assert is_right_eigenvalue(ident, H.one())


def test_right_eigenvector_j_matrix():
    # A = (j), lambda = i: the normalized eigenvector is 1 + k.
    amat = QuatMatrix(H, ((H.j(),),))
    pair = right_eigenvector(amat, H.ext(0, 1))
    assert pair.side == RIGHT
    assert len(pair.vector) == 1
    assert pair.vector[0].approx_eq(H.quat(1, 0, 0, 1))
    # j * (1+k) = j + i equals (1+k) * i = i + j
    left_side = amat.apply(pair.vector)[0]
    right_side = pair.vector[0] * pair.value
    assert left_side.approx_eq(right_side)


def test_right_eigenvector_central_diagonal():
    lam = H.scalar(3)
    amat = QuatMatrix(H, ((lam, H.zero()), (H.zero(), lam)))
    pair = right_eigenvector(amat, H.ext(3, 0))
    assert pair.vector[0].approx_eq(H.one())


def test_right_eigenvector_rejects_non_eigenvalue():
    amat = QuatMatrix.identity(H, 2)
    with pytest.raises(ValueError, match="not an eigenvalue"):
        right_eigenvector(amat, H.ext(0, 1))


def test_left_companion_eigenvector():
    phi = StandardPoly(H, (H.one(), H.zero()))  # z^2 + 1
    pair = left_companion_eigenvector(phi, H.i())
    assert pair.side == LEFT
    assert pair.vector == (H.one(), H.i())
    cmat = companion_matrix(phi)
    applied = cmat.apply(pair.vector)
    for got, want in zip(applied, [H.i() * v for v in pair.vector]):
        assert got.approx_eq(want)

    with pytest.raises(ValueError, match="not a root"):
        left_companion_eigenvector(phi, H.one())


def test_left_companion_eigenvector_linear():
    c = H.quat(1, 2, 3, 4)
    phi = from_left_factors([c])
    pair = left_companion_eigenvector(phi, c)
    assert pair.vector == (H.one(),)


def test_companion_left_eigenvalues_are_roots():
    rng = random.Random(62)
    for _ in range(25):
        roots = [rand_quat(rng, H) for _ in range(rng.randint(1, 4))]
        phi = from_left_factors(roots)
        lam = roots[0]
        pair = left_companion_eigenvector(phi, lam)
        cmat = companion_matrix(phi)
        applied = cmat.apply(pair.vector)
        scale = phi.evaluation_scale(lam.norm())
        for got, v in zip(applied, pair.vector):
            assert (got - lam * v).norm() <= 1e-8 * scale
        # The same vector certifies a right pair: its entries are powers
        # of lam and commute with it.
        for got, v in zip(applied, pair.vector):
            assert (got - v * lam).norm() <= 1e-8 * scale
        # Random non-roots must be rejected.
        probe = rand_quat(rng, H)
        if phi.evaluate(probe).norm() > 1e-3 * scale:
            with pytest.raises(ValueError):
                left_companion_eigenvector(phi, probe)


def test_root_from_right_pair_trivial():
    lam = H.quat(0, 1, 2, 0)
    pair = EigenPair(lam, (H.one(), lam), RIGHT)
    assert root_from_right_pair(pair) == lam
    degenerate = EigenPair(lam, (H.quat(1e-15, 0, 0, 0), H.one()), RIGHT)
    with pytest.raises(ValueError, match="degenerate"):
        root_from_right_pair(degenerate)
    with pytest.raises(ValueError, match="right"):
        root_from_right_pair(EigenPair(lam, (H.one(),), LEFT))


def test_right_eigenpair_conjugates_to_root():
    # Extract right eigenpairs at class representatives and conjugate the
    # eigenvalue back into a root of phi.
    rng = random.Random(63)
    checked = 0
    while checked < 20:
        roots = [rand_quat(rng, H) for _ in range(rng.randint(1, 3))]
        phi = from_left_factors(roots)
        cmat = companion_matrix(phi)
        result = solve(phi)
        for report in result.reports:
            if report.kind == KIND_INCONSISTENT:
                continue
            rep = class_representative(report.conj_class, H)
            pair = right_eigenvector(cmat, H.ext(rep.x0, rep.x1))
            recovered = root_from_right_pair(pair)
            assert phi.evaluate(recovered).norm() <= 1e-7 * phi.evaluation_scale(
                recovered.norm()
            )
            checked += 1


def test_right_eigenvector_residual_bound():
    rng = random.Random(64)
    for _ in range(15):
        n = rng.randint(1, 3)
        amat = QuatMatrix(
            H, tuple(tuple(rand_quat(rng, H) for _ in range(n)) for _ in range(n))
        )
        poly = char_poly(embed(amat))
        classes = cluster_classes(complex_roots(poly))
        for cls in classes:
            rep = class_representative(cls, H)
            pair = right_eigenvector(amat, H.ext(rep.x0, rep.x1))
            residual = max(
                (amat.apply(pair.vector)[r] - pair.vector[r] * pair.value).norm()
                for r in range(n)
            )
            scale = max(1.0, amat.max_entry_norm()) * max(
                1.0, max(q.norm() for q in pair.vector)
            )
            assert residual <= 1e-9 * max(scale, 1.0)
