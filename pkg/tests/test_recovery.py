import random

import pytest

from quatroots import (
    KIND_CENTRAL,
    KIND_INCONSISTENT,
    KIND_ISOLATED,
    KIND_SPHERICAL,
    AlgebraParams,
    ConjClass,
    StandardPoly,
    class_representative,
    classify_class,
    evaluate_central,
    from_left_factors,
    solve,
)

from quatroots.scalars import Tolerance

H = AlgebraParams(-1.0, -1.0)
LOOSE = Tolerance(rel=1e-7, abs=1e-9)


def rand_quat(rng, alg, span=3):
    return alg.quat(*(rng.uniform(-span, span) for _ in range(4)))


def rand_unit_quat(rng, alg):
    while True:
        q = rand_quat(rng, alg, 1)
        if q.norm() > 0.1:
            return q


def test_spherical_class():
    phi = StandardPoly(H, (H.one(), H.zero()))  # z^2 + 1
    report = classify_class(phi, ConjClass(0.0, 1.0, 2, False))
    assert report.kind == KIND_SPHERICAL
    assert report.representative.approx_eq(H.i())
    assert report.psi_norms == (0.0, 0.0)


def test_isolated_class():
    i, j, k = H.i(), H.j(), H.k()
    phi = StandardPoly(H, (-k, -(i + j)))  # z^2 - (i+j)z - k, root i
    report = classify_class(phi, ConjClass(0.0, 1.0, 2, False))
    assert report.kind == KIND_ISOLATED
    assert report.root.approx_eq(i)
    assert report.residual <= 1e-12


def test_central_class():
    phi = StandardPoly(H, (H.scalar(2), H.scalar(-3)))  # z^2 - 3z + 2
    report = classify_class(phi, ConjClass(2.0, 1.0, 2, True))
    assert report.kind == KIND_CENTRAL
    assert report.root.approx_eq(H.one())


def test_class_representative_examples():
    assert class_representative(ConjClass(0.0, 1.0, 1, False), H).approx_eq(H.i())
    assert class_representative(ConjClass(2.0, 2.0, 1, False), H).approx_eq(
        H.quat(1, 1, 0, 0)
    )
    quarter = AlgebraParams(-4.0, -1.0)
    rep = class_representative(ConjClass(0.0, 1.0, 1, False), quarter)
    assert rep.approx_eq(quarter.quat(0, 0.5, 0, 0))
    with pytest.raises(ValueError, match="not realized"):
        class_representative(ConjClass(4.0, 1.0, 1, False), H)


def test_solve_spherical_pipeline():
    phi = StandardPoly(H, (H.one(), H.zero()))
    result = solve(phi)
    assert result.companion.coeffs == (1.0, 0.0, 2.0, 0.0, 1.0)
    assert len(result.reports) == 1
    report = result.reports[0]
    assert report.kind == KIND_SPHERICAL
    assert abs(report.conj_class.t) <= 1e-9 and abs(report.conj_class.n - 1) <= 1e-9
    assert report.conj_class.multiplicity == 2


def test_solve_linear():
    lam = H.quat(1, 1, 1, 1)
    result = solve(from_left_factors([lam]))
    assert len(result.reports) == 1
    assert result.reports[0].kind == KIND_ISOLATED
    assert result.reports[0].root.approx_eq(lam)


def test_solve_requires_approximate_mode():
    from fractions import Fraction

    exact = AlgebraParams(Fraction(-1), Fraction(-1))
    with pytest.raises(ValueError, match="approximate"):
        solve(StandardPoly(exact, (exact.one(),)))


def test_spherical_conjugation_soundness():
    rng = random.Random(51)
    phi = StandardPoly(H, (H.one(), H.zero()))
    rep = solve(phi).reports[0].representative
    for _ in range(20):
        q = rand_unit_quat(rng, H)
        conj = q * rep * q.inverse()
        assert phi.evaluate(conj).norm() <= 1e-10


def test_factor_polynomials_complete_and_sound():
    rng = random.Random(52)
    for _ in range(30):
        roots = [rand_quat(rng, H) for _ in range(rng.randint(1, 4))]
        phi = from_left_factors(roots)
        result = solve(phi)
        assert result.reports
        t, n = roots[0].reduced_invariants()
        scale = max(1.0, abs(t), abs(n))
        hits = [
            r
            for r in result.reports
            if abs(r.conj_class.t - t) <= 1e-6 * scale
            and abs(r.conj_class.n - n) <= 1e-6 * scale
        ]
        assert hits, (roots, result.reports)
        assert any(r.kind != KIND_INCONSISTENT for r in hits)
        for report in result.reports:
            if report.root is None:
                continue
            # class membership
            rt, rn = report.root.reduced_invariants()
            cscale = max(1.0, abs(report.conj_class.t), abs(report.conj_class.n))
            assert abs(rt - report.conj_class.t) <= 1e-6 * cscale
            assert abs(rn - report.conj_class.n) <= 1e-6 * cscale
            # every reported root also lies on the companion polynomial
            value = evaluate_central(result.companion, report.root)
            bound = 1e-6 * result.companion.evaluation_scale(report.root.norm())
            assert value.norm() <= bound


def test_quadratic_same_class_dichotomy():
    # Two factor roots in one conjugacy class: the product is spherical
    # exactly when it collapses to the class's central quadratic
    # (second factor root = quaternion conjugate), otherwise the
    # rightmost root is the unique root.
    rng = random.Random(54)
    for _ in range(10):
        q = rand_quat(rng, H)
        # conjugate pair (z - conj(q))(z - q) = z^2 - trd q z + nrd q
        phi = from_left_factors([q, q.conjugate()])
        reports = solve(phi).reports
        assert [r.kind for r in reports] == [KIND_SPHERICAL]
        # generic same-class pair (z - p q p^{-1})(z - q): unique root q
        p = rand_quat(rng, H)
        if p.norm() < 0.1 or q.x1 == q.x2 == q.x3 == 0.0:
            continue
        phi = from_left_factors([q, p * q * p.inverse()])
        reports = solve(phi).reports
        assert len(reports) == 1
        assert reports[0].kind == KIND_ISOLATED
        assert reports[0].root.approx_eq(q, scale=max(1.0, q.norm() ** 2), tol=LOOSE)


def test_repeated_factor():
    rng = random.Random(55)
    for _ in range(5):
        q = rand_quat(rng, H)
        result = solve(from_left_factors([q, q]))
        hits = [r for r in result.reports if r.root is not None and r.root.approx_eq(q, scale=10.0, tol=LOOSE)]
        assert hits and hits[0].kind == KIND_ISOLATED


def test_reports_sorted_by_class():
    rng = random.Random(53)
    for _ in range(5):
        roots = [rand_quat(rng, H) for _ in range(4)]
        result = solve(from_left_factors(roots))
        keys = [(r.conj_class.t, r.conj_class.n) for r in result.reports]
        assert keys == sorted(keys)
