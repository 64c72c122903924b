import random

import pytest

from quatroots import CentralPoly, ConvergenceError, cluster_classes, complex_roots
from quatroots.rootfind import ComplexRoot
from quatroots.scalars import Tolerance
from quatroots.verify import sample_distinct_classes


def roots_as_set(roots, digits=9):
    return sorted((round(r.re, digits), round(r.im, digits), r.multiplicity) for r in roots)


def test_simple_complex_pair():
    roots = complex_roots(CentralPoly((1.0, 0.0, 1.0)))
    assert roots_as_set(roots) == [(0.0, -1.0, 1), (0.0, 1.0, 1)]


def test_double_pair():
    roots = complex_roots(CentralPoly((1.0, 0.0, 2.0, 0.0, 1.0)))  # (z^2+1)^2
    assert roots_as_set(roots) == [(0.0, -1.0, 2), (0.0, 1.0, 2)]


def test_real_roots():
    roots = complex_roots(CentralPoly((2.0, -3.0, 1.0)))  # (z-1)(z-2)
    assert roots_as_set(roots) == [(1.0, 0.0, 1), (2.0, 0.0, 1)]


def test_double_real_roots():
    # (z-1)^2 (z-2)^2
    poly = CentralPoly((-1.0, 1.0)) * CentralPoly((-1.0, 1.0)) \
        * CentralPoly((-2.0, 1.0)) * CentralPoly((-2.0, 1.0))
    roots = complex_roots(poly)
    assert roots_as_set(roots) == [(1.0, 0.0, 2), (2.0, 0.0, 2)]


def test_rejects_constant_and_zero_leading():
    with pytest.raises(ValueError):
        complex_roots(CentralPoly((3.0,)))


def test_residuals_and_multiplicity_sum():
    rng = random.Random(41)
    for _ in range(20):
        degree = rng.randint(1, 9)
        poly = CentralPoly(tuple(rng.uniform(-5, 5) for _ in range(degree)) + (1.0,))
        roots = complex_roots(poly)
        assert sum(r.multiplicity for r in roots) == poly.degree
        for r in roots:
            z = complex(r.re, r.im)
            assert abs(poly.evaluate_scalar(z)) <= 1e-8 * poly.evaluation_scale(abs(z))
        # exact conjugate symmetry after pairing
        tagged = {(r.re, r.im, r.multiplicity) for r in roots}
        assert tagged == {(re, -im, m) for re, im, m in tagged}


def test_cluster_classes_examples():
    classes = cluster_classes((ComplexRoot(0.0, 1.0, 1), ComplexRoot(0.0, -1.0, 1)))
    assert len(classes) == 1
    assert (classes[0].t, classes[0].n, classes[0].multiplicity, classes[0].central) == (0.0, 1.0, 1, False)

    classes = cluster_classes((ComplexRoot(1.0, 0.0, 1), ComplexRoot(2.0, 0.0, 1)))
    assert [(c.t, c.n, c.central) for c in classes] == [(2.0, 1.0, True), (4.0, 4.0, True)]

    classes = cluster_classes((ComplexRoot(3.0, 4.0, 2), ComplexRoot(3.0, -4.0, 2)))
    assert [(c.t, c.n, c.multiplicity) for c in classes] == [(6.0, 25.0, 2)]


def test_known_class_products_recovered():
    rng = random.Random(42)
    for _ in range(25):
        target = sample_distinct_classes(rng, rng.randint(1, 3))
        poly = CentralPoly((1.0,))
        for t, n, mult, central in target:
            piece = CentralPoly((-t / 2, 1.0)) if central else CentralPoly((n, -t, 1.0))
            for _ in range(mult):
                poly = poly * piece
        roots = complex_roots(poly)
        classes = cluster_classes(roots)
        rebuilt = CentralPoly((1.0,))
        for cls in classes:
            piece = (
                CentralPoly((-cls.t / 2, 1.0))
                if cls.central
                else CentralPoly((cls.n, -cls.t, 1.0))
            )
            for _ in range(cls.multiplicity):
                rebuilt = rebuilt * piece
        for t, n, mult, central in target:
            scale = max(1.0, abs(t), abs(n))
            hit = [
                c for c in classes
                if abs(c.t - t) <= 1e-6 * scale and abs(c.n - n) <= 1e-6 * scale
            ]
            assert len(hit) == 1, (target, classes)
            assert hit[0].central == central
            assert hit[0].multiplicity >= mult
        # Reconstruction, with slack for multiple-root error amplification.
        assert rebuilt.approx_eq(poly, Tolerance(rel=1e-7, abs=1e-12)), (target,)


def test_nonconvergence_reports_iterates():
    # The iteration budget cannot be exhausted by a benign polynomial, so
    # force the error path instead and check the payload shape.
    err = ConvergenceError("boom", [1 + 2j], [0.5])
    assert err.iterates == (1 + 2j,)
    assert err.residuals == (0.5,)
