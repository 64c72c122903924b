"""Numeric root finding for real-coefficient central polynomials, and
grouping of the complex roots into quaternion conjugacy classes.

The solver is the Ehrlich-Aberth simultaneous iteration: all root
iterates are updated together with a Newton step corrected by the
mutual repulsion term sum 1/(z_k - z_j).  An iterate counts as settled
once its step falls below 1e-13 of the starting radius or its residual
reaches the round-off floor of polynomial evaluation; the floor test is
what lets clusters from multiple roots (which stall at a distance of
roughly sqrt(machine epsilon)) terminate cleanly.  Stalled cluster
members are then merged by single-linkage clustering and averaged,
which recovers the multiple root to far better accuracy than any single
member.

Everything here is approximate-real only; exact mode stops one stage
earlier, at the companion polynomial.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .polynomials import CentralPoly
from .scalars import DEFAULT_TOL, Tolerance

MAX_ITERATIONS = 200
STEP_TOL = 1e-13
CLUSTER_RADIUS = 1e-6
RESIDUAL_FACTOR = 1e-8
_EPS = 2.220446049250313e-16


class ConvergenceError(RuntimeError):
    """Simultaneous iteration failed; carries the best iterates seen."""

    def __init__(self, message, iterates=(), residuals=()):
        super().__init__(message)
        self.iterates = tuple(iterates)
        self.residuals = tuple(residuals)


@dataclass(frozen=True)
class ComplexRoot:
    re: float
    im: float
    multiplicity: int


@dataclass(frozen=True)
class ConjClass:
    """Conjugacy class with reduced trace t and reduced norm n.

    Central classes (n = t^2/4) consist of a single ground-field point;
    all other classes realized here satisfy n > t^2/4.
    """

    t: float
    n: float
    multiplicity: int
    central: bool


def _horner_with_derivative(coeffs, z):
    p = coeffs[-1]
    dp = 0j
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _residual_floor(coeffs, z):
    """Round-off magnitude of Horner evaluation at z (Adams-style bound)."""
    az = abs(z)
    err = abs(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        err = err * az + abs(c)
    return 8.0 * _EPS * err


def complex_roots(poly: CentralPoly, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """All deg(poly) complex roots, clustered by multiplicity.

    Conjugate symmetry is enforced by pairing and averaging, so the
    output of a real-coefficient polynomial is exactly closed under
    conjugation.  Raises :class:`ConvergenceError` if the iteration does
    not settle within the iteration budget or a returned root fails the
    residual bound RESIDUAL_FACTOR * sum |a_k| max(1,|z|)^k.
    """
    coeffs = [float(c) for c in poly.coeffs]
    if len(coeffs) < 2:
        raise ValueError("root finding needs a nonconstant polynomial")
    if coeffs[-1] == 0:
        raise ValueError("zero leading coefficient")
    lead = coeffs[-1]
    coeffs = [complex(c / lead) for c in coeffs]
    m = len(coeffs) - 1

    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    iterates = [
        radius * cmath.exp(1j * (2.0 * math.pi * k / m + 0.4)) for k in range(m)
    ]

    settled = [False] * m
    for _ in range(MAX_ITERATIONS):
        max_unsettled_step = 0.0
        for k in range(m):
            z = iterates[k]
            p, dp = _horner_with_derivative(coeffs, z)
            if abs(p) <= _residual_floor(coeffs, z):
                settled[k] = True
                continue
            if dp == 0:
                # Degenerate stationary point: nudge deterministically.
                iterates[k] = z + radius * 1e-6 * cmath.exp(1j * (k + 1))
                settled[k] = False
                max_unsettled_step = max(max_unsettled_step, radius * 1e-6)
                continue
            w = p / dp
            rep = 0j
            for j in range(m):
                if j != k:
                    diff = z - iterates[j]
                    if diff != 0:
                        rep += 1.0 / diff
            denom = 1.0 - w * rep
            step = w if abs(denom) < 1e-300 else w / denom
            iterates[k] = z - step
            if abs(step) <= STEP_TOL * radius:
                settled[k] = True
            else:
                settled[k] = False
                max_unsettled_step = max(max_unsettled_step, abs(step))
        if all(settled):
            break
    else:
        residuals = [abs(_horner_with_derivative(coeffs, z)[0]) for z in iterates]
        raise ConvergenceError(
            "root finder failed to converge", iterates, residuals
        )

    # Newton corrections |p/p'| at the final iterates measure the local
    # root uncertainty; stalled members of a multiple-root cluster sit
    # about that far apart, so the linkage radius grows with them.
    corrections = []
    for z in iterates:
        p, dp = _horner_with_derivative(coeffs, z)
        if dp == 0:
            corrections.append(0.0 if p == 0 else 1e-3 * radius)
        else:
            corrections.append(min(abs(p / dp), 1e-3 * radius))

    clusters = _single_linkage(iterates, corrections)
    roots = []
    for members in clusters:
        center = sum(iterates[k] for k in members) / len(members)
        if len(members) > 1:
            spread = max(abs(iterates[k] - center) for k in members)
            slack = max(corrections[k] for k in members)
            window = max(
                CLUSTER_RADIUS * max(1.0, abs(center)), 10.0 * (spread + slack)
            )
            center = _refine_multiple(coeffs, center, len(members), window)
        scale = max(1.0, abs(center))
        if abs(center.imag) <= CLUSTER_RADIUS * scale:
            center = complex(center.real, 0.0)
        roots.append((center, len(members)))

    roots = _pair_conjugates(roots)
    roots.sort(key=lambda item: (item[0].real, item[0].imag))

    out = []
    for center, mult in roots:
        residual = abs(poly.evaluate_scalar(center))
        bound = RESIDUAL_FACTOR * poly.evaluation_scale(abs(center))
        if residual > bound:
            raise ConvergenceError(
                "root finder failed to converge: residual above bound",
                [center],
                [residual],
            )
        out.append(ComplexRoot(center.real, center.imag, mult))
    return tuple(out)


def _refine_multiple(coeffs, center, multiplicity, window):
    """Polish a multiplicity-m cluster center by Newton on the (m-1)-th
    derivative, where the root is simple.

    A cluster of stalled iterates locates a multiple root only to about
    the square root of the evaluation noise; the derivative sees it as a
    simple root and recovers it to full precision.  The result is kept
    only if it stays within ``window`` of the cluster center.
    """
    deriv = list(coeffs)
    for _ in range(multiplicity - 1):
        deriv = [k * deriv[k] for k in range(1, len(deriv))]
    z = center
    for _ in range(40):
        p, dp = _horner_with_derivative(deriv, z)
        if dp == 0:
            return center
        step = p / dp
        z -= step
        if abs(step) <= 1e-15 * max(1.0, abs(z)):
            break
    if abs(z - center) > window:
        return center
    return z


def _single_linkage(points, corrections):
    """Union points closer than the larger of CLUSTER_RADIUS * scale and
    eight times their combined Newton corrections."""
    m = len(points)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(m):
        for j in range(i + 1, m):
            scale = max(1.0, abs(points[i]), abs(points[j]))
            radius = max(
                CLUSTER_RADIUS * scale, 8.0 * (corrections[i] + corrections[j])
            )
            if abs(points[i] - points[j]) <= radius:
                parent[find(i)] = find(j)

    groups = {}
    for i in range(m):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _pair_conjugates(roots):
    """Match each root with positive imaginary part to its conjugate twin.

    Real-coefficient input guarantees a partner exists; the averaged
    pair is returned exactly conjugate-symmetric.
    """
    real_part = [(z, mult) for z, mult in roots if z.imag == 0.0]
    upper = [(z, mult) for z, mult in roots if z.imag > 0.0]
    lower = [(z, mult) for z, mult in roots if z.imag < 0.0]
    if len(upper) != len(lower):
        raise ConvergenceError(
            "root finder failed to converge: conjugate pairing mismatch",
            [z for z, _ in roots],
        )
    out = list(real_part)
    lower = list(lower)
    for z, mult in upper:
        best = min(range(len(lower)), key=lambda idx: abs(lower[idx][0] - z.conjugate()))
        zc, multc = lower.pop(best)
        if multc != mult:
            raise ConvergenceError(
                "root finder failed to converge: conjugate multiplicity mismatch",
                [z, zc],
            )
        re = 0.5 * (z.real + zc.real)
        im = 0.5 * (z.imag - zc.imag)
        out.append((complex(re, im), mult))
        out.append((complex(re, -im), mult))
    return out


def cluster_classes(roots, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """Group conjugate root pairs into conjugacy classes (t, n).

    A pair lam, conj(lam) yields (t, n) = (2 Re lam, |lam|^2); a real
    root lam yields the central class (2 lam, lam^2).  Classes whose
    (t, n) agree within tolerance are merged with multiplicities added.
    Over the reals with a, b < 0 every class is realized in the algebra,
    so nothing is discarded.
    """
    classes = []
    for root in roots:
        if root.im < 0.0:
            continue  # counted with its conjugate partner
        if root.im == 0.0:
            classes.append((2.0 * root.re, root.re * root.re, root.multiplicity, True))
        else:
            classes.append(
                (
                    2.0 * root.re,
                    root.re * root.re + root.im * root.im,
                    root.multiplicity,
                    False,
                )
            )

    merged = []
    for t, n, mult, central in sorted(classes):
        scale = max(1.0, abs(t), abs(n))
        for idx, (t0, n0, mult0, central0) in enumerate(merged):
            if tol.close(t, t0, scale) and tol.close(n, n0, scale):
                merged[idx] = (t0, n0, mult0 + mult, central0 and central)
                break
        else:
            merged.append((t, n, mult, central))

    return tuple(
        ConjClass(t, n, mult, central) for t, n, mult, central in sorted(merged)
    )
