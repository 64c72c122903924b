"""Per-class root recovery and the end-to-end solve pipeline.

For each conjugacy class (t, n) of roots of the companion polynomial,
the polynomial is reduced modulo the central quadratic z^2 - t*z + n to
a linear remainder psi1*z + psi0.  Exactly one of three things is true
of the class: the remainder vanishes identically and every element of
the class is a root (spherical); psi1 is invertible and the unique root
in the class is -psi1^{-1} psi0 (isolated, or central when the class is
a single ground-field point); or the computation is numerically
inconsistent, which is reported rather than silently mended since the
exact theory rules it out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import AlgebraParams, Quaternion
from .companion import companion_polynomial
from .polynomials import CentralPoly, StandardPoly, reduce_mod_central_quadratic
from .rootfind import ConjClass, cluster_classes, complex_roots
from .scalars import DEFAULT_TOL, Tolerance

KIND_ISOLATED = "isolated"
KIND_SPHERICAL = "spherical"
KIND_CENTRAL = "central"
KIND_INCONSISTENT = "inconsistent"

# Nullity threshold factor for deciding that a remainder coefficient
# vanishes; scaled by (1 + max coefficient norm) of the polynomial.
PSI_NULLITY_FACTOR = 1e-8
# Acceptance factor for |phi(root)| relative to the evaluation scale.
ROOT_RESIDUAL_FACTOR = 1e-7
# Relative tolerance for matching a recovered root's invariants to its class.
INVARIANT_MATCH_TOL = 1e-6


@dataclass(frozen=True)
class RootReport:
    """Outcome for one conjugacy class of companion-polynomial roots."""

    conj_class: ConjClass
    kind: str
    root: Quaternion | None = None
    representative: Quaternion | None = None
    residual: float | None = None
    psi_norms: tuple = (0.0, 0.0)
    diagnostics: str | None = None


@dataclass(frozen=True)
class SolveResult:
    reports: tuple
    companion: CentralPoly
    max_residual: float
    inconsistent_count: int

    @property
    def ok(self) -> bool:
        return self.inconsistent_count == 0


def class_representative(conj_class: ConjClass, alg: AlgebraParams) -> Quaternion:
    """An element t/2 + sqrt((n - t^2/4)/(-a)) * i with invariants (t, n).

    Approximate-real only (needs a square root).  The discriminant of a
    class coming from a real-coefficient companion polynomial is a
    square of an imaginary part, hence never negative beyond noise.
    """
    t = float(conj_class.t)
    n = float(conj_class.n)
    disc = n - t * t / 4.0
    scale = max(1.0, abs(t), abs(n))
    if disc < -1e-9 * scale:
        raise ValueError("class not realized in the algebra: n - t^2/4 < 0")
    beta = math.sqrt(max(disc, 0.0) / -float(alg.a))
    return alg.quat(t / 2.0, beta, 0, 0)


def classify_class(
    phi: StandardPoly, conj_class: ConjClass, tol: Tolerance = DEFAULT_TOL
) -> RootReport:
    """Decide spherical vs. isolated for one class and produce the root.

    Central classes go through the same linear-remainder path as the
    rest; the theory behind the reduction does not care whether the
    class is a point.
    """
    t, n = conj_class.t, conj_class.n
    pair = reduce_mod_central_quadratic(phi, t, n)
    norm1 = pair.psi1.norm()
    norm0 = pair.psi0.norm()
    psi_norms = (norm1, norm0)
    tau = PSI_NULLITY_FACTOR * (1.0 + phi.max_coeff_norm())

    if norm1 > tau:
        try:
            root = -(pair.psi1.inverse(tol) * pair.psi0)
        except ZeroDivisionError:
            return RootReport(
                conj_class,
                KIND_INCONSISTENT,
                psi_norms=psi_norms,
                diagnostics="linear coefficient deemed nonzero but not invertible",
            )
        t_got, n_got = root.reduced_invariants()
        inv_scale = max(1.0, abs(t), abs(n))
        if (
            abs(t_got - t) > INVARIANT_MATCH_TOL * inv_scale
            or abs(n_got - n) > INVARIANT_MATCH_TOL * inv_scale
        ):
            return RootReport(
                conj_class,
                KIND_INCONSISTENT,
                psi_norms=psi_norms,
                diagnostics=(
                    f"recovered root has invariants ({t_got:.6g}, {n_got:.6g}), "
                    f"class is ({t:.6g}, {n:.6g})"
                ),
            )
        residual = phi.evaluate(root).norm()
        bound = ROOT_RESIDUAL_FACTOR * phi.evaluation_scale(root.norm())
        if residual > bound:
            return RootReport(
                conj_class,
                KIND_INCONSISTENT,
                psi_norms=psi_norms,
                diagnostics=f"root residual {residual:.3g} above bound {bound:.3g}",
            )
        kind = KIND_CENTRAL if conj_class.central else KIND_ISOLATED
        return RootReport(conj_class, kind, root=root, residual=residual, psi_norms=psi_norms)

    if norm0 <= tau:
        rep = class_representative(conj_class, phi.alg)
        residual = phi.evaluate(rep).norm()
        return RootReport(
            conj_class,
            KIND_SPHERICAL,
            representative=rep,
            residual=residual,
            psi_norms=psi_norms,
        )

    # The exact theory forbids a nonzero constant remainder; numerically
    # it means the tolerance split failed, which the caller must see.
    return RootReport(
        conj_class,
        KIND_INCONSISTENT,
        psi_norms=psi_norms,
        diagnostics="remainder has negligible linear part but nonzero constant",
    )


def solve(phi: StandardPoly, tol: Tolerance = DEFAULT_TOL) -> SolveResult:
    """Full pipeline: companion polynomial, its complex roots, conjugacy
    classes, and one report per class (ordered by (t, n))."""
    if phi.alg.exact:
        raise ValueError("solve requires approximate-real mode")
    companion = companion_polynomial(phi, tol)
    roots = complex_roots(companion, tol)
    classes = cluster_classes(roots, tol)
    reports = tuple(classify_class(phi, cls, tol) for cls in classes)
    max_residual = max(
        (r.residual for r in reports if r.residual is not None), default=0.0
    )
    inconsistent = sum(1 for r in reports if r.kind == KIND_INCONSISTENT)
    return SolveResult(reports, companion, max_residual, inconsistent)
