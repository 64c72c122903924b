"""Polynomials: monic left-coefficient ones over the quaternions, and
central ones with scalar coefficients.

A standard polynomial is z^n + c_{n-1} z^{n-1} + ... + c_0 with the
quaternion coefficients written on the left of the powers; evaluation
substitutes a quaternion for z on the right of each coefficient.  The
variable itself is central, so scalar (ground-field) coefficients
commute past everything, which is what makes reduction modulo a central
quadratic z^2 - t*z + n a simple linear recurrence on power remainders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraParams, Quaternion
from .scalars import DEFAULT_TOL, Scalar, Tolerance


@dataclass(frozen=True)
class StandardPoly:
    """Monic z^n + c_{n-1} z^{n-1} + ... + c_0; coeffs holds c_0..c_{n-1}."""

    alg: AlgebraParams
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("degree must be at least 1")
        for c in self.coeffs:
            if c.alg != self.alg:
                raise ValueError("coefficient from a different algebra")

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def coefficient(self, k: int) -> Quaternion:
        """c_k, including the implicit leading coefficient 1 at k = degree."""
        if k == self.degree:
            return self.alg.one()
        return self.coeffs[k]

    def evaluate(self, lam: Quaternion) -> Quaternion:
        """phi(lam) with left coefficients: lam^n + sum c_k * lam^k.

        Powers are built by repeated multiplication; Horner's scheme does
        not apply because the coefficients do not commute past lam.
        """
        acc = self.coeffs[0]
        power = self.alg.one()
        for k in range(1, self.degree):
            power = power * lam
            acc = acc + self.coeffs[k] * power
        power = power * lam
        return acc + power

    def max_coeff_norm(self) -> float:
        return max(c.norm() for c in self.coeffs)

    def sum_coeff_norm(self) -> float:
        return sum(c.norm() for c in self.coeffs)

    def evaluation_scale(self, lam_norm: float) -> float:
        """Magnitude of the evaluation sum at an argument of given norm."""
        r = max(1.0, float(lam_norm))
        scale = r ** self.degree
        for k, c in enumerate(self.coeffs):
            scale += c.norm() * r**k
        return scale


def monic_normalize(coeffs) -> StandardPoly:
    """Build a monic polynomial from c_0..c_n with explicit leading c_n.

    Left-divides every coefficient by the leading one; the root set is
    unchanged because c_n^{-1} * phi(lam) = 0 exactly when phi(lam) = 0.
    """
    coeffs = list(coeffs)
    if len(coeffs) < 2:
        raise ValueError("need at least a leading and a constant coefficient")
    leading = coeffs[-1]
    if all(c == 0 for c in leading.coords()):
        raise ValueError("degenerate leading coefficient")
    inv = leading.inverse()
    return StandardPoly(leading.alg, tuple(inv * c for c in coeffs[:-1]))


def from_left_factors(roots) -> StandardPoly:
    """Expand (z - lam_m) * ... * (z - lam_1) for roots lam_1..lam_m.

    The rightmost factor's root lam_1 is always a root of the product;
    the others need not be.  Used throughout the tests as the ground
    truth for polynomials with a known root.
    """
    roots = list(roots)
    if not roots:
        raise ValueError("need at least one factor")
    alg = roots[0].alg
    # poly holds c_0..c_{m-1} of the current monic product.
    poly = [-roots[0]]
    for lam in roots[1:]:
        n = len(poly)
        shifted = [alg.zero()] + list(poly)          # z * poly
        scaled = [lam * c for c in poly] + [lam]     # lam * (poly + z^n)
        poly = [shifted[k] - scaled[k] for k in range(n + 1)]
    return StandardPoly(alg, tuple(poly))


@dataclass(frozen=True)
class ReducedPair:
    """Linear remainder psi1 * z + psi0 of a polynomial modulo z^2 - t*z + n."""

    psi1: Quaternion
    psi0: Quaternion


def power_remainders(t: Scalar, n: Scalar, count: int) -> tuple:
    """Lists p, q with z^k = p[k]*z + q[k] (mod z^2 - t*z + n), k = 0..count."""
    p = [0 * t, 1 + 0 * t]
    q = [1 + 0 * t, 0 * t]
    for k in range(1, count):
        p.append(t * p[k] + q[k])
        q.append(-n * p[k])
    return p[: count + 1], q[: count + 1]


def reduce_mod_central_quadratic(phi: StandardPoly, t: Scalar, n: Scalar) -> ReducedPair:
    """Remainder of phi modulo the central quadratic z^2 - t*z + n.

    Because t and n are central, phi(lam) = psi1*lam + psi0 for every lam
    satisfying lam^2 = t*lam - n, i.e. for the whole conjugacy class with
    reduced invariants (t, n).
    """
    deg = phi.degree
    p, q = power_remainders(t, n, deg)
    psi1 = phi.alg.scalar(p[deg])
    psi0 = phi.alg.scalar(q[deg])
    for k in range(deg):
        psi1 = psi1 + phi.coeffs[k] * p[k]
        psi0 = psi0 + phi.coeffs[k] * q[k]
    return ReducedPair(psi1, psi0)


def reduction_quotient(phi: StandardPoly, t: Scalar, n: Scalar) -> tuple:
    """Quotient coefficients d_0..d_{deg-2} of phi by z^2 - t*z + n.

    Satisfies phi = (sum d_j z^j) * (z^2 - t*z + n) + psi1*z + psi0 with
    the pair from :func:`reduce_mod_central_quadratic`; the test suite
    checks the identity coefficient-wise.
    """
    deg = phi.degree
    if deg < 2:
        return ()
    p, _ = power_remainders(t, n, deg)
    out = []
    for j in range(deg - 1):
        acc = phi.alg.zero()
        for k in range(j + 2, deg + 1):
            acc = acc + phi.coefficient(k) * p[k - 1 - j]
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class CentralPoly:
    """Polynomial with ground-field coefficients, stored low to high.

    Trailing zero coefficients are trimmed so the leading coefficient is
    nonzero unless the polynomial is identically zero.
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __mul__(self, other):
        if not isinstance(other, CentralPoly):
            return NotImplemented
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return CentralPoly(tuple(out))

    def evaluate_scalar(self, x):
        """Horner evaluation at a scalar or complex point."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def max_coeff_abs(self) -> float:
        return max(abs(float(c)) for c in self.coeffs)

    def evaluation_scale(self, r: float) -> float:
        r = max(1.0, float(r))
        return sum(abs(float(c)) * r**k for k, c in enumerate(self.coeffs))

    def approx_eq(self, other: "CentralPoly", tol: Tolerance = DEFAULT_TOL) -> bool:
        if len(self.coeffs) != len(other.coeffs):
            return False
        scale = max(self.max_coeff_abs(), other.max_coeff_abs())
        return all(
            tol.close(x, y, scale) for x, y in zip(self.coeffs, other.coeffs)
        )


def evaluate_central(poly: CentralPoly, x: Quaternion) -> Quaternion:
    """sum a_k * x^k with the scalar coefficients acting centrally."""
    acc = x.alg.scalar(poly.coeffs[0])
    power = x.alg.one()
    for k in range(1, len(poly.coeffs)):
        power = power * x
        acc = acc + poly.coeffs[k] * power
    return acc
