"""Arithmetic in a generalized quaternion algebra.

The algebra over the ground field F has basis 1, i, j, k with

    i*i = a,   j*j = b,   ij = -ji = k   (so k*k = -a*b)

for structure constants a, b < 0.  Negativity keeps the norm form
x0^2 - a*x1^2 - b*x2^2 + a*b*x3^2 positive definite, which makes the
algebra a division algebra over both the rationals and the reals.

The subfield generated by i is a quadratic extension F(i) with i*i = a;
its elements are represented by :class:`ExtElem`.  Every quaternion
splits as q = u + j*v with u, v in F(i), the decomposition used by the
matrix-doubling embedding in :mod:`quatroots.companion`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import DEFAULT_TOL, Scalar, Tolerance, coerce, is_exact


@dataclass(frozen=True)
class AlgebraParams:
    """Structure constants (a, b) of the algebra; both must be negative.

    If either constant is a float the algebra is in approximate-real
    mode and element coordinates are floats; otherwise everything is
    exact rational.
    """

    a: Scalar
    b: Scalar

    def __post_init__(self):
        exact = is_exact(self.a) and is_exact(self.b)
        object.__setattr__(self, "a", coerce(self.a, exact))
        object.__setattr__(self, "b", coerce(self.b, exact))
        if self.a >= 0 or self.b >= 0:
            raise ValueError(
                f"structure constants must be negative, got a={self.a}, b={self.b}"
            )

    @property
    def exact(self) -> bool:
        return is_exact(self.a)

    # Element constructors; coordinates are coerced to the algebra's mode.
    def quat(self, x0=0, x1=0, x2=0, x3=0) -> "Quaternion":
        return Quaternion(self, x0, x1, x2, x3)

    def scalar(self, s) -> "Quaternion":
        """The central element s = s*1."""
        return Quaternion(self, s, 0, 0, 0)

    def zero(self) -> "Quaternion":
        return Quaternion(self, 0, 0, 0, 0)

    def one(self) -> "Quaternion":
        return Quaternion(self, 1, 0, 0, 0)

    def i(self) -> "Quaternion":
        return Quaternion(self, 0, 1, 0, 0)

    def j(self) -> "Quaternion":
        return Quaternion(self, 0, 0, 1, 0)

    def k(self) -> "Quaternion":
        return Quaternion(self, 0, 0, 0, 1)

    def ext(self, re=0, im=0) -> "ExtElem":
        return ExtElem(self, re, im)

    def ext_one(self) -> "ExtElem":
        return ExtElem(self, 1, 0)

    def ext_zero(self) -> "ExtElem":
        return ExtElem(self, 0, 0)


def _check_same_algebra(p, q):
    if p.alg != q.alg:
        raise ValueError("operands belong to different algebras")


@dataclass(frozen=True)
class Quaternion:
    """Element x0 + x1*i + x2*j + x3*k of the algebra ``alg``."""

    alg: AlgebraParams
    x0: Scalar
    x1: Scalar
    x2: Scalar
    x3: Scalar

    def __post_init__(self):
        exact = self.alg.exact
        object.__setattr__(self, "x0", coerce(self.x0, exact))
        object.__setattr__(self, "x1", coerce(self.x1, exact))
        object.__setattr__(self, "x2", coerce(self.x2, exact))
        object.__setattr__(self, "x3", coerce(self.x3, exact))

    def coords(self) -> tuple:
        return (self.x0, self.x1, self.x2, self.x3)

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return Quaternion(
            self.alg,
            self.x0 + other.x0,
            self.x1 + other.x1,
            self.x2 + other.x2,
            self.x3 + other.x3,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Quaternion(self.alg, -self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        _check_same_algebra(self, other)
        a, b = self.alg.a, self.alg.b
        p0, p1, p2, p3 = self.coords()
        q0, q1, q2, q3 = other.coords()
        return Quaternion(
            self.alg,
            p0 * q0 + a * p1 * q1 + b * p2 * q2 - a * b * p3 * q3,
            p0 * q1 + p1 * q0 - b * p2 * q3 + b * p3 * q2,
            p0 * q2 + p2 * q0 + a * p1 * q3 - a * p3 * q1,
            p0 * q3 + p3 * q0 + p1 * q2 - p2 * q1,
        )

    def __rmul__(self, other):
        # Only scalars reach here; they are central, so order is moot.
        if isinstance(other, (int, float, Fraction)):
            return self * other
        return NotImplemented

    def _coerce_operand(self, other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, float, Fraction)):
            return self.alg.scalar(other)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.alg, self.x0, -self.x1, -self.x2, -self.x3)

    def reduced_trace(self) -> Scalar:
        return 2 * self.x0

    def reduced_norm(self) -> Scalar:
        a, b = self.alg.a, self.alg.b
        return (
            self.x0 * self.x0
            - a * self.x1 * self.x1
            - b * self.x2 * self.x2
            + a * b * self.x3 * self.x3
        )

    def reduced_invariants(self) -> tuple:
        """(t, n) with q*q - t*q + n = 0."""
        return (self.reduced_trace(), self.reduced_norm())

    def norm(self) -> float:
        """Positive-definite magnitude sqrt(reduced norm), always a float."""
        return math.sqrt(float(self.reduced_norm()))

    def is_zero(self, tol: Tolerance = DEFAULT_TOL, scale=1.0) -> bool:
        return all(tol.is_zero(c, scale) for c in self.coords())

    def inverse(self, tol: Tolerance = DEFAULT_TOL) -> "Quaternion":
        """conjugate(q) / nrd(q); fails on zero or (approximately) tiny norm.

        The norm form is a sum of positive terms for a, b < 0, so the
        approximate-mode guard is an absolute floor: coordinates at or
        below the absolute tolerance count as zero.
        """
        nrd = self.reduced_norm()
        if nrd == 0:
            raise ZeroDivisionError("division by zero quaternion")
        if not self.alg.exact and float(nrd) <= tol.abs * tol.abs:
            raise ZeroDivisionError("ill-conditioned inversion: norm below tolerance")
        c = self.conjugate()
        return Quaternion(self.alg, c.x0 / nrd, c.x1 / nrd, c.x2 / nrd, c.x3 / nrd)

    def split(self) -> tuple:
        """Decompose q = u + j*v with u, v in F(i); returns (u, v)."""
        return (ExtElem(self.alg, self.x0, self.x1), ExtElem(self.alg, self.x2, -self.x3))

    def approx_eq(self, other, tol: Tolerance = DEFAULT_TOL, scale=1.0) -> bool:
        _check_same_algebra(self, other)
        return all(
            tol.close(x, y, scale) for x, y in zip(self.coords(), other.coords())
        )

    def __repr__(self):
        return f"Quaternion({self.x0}, {self.x1}, {self.x2}, {self.x3})"


def unsplit(u: "ExtElem", v: "ExtElem") -> Quaternion:
    """Inverse of :meth:`Quaternion.split`: rebuild u + j*v."""
    _check_same_algebra(u, v)
    return Quaternion(u.alg, u.re, u.im, v.re, -v.im)


@dataclass(frozen=True)
class ExtElem:
    """Element re + im*i of the quadratic extension F(i), i*i = a."""

    alg: AlgebraParams
    re: Scalar
    im: Scalar

    def __post_init__(self):
        exact = self.alg.exact
        object.__setattr__(self, "re", coerce(self.re, exact))
        object.__setattr__(self, "im", coerce(self.im, exact))

    def __add__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtElem(self.alg, self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtElem(self.alg, self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ExtElem(self.alg, -self.re, -self.im)

    def __mul__(self, other):
        other = self._coerce_operand(other)
        if other is NotImplemented:
            return NotImplemented
        _check_same_algebra(self, other)
        a = self.alg.a
        return ExtElem(
            self.alg,
            self.re * other.re + a * self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return ExtElem(self.alg, self.re / other, self.im / other)
        if isinstance(other, ExtElem):
            return self * other.inverse()
        return NotImplemented

    def _coerce_operand(self, other):
        if isinstance(other, ExtElem):
            return other
        if isinstance(other, (int, float, Fraction)):
            return ExtElem(self.alg, other, 0)
        return NotImplemented

    def conj(self) -> "ExtElem":
        """Field automorphism re + im*i -> re - im*i."""
        return ExtElem(self.alg, self.re, -self.im)

    def field_norm(self) -> Scalar:
        """re^2 - a*im^2, positive definite since a < 0."""
        return self.re * self.re - self.alg.a * self.im * self.im

    def magnitude(self) -> float:
        return math.sqrt(float(self.field_norm()))

    def inverse(self) -> "ExtElem":
        nrm = self.field_norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero extension-field element")
        return ExtElem(self.alg, self.re / nrm, -self.im / nrm)

    def to_quaternion(self) -> Quaternion:
        return Quaternion(self.alg, self.re, self.im, 0, 0)

    def __repr__(self):
        return f"ExtElem({self.re}, {self.im})"
