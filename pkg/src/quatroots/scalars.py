"""Ground-field scalars: exact rationals and machine floats.

Every algebraic object in this package is generic over two scalar
realizations: ``fractions.Fraction`` (exact) and ``float`` (approximate).
Plain ``int`` values count as exact and are promoted to ``Fraction``.
Approximate comparisons follow one package-wide policy,
``|x - y| <= rel * scale + abs``, with ``scale`` supplied by the caller
as the magnitude of the enclosing computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, float]


def is_exact(x) -> bool:
    """True for scalars of the exact-rational realization."""
    return isinstance(x, (Fraction, int))


def coerce(value, exact: bool) -> Scalar:
    """Bring a number into the requested realization.

    Floats are rejected in exact mode rather than converted: the binary
    expansion of a decimal literal is almost never the rational the user
    meant.
    """
    if exact:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"non-rational value in exact mode: {value!r}")
    return float(value)


@dataclass(frozen=True)
class Tolerance:
    """Comparison policy for approximate-real scalars.

    Exact scalars are always compared exactly, regardless of policy.
    """

    rel: float = 1e-10
    abs: float = 1e-12

    def close(self, x, y, scale=1.0) -> bool:
        if is_exact(x) and is_exact(y):
            return x == y
        return abs(x - y) <= self.rel * abs(scale) + self.abs

    def is_zero(self, x, scale=1.0) -> bool:
        return self.close(x, 0, scale)


DEFAULT_TOL = Tolerance()


def parse_scalar(value, exact: bool) -> Scalar:
    """Parse a JSON leaf (number or "p/q" string) into a scalar.

    Exact mode accepts integers and "p/q" / "p" strings; approximate mode
    additionally accepts floats.
    """
    if isinstance(value, str):
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed scalar literal {value!r}") from exc
        return frac if exact else float(frac)
    if isinstance(value, bool):
        raise ValueError(f"malformed scalar literal {value!r}")
    if isinstance(value, int):
        return Fraction(value) if exact else float(value)
    if isinstance(value, float):
        if exact:
            raise ValueError(
                f"decimal literal {value!r} not allowed in exact mode; use \"p/q\""
            )
        return value
    raise ValueError(f"malformed scalar literal {value!r}")


def format_scalar(x: Scalar):
    """JSON value for a scalar: "p/q" string if exact, number otherwise."""
    if isinstance(x, (Fraction, int)):
        return str(x)
    return x + 0.0  # normalize IEEE negative zero


def format_scalar_text(x: Scalar) -> str:
    """Human-readable rendering (12 significant digits for floats)."""
    if isinstance(x, (Fraction, int)):
        return str(x)
    return f"{x + 0.0:.12g}"
