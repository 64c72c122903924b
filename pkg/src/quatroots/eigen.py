"""Left and right eigenvalue operations for quaternionic matrices.

Right eigenvalues of a matrix are exactly the roots of the
characteristic polynomial of its doubled embedding, so membership
testing is a polynomial evaluation.  Eigenvector extraction asks for
the eigenvalue as an element of the fixed quadratic subfield F(i);
callers with a general quaternion first conjugate it into F(i) by
taking the representative of its conjugacy class.  The extracted vector
is one valid eigenvector, not a canonical one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ExtElem, Quaternion
from .companion import QuatMatrix, char_poly, embed, vector_unembed
from .polynomials import StandardPoly, evaluate_central
from .scalars import DEFAULT_TOL, Tolerance

LEFT = "left"
RIGHT = "right"

# Pivots below this fraction of the largest entry magnitude are treated
# as zero during elimination.
NULLSPACE_THRESHOLD = 1e-10
EIGENVALUE_TEST_FACTOR = 1e-8


@dataclass(frozen=True)
class EigenPair:
    value: Quaternion
    vector: tuple
    side: str


def is_right_eigenvalue(
    mat: QuatMatrix, lam: Quaternion, tol: Tolerance = DEFAULT_TOL
) -> bool:
    """Whether lam is a right eigenvalue: the embedded characteristic
    polynomial vanishes at lam (within an evaluation-scaled tolerance)."""
    poly = char_poly(embed(mat), tol)
    value = evaluate_central(poly, lam)
    bound = EIGENVALUE_TEST_FACTOR * poly.evaluation_scale(lam.norm())
    return value.norm() <= bound


def right_eigenvector(
    mat: QuatMatrix, lam: ExtElem, tol: Tolerance = DEFAULT_TOL
) -> EigenPair:
    """A vector v with mat*v = v*lam, for lam in the subfield F(i).

    Finds a null vector of (embed(mat) - lam*I) by Gaussian elimination
    over F(i) with partial pivoting by field norm, pulls it back through
    the vector embedding, and scales it so the first nonzero embedded
    coordinate is 1 (a subfield scaling, which preserves the eigenvalue).
    """
    if mat.alg != lam.alg:
        raise ValueError("eigenvalue from a different algebra")
    doubled = embed(mat)
    m = doubled.m
    rows = [list(row) for row in doubled.entries]
    for r in range(m):
        rows[r][r] = rows[r][r] - lam

    overall = max(max(e.magnitude() for e in row) for row in rows)
    threshold = NULLSPACE_THRESHOLD * max(overall, 1e-300)

    pivot_of_col = {}
    rank = 0
    for col in range(m):
        best = max(range(rank, m), key=lambda r: rows[r][col].field_norm())
        if rows[best][col].magnitude() <= threshold:
            continue
        rows[rank], rows[best] = rows[best], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [e * inv for e in rows[rank]]
        for r in range(m):
            if r != rank:
                factor = rows[r][col]
                if factor.field_norm() != 0:
                    rows[r] = [
                        rows[r][c] - factor * rows[rank][c] for c in range(m)
                    ]
        pivot_of_col[col] = rank
        rank += 1

    free_cols = [c for c in range(m) if c not in pivot_of_col]
    if not free_cols:
        raise ValueError("not an eigenvalue at working precision")

    free = free_cols[0]
    w = [mat.alg.ext_zero()] * m
    w[free] = mat.alg.ext_one()
    for col, r in pivot_of_col.items():
        w[col] = -rows[r][free]

    # Scale so the first nonzero coordinate is 1; the scalar lies in
    # F(i) and commutes with lam, so the eigen relation is untouched.
    w_scale = max(e.magnitude() for e in w)
    lead = next(e for e in w if e.magnitude() > 1e-12 * w_scale)
    inv = lead.inverse()
    w = [e * inv for e in w]

    vec = vector_unembed(w)
    value = lam.to_quaternion()
    residual = max((mat.apply(vec)[r] - vec[r] * value).norm() for r in range(mat.n))
    scale = max(1.0, mat.max_entry_norm()) * max(1.0, max(q.norm() for q in vec))
    if residual > 1e-6 * scale:
        raise ValueError("not an eigenvalue at working precision")
    return EigenPair(value, vec, RIGHT)


def left_companion_eigenvector(
    phi: StandardPoly, lam: Quaternion, tol: Tolerance = DEFAULT_TOL
) -> EigenPair:
    """The left eigenpair (lam, (1, lam, ..., lam^{n-1})) of the companion
    matrix, valid whenever lam is a root of phi."""
    value = phi.evaluate(lam)
    bound = EIGENVALUE_TEST_FACTOR * phi.evaluation_scale(lam.norm())
    if value.norm() > bound:
        raise ValueError("not a root of the polynomial at working precision")
    vec = [phi.alg.one()]
    for _ in range(phi.degree - 1):
        vec.append(vec[-1] * lam)
    return EigenPair(lam, tuple(vec), LEFT)


def root_from_right_pair(pair: EigenPair) -> Quaternion:
    """Conjugate the eigenvalue of a right eigenpair of a companion matrix
    by the vector's leading entry: v1 * lam * v1^{-1} is a root of phi."""
    if pair.side != RIGHT:
        raise ValueError("expected a right eigenpair")
    lead = pair.vector[0]
    scale = max(q.norm() for q in pair.vector)
    if lead.norm() <= 1e-12 * max(scale, 1e-300):
        raise ValueError("degenerate eigenvector leading entry")
    return lead * pair.value * lead.inverse()
