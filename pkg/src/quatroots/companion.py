"""Companion matrices, the doubling embedding, and characteristic
polynomials.

A quaternionic matrix A splits entrywise as A = A_u + j*A_v with A_u,
A_v over the quadratic subfield F(i).  The embedding doubles the size:

    A  |->  [[A_u, b*conj(A_v)],
             [A_v,   conj(A_u)]]

which is a unital ring homomorphism into the 2n x 2n matrices over
F(i); column vectors embed by stacking the u-parts of all entries above
the v-parts.  The characteristic polynomial of the embedded matrix has
coefficients in the ground field F; it is computed here with the
Faddeev-LeVerrier trace recursion, which needs only ring operations and
exact division by the integers 1..2n and therefore runs identically on
rational and floating-point scalars.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraParams, unsplit
from .polynomials import CentralPoly, StandardPoly
from .scalars import DEFAULT_TOL, Tolerance


@dataclass(frozen=True)
class QuatMatrix:
    """Square matrix over the quaternion algebra ``alg``."""

    alg: AlgebraParams
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("matrix must be square and nonempty")
        for row in rows:
            for q in row:
                if q.alg != self.alg:
                    raise ValueError("entry from a different algebra")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, alg: AlgebraParams, n: int) -> "QuatMatrix":
        one, zero = alg.one(), alg.zero()
        return cls(
            alg,
            tuple(
                tuple(one if r == c else zero for c in range(n)) for r in range(n)
            ),
        )

    def __mul__(self, other):
        if not isinstance(other, QuatMatrix):
            return NotImplemented
        if self.alg != other.alg or self.n != other.n:
            raise ValueError("incompatible matrices")
        n = self.n
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                acc = self.alg.zero()
                for m in range(n):
                    acc = acc + self.entries[r][m] * other.entries[m][c]
                row.append(acc)
            rows.append(tuple(row))
        return QuatMatrix(self.alg, tuple(rows))

    def apply(self, vec) -> tuple:
        """Matrix times column vector of quaternions (entries act on the left)."""
        vec = tuple(vec)
        if len(vec) != self.n:
            raise ValueError("vector length mismatch")
        out = []
        for r in range(self.n):
            acc = self.alg.zero()
            for c in range(self.n):
                acc = acc + self.entries[r][c] * vec[c]
            out.append(acc)
        return tuple(out)

    def max_entry_norm(self) -> float:
        return max(q.norm() for row in self.entries for q in row)


@dataclass(frozen=True)
class ExtMatrix:
    """Square matrix over the quadratic extension F(i)."""

    alg: AlgebraParams
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        m = len(rows)
        if m == 0 or any(len(row) != m for row in rows):
            raise ValueError("matrix must be square and nonempty")

    @property
    def m(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, alg: AlgebraParams, m: int) -> "ExtMatrix":
        one, zero = alg.ext_one(), alg.ext_zero()
        return cls(
            alg,
            tuple(
                tuple(one if r == c else zero for c in range(m)) for r in range(m)
            ),
        )

    def __mul__(self, other):
        if not isinstance(other, ExtMatrix):
            return NotImplemented
        if self.alg != other.alg or self.m != other.m:
            raise ValueError("incompatible matrices")
        m = self.m
        rows = []
        for r in range(m):
            row = []
            for c in range(m):
                acc = self.alg.ext_zero()
                for k in range(m):
                    acc = acc + self.entries[r][k] * other.entries[k][c]
                row.append(acc)
            rows.append(tuple(row))
        return ExtMatrix(self.alg, tuple(rows))

    def apply(self, vec) -> tuple:
        vec = tuple(vec)
        if len(vec) != self.m:
            raise ValueError("vector length mismatch")
        out = []
        for r in range(self.m):
            acc = self.alg.ext_zero()
            for c in range(self.m):
                acc = acc + self.entries[r][c] * vec[c]
            out.append(acc)
        return tuple(out)

    def max_entry_magnitude(self) -> float:
        return max(e.magnitude() for row in self.entries for e in row)


def companion_matrix(phi: StandardPoly) -> QuatMatrix:
    """Superdiagonal ones, last row (-c_0, ..., -c_{n-1}), zeros elsewhere."""
    alg = phi.alg
    n = phi.degree
    one, zero = alg.one(), alg.zero()
    rows = []
    for r in range(n - 1):
        rows.append(tuple(one if c == r + 1 else zero for c in range(n)))
    rows.append(tuple(-c for c in phi.coeffs))
    return QuatMatrix(alg, tuple(rows))


def embed(mat: QuatMatrix) -> ExtMatrix:
    """Double the matrix over F(i) via the entrywise split A = A_u + j*A_v."""
    alg = mat.alg
    n = mat.n
    splits = [[q.split() for q in row] for row in mat.entries]
    b = alg.b
    top = []
    bottom = []
    for r in range(n):
        top.append(
            tuple(splits[r][c][0] for c in range(n))
            + tuple(b * splits[r][c][1].conj() for c in range(n))
        )
        bottom.append(
            tuple(splits[r][c][1] for c in range(n))
            + tuple(splits[r][c][0].conj() for c in range(n))
        )
    return ExtMatrix(alg, tuple(top) + tuple(bottom))


def vector_embed(vec) -> tuple:
    """Stack the u-parts of all entries above the v-parts (length 2n)."""
    vec = tuple(vec)
    if not vec:
        raise ValueError("empty vector")
    splits = [q.split() for q in vec]
    return tuple(s[0] for s in splits) + tuple(s[1] for s in splits)


def vector_unembed(wvec) -> tuple:
    """Inverse of :func:`vector_embed`."""
    wvec = tuple(wvec)
    if len(wvec) % 2 != 0 or not wvec:
        raise ValueError("embedded vector must have even positive length")
    n = len(wvec) // 2
    return tuple(unsplit(wvec[k], wvec[n + k]) for k in range(n))


def _balance(grid, m):
    """Diagonal similarity scaling by powers of two, in place.

    Equilibrates row and column sums so the recursion in
    :func:`char_poly` does not amplify rounding error through the large
    dynamic range of companion matrices (superdiagonal ones against
    coefficient-sized last rows).  Scale factors are powers of two, so
    the transformation is exact in both scalar realizations and the
    characteristic polynomial is unchanged.
    """
    for _ in range(8):
        converged = True
        for i in range(m):
            r = sum(
                abs(float(grid[i][j][0])) + abs(float(grid[i][j][1]))
                for j in range(m)
                if j != i
            )
            c = sum(
                abs(float(grid[j][i][0])) + abs(float(grid[j][i][1]))
                for j in range(m)
                if j != i
            )
            if r == 0.0 or c == 0.0:
                continue
            f = 1
            s = c + r
            while c < r / 2.0:
                f *= 2
                c *= 4.0
            while c >= r * 2.0:
                f //= 2 if f > 1 else 1
                if f == 0:
                    f = Fraction(1, 2) if isinstance(grid[0][0][0], Fraction) else 0.5
                # fall back to fractional factors below
                break
            # recompute exactly with a single factor f = 2**k
            r0 = sum(
                abs(float(grid[i][j][0])) + abs(float(grid[i][j][1]))
                for j in range(m)
                if j != i
            )
            c0 = sum(
                abs(float(grid[j][i][0])) + abs(float(grid[j][i][1]))
                for j in range(m)
                if j != i
            )
            k = 0
            while c0 * (2.0 ** (k + 1)) < r0 / (2.0 ** (k + 1)):
                k += 1
            while c0 * (2.0**k) > r0 * (2.0 ** (2 - k)) and k > -64:
                k -= 1
            if k == 0:
                continue
            factor = 2.0**k
            if (c0 * factor + r0 / factor) >= 0.95 * s:
                continue
            inv = 1.0 / factor
            for j in range(m):
                if j != i:
                    grid[i][j] = (grid[i][j][0] * inv, grid[i][j][1] * inv)
                    grid[j][i] = (grid[j][i][0] * factor, grid[j][i][1] * factor)
            converged = False
        if converged:
            break


def char_poly(mat: ExtMatrix, tol: Tolerance = DEFAULT_TOL) -> CentralPoly:
    """Monic characteristic polynomial det(zI - M), coefficients in F.

    For the even sizes produced by :func:`embed` this is exactly
    det(M - zI).  The matrix is first balanced by a diagonal similarity
    (exact, char-poly-preserving); the Faddeev-LeVerrier recursion then
    needs one matrix product per step plus exact division by the step
    index, and runs on plain (re, im) pairs for speed.  Every
    coefficient must come out with vanishing i-part (exactly in
    rational mode, within tolerance otherwise): a nonzero i-part
    signals a bug or catastrophic conditioning, not a quantity to be
    rounded away.
    """
    alg = mat.alg
    a = alg.a
    m = mat.m
    zero, one = 0 * a, 1 + 0 * a
    grid = [[(e.re, e.im) for e in row] for row in mat.entries]
    _balance(grid, m)

    # det(zI - M) = z^m + c_{m-1} z^{m-1} + ... + c_0 via
    #   N_1 = I;  c_{m-k} = -tr(M N_k)/k;  N_{k+1} = M N_k + c_{m-k} I.
    co_re = [zero] * m
    co_im = [zero] * m
    acc = [[(one if r == c else zero, zero) for c in range(m)] for r in range(m)]
    for k in range(1, m + 1):
        prod = []
        for r in range(m):
            gr = grid[r]
            row = []
            for c in range(m):
                sre = zero
                sim = zero
                for t in range(m):
                    xre, xim = gr[t]
                    yre, yim = acc[t][c]
                    sre += xre * yre + a * xim * yim
                    sim += xre * yim + xim * yre
                row.append((sre, sim))
            prod.append(row)
        tr_re = zero
        tr_im = zero
        for r in range(m):
            tr_re += prod[r][r][0]
            tr_im += prod[r][r][1]
        cre = -(tr_re / k) + 0  # + 0 normalizes IEEE negative zero
        co_re[m - k] = cre
        co_im[m - k] = -(tr_im / k) + 0
        if k < m:
            acc = [
                [
                    (prod[r][c][0] + (cre if r == c else zero), prod[r][c][1])
                    for c in range(m)
                ]
                for r in range(m)
            ]

    if alg.exact:
        if any(im != 0 for im in co_im):
            raise ValueError("non-central characteristic coefficients")
    else:
        scale = max(1.0, max(abs(c) for c in co_re))
        if any(not tol.is_zero(im, scale) for im in co_im):
            raise ValueError("non-central characteristic coefficients")

    return CentralPoly(tuple(co_re) + (one,))


def companion_polynomial(phi: StandardPoly, tol: Tolerance = DEFAULT_TOL) -> CentralPoly:
    """char_poly(embed(companion_matrix(phi))): monic of degree 2*deg(phi)."""
    return char_poly(embed(companion_matrix(phi)), tol)
