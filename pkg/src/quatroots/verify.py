"""Self-contained randomized property suites behind the `verify` command.

Each suite draws its own RNG from the master seed, runs a batch of
randomized checks of the algebraic identities the package is built on,
and returns a list of failure descriptions (empty = pass).  The point
is single-binary reproducibility: `verify --seed N` re-runs the same
checks with no test runner installed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgebraParams, unsplit
from .companion import (
    ExtMatrix,
    QuatMatrix,
    char_poly,
    companion_matrix,
    companion_polynomial,
    embed,
    vector_embed,
    vector_unembed,
)
from .eigen import (
    is_right_eigenvalue,
    left_companion_eigenvector,
    right_eigenvector,
    root_from_right_pair,
)
from .polynomials import (
    CentralPoly,
    StandardPoly,
    evaluate_central,
    from_left_factors,
    monic_normalize,
    power_remainders,
    reduce_mod_central_quadratic,
    reduction_quotient,
)
from .recovery import (
    KIND_INCONSISTENT,
    KIND_SPHERICAL,
    class_representative,
    solve,
)
from .rootfind import ConjClass, cluster_classes, complex_roots
from .scalars import Tolerance


def _rand_fraction(rng, span=5):
    return Fraction(rng.randint(-span, span), rng.choice((1, 2, 3)))


def _rand_quat(rng, alg, span=5):
    if alg.exact:
        return alg.quat(*(_rand_fraction(rng, span) for _ in range(4)))
    return alg.quat(*(rng.uniform(-span, span) for _ in range(4)))


def _rand_nonzero_quat(rng, alg, span=5):
    while True:
        q = _rand_quat(rng, alg, span)
        if q.reduced_norm() != 0 and q.norm() > 0.05:
            return q


def _rand_poly(rng, alg, degree, span=3):
    return StandardPoly(alg, tuple(_rand_quat(rng, alg, span) for _ in range(degree)))


def _rand_matrix(rng, alg, n, span=2):
    return QuatMatrix(
        alg,
        tuple(tuple(_rand_quat(rng, alg, span) for _ in range(n)) for _ in range(n)),
    )


def _quat_close(p, q, scale=1.0, rel=1e-9):
    return all(abs(float(x) - float(y)) <= rel * scale + 1e-12 for x, y in zip(p.coords(), q.coords()))


def suite_algebra(seed: int) -> list:
    failures = []
    rng = random.Random(seed)
    algebras = [
        AlgebraParams(Fraction(-1), Fraction(-1)),
        AlgebraParams(Fraction(-2), Fraction(-3)),
        AlgebraParams(-1.0, -1.0),
        AlgebraParams(-2.0, -5.0),
    ]
    for alg in algebras:
        exact = alg.exact
        for _ in range(25):
            p = _rand_quat(rng, alg)
            q = _rand_quat(rng, alg)
            r = _rand_quat(rng, alg)
            scale = max(1.0, p.norm(), q.norm(), r.norm()) ** 3
            if exact:
                if (p * q) * r != p * (q * r):
                    failures.append(f"associativity fails for {p}, {q}, {r}")
                if p * (q + r) != p * q + p * r:
                    failures.append(f"distributivity fails for {p}, {q}, {r}")
                if (p * q).conjugate() != q.conjugate() * p.conjugate():
                    failures.append(f"conjugation anti-automorphism fails for {p}, {q}")
                if (p * q).reduced_norm() != p.reduced_norm() * q.reduced_norm():
                    failures.append(f"norm multiplicativity fails for {p}, {q}")
                t, n = p.reduced_invariants()
                if p * p - t * p + alg.scalar(n) != alg.zero():
                    failures.append(f"characteristic identity fails for {p}")
            else:
                if not _quat_close((p * q) * r, p * (q * r), scale):
                    failures.append(f"associativity fails for {p}, {q}, {r}")
                if not _quat_close((p * q).conjugate(), q.conjugate() * p.conjugate(), scale):
                    failures.append(f"conjugation anti-automorphism fails for {p}, {q}")
                t, n = p.reduced_invariants()
                if not _quat_close(p * p - t * p + alg.scalar(n), alg.zero(), scale):
                    failures.append(f"characteristic identity fails for {p}")
            u, v = p.split()
            if unsplit(u, v) != p:
                failures.append(f"split/unsplit round trip fails for {p}")
            nz = _rand_nonzero_quat(rng, alg)
            prod = nz * nz.inverse()
            if exact:
                if prod != alg.one():
                    failures.append(f"inverse fails for {nz}")
            elif not _quat_close(prod, alg.one(), max(1.0, nz.norm())):
                failures.append(f"inverse fails for {nz}")
    return failures


def suite_polynomials(seed: int) -> list:
    failures = []
    rng = random.Random(seed)
    exact_alg = AlgebraParams(Fraction(-1), Fraction(-1))
    float_alg = AlgebraParams(-1.0, -1.0)

    # Division identity, checked coefficient-wise in exact arithmetic.
    for _ in range(20):
        degree = rng.randint(1, 5)
        phi = _rand_poly(rng, exact_alg, degree)
        t = _rand_fraction(rng)
        n = _rand_fraction(rng)
        pair = reduce_mod_central_quadratic(phi, t, n)
        quot = reduction_quotient(phi, t, n)
        rebuilt = [exact_alg.zero() for _ in range(degree + 1)]
        for j, d in enumerate(quot):
            rebuilt[j] = rebuilt[j] + d * n
            rebuilt[j + 1] = rebuilt[j + 1] + d * (-t)
            rebuilt[j + 2] = rebuilt[j + 2] + d
        rebuilt[0] = rebuilt[0] + pair.psi0
        rebuilt[1] = rebuilt[1] + pair.psi1
        expect = list(phi.coeffs) + [exact_alg.one()]
        if rebuilt != expect:
            failures.append(f"division identity fails for degree {degree}, t={t}, n={n}")

    # Cubic power reduction matches the closed form (t^2 - n, -t*n).
    for _ in range(20):
        t = _rand_fraction(rng)
        n = _rand_fraction(rng)
        p, q = power_remainders(t, n, 3)
        if p[3] != t * t - n or q[3] != -t * n:
            failures.append(f"cubic power remainder wrong for t={t}, n={n}")

    # Evaluation compatibility: phi(lam) = psi1*lam + psi0 at (t, n) of lam.
    for alg in (exact_alg, float_alg):
        for _ in range(20):
            phi = _rand_poly(rng, alg, rng.randint(1, 5))
            lam = _rand_quat(rng, alg)
            t, n = lam.reduced_invariants()
            pair = reduce_mod_central_quadratic(phi, t, n)
            direct = phi.evaluate(lam)
            reduced = pair.psi1 * lam + pair.psi0
            if alg.exact:
                if direct != reduced:
                    failures.append(f"evaluation compatibility fails for {lam}")
            elif not _quat_close(direct, reduced, phi.evaluation_scale(lam.norm())):
                failures.append(f"evaluation compatibility fails for {lam}")

    # Rightmost factor root annihilates the product; normalization keeps it.
    for alg in (exact_alg, float_alg):
        for _ in range(20):
            count = rng.randint(1, 4)
            roots = [_rand_quat(rng, alg, 3) for _ in range(count)]
            phi = from_left_factors(roots)
            value = phi.evaluate(roots[0])
            scale = phi.evaluation_scale(roots[0].norm())
            if alg.exact:
                if value != alg.zero():
                    failures.append(f"rightmost root not annihilated: {roots}")
            elif value.norm() > 1e-9 * scale:
                failures.append(f"rightmost root not annihilated: {roots}")
            lead = _rand_nonzero_quat(rng, alg)
            scaled = [lead * c for c in phi.coeffs] + [lead]
            again = monic_normalize(scaled)
            value = again.evaluate(roots[0])
            if alg.exact:
                if value != alg.zero():
                    failures.append("monic normalization loses the root")
            elif value.norm() > 1e-8 * scale * max(1.0, lead.norm()):
                failures.append("monic normalization loses the root")
    return failures


def _cofactor_char_poly(mat: ExtMatrix):
    """det(zI - M) by Laplace expansion over polynomials with ExtElem
    coefficients; independent of Faddeev-LeVerrier."""
    alg = mat.alg
    m = mat.m
    zero, one = alg.ext_zero(), alg.ext_one()

    def poly_add(f, g):
        size = max(len(f), len(g))
        f = list(f) + [zero] * (size - len(f))
        g = list(g) + [zero] * (size - len(g))
        return [x + y for x, y in zip(f, g)]

    def poly_mul(f, g):
        out = [zero] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            for j, y in enumerate(g):
                out[i + j] = out[i + j] + x * y
        return out

    entries = [
        [
            ([-mat.entries[r][c], one] if r == c else [-mat.entries[r][c]])
            for c in range(m)
        ]
        for r in range(m)
    ]

    def det(rows, cols):
        if len(cols) == 1:
            return entries[rows[0]][cols[0]]
        total = [zero]
        for idx, col in enumerate(cols):
            minor = det(rows[1:], cols[:idx] + cols[idx + 1 :])
            term = poly_mul(entries[rows[0]][col], minor)
            if idx % 2:
                term = [-x for x in term]
            total = poly_add(total, term)
        return total

    return det(list(range(m)), list(range(m)))


def suite_companion(seed: int) -> list:
    failures = []
    rng = random.Random(seed)
    exact_alg = AlgebraParams(Fraction(-1), Fraction(-1))
    other = AlgebraParams(Fraction(-2), Fraction(-3))

    for alg in (exact_alg, other):
        for _ in range(8):
            n = rng.randint(1, 3)
            amat = _rand_matrix(rng, alg, n)
            bmat = _rand_matrix(rng, alg, n)
            if embed(amat * bmat).entries != (embed(amat) * embed(bmat)).entries:
                failures.append(f"embedding not multiplicative at n={n}")
            if embed(QuatMatrix.identity(alg, n)).entries != ExtMatrix.identity(alg, 2 * n).entries:
                failures.append(f"embedding not unital at n={n}")
            vec = tuple(_rand_quat(rng, alg) for _ in range(n))
            if vector_embed(amat.apply(vec)) != embed(amat).apply(vector_embed(vec)):
                failures.append(f"commutative diagram fails at n={n}")
            mu = alg.ext(_rand_fraction(rng), _rand_fraction(rng))
            scaled = tuple(q * mu.to_quaternion() for q in vec)
            if vector_embed(scaled) != tuple(w * mu for w in vector_embed(vec)):
                failures.append(f"subfield semilinearity fails at n={n}")
            if vector_unembed(vector_embed(vec)) != vec:
                failures.append("vector embedding not invertible")

    # Faddeev-LeVerrier against cofactor expansion on embedded matrices
    # (the operation's domain: their coefficients are central).
    for alg in (exact_alg, AlgebraParams(-1.0, -2.0)):
        for _ in range(6):
            n = rng.randint(1, 2)
            mat = embed(_rand_matrix(rng, alg, n))
            expect = _cofactor_char_poly(mat)
            got = char_poly(mat)
            for k, coeff in enumerate(expect):
                if alg.exact:
                    if coeff.im != 0 or got.coeffs[k] != coeff.re:
                        failures.append(f"char poly disagrees with cofactor at n={n}")
                        break
                else:
                    scale = max(1.0, max(abs(c) for c in got.coeffs))
                    if abs(float(got.coeffs[k]) - float(coeff.re)) > 1e-8 * scale or abs(
                        float(coeff.im)
                    ) > 1e-8 * scale:
                        failures.append(f"char poly disagrees with cofactor at n={n}")
                        break

    # Companion polynomial: degree, centrality, subleading coefficient.
    for _ in range(10):
        degree = rng.randint(1, 4)
        phi = _rand_poly(rng, exact_alg, degree)
        poly = companion_polynomial(phi)
        if poly.degree != 2 * degree or poly.leading != 1:
            failures.append(f"companion polynomial degree wrong for degree {degree}")
        if poly.coeffs[2 * degree - 1] != phi.coeffs[degree - 1].reduced_trace():
            failures.append("companion subleading coefficient != reduced trace")
    return failures


def sample_distinct_classes(rng, count) -> list:
    """Random (t, n, mult, central) classes, pairwise at least 0.05 apart.

    Closer classes are numerically indistinguishable from higher
    multiplicities once squared into a polynomial, so unconditioned
    samples would test the generator's luck rather than the solver.
    """
    out = []
    while len(out) < count:
        if rng.random() < 0.3:
            lam = rng.uniform(-3, 3)
            cand = (2 * lam, lam * lam, rng.randint(1, 2), True)
        else:
            re = rng.uniform(-3, 3)
            im = rng.uniform(0.2, 3)
            cand = (2 * re, re * re + im * im, rng.randint(1, 2), False)
        if all(
            abs(cand[0] - t) + abs(cand[1] - n) >= 0.05 for t, n, _, _ in out
        ):
            out.append(cand)
    return out


def suite_rootfind(seed: int) -> list:
    failures = []
    rng = random.Random(seed)
    for _ in range(15):
        # Build a polynomial from known classes, then recover them.
        pieces = []
        target = sample_distinct_classes(rng, rng.randint(1, 3))
        for t, n, mult, central in target:
            for _ in range(mult):
                if central:
                    pieces.append(CentralPoly((-t / 2, 1.0)))
                else:
                    pieces.append(CentralPoly((n, -t, 1.0)))
        poly = CentralPoly((1.0,))
        for piece in pieces:
            poly = poly * piece
        try:
            roots = complex_roots(poly)
        except Exception as exc:  # noqa: BLE001 - report, do not crash verify
            failures.append(f"root finder failed on {poly.coeffs}: {exc}")
            continue
        if sum(r.multiplicity for r in roots) != poly.degree:
            failures.append(f"multiplicities do not sum to degree for {poly.coeffs}")
        rebuilt = CentralPoly((1.0,))
        for root in roots:
            if root.im == 0.0:
                for _ in range(root.multiplicity):
                    rebuilt = rebuilt * CentralPoly((-root.re, 1.0))
            elif root.im > 0.0:
                for _ in range(root.multiplicity):
                    rebuilt = rebuilt * CentralPoly(
                        (root.re**2 + root.im**2, -2 * root.re, 1.0)
                    )
        # Close multiple roots amplify coefficient error well beyond the
        # base comparison tolerance; 1e-7 covers the worst clustered case.
        if not rebuilt.approx_eq(poly, Tolerance(rel=1e-7, abs=1e-12)):
            failures.append(f"reconstruction fails for {poly.coeffs}")
        classes = cluster_classes(roots)
        for t, n, mult, central in target:
            scale = max(1.0, abs(t), abs(n))
            hit = [
                c
                for c in classes
                if abs(c.t - t) <= 1e-6 * scale and abs(c.n - n) <= 1e-6 * scale
            ]
            if len(hit) != 1 or hit[0].multiplicity < mult or hit[0].central != central:
                failures.append(f"class ({t}, {n}) not recovered from {poly.coeffs}")
    return failures


def suite_recovery(seed: int) -> list:
    failures = []
    rng = random.Random(seed)
    alg = AlgebraParams(-1.0, -1.0)

    # Spherical detection on z^2 + 1.
    phi = StandardPoly(alg, (alg.one(), alg.zero()))
    result = solve(phi)
    if len(result.reports) != 1 or result.reports[0].kind != KIND_SPHERICAL:
        failures.append("z^2 + 1 does not yield a single spherical class")
    else:
        rep = result.reports[0].representative
        for _ in range(10):
            q = _rand_nonzero_quat(rng, alg)
            conj = q * rep * q.inverse()
            if phi.evaluate(conj).norm() > 1e-9 * phi.evaluation_scale(conj.norm()):
                failures.append("conjugate of spherical representative not a root")
                break

    # Factor-built polynomials: the rightmost root's class must appear
    # and classify consistently.
    for _ in range(20):
        count = rng.randint(1, 4)
        roots = [_rand_quat(rng, alg, 3) for _ in range(count)]
        phi = from_left_factors(roots)
        try:
            result = solve(phi)
        except Exception as exc:  # noqa: BLE001
            failures.append(f"solve failed on factors {roots}: {exc}")
            continue
        t, n = roots[0].reduced_invariants()
        scale = max(1.0, abs(t), abs(n))
        hits = [
            r
            for r in result.reports
            if abs(r.conj_class.t - t) <= 1e-6 * scale
            and abs(r.conj_class.n - n) <= 1e-6 * scale
        ]
        if not hits:
            failures.append(f"class of rightmost root missing for {roots}")
        elif all(r.kind == KIND_INCONSISTENT for r in hits):
            failures.append(f"class of rightmost root inconsistent for {roots}")
        for report in result.reports:
            if report.root is not None:
                value = evaluate_central(result.companion, report.root)
                bound = 1e-6 * result.companion.evaluation_scale(report.root.norm())
                if value.norm() > bound:
                    failures.append(f"recovered root not on companion polynomial: {roots}")

    # Representatives hit their invariants.
    for _ in range(10):
        t = rng.uniform(-4, 4)
        n = t * t / 4 + rng.uniform(0, 4)
        for a in (-1.0, -2.0, -4.0):
            rep = class_representative(
                ConjClass(t, n, 1, False), AlgebraParams(a, -1.0)
            )
            tt, nn = rep.reduced_invariants()
            if abs(tt - t) > 1e-9 * max(1, abs(t)) or abs(nn - n) > 1e-9 * max(1, abs(n)):
                failures.append(f"representative invariants wrong for ({t}, {n}, a={a})")
    return failures


def suite_eigen(seed: int) -> list:
    failures = []
    rng = random.Random(seed)
    alg = AlgebraParams(-1.0, -1.0)

    for _ in range(15):
        count = rng.randint(1, 3)
        roots = [_rand_quat(rng, alg, 2) for _ in range(count)]
        phi = from_left_factors(roots)
        lam = roots[0]
        try:
            pair = left_companion_eigenvector(phi, lam)
        except ValueError:
            failures.append(f"factor root rejected as left eigenvalue: {roots}")
            continue
        cmat = companion_matrix(phi)
        applied = cmat.apply(pair.vector)
        scale = phi.evaluation_scale(lam.norm())
        if any(
            (applied[r] - lam * pair.vector[r]).norm() > 1e-8 * scale
            for r in range(count)
        ):
            failures.append(f"left eigen relation fails for {roots}")
        # The same vector certifies a right pair (entries commute with lam).
        if any(
            (lam * v - v * lam).norm() > 1e-9 * scale for v in pair.vector
        ):
            failures.append(f"powers of the root do not commute with it: {roots}")
        if not is_right_eigenvalue(cmat, lam):
            failures.append(f"left eigenvalue not right eigenvalue: {roots}")
        q = _rand_nonzero_quat(rng, alg, 2)
        if not is_right_eigenvalue(cmat, q * lam * q.inverse()):
            failures.append(f"right eigenvalues not conjugation invariant: {roots}")
        # A generic non-root must be rejected.
        probe = _rand_quat(rng, alg, 2)
        if phi.evaluate(probe).norm() > 1e-3 * scale:
            try:
                left_companion_eigenvector(phi, probe)
                failures.append(f"non-root accepted as left eigenvalue: {probe}")
            except ValueError:
                pass

    # Right eigenvector extraction at class representatives.
    for _ in range(10):
        count = rng.randint(1, 3)
        roots = [_rand_quat(rng, alg, 2) for _ in range(count)]
        phi = from_left_factors(roots)
        cmat = companion_matrix(phi)
        result = solve(phi)
        for report in result.reports:
            if report.kind == KIND_INCONSISTENT:
                continue
            rep = class_representative(report.conj_class, alg)
            lam_ext = alg.ext(rep.x0, rep.x1)
            try:
                pair = right_eigenvector(cmat, lam_ext)
            except ValueError as exc:
                failures.append(f"eigenvector extraction failed for {roots}: {exc}")
                continue
            recovered = root_from_right_pair(pair)
            value = phi.evaluate(recovered)
            if value.norm() > 1e-6 * phi.evaluation_scale(recovered.norm()):
                failures.append(f"conjugated eigenvalue is not a root for {roots}")
    return failures


SUITES = (
    ("algebra", suite_algebra),
    ("polynomials", suite_polynomials),
    ("companion", suite_companion),
    ("rootfind", suite_rootfind),
    ("recovery", suite_recovery),
    ("eigen", suite_eigen),
)


def run_all(seed: int = 0) -> dict:
    """Run every suite; returns {name: [failure, ...]}."""
    results = {}
    for index, (name, fn) in enumerate(SUITES):
        results[name] = fn(seed + index)
    return results
