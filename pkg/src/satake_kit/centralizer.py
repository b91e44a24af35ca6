"""Regular sections of sl2/sl3 over the Cartan and their centralizer checks.

The section sends a Cartan point to its diagonal image plus the fixed
regular nilpotent (superdiagonal ones).  All identities are verified by
exact linear algebra over ``fractions.Fraction``; the scaling identity can
also be run once with a genuinely symbolic parameter through sympy.

The projection from the compact-side Cartan to the dual Cartan is sampled
through its image: every identity checked depends on the Cartan point only
through that image, which scales with homogeneity degree n_X/2.  The
domain-side coordinates are retained in the data model.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .realform import RealFormFamily
from .rootdata import pair, rho_check, weight

Matrix = tuple[tuple, ...]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def _inverse_det_one(g: Matrix) -> Matrix:
    """Inverse of a 2x2 or 3x3 matrix with determinant one, via the adjugate."""
    n = len(g)
    if n == 2:
        return ((g[1][1], -g[0][1]), (-g[1][0], g[0][0]))
    if n == 3:
        cof = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                rows = [r for r in range(3) if r != i]
                cols = [c for c in range(3) if c != j]
                minor = (
                    g[rows[0]][cols[0]] * g[rows[1]][cols[1]]
                    - g[rows[0]][cols[1]] * g[rows[1]][cols[0]]
                )
                cof[i][j] = (-1) ** (i + j) * minor
        return tuple(tuple(cof[j][i] for j in range(3)) for i in range(3))
    raise ValueError("only sizes 2 and 3 are supported")


def det(g: Matrix):
    n = len(g)
    if n == 2:
        return g[0][0] * g[1][1] - g[0][1] * g[1][0]
    if n == 3:
        return (
            g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
        )
    raise ValueError("only sizes 2 and 3 are supported")


@dataclass(frozen=True)
class TracelessMatrix:
    """Square matrix of size 2 or 3 with trace zero."""

    entries: Matrix

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n not in (2, 3) or any(len(row) != n for row in self.entries):
            raise ValueError("entries must form a 2x2 or 3x3 matrix")
        trace = sum(self.entries[i][i] for i in range(n))
        if trace != 0:
            raise ValueError("matrix must be traceless")

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CartanPoint:
    """Compact-side Cartan point together with its dual-Cartan image.

    ``image`` holds the projection value (one coordinate for sl2, two for
    sl3); ``t`` carries the domain-side coordinates for the record.
    """

    t: tuple
    image: tuple


def cartan_point(fam: RealFormFamily, image: Sequence, t: Sequence | None = None) -> CartanPoint:
    rank = fam.dual.rank
    image = tuple(image)
    if len(image) != rank:
        raise ValueError(f"image must have {rank} coordinate(s)")
    if t is None:
        t = (Fraction(0),) * fam.rank_t
    return CartanPoint(tuple(t), image)


def scale_point(fam: RealFormFamily, pt: CartanPoint, c) -> CartanPoint:
    """Scale the Cartan point by c; the image scales by c**(n_X/2).

    The projection is homogeneous of polynomial degree n_X/2 (its target
    coordinates sit in cohomological degree n_X while the domain coordinates
    sit in degree 2).
    """
    half = fam.n_x // 2
    return CartanPoint(tuple(c * x for x in pt.t), tuple(c**half * s for s in pt.image))


def e_section(fam: RealFormFamily, pt: CartanPoint) -> TracelessMatrix:
    """Diagonal embedding of the image plus the regular nilpotent."""
    size = fam.dual.rank + 1
    if len(pt.image) != fam.dual.rank:
        raise ValueError("point image has the wrong rank")
    if size == 2:
        (s,) = pt.image
        return TracelessMatrix(((s, 1), (0, -s)))
    s1, s2 = pt.image
    return TracelessMatrix(((s1, 1, 0), (0, s2, 1), (0, 0, -s1 - s2)))


def _traceless_basis(size: int) -> list[Matrix]:
    basis = []
    for i in range(size):
        for j in range(size):
            if i != j:
                basis.append(
                    tuple(
                        tuple(1 if (r, c) == (i, j) else 0 for c in range(size))
                        for r in range(size)
                    )
                )
    for i in range(size - 1):
        basis.append(
            tuple(
                tuple(
                    (1 if (r, c) == (i, i) else -1 if (r, c) == (i + 1, i + 1) else 0)
                    for c in range(size)
                )
                for r in range(size)
            )
        )
    return basis


def _traceless_coords(mat: Matrix) -> list:
    size = len(mat)
    coords = [mat[i][j] for i in range(size) for j in range(size) if i != j]
    partial = Fraction(0)
    for i in range(size - 1):
        partial += mat[i][i]
        coords.append(partial)
    return coords


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(map(Fraction, row)) for row in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(cols):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank


def _ad_matrix(x: TracelessMatrix) -> list[list[Fraction]]:
    basis = _traceless_basis(x.size)
    columns = []
    for y in basis:
        bracket = _mat_sub(_mat_mul(x.entries, y), _mat_mul(y, x.entries))
        columns.append(_traceless_coords(bracket))
    dim = len(basis)
    return [[Fraction(columns[j][i]) for j in range(dim)] for i in range(dim)]


def centralizer_dimension(x: TracelessMatrix) -> int:
    """Nullity of ad(x) acting on traceless matrices, by exact elimination."""
    ad = _ad_matrix(x)
    dim = len(ad)
    return dim - _rank(ad)


def ad_kernel_basis(x: TracelessMatrix) -> list[Matrix]:
    """Basis of the centralizer of x inside the traceless matrices."""
    ad = _ad_matrix(x)
    dim = len(ad)
    rows = [list(map(Fraction, row)) for row in ad]
    # Reduced row echelon form, tracking pivot columns.
    pivots = []
    pivot_row = 0
    for col in range(dim):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [x_ / piv for x_ in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    free = [c for c in range(dim) if c not in pivots]
    basis_mats = _traceless_basis(x.size)
    out = []
    for f_col in free:
        vec = [Fraction(0)] * dim
        vec[f_col] = Fraction(1)
        for row_idx, p_col in enumerate(pivots):
            vec[p_col] = -rows[row_idx][f_col]
        size = x.size
        acc = [[Fraction(0)] * size for _ in range(size)]
        for coeff, bmat in zip(vec, basis_mats):
            if coeff:
                for i in range(size):
                    for j in range(size):
                        acc[i][j] += coeff * bmat[i][j]
        out.append(tuple(tuple(row) for row in acc))
    return out


@dataclass(frozen=True)
class RegularityReport:
    family: dict
    samples: int
    failures: tuple[tuple, ...]

    @property
    def all_regular(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "samples": self.samples,
            "failures": [
                {"image": [str(c) for c in image], "dimension": dim}
                for image, dim in self.failures
            ],
        }


def regularity_scan(fam: RealFormFamily, samples: Sequence[CartanPoint]) -> RegularityReport:
    """Check that the section is regular (centralizer dimension = rank) at each sample."""
    if not samples:
        raise ValueError("regularity scan requires at least one sample point")
    rank = fam.dual.rank
    failures = []
    for pt in samples:
        dim = centralizer_dimension(e_section(fam, pt))
        if dim != rank:
            failures.append((pt.image, dim))
    return RegularityReport(
        family=fam.to_json(), samples=len(samples), failures=tuple(failures)
    )


def sample_points(fam: RealFormFamily, count: int, seed: int) -> list[CartanPoint]:
    """Deterministic rational sample points, including degenerate images.

    The first samples are the zero image (nilpotent section value) and, for
    sl3, images with repeated diagonal eigenvalues; the rest are seeded
    random rationals.
    """
    rank = fam.dual.rank
    rng = random.Random(seed)
    pts = [cartan_point(fam, (Fraction(0),) * rank)]
    if rank == 2:
        pts.append(cartan_point(fam, (Fraction(1), Fraction(1))))
        pts.append(cartan_point(fam, (Fraction(-2), Fraction(1))))  # eigenvalue tie with third
    else:
        pts.append(cartan_point(fam, (Fraction(1),)))
    while len(pts) < count:
        coords = tuple(
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rank)
        )
        pts.append(cartan_point(fam, coords))
    return pts[:count]


def cocharacter_matrix(fam: RealFormFamily, x):
    """Value at x of the cocharacter n_X * dual-rho-check, as a diagonal matrix.

    Exponents are n_X times the pairings of the defining-representation
    weight chain with the dual half-sum of positive coroots.
    """
    dual = fam.dual
    rank = dual.rank
    rc = rho_check(dual)
    exps = []
    current = weight(dual, *([1] + [0] * (rank - 1)))
    for step in range(rank + 1):
        val = fam.n_x * pair(current, rc)
        if val.denominator != 1:
            raise AssertionError("cocharacter exponents must be integers")
        exps.append(int(val))
        if step < rank:
            alpha_fw = dual.simple_root_weight_coords(step)
            current = weight(dual, *(c - a for c, a in zip(current.coords, alpha_fw)))
    size = rank + 1
    return tuple(
        tuple(x ** exps[i] if i == j else 0 for j in range(size)) for i in range(size)
    )


def gm_equivariance_check(fam: RealFormFamily, x, pt: CartanPoint) -> bool:
    """Scaling identity: Ad by the cocharacter at 1/x applied to the section
    at the x**-2-scaled point equals x**-n_X times the section at the point."""
    if x == 0:
        raise ValueError("the scaling parameter must be nonzero")
    inv = Fraction(1, 1) / x if isinstance(x, (int, Fraction)) else 1 / x
    torus = cocharacter_matrix(fam, inv)
    torus_inv = cocharacter_matrix(fam, x)
    scaled = e_section(fam, scale_point(fam, pt, inv * inv))
    lhs = _mat_mul(_mat_mul(torus, scaled.entries), torus_inv)
    rhs = _mat_scale(inv ** fam.n_x, e_section(fam, pt).entries)
    return _mat_equal(lhs, rhs)


def _mat_equal(a: Matrix, b: Matrix) -> bool:
    n = len(a)
    for i in range(n):
        for j in range(n):
            diff = a[i][j] - b[i][j]
            if hasattr(diff, "expand"):
                diff = diff.expand()
            if diff != 0:
                return False
    return True


def gm_equivariance_symbolic(fam: RealFormFamily) -> bool:
    """Run the scaling identity once with genuinely symbolic parameters."""
    import sympy

    x = sympy.Symbol("x", nonzero=True)
    image = sympy.symbols(f"s1:{fam.dual.rank + 1}")
    pt = CartanPoint((sympy.Symbol("t"),) * fam.rank_t, tuple(image))
    return gm_equivariance_check(fam, x, pt)


def char_poly_coeffs(x: TracelessMatrix) -> tuple:
    """Nontrivial characteristic polynomial coefficients (trace is zero)."""
    if x.size == 2:
        return (det(x.entries),)
    m = x.entries
    sum_minors = (
        (m[0][0] * m[1][1] - m[0][1] * m[1][0])
        + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
        + (m[1][1] * m[2][2] - m[1][2] * m[2][1])
    )
    return (sum_minors, det(m))


def nu_map(fam: RealFormFamily, g: Matrix, pt: CartanPoint) -> tuple[TracelessMatrix, CartanPoint]:
    """Conjugate the section value by g**-1: (Ad_{g^-1} e(pt), pt).

    Requires det(g) = 1; the output has the same characteristic polynomial
    as the section value, i.e. it lands in the same adjoint-quotient fiber.
    """
    if det(g) != 1:
        raise ValueError("nu requires a determinant-one matrix")
    section = e_section(fam, pt)
    g_inv = _inverse_det_one(g)
    conj = _mat_mul(_mat_mul(g_inv, section.entries), g)
    return TracelessMatrix(conj), pt


def random_det_one(size: int, rng: random.Random) -> Matrix:
    """Random integral determinant-one matrix built from elementary shears."""
    mat = tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    for _ in range(6):
        i = rng.randrange(size)
        j = rng.randrange(size)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        shear = tuple(
            tuple(1 if r == s else (c if (r, s) == (i, j) else 0) for s in range(size))
            for r in range(size)
        )
        mat = _mat_mul(mat, shear)
    return mat
