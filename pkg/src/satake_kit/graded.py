"""Graded-ring bookkeeping: invariant degrees, graded shifts, Hilbert series.

Free graded-polynomial algebras are recorded by the multiset of their
generator degrees; two such algebras are isomorphic as graded algebras
exactly when the multisets (equivalently the Hilbert series) agree, which is
the level at which all identities here are verified.

The hardcoded invariant-degree tables are regression-tested against a Molien
series computed exactly from the explicit reflection matrices (up to W(F4));
E6 is covered by the product and sum identities relating degrees to the
group order and the number of positive roots.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .realform import RealFormFamily, TypeDescriptor
from .rootdata import (
    RootSystem,
    positive_root_count,
    root_system,
    weyl_elements,
    weyl_order,
)

# ---------------------------------------------------------------------------
# Integer polynomial helpers (coefficient lists, index = exponent in t).

Poly = tuple[int, ...]

P_ONE: Poly = (1,)


def _ptrim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pscale(a, c):
    return _ptrim([x * c for x in a])


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _one_minus_power(d: int) -> Poly:
    out = [0] * (d + 1)
    out[0] = 1
    out[d] = -1
    return tuple(out)


def _pdivmod(a, b):
    """Polynomial division over the rationals; returns (quotient, remainder)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(rem) >= len(b) and any(rem):
        if rem[-1] == 0:
            rem.pop()
            continue
        shift = len(rem) - len(b)
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, x in enumerate(b):
            rem[shift + i] -= factor * x
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(quo), tuple(rem)


def _pdiv_exact(a, b) -> Poly:
    quo, rem = _pdivmod(a, b)
    if rem:
        raise ArithmeticError("polynomial division was not exact")
    if any(q.denominator != 1 for q in quo):
        raise ArithmeticError("expected integer quotient")
    return tuple(int(q) for q in quo)


def _pgcd(a, b):
    """Monic gcd over the rationals."""
    a = tuple(Fraction(x) for x in a)
    b = tuple(Fraction(x) for x in b)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if not a:
        return ()
    lead = a[-1]
    return tuple(x / lead for x in a)


def _plcm(a, b):
    g = _pgcd(a, b)
    quotient, rem = _pdivmod(b, g)
    if rem:
        raise ArithmeticError("gcd does not divide")
    return _pmul_fraction(a, quotient)


def _pmul_fraction(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += Fraction(x) * Fraction(y)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


# ---------------------------------------------------------------------------
# Degree multisets and Hilbert series.


@dataclass(frozen=True)
class GradedDegrees:
    """Multiset of generator degrees of a free graded commutative algebra."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d <= 0 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    def shifted(self, m: int) -> GradedDegrees:
        """Graded shift V[m]: a polynomial-degree-d generator lands in degree m*d."""
        if m <= 0:
            raise ValueError("shift must be a positive integer")
        return GradedDegrees(tuple(m * d for d in self.degrees))

    def union(self, other: GradedDegrees) -> GradedDegrees:
        return GradedDegrees(self.degrees + other.degrees)

    def hilbert_series(self) -> HilbertSeries:
        return HilbertSeries(P_ONE, self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)


def shifted(degrees: GradedDegrees, m: int) -> GradedDegrees:
    return degrees.shifted(m)


@dataclass(frozen=True)
class HilbertSeries:
    """Rational function numerator / prod(1 - t^d) with integer numerator."""

    numerator: Poly
    den_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d <= 0 for d in self.den_factors):
            raise ValueError("denominator factor degrees must be positive")
        object.__setattr__(self, "den_factors", tuple(sorted(self.den_factors)))

    def denominator(self) -> Poly:
        out: Poly = P_ONE
        for d in self.den_factors:
            out = _pmul(out, _one_minus_power(d))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return _pmul(self.numerator, other.denominator()) == _pmul(
            other.numerator, self.denominator()
        )

    def __mul__(self, other: HilbertSeries) -> HilbertSeries:
        return HilbertSeries(
            _pmul(self.numerator, other.numerator), self.den_factors + other.den_factors
        )

    def reduced(self) -> HilbertSeries:
        """Cancel denominator factors dividing the numerator exactly."""
        num = self.numerator
        remaining: list[int] = []
        for d in sorted(self.den_factors):
            try:
                num = _pdiv_exact(num, _one_minus_power(d))
            except ArithmeticError:
                remaining.append(d)
        return HilbertSeries(num, tuple(remaining))

    def to_json(self) -> dict:
        return {"num": list(self.numerator), "den": list(self.den_factors)}


def hilbert_series(degrees: GradedDegrees) -> HilbertSeries:
    return degrees.hilbert_series()


# ---------------------------------------------------------------------------
# Invariant degrees.

GroupLike = RootSystem | TypeDescriptor | str | tuple


def _as_type(group: GroupLike) -> tuple[str, int]:
    if isinstance(group, RootSystem):
        return group.family, group.rank
    if isinstance(group, TypeDescriptor):
        return group.family, group.rank
    if isinstance(group, tuple):
        return str(group[0]), int(group[1])
    label = group.strip().upper()
    if label == "TRIVIAL":
        return ("B", 0)
    if label[0] not in "ABDEFG":
        raise ValueError(f"bad group label {group!r}")
    return label[0], int(label[1:])


def invariant_degrees(group: GroupLike) -> GradedDegrees:
    """Degrees of the fundamental invariants of the reflection representation.

    Polynomial grading, before any cohomological shift.  Degenerate ranks:
    B0 (a point) has no generators; D1 (a rank-one torus with trivial Weyl
    group) has the single degree-1 generator.
    """
    family, rank = _as_type(group)
    if family == "A" and rank >= 1:
        degs = tuple(range(2, rank + 2))
    elif family == "B" and rank >= 0:
        degs = tuple(range(2, 2 * rank + 1, 2))
    elif family == "D" and rank >= 1:
        # For D1 this degenerates to the single degree-1 torus coordinate.
        degs = tuple(range(2, 2 * rank - 1, 2)) + (rank,)
    elif family == "G" and rank == 2:
        degs = (2, 6)
    elif family == "F" and rank == 4:
        degs = (2, 6, 8, 12)
    elif family == "E" and rank == 6:
        degs = (2, 5, 6, 8, 9, 12)
    else:
        raise ValueError(f"unsupported group type {family}{rank}")
    return GradedDegrees(degs)


def degree_identities_check(group: GroupLike) -> bool:
    """Product of degrees = |W| and sum of (d - 1) = number of positive roots."""
    family, rank = _as_type(group)
    degs = invariant_degrees(group).degrees
    prod = 1
    for d in degs:
        prod *= d
    return prod == weyl_order(family, rank) and sum(d - 1 for d in degs) == positive_root_count(
        family, rank
    )


# ---------------------------------------------------------------------------
# Molien series oracle.


def _charpoly_one_minus_tw(mat) -> Poly:
    """det(1 - t * M) for a small integer matrix, by permutation expansion."""
    n = len(mat)
    if n == 0:
        return P_ONE
    from itertools import permutations

    total: dict[int, int] = {}
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        # Entry (i, perm[i]) of (I - tM) is delta - t*M[i][j]: degree <= 1.
        prod: dict[int, int] = {0: sign}
        for i in range(n):
            j = perm[i]
            const = 1 if i == j else 0
            lin = -mat[i][j]
            nxt: dict[int, int] = {}
            for e, c in prod.items():
                if const:
                    nxt[e] = nxt.get(e, 0) + c * const
                if lin:
                    nxt[e + 1] = nxt.get(e + 1, 0) + c * lin
            prod = nxt
        for e, c in prod.items():
            total[e] = total.get(e, 0) + c
    out = [0] * (max(total) + 1 if total else 1)
    for e, c in total.items():
        out[e] = c
    return _ptrim(out)


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def molien_series(matrices) -> tuple[Poly, Poly]:
    """Exact Molien series of a finite matrix group as (numerator, denominator).

    The series is (1/|G|) sum over g of 1/det(1 - t g), assembled over the
    least common multiple of the characteristic polynomials so the result is
    an exact rational function: numerator / denominator with denominator the
    lcm scaled by |G|.
    """
    charpolys: Counter[Poly] = Counter()
    for mat in matrices:
        charpolys[_charpoly_one_minus_tw(mat)] += 1
    lcm: tuple = P_ONE
    for p in charpolys:
        lcm = _plcm(lcm, p)
    numerator: Poly = ()
    for p, mult in sorted(charpolys.items()):
        quotient_fr = _pmul_fraction(lcm, (Fraction(1),))
        quotient, rem = _pdivmod(quotient_fr, p)
        if rem:
            raise AssertionError("characteristic polynomial does not divide the lcm")
        numerator = _padd(numerator, _pscale(_to_int_poly(quotient), mult))
    order = sum(charpolys.values())
    denominator = _pscale(_to_int_poly(lcm), order)
    return numerator, denominator


def _to_int_poly(poly) -> Poly:
    out = []
    for c in poly:
        f = Fraction(c)
        if f.denominator != 1:
            # Clear denominators by scaling; callers only compare ratios.
            raise AssertionError("expected integral polynomial")
        out.append(int(f))
    return _ptrim(out)


def molien_check(group: GroupLike) -> bool:
    """Verify the hardcoded invariant degrees against the exact Molien series.

    Checks numerator * prod(1 - t^d) == denominator as integer polynomials,
    i.e. the Molien series of the explicit reflection matrices equals
    prod 1/(1 - t^d).  Supported up to W(F4); the degenerate D1 and B0 cases
    are tori with the identity matrix group.
    """
    family, rank = _as_type(group)
    if (family, rank) == ("B", 0):
        matrices = [()]
    elif (family, rank) == ("D", 1):
        matrices = [((1,),)]
    else:
        system = root_system(family, rank)
        matrices = [e.matrix for e in weyl_elements(system)]
    numerator, denominator = molien_series(matrices)
    product = numerator
    for d in invariant_degrees(group).degrees:
        product = _pmul(product, _one_minus_power(d))
    return product == denominator


# ---------------------------------------------------------------------------
# Family degree identities.


def _rank_of_dual_cartan(fam: RealFormFamily) -> int:
    return fam.dual.rank


def dual_lie_algebra_dimension(fam: RealFormFamily) -> int:
    """Dimension of the dual-group Lie algebra (sl2: 3, sl3: 8)."""
    return fam.dual.rank + 2 * len(fam.dual.positive_roots)


@dataclass(frozen=True)
class DegreeReport:
    """Results of the equivariant-cohomology degree-multiset comparisons.

    The intrinsic checks tie the compact-side quotient tower to the Weyl
    group orders and the torus rank; the dual checks compare generator
    degrees of the compact-side rings with the dual-side model
    (dual Cartan shifted by n_X) x (centralizer-subgroup invariants shifted by 2).
    """

    family: dict
    m_intrinsic: bool
    k_intrinsic: bool
    m_dual: bool
    k_dual: bool
    multisets: dict[str, tuple[int, ...]]

    def all_passed(self) -> bool:
        return self.m_intrinsic and self.k_intrinsic and self.m_dual and self.k_dual

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "checks": {
                "m_intrinsic": self.m_intrinsic,
                "k_intrinsic": self.k_intrinsic,
                "m_dual": self.m_dual,
                "k_dual": self.k_dual,
            },
            "degree_multisets": {k: list(v) for k, v in sorted(self.multisets.items())},
        }


def cohomology_degree_report(fam: RealFormFamily) -> DegreeReport:
    """Compare compact-group point-cohomology degrees with the dual-side model.

    The cohomology ring of a point for a compact group with Weyl group W is
    free on the W-invariant degrees placed in cohomological degree 2d.  The
    dual-side model is the product of the dual Cartan (coordinates in degree
    n_X, Weyl-quotiented for the full compact group) and the invariants of
    the centralizer subgroup (degrees doubled).
    """
    inv = fam.inventory_map
    k_desc = inv["K"]
    m_desc = inv["M"]
    l_desc = inv["L_X_wedge"]
    deg_k = invariant_degrees(k_desc)
    deg_m = invariant_degrees(m_desc)
    deg_l = invariant_degrees(l_desc)
    deg_dual = invariant_degrees(fam.dual)
    n_x = fam.n_x

    # Intrinsic tower: cardinalities equal the torus rank and the
    # Shephard-Todd products recover the Weyl group orders, so the two
    # quotient steps compose (order of K = order of M times the restricted
    # Weyl group order).
    def _prod(degs: GradedDegrees) -> int:
        p = 1
        for d in degs.degrees:
            p *= d
        return p

    order_k = weyl_order(k_desc.family, k_desc.rank)
    order_m = weyl_order(m_desc.family, m_desc.rank)
    order_x = weyl_order(fam.restricted.family, fam.restricted.rank)
    m_intrinsic = len(deg_m) == fam.rank_t and _prod(deg_m) == order_m
    k_intrinsic = (
        len(deg_k) == fam.rank_t and _prod(deg_k) == order_k and order_k == order_m * order_x
    )

    # Dual-side comparisons at the generator-degree level.
    cartan_linear = GradedDegrees((1,) * _rank_of_dual_cartan(fam))
    m_side = cartan_linear.shifted(n_x).union(deg_l.shifted(2))
    k_side = deg_dual.shifted(n_x).union(deg_l.shifted(2))
    m_dual = deg_m.shifted(2) == m_side
    k_dual = deg_k.shifted(2) == k_side

    return DegreeReport(
        family=fam.to_json(),
        m_intrinsic=m_intrinsic,
        k_intrinsic=k_intrinsic,
        m_dual=m_dual,
        k_dual=k_dual,
        multisets={
            "compact_m": deg_m.shifted(2).degrees,
            "compact_k": deg_k.shifted(2).degrees,
            "dual_model_m": m_side.degrees,
            "dual_model_k": k_side.degrees,
        },
    )


def ext_algebra_degrees(fam: RealFormFamily) -> GradedDegrees:
    """Generator degrees of the extension algebra of the basepoint object.

    dim(dual Lie algebra) generators in degree n_X, plus the centralizer
    subgroup invariants in doubled degree.
    """
    block = GradedDegrees((fam.n_x,) * dual_lie_algebra_dimension(fam))
    l_degs = invariant_degrees(fam.inventory_map["L_X_wedge"])
    return block.union(l_degs.shifted(2))


def ext_fiberproduct_hilbert_check(fam: RealFormFamily) -> bool:
    """Hilbert-series identity for the fiber-product description.

    HS(dual algebra in degree n_X) * HS(torus/W_K in degree 2) divided by
    HS(dual Cartan / restricted Weyl group in degree n_X) must equal the
    Hilbert series of :func:`ext_algebra_degrees`, as exact rational
    functions.  The quotient is valid because the adjoint-quotient map is
    free, so the fiber product multiplies and divides Hilbert series.
    """
    n_x = fam.n_x
    g_block = GradedDegrees((n_x,) * dual_lie_algebra_dimension(fam))
    k_block = invariant_degrees(fam.inventory_map["K"]).shifted(2)
    x_block = invariant_degrees(fam.dual).shifted(n_x)
    ext_block = ext_algebra_degrees(fam)
    # Cross-multiplied identity:
    #   prod(1 - t^e, e in x_block) * prod(1 - t^e, e in ext)
    #     == (1 - t^{n_X})^{dim} * prod(1 - t^e, e in k_block)
    lhs: Poly = P_ONE
    for d in x_block.degrees + ext_block.degrees:
        lhs = _pmul(lhs, _one_minus_power(d))
    rhs: Poly = P_ONE
    for d in g_block.degrees + k_block.degrees:
        rhs = _pmul(rhs, _one_minus_power(d))
    return lhs == rhs
