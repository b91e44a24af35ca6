"""Family data for the two real-form families and their dual-group dictionaries.

The Lorentz family PSO(2n-1,1) (parameter n >= 2) has dual group SL2 and
restricted root system A1 with the single positive root of multiplicity
2n-2; the octonionic family PE6(F4) has dual group SL3 and restricted root
system A2 with all three positive roots of multiplicity 8.  The uniform
multiplicity is written n_X throughout.

Real dominant weights identify with dominant weights of the dual group; the
octonionic translation goes through GL(3)-style triples (a, b, 0) and is the
one place where that convention is fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .rootdata import (
    Coweight,
    IntVector,
    RootSystem,
    Weight,
    pair,
    positive_coroots,
    rho,
    rho_check,
    root_system,
    weyl_elements,
    weyl_order,
)


@dataclass(frozen=True)
class TypeDescriptor:
    """Named group in a family inventory: Dynkin type plus classical name.

    Degenerate ranks (B0, D1) denote tori with trivial Weyl group.
    """

    family: str
    rank: int
    group_name: str

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def weyl_group_order(self) -> int:
        return weyl_order(self.family, self.rank)


@dataclass(frozen=True, eq=False)
class RealFormFamily:
    """Descriptor of one real-form family; construct via lorentz() or octonionic()."""

    kind: str  # "lorentz" | "octonionic"
    n: int | None
    n_x: int
    dual: RootSystem
    restricted: RootSystem
    inventory: tuple[tuple[str, TypeDescriptor], ...]
    rank_t: int  # rank of the compact-group maximal torus

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RealFormFamily({self.kind}, n={self.n})"

    @property
    def inventory_map(self) -> dict[str, TypeDescriptor]:
        return dict(self.inventory)

    def multiplicity(self, root: IntVector) -> int:
        """Multiplicity of a positive restricted root; uniformly n_X here.

        Stored behind a lookup so the restricted-root machinery stays generic
        and the constancy is a checked fact rather than an assumption.
        """
        if tuple(root) not in self.restricted.positive_roots:
            raise ValueError(f"{root} is not a positive restricted root")
        return self.n_x

    def to_json(self) -> dict:
        if self.kind == "lorentz":
            return {"family": "lorentz", "n": self.n}
        return {"family": "octonionic"}


def lorentz(n: int) -> RealFormFamily:
    """The family with compact form SO(2n-1), n >= 2."""
    if n < 2:
        raise ValueError("the Lorentz family requires n >= 2")
    inventory = (
        ("K", TypeDescriptor("B", n - 1, f"SO({2 * n - 1})")),
        ("M", TypeDescriptor("D", n - 1, f"SO({2 * n - 2})")),
        ("G_dual", TypeDescriptor("D", n, f"Spin({2 * n})")),
        ("G_X_dual", TypeDescriptor("A", 1, "SL(2)")),
        ("L_X_wedge", TypeDescriptor("B", n - 2, f"Spin({2 * n - 3})")),
    )
    a1 = root_system("A", 1)
    return RealFormFamily(
        kind="lorentz",
        n=n,
        n_x=2 * n - 2,
        dual=a1,
        restricted=a1,
        inventory=inventory,
        rank_t=n - 1,
    )


def octonionic() -> RealFormFamily:
    """The family with compact form F4."""
    inventory = (
        ("K", TypeDescriptor("F", 4, "F4")),
        ("M", TypeDescriptor("D", 4, "Spin(8)")),
        ("G_dual", TypeDescriptor("E", 6, "E6")),
        ("G_X_dual", TypeDescriptor("A", 2, "SL(3)")),
        ("L_X_wedge", TypeDescriptor("G", 2, "G2")),
    )
    a2 = root_system("A", 2)
    return RealFormFamily(
        kind="octonionic",
        n=None,
        n_x=8,
        dual=a2,
        restricted=a2,
        inventory=inventory,
        rank_t=4,
    )


def family_from_json(obj: dict) -> RealFormFamily:
    """Parse {"family": "lorentz", "n": 5} or {"family": "octonionic"}."""
    kind = obj.get("family")
    if kind == "lorentz":
        n = obj.get("n")
        if not isinstance(n, int):
            raise ValueError("lorentz family requires an integer parameter n")
        return lorentz(n)
    if kind == "octonionic":
        return octonionic()
    raise ValueError(f"unknown family {kind!r}")


@dataclass(frozen=True)
class RealWeight:
    """Element of the real (co)weight lattice of a family.

    Lorentz coordinates are a single integer m; octonionic coordinates are a
    pair (a, b), dominant when a >= b.
    """

    coords: IntVector
    family: RealFormFamily

    def __post_init__(self) -> None:
        expected = 1 if self.family.kind == "lorentz" else 2
        if len(self.coords) != expected:
            raise ValueError(f"{self.family.kind} weights have {expected} coordinate(s)")
        if not all(isinstance(c, int) for c in self.coords):
            raise ValueError("real weight coordinates must be integers")

    def is_dominant(self) -> bool:
        if self.family.kind == "lorentz":
            return self.coords[0] >= 0
        return self.coords[0] >= self.coords[1]

    def __add__(self, other: RealWeight) -> RealWeight:
        if self.family is not other.family:
            raise ValueError("operands belong to different families")
        return RealWeight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.family)


def real_weight(fam: RealFormFamily, *coords: int) -> RealWeight:
    return RealWeight(tuple(coords), fam)


class DualWeightRecord(NamedTuple):
    """Dual-group image of a real weight with the translation bookkeeping."""

    weight: Weight
    gl_weight: tuple[int, ...]
    central_shift: int
    image_dominant: bool


def to_dual_weight_record(lam: RealWeight) -> DualWeightRecord:
    """Translate a dominant real weight to the dual weight lattice.

    Lorentz: m maps to the A1 weight (m).  Octonionic: (a, b) completes to
    the GL(3)-style triple (a, b, 0) and maps to fundamental-weight
    coordinates (a - b, b); when b < 0 the recorded triple is re-centered so
    its first two entries are nonnegative (the image is unchanged, since
    central shifts act trivially on fundamental-weight coordinates) and the
    non-dominant image is flagged.
    """
    fam = lam.family
    if not lam.is_dominant():
        raise ValueError(f"real weight {lam.coords} is not dominant")
    if fam.kind == "lorentz":
        m = lam.coords[0]
        return DualWeightRecord(Weight((m,), fam.dual), (m, 0), 0, True)
    a, b = lam.coords
    image = Weight((a - b, b), fam.dual)
    if b >= 0:
        return DualWeightRecord(image, (a, b, 0), 0, True)
    shift = -b
    return DualWeightRecord(image, (a + shift, 0, shift), shift, False)


def to_dual_weight(lam: RealWeight) -> Weight:
    return to_dual_weight_record(lam).weight


def weighted_half_sum(
    system: RootSystem, multiplicity: Callable[[IntVector], int]
) -> tuple[Fraction, ...]:
    """Half the multiplicity-weighted sum of positive roots, in fundamental-weight coordinates."""
    rank = system.rank
    total = [Fraction(0)] * rank
    for alpha in system.positive_roots:
        fw = system.root_weight_coords(alpha)
        m = multiplicity(alpha)
        for i in range(rank):
            total[i] += Fraction(m * fw[i], 2)
    return tuple(total)


def restricted_rho(fam: RealFormFamily) -> Weight:
    """Multiplicity-weighted half-sum of positive restricted roots.

    Equals n_X times the ordinary Weyl vector of the restricted system
    because the multiplicity is uniform.
    """
    coords = weighted_half_sum(fam.restricted, fam.multiplicity)
    if any(c.denominator != 1 for c in coords):
        raise AssertionError("restricted rho must be integral for these families")
    w = Weight(tuple(int(c) for c in coords), fam.restricted)
    if w != fam.n_x * rho(fam.restricted):
        raise AssertionError("uniform multiplicity should give n_X * rho")
    return w


def rho_pairing(fam: RealFormFamily, lam: RealWeight) -> Fraction:
    """Pairing of the dual image of lam with the dual half-sum of positive coroots."""
    return pair(to_dual_weight(lam), rho_check(fam.dual))


def check_pairing_identity(fam: RealFormFamily, lam: RealWeight) -> bool:
    """Check <lam, rho_G> = n_X <lam, dual rho-check> with exact rationals.

    The left side is computed from the restricted root data: half the sum
    over positive restricted roots of multiplicity(alpha) times the pairing
    of the dual image with the corresponding coroot.
    """
    dual = to_dual_weight(lam)
    lhs = Fraction(0)
    for alpha, alpha_check in zip(fam.restricted.positive_roots, positive_coroots(fam.restricted)):
        cw = Coweight(tuple(Fraction(c) for c in alpha_check), fam.dual)
        lhs += Fraction(fam.multiplicity(alpha), 2) * pair(dual, cw)
    rhs = fam.n_x * pair(dual, rho_check(fam.dual))
    return lhs == rhs


def orbit_dim(fam: RealFormFamily, lam: RealWeight) -> int:
    """Real dimension of the spherical orbit indexed by lam: 2 n_X <lam, rho-check>."""
    value = 2 * fam.n_x * rho_pairing(fam, lam)
    if value.denominator != 1:
        raise ValueError(
            f"orbit dimension {value} is not an integer; the weight identification is broken"
        )
    return int(value)


def minuscule_paving(fam: RealFormFamily) -> tuple[int, ...]:
    """Cell dimensions of the affine paving of the minuscule orbit.

    The minuscule orbit is the sphere S^(2n-2) for the Lorentz family and
    the octonionic projective plane for the octonionic family; every cell
    dimension is divisible by n_X.
    """
    if fam.kind == "lorentz":
        cells = (0, fam.n_x)
    else:
        cells = (0, fam.n_x, 2 * fam.n_x)
    if any(c % fam.n_x for c in cells):
        raise AssertionError("paving cells must be divisible by n_X")
    return cells


def minuscule_weight(fam: RealFormFamily) -> RealWeight:
    """The minuscule dominant real weight (first fundamental direction)."""
    if fam.kind == "lorentz":
        return RealWeight((1,), fam)
    return RealWeight((1, 0), fam)


def weyl_factorization_check(fam: RealFormFamily) -> bool:
    """Check |W_K| = |W_M| x |W_X| on Weyl group orders.

    Orders come from explicit closure enumeration when the group is small
    enough (rank <= 4 honest types) and from the classical product formulas
    otherwise; degenerate B0/D1 entries are tori with trivial Weyl group.
    """
    inv = fam.inventory_map
    order_k = _descriptor_order(inv["K"])
    order_m = _descriptor_order(inv["M"])
    order_x = len(weyl_elements(fam.restricted))
    return order_k == order_m * order_x


def _descriptor_order(desc: TypeDescriptor) -> int:
    degenerate = (desc.family == "B" and desc.rank < 1) or (
        desc.family == "D" and desc.rank < 2
    )
    if not degenerate and desc.rank <= 4:
        return len(weyl_elements(root_system(desc.family, desc.rank)))
    return desc.weyl_group_order()
