"""Finite root systems, Weyl groups, and weight combinatorics in exact arithmetic.

Supported types: A_k (k <= 6), B_k (k >= 1), D_k (k >= 2), G2, F4, E6.

Conventions:

* weights live in fundamental-weight coordinates (integer vectors),
* roots live in simple-root coordinates (integer vectors),
* ``cartan_matrix[i][j]`` is the value of the simple root ``alpha_j`` on the
  simple coroot ``alpha_i^vee``, so converting a root to fundamental-weight
  coordinates is the matrix-vector product ``C @ root``,
* pairings that can be half-integral are returned as ``fractions.Fraction``;
  floats never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

IntVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]

# Enumeration is capped at the largest supported group, W(E6).
MAX_WEYL_ENUMERATION = 51840


def weyl_order(family: str, rank: int) -> int:
    """Order of the Weyl group by the classical product formulas.

    Degenerate ranks use the torus conventions: B0 and D1 are trivial.
    """
    if family == "A" and rank >= 1:
        return factorial(rank + 1)
    if family == "B" and rank >= 0:
        return 1 if rank == 0 else 2**rank * factorial(rank)
    if family == "D" and rank >= 1:
        return 1 if rank == 1 else 2 ** (rank - 1) * factorial(rank)
    if family == "G" and rank == 2:
        return 12
    if family == "F" and rank == 4:
        return 1152
    if family == "E" and rank == 6:
        return 51840
    raise ValueError(f"unsupported Weyl group type {family}{rank}")


def positive_root_count(family: str, rank: int) -> int:
    """Number of positive roots, with B0/D1 counting zero."""
    if family == "A" and rank >= 1:
        return rank * (rank + 1) // 2
    if family == "B" and rank >= 0:
        return rank * rank
    if family == "D" and rank >= 1:
        return rank * (rank - 1)
    if family == "G" and rank == 2:
        return 6
    if family == "F" and rank == 4:
        return 24
    if family == "E" and rank == 6:
        return 36
    raise ValueError(f"unsupported root system type {family}{rank}")


def _adjacency(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Edges (i, j, cij, cji) of the Dynkin diagram, 0-indexed.

    ``cij`` is the Cartan entry ``cartan[i][j]`` for the edge.
    """
    simply = lambda pairs: [(i, j, -1, -1) for i, j in pairs]
    if family == "A":
        return simply([(i, i + 1) for i in range(rank - 1)])
    if family == "B":
        # alpha_rank is the short root; its coroot sees the adjacent long
        # root with multiplicity two.
        edges = simply([(i, i + 1) for i in range(rank - 2)])
        if rank >= 2:
            edges.append((rank - 2, rank - 1, -1, -2))
        return edges
    if family == "D":
        if rank == 2:
            return []
        edges = simply([(i, i + 1) for i in range(rank - 2)])
        edges.append((rank - 3, rank - 1, -1, -1))
        return edges
    if family == "G":
        return [(0, 1, -3, -1)]
    if family == "F":
        return simply([(0, 1), (2, 3)]) + [(1, 2, -1, -2)]
    if family == "E":
        return simply([(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)])
    raise ValueError(f"unsupported root system type {family}{rank}")


def _build_cartan(family: str, rank: int) -> IntMatrix:
    supported = (
        (family == "A" and 1 <= rank <= 6)
        or (family == "B" and rank >= 1)
        or (family == "D" and rank >= 2)
        or (family == "G" and rank == 2)
        or (family == "F" and rank == 4)
        or (family == "E" and rank == 6)
    )
    if not supported:
        raise ValueError(f"unsupported root system type {family}{rank}")
    mat = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in _adjacency(family, rank):
        mat[i][j] = cij
        mat[j][i] = cji
    return tuple(tuple(row) for row in mat)


def _positive_roots(cartan: IntMatrix, rank: int) -> tuple[IntVector, ...]:
    """Close the simple roots under root strings, by increasing height."""
    simples = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots: set[IntVector] = set(simples)
    layer = list(simples)
    layers = [list(simples)]
    while layer:
        nxt = []
        for beta in layer:
            for i in range(rank):
                pairing = sum(cartan[i][j] * beta[j] for j in range(rank))
                down = 0
                while True:
                    lower = tuple(
                        beta[j] - (down + 1) * (1 if j == i else 0) for j in range(rank)
                    )
                    if lower in roots:
                        down += 1
                    else:
                        break
                if down - pairing >= 1:
                    cand = tuple(beta[j] + (1 if j == i else 0) for j in range(rank))
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        layers.append(nxt)
        layer = nxt
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root-system data; construct via :func:`root_system`."""

    family: str
    rank: int
    cartan_matrix: IntMatrix
    positive_roots: tuple[IntVector, ...]

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"RootSystem({self.label})"

    def root_weight_coords(self, root: IntVector) -> IntVector:
        """Fundamental-weight coordinates of a vector given in simple-root coordinates."""
        c = self.cartan_matrix
        return tuple(sum(c[i][j] * root[j] for j in range(self.rank)) for i in range(self.rank))

    def simple_root_weight_coords(self, i: int) -> IntVector:
        return tuple(row[i] for row in self.cartan_matrix)


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    """Shared immutable instance of the requested root system."""
    cartan = _build_cartan(family, rank)
    roots = _positive_roots(cartan, rank)
    if len(roots) != positive_root_count(family, rank):
        raise AssertionError(f"positive root closure failed for {family}{rank}")
    return RootSystem(family, rank, cartan, roots)


def root_system_from_label(label: str) -> RootSystem:
    """Parse labels like ``"A2"`` or ``"b3"``."""
    label = label.strip().upper()
    if len(label) < 2 or label[0] not in "ABDEFG":
        raise ValueError(f"bad root system label {label!r}")
    return root_system(label[0], int(label[1:]))


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    coords: IntVector
    system: RootSystem

    def __post_init__(self) -> None:
        if len(self.coords) != self.system.rank:
            raise ValueError("coordinate length does not match rank")
        if not all(isinstance(c, int) for c in self.coords):
            raise ValueError("weight coordinates must be integers")

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: Weight) -> Weight:
        _same_system(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.system)

    def __sub__(self, other: Weight) -> Weight:
        _same_system(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.system)

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coords), self.system)

    def __rmul__(self, n: int) -> Weight:
        if not isinstance(n, int):
            raise TypeError("weights scale by integers only")
        return Weight(tuple(n * a for a in self.coords), self.system)


@dataclass(frozen=True)
class Coweight:
    """Coweight in simple-coroot coordinates; pairs integrally with fundamental weights."""

    coords: tuple[Fraction, ...]
    system: RootSystem


def weight(system: RootSystem, *coords: int) -> Weight:
    return Weight(tuple(coords), system)


def _same_system(a, b) -> None:
    if a.system is not b.system:
        raise ValueError("operands belong to different root systems")


def rho(system: RootSystem) -> Weight:
    """Half-sum of positive roots: (1, ..., 1) in fundamental-weight coordinates."""
    return Weight((1,) * system.rank, system)


def pair(lam: Weight, coweight: Coweight) -> Fraction:
    """Canonical pairing of a weight against a coweight; exact rational."""
    if lam.system is not coweight.system:
        raise ValueError("weight and coweight belong to different root systems")
    return sum(
        (Fraction(m) * c for m, c in zip(lam.coords, coweight.coords)),
        start=Fraction(0),
    )


@lru_cache(maxsize=None)
def _symmetrizers(system: RootSystem) -> tuple[Fraction, ...]:
    """Ratios d_i = (alpha_i, alpha_i)/2 making d_i * cartan[i][j] symmetric."""
    rank = system.rank
    c = system.cartan_matrix
    d: list[Fraction | None] = [None] * rank
    for start in range(rank):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(rank):
                if i != j and c[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * c[i][j] / c[j][i]
                    stack.append(j)
    return tuple(d)  # type: ignore[arg-type]


@lru_cache(maxsize=None)
def positive_coroots(system: RootSystem) -> tuple[IntVector, ...]:
    """Coroots of the positive roots, in simple-coroot coordinates."""
    d = _symmetrizers(system)
    out = []
    for beta in system.positive_roots:
        fw = system.root_weight_coords(beta)
        norm_half = sum(
            (Fraction(beta[i]) * fw[i] * d[i] for i in range(system.rank)),
            start=Fraction(0),
        ) / 2
        coords = tuple(Fraction(beta[i]) * d[i] / norm_half for i in range(system.rank))
        if any(c.denominator != 1 for c in coords):
            raise AssertionError("coroot coordinates must be integral")
        out.append(tuple(int(c) for c in coords))
    return tuple(out)


def rho_check(system: RootSystem) -> Coweight:
    """Half-sum of positive coroots."""
    total = [Fraction(0)] * system.rank
    for cor in positive_coroots(system):
        for i, c in enumerate(cor):
            total[i] += c
    return Coweight(tuple(t / 2 for t in total), system)


def simple_reflection(w: Weight, i: int) -> Weight:
    """Reflect in the i-th simple root (0-indexed)."""
    mi = w.coords[i]
    col = w.system.simple_root_weight_coords(i)
    return Weight(tuple(a - mi * b for a, b in zip(w.coords, col)), w.system)


def weyl_orbit(w: Weight) -> list[Weight]:
    """Full Weyl orbit of a weight, sorted for determinism."""
    seen = {w.coords}
    frontier = [w.coords]
    system = w.system
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(system.rank):
                col = system.simple_root_weight_coords(i)
                image = tuple(a - v[i] * b for a, b in zip(v, col))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return [Weight(c, system) for c in sorted(seen)]


def dominant_representative(w: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``w``."""
    v = list(w.coords)
    system = w.system
    guard = 0
    while True:
        i = next((k for k, c in enumerate(v) if c < 0), None)
        if i is None:
            return Weight(tuple(v), system)
        col = system.simple_root_weight_coords(i)
        vi = v[i]
        v = [a - vi * b for a, b in zip(v, col)]
        guard += 1
        if guard > 10_000_000:  # pragma: no cover - safety net
            raise AssertionError("dominant representative did not terminate")


class WeylElement(NamedTuple):
    matrix: IntMatrix
    length: int
    sign: int


@dataclass(frozen=True, eq=False)
class WeylGroup:
    """Weyl group realized by integer matrices on fundamental-weight coordinates."""

    system: RootSystem
    generators: tuple[IntMatrix, ...]
    order: int
    longest_length: int


def _reflection_matrices(system: RootSystem) -> tuple[IntMatrix, ...]:
    rank = system.rank
    mats = []
    for i in range(rank):
        col = system.simple_root_weight_coords(i)
        mats.append(
            tuple(
                tuple((1 if r == c else 0) - (col[r] if c == i else 0) for c in range(rank))
                for r in range(rank)
            )
        )
    return tuple(mats)


@lru_cache(maxsize=None)
def weyl_elements(system: RootSystem) -> tuple[WeylElement, ...]:
    """All Weyl group elements as (matrix, length, sign), found by closure.

    Breadth-first search on the orbit of the (regular) weight rho; the BFS
    depth is the Coxeter length.  Refuses groups larger than W(E6).
    """
    order = weyl_order(system.family, system.rank)
    if order > MAX_WEYL_ENUMERATION:
        raise ValueError(f"Weyl group {system.label} too large to enumerate ({order})")
    rank = system.rank
    cartan = system.cartan_matrix
    identity = tuple(tuple(int(r == c) for c in range(rank)) for r in range(rank))
    rho_v = (1,) * rank
    seen = {rho_v}
    out = [WeylElement(identity, 0, 1)]
    frontier = [(rho_v, identity)]
    depth = 0
    while frontier:
        depth += 1
        sign = -1 if depth % 2 else 1
        nxt = []
        for vec, mat in frontier:
            for i in range(rank):
                vi = vec[i]
                image = tuple(vec[r] - cartan[r][i] * vi for r in range(rank))
                if image in seen:
                    continue
                seen.add(image)
                # s_i acts on the left: subtract a multiple of row i.
                new_mat = tuple(
                    tuple(mat[r][c] - cartan[r][i] * mat[i][c] for c in range(rank))
                    for r in range(rank)
                )
                nxt.append((image, new_mat))
                out.append(WeylElement(new_mat, depth, sign))
        frontier = nxt
    if len(out) != order:
        raise AssertionError(f"Weyl closure for {system.label} found {len(out)} elements")
    return tuple(out)


@lru_cache(maxsize=None)
def weyl_group(system: RootSystem) -> WeylGroup:
    elements = weyl_elements(system)
    return WeylGroup(
        system=system,
        generators=_reflection_matrices(system),
        order=len(elements),
        longest_length=max(e.length for e in elements),
    )


@lru_cache(maxsize=None)
def _cartan_inverse(system: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    rank = system.rank
    aug = [
        [Fraction(system.cartan_matrix[i][j]) for j in range(rank)]
        + [Fraction(int(i == j)) for j in range(rank)]
        for i in range(rank)
    ]
    for i in range(rank):
        if aug[i][i] == 0:
            swap = next(k for k in range(i + 1, rank) if aug[k][i] != 0)
            aug[i], aug[swap] = aug[swap], aug[i]
        piv = aug[i][i]
        aug[i] = [x / piv for x in aug[i]]
        for k in range(rank):
            if k != i and aug[k][i] != 0:
                f = aug[k][i]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[i])]
    return tuple(tuple(row[rank:]) for row in aug)


def root_coordinates(w: Weight) -> tuple[Fraction, ...]:
    """Simple-root coordinates of a weight (rational in general)."""
    inv = _cartan_inverse(w.system)
    rank = w.system.rank
    return tuple(
        sum((inv[i][j] * w.coords[j] for j in range(rank)), start=Fraction(0))
        for i in range(rank)
    )


def in_root_lattice(w: Weight) -> bool:
    return all(c.denominator == 1 for c in root_coordinates(w))


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    """True when lam - mu is a nonnegative integer combination of simple roots."""
    _same_system(mu, lam)
    diff = root_coordinates(lam - mu)
    return all(c.denominator == 1 and c >= 0 for c in diff)


def _form_weight_root(w: Weight, root: IntVector) -> Fraction:
    """Invariant bilinear form of a weight against a simple-root-coordinate vector."""
    d = _symmetrizers(w.system)
    return sum(
        (Fraction(root[j]) * d[j] * w.coords[j] for j in range(w.system.rank)),
        start=Fraction(0),
    )


def _form(w1: Weight, w2: Weight) -> Fraction:
    rc = root_coordinates(w2)
    d = _symmetrizers(w1.system)
    return sum(
        (rc[j] * d[j] * w1.coords[j] for j in range(w1.system.rank)),
        start=Fraction(0),
    )


@lru_cache(maxsize=None)
def _freudenthal_dominant(lam: Weight, mu: Weight) -> int:
    """Freudenthal recursion; both arguments dominant, mu <= lam assumed checked."""
    if mu == lam:
        return 1
    system = lam.system
    rho_w = rho(system)
    denom = _form(lam + rho_w, lam + rho_w) - _form(mu + rho_w, mu + rho_w)
    total = Fraction(0)
    for alpha in system.positive_roots:
        alpha_fw = system.root_weight_coords(alpha)
        k = 1
        while True:
            nu = Weight(tuple(m + k * a for m, a in zip(mu.coords, alpha_fw)), system)
            nu_dom = dominant_representative(nu)
            if not dominance_leq(nu_dom, lam):
                # Root coordinates only grow with k; once outside, always outside.
                diff = root_coordinates(lam - nu)
                if any(c < 0 for c in diff):
                    break
                k += 1
                continue
            total += 2 * _form_weight_root(nu, alpha) * _freudenthal_dominant(lam, nu_dom)
            k += 1
    mult = total / denom
    if mult.denominator != 1:
        raise AssertionError("Freudenthal recursion produced a non-integer")
    return int(mult)


def freudenthal_multiplicity(lam: Weight, mu: Weight) -> int:
    """Dimension of the mu weight space of the irreducible module with highest weight lam.

    ``mu`` may be any weight; the result is Weyl-invariant.  Weights outside
    the root-lattice coset of ``lam`` have multiplicity zero.
    """
    if not lam.is_dominant():
        raise ValueError("highest weight must be dominant")
    _same_system(lam, mu)
    if not in_root_lattice(lam - mu):
        return 0
    mu_dom = dominant_representative(mu)
    if not dominance_leq(mu_dom, lam):
        return 0
    return _freudenthal_dominant(lam, mu_dom)


def weyl_dimension(lam: Weight) -> int:
    """Dimension of the irreducible module with highest weight lam."""
    if not lam.is_dominant():
        raise ValueError("highest weight must be dominant")
    system = lam.system
    rho_coords = (1,) * system.rank
    num = Fraction(1)
    for cor in positive_coroots(system):
        top = sum((lam.coords[i] + 1) * cor[i] for i in range(system.rank))
        bot = sum(rho_coords[i] * cor[i] for i in range(system.rank))
        num *= Fraction(top, bot)
    if num.denominator != 1:
        raise AssertionError("Weyl dimension must be an integer")
    return int(num)
