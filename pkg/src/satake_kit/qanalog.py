"""Kostka-Foulkes polynomials / q-analogs of weight multiplicity for A1 and A2.

Two independent routes are provided:

* the alternating Weyl-group sum over the q-weighted Kostant partition
  function (:func:`kostka_foulkes`), valid for A1 and A2 weights, and
* the Lascoux-Schuetzenberger charge statistic summed over semistandard
  tableaux (:func:`kostka_charge`), valid for partitions with at most three
  rows.

They agree after translating partitions to fundamental-weight coordinates by
consecutive row differences; the test suite enforces this over large boxes.
Tensor product decompositions are included as a numerical shadow of the
monoidal structure on representations.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootdata import (
    RootSystem,
    Weight,
    dominance_leq,
    freudenthal_multiplicity,
    pair,
    rho,
    rho_check,
    root_coordinates,
    root_system,
    weight,
    weyl_dimension,
    weyl_elements,
    weyl_orbit,
)

_SUPPORTED_LABELS = ("A1", "A2")


class QPolynomial:
    """Polynomial in q with arbitrary-precision integer coefficients.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        cleaned = {}
        for exp, c in (coeffs or {}).items():
            if not isinstance(exp, int) or exp < 0:
                raise ValueError("exponents must be nonnegative integers")
            if not isinstance(c, int):
                raise ValueError("coefficients must be integers")
            if c != 0:
                cleaned[exp] = c
        object.__setattr__(self, "_coeffs", dict(sorted(cleaned.items())))

    @staticmethod
    def zero() -> QPolynomial:
        return QPolynomial({})

    @staticmethod
    def one() -> QPolynomial:
        return QPolynomial({0: 1})

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> QPolynomial:
        return QPolynomial({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return max(self._coeffs)

    def min_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no minimal degree")
        return min(self._coeffs)

    def exponents(self) -> tuple[int, ...]:
        return tuple(self._coeffs)

    def __add__(self, other: QPolynomial) -> QPolynomial:
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return QPolynomial(out)

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) - c
        return QPolynomial(out)

    def __mul__(self, other: QPolynomial | int) -> QPolynomial:
        if isinstance(other, int):
            return QPolynomial({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPolynomial(out)

    __rmul__ = __mul__

    def scale_exponents(self, factor: int) -> QPolynomial:
        """Substitute q -> q**factor."""
        if factor <= 0:
            raise ValueError("exponent scale must be positive")
        return QPolynomial({e * factor: c for e, c in self._coeffs.items()})

    def __call__(self, value: int) -> int:
        return sum(c * value**e for e, c in self._coeffs.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"QPolynomial({self._coeffs!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for exp, c in self._coeffs.items():
            if exp == 0:
                term = str(abs(c))
            else:
                base = "q" if exp == 1 else f"q^{exp}"
                term = base if abs(c) == 1 else f"{abs(c)}*{base}"
            parts.append((c < 0, term))
        text = parts[0][1] if not parts[0][0] else f"-{parts[0][1]}"
        for negative, term in parts[1:]:
            text += f" - {term}" if negative else f" + {term}"
        return text


def _require_supported(system: RootSystem) -> None:
    if system.label not in _SUPPORTED_LABELS:
        raise ValueError(f"q-analog operations support A1 and A2 only, not {system.label}")


def q_kostant(system: RootSystem, beta: Weight) -> QPolynomial:
    """q-weighted Kostant partition function.

    The coefficient of q**N counts the expressions of ``beta`` as a sum of
    exactly N positive roots.  Vectors outside the nonnegative root cone give
    the zero polynomial.
    """
    _require_supported(system)
    if beta.system is not system:
        raise ValueError("weight belongs to a different root system")
    coords = root_coordinates(beta)
    if any(c.denominator != 1 for c in coords):
        return QPolynomial.zero()
    target = tuple(int(c) for c in coords)
    if any(c < 0 for c in target):
        return QPolynomial.zero()
    return _kostant_table(system, target)


@lru_cache(maxsize=None)
def _kostant_table(system: RootSystem, target: tuple[int, ...]) -> QPolynomial:
    # Dynamic programming over the coordinate box below ``target``, one
    # positive root at a time.
    table: dict[tuple[int, ...], QPolynomial] = {
        tuple([0] * system.rank): QPolynomial.one()
    }
    for alpha in system.positive_roots:
        updated = dict(table)
        # Iterate in increasing multiples so each root may be used many times.
        frontier = sorted(table)
        for base in frontier:
            k = 1
            while True:
                point = tuple(b + k * a for b, a in zip(base, alpha))
                if any(p > t for p, t in zip(point, target)):
                    break
                contrib = table[base] * QPolynomial.monomial(k)
                updated[point] = updated.get(point, QPolynomial.zero()) + contrib
                k += 1
        table = updated
    return table.get(target, QPolynomial.zero())


def kostka_foulkes(system: RootSystem, lam: Weight, mu: Weight) -> QPolynomial:
    """Kostka-Foulkes polynomial via the alternating Weyl-group sum.

    K(lam, mu) = sum over w of sign(w) * P_q(w(lam + rho) - (mu + rho)) with
    P_q the q-weighted Kostant partition function.  Both weights must be
    dominant and differ by a root-lattice element.
    """
    _require_supported(system)
    if lam.system is not system or mu.system is not system:
        raise ValueError("weights belong to a different root system")
    if not lam.is_dominant() or not mu.is_dominant():
        raise ValueError("both weights must be dominant")
    diff = root_coordinates(lam - mu)
    if any(c.denominator != 1 for c in diff):
        raise ValueError("weights have distinct central characters")
    rho_w = rho(system)
    shifted_target = mu + rho_w
    result = QPolynomial.zero()
    rank = system.rank
    for element in weyl_elements(system):
        src = lam + rho_w
        image = tuple(
            sum(element.matrix[r][c] * src.coords[c] for c in range(rank)) for r in range(rank)
        )
        arg = Weight(tuple(a - b for a, b in zip(image, shifted_target.coords)), system)
        term = q_kostant(system, arg)
        if not term.is_zero():
            result = result + element.sign * term
    if any(c < 0 for c in result.coeffs.values()):
        raise AssertionError("Kostka-Foulkes coefficients must be nonnegative")
    if lam == mu and result != QPolynomial.one():
        raise AssertionError("K(lam, lam) must equal 1")
    return result


@dataclass(frozen=True)
class Tableau:
    """Semistandard tableau with at most three rows and entries in 1..3."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        shape = tuple(len(r) for r in self.rows)
        if len(shape) > 3:
            raise ValueError("tableaux are limited to three rows")
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise ValueError("row lengths must weakly decrease")
        for row in self.rows:
            if any(not (1 <= v <= 3) for v in row):
                raise ValueError("entries must be integers in 1..3")
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                raise ValueError("rows must weakly increase")
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def content(self) -> tuple[int, ...]:
        counts = Counter(v for row in self.rows for v in row)
        top = max(counts) if counts else 0
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def reading_word(self) -> tuple[int, ...]:
        """Row word: bottom row to top row, each left to right."""
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)


def _charge_standard(subword: list[int]) -> int:
    # subword lists the letters in word order; exactly one of each 1..m.
    position = {v: i for i, v in enumerate(subword)}
    index = 0
    total = 0
    for v in range(2, len(subword) + 1):
        if position[v] > position[v - 1]:
            index += 1
        total += index
    return total


def _extract_subword(word: list[int]) -> list[int]:
    """Positions of one cyclically-extracted standard subword.

    Scanning right to left (wrapping around), pick the first 1, then the
    first 2 left of it, and so on up to the largest letter present.
    """
    n = len(word)
    top = max(word)
    start = max(i for i, v in enumerate(word) if v == 1)
    chosen = [start]
    cursor = start
    for target in range(2, top + 1):
        order = list(range(cursor - 1, -1, -1)) + list(range(n - 1, cursor, -1))
        cursor = next(i for i in order if word[i] == target)
        chosen.append(cursor)
    return sorted(chosen)


def charge_word(word: tuple[int, ...]) -> int:
    """Charge of a word whose content is a partition."""
    counts = Counter(word)
    top = max(counts) if counts else 0
    content = [counts.get(v, 0) for v in range(1, top + 1)]
    if any(content[i] < content[i + 1] for i in range(len(content) - 1)) or 0 in content:
        raise ValueError("charge requires partition content")
    remaining = list(word)
    total = 0
    while remaining:
        positions = _extract_subword(remaining)
        total += _charge_standard([remaining[i] for i in positions])
        remaining = [v for i, v in enumerate(remaining) if i not in set(positions)]
    return total


def charge(tableau: Tableau) -> int:
    """Lascoux-Schuetzenberger charge statistic of a semistandard tableau."""
    return charge_word(tableau.reading_word())


def semistandard_tableaux(shape: tuple[int, ...], content: tuple[int, ...]) -> list[Tableau]:
    """All semistandard tableaux of the given shape and content, <= 3 rows."""
    shape = tuple(s for s in shape if s > 0)
    if len(shape) > 3 or len(content) > 3:
        raise ValueError("shapes and contents are limited to three rows")
    if sum(shape) != sum(content):
        raise ValueError("shape and content sizes differ")
    nvals = len(content)
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    rows = [[0] * s for s in shape]
    used = [0] * (nvals + 1)
    found: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            found.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, nvals + 1):
            if used[v] < content[v - 1]:
                rows[i][j] = v
                used[v] += 1
                fill(k + 1)
                used[v] -= 1
        rows[i][j] = 0

    fill(0)
    return found


def kostka_charge(shape: tuple[int, ...], content: tuple[int, ...]) -> QPolynomial:
    """Kostka-Foulkes polynomial as the charge generating function over tableaux."""
    shape = tuple(s for s in shape if s > 0)
    content = tuple(c for c in content if c > 0)
    if sum(shape) != sum(content):
        raise ValueError("shape and content sizes differ")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError("shape must be a partition")
    if any(content[i] < content[i + 1] for i in range(len(content) - 1)):
        raise ValueError("content must be a partition")
    result = QPolynomial.zero()
    for tab in semistandard_tableaux(shape, content):
        result = result + QPolynomial.monomial(charge(tab))
    return result


def partitions_of(size: int, max_rows: int) -> list[tuple[int, ...]]:
    """All partitions of ``size`` with at most ``max_rows`` rows, sorted."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, max_part: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_rows:
            return
        for part in range(min(remaining, max_part), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(size, size, [])
    return sorted(out)


def charge_alternating_agreement(max_size: int, rows: int) -> tuple[int, list]:
    """Compare the charge route against the alternating sum over a partition box.

    Runs over all pairs (shape, content) of partitions of equal size up to
    ``max_size`` with at most ``rows`` rows; returns the number of pairs
    checked and the list of disagreements (expected empty).
    """
    if rows not in (2, 3):
        raise ValueError("rows must be 2 or 3")
    system = root_system("A", rows - 1)
    checked = 0
    mismatches = []
    for size in range(0, max_size + 1):
        parts = partitions_of(size, rows)
        for shape in parts:
            for content in parts:
                via_charge = kostka_charge(shape, content)
                via_sum = kostka_foulkes(
                    system,
                    partition_to_weight(system, shape),
                    partition_to_weight(system, content),
                )
                checked += 1
                if via_charge != via_sum:
                    mismatches.append((shape, content, str(via_charge), str(via_sum)))
    return checked, mismatches


def partition_to_weight(system: RootSystem, partition: tuple[int, ...]) -> Weight:
    """Translate a partition to fundamental-weight coordinates by row differences."""
    _require_supported(system)
    parts = list(partition) + [0] * (system.rank + 1 - len(partition))
    if len(parts) > system.rank + 1:
        raise ValueError(f"partition has more than {system.rank + 1} rows")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition rows must weakly decrease")
    return weight(system, *(parts[i] - parts[i + 1] for i in range(system.rank)))


def weight_multiplicities(lam: Weight) -> dict[Weight, int]:
    """All weights of the irreducible module with highest weight lam."""
    _require_supported(lam.system)
    if not lam.is_dominant():
        raise ValueError("highest weight must be dominant")
    system = lam.system
    bound = int(2 * pair(lam, rho_check(system)))
    out: dict[Weight, int] = {}
    rng = range(bound + 1)
    boxes = [(c,) for c in rng] if system.rank == 1 else [(a, b) for a in rng for b in rng]
    for coords in boxes:
        mu = lam - weight(system, *system.root_weight_coords(coords))
        if not mu.is_dominant() or not dominance_leq(mu, lam):
            continue
        mult = freudenthal_multiplicity(lam, mu)
        if mult == 0:
            continue
        for nu in weyl_orbit(mu):
            out[nu] = mult
    return out


def tensor_decompose(system: RootSystem, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Decomposition of the tensor product of two irreducibles.

    Returns the multiset of dominant highest weights with multiplicities,
    computed by the reflection-shift rule applied to the weight system of
    the second factor.
    """
    _require_supported(system)
    if not lam.is_dominant() or not mu.is_dominant():
        raise ValueError("both highest weights must be dominant")
    rho_w = rho(system)
    result: Counter[Weight] = Counter()
    for nu, mult in weight_multiplicities(mu).items():
        shifted = lam + nu + rho_w
        sign = 1
        v = list(shifted.coords)
        dropped = False
        guard = 0
        while True:
            if any(c == 0 for c in v):
                dropped = True
                break
            idx = next((k for k, c in enumerate(v) if c < 0), None)
            if idx is None:
                break
            col = system.simple_root_weight_coords(idx)
            vi = v[idx]
            v = [a - vi * b for a, b in zip(v, col)]
            sign = -sign
            guard += 1
            if guard > 1000:  # pragma: no cover - safety net
                raise AssertionError("reflection shift did not terminate")
        if dropped:
            continue
        component = Weight(tuple(v), system) - rho_w
        result[component] += sign * mult
    if any(m < 0 for m in result.values()):
        raise AssertionError("tensor decomposition produced negative multiplicities")
    total = sum(m * weyl_dimension(w) for w, m in result.items())
    if total != weyl_dimension(lam) * weyl_dimension(mu):
        raise AssertionError("tensor decomposition dimension mismatch")
    return {w: m for w, m in result.items() if m > 0}
