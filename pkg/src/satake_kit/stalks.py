"""Stalk tables of intersection-cohomology complexes of spherical orbit closures.

For a dominant pair mu <= lam the stalk dimensions sit in cohomological
degrees -n_X*i - n_X*<lam, dual-rho-check>, with the coefficient of q^i in
the Kostka-Foulkes polynomial of the translated weights as the dimension.
Nonzero degrees therefore occupy a single residue class mod n_X and the
interval [-2a, -a] with a = n_X*<lam, dual-rho-check> (half the real orbit
dimension).

Degrees default to this normalization (nonpositive, top degree -a on the
diagonal); the table emitters can offset by +a to place the open-stratum
class in degree zero instead.
"""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .qanalog import QPolynomial, kostka_foulkes
from .realform import RealFormFamily, RealWeight, family_from_json, real_weight, rho_pairing, to_dual_weight
from .rootdata import dominance_leq, in_root_lattice

PairKey = tuple[tuple[int, ...], tuple[int, ...]]


def base_degree(fam: RealFormFamily, lam: RealWeight) -> int:
    """-n_X <lam, dual rho-check>: the top stalk degree, half the orbit dimension negated."""
    value = -fam.n_x * rho_pairing(fam, lam)
    if value.denominator != 1:
        raise ValueError("degree normalization must be integral")
    return int(value)


def dominance_gap(fam: RealFormFamily, lam: RealWeight, mu: RealWeight) -> str | None:
    """None when mu <= lam in dominance order, else a human-readable reason."""
    dual_lam, dual_mu = to_dual_weight(lam), to_dual_weight(mu)
    if not in_root_lattice(dual_lam - dual_mu):
        return "weights lie in different root-lattice cosets"
    if not dominance_leq(dual_mu, dual_lam):
        return "mu is not below lambda in dominance order"
    return None


def stalk_polynomial(fam: RealFormFamily, lam: RealWeight, mu: RealWeight) -> dict[int, int]:
    """Map cohomological degree -> stalk dimension at a point of the mu-orbit.

    Incomparable pairs produce an empty table (with a warning); non-dominant
    weights are rejected.
    """
    if not lam.is_dominant() or not mu.is_dominant():
        raise ValueError("both weights must be dominant")
    gap = dominance_gap(fam, lam, mu)
    if gap is not None:
        warnings.warn(f"empty stalk table: {gap}", stacklevel=2)
        return {}
    poly = kostka_foulkes(fam.dual, to_dual_weight(lam), to_dual_weight(mu))
    base = base_degree(fam, lam)
    return {base - fam.n_x * i: c for i, c in poly.coeffs.items()}


def q_substitution_view(fam: RealFormFamily, lam: RealWeight, mu: RealWeight) -> QPolynomial:
    """Kostka-Foulkes polynomial with q replaced by q**(n_X/2).

    One power of the substituted variable accounts for two cohomological
    degrees, so the stalk data reads off as a polynomial again (n_X is even
    in both families).
    """
    if fam.n_x % 2:
        raise AssertionError("n_X is even for the supported families")
    gap = dominance_gap(fam, lam, mu)
    if gap is not None:
        return QPolynomial.zero()
    poly = kostka_foulkes(fam.dual, to_dual_weight(lam), to_dual_weight(mu))
    return poly.scale_exponents(fam.n_x // 2)


@dataclass(frozen=True, eq=False)
class StalkTable:
    """Stalk dimensions for a sweep of dominant pairs of one family."""

    family: RealFormFamily
    entries: tuple[tuple[PairKey, tuple[tuple[int, int], ...]], ...]

    def as_dict(self) -> dict[PairKey, dict[int, int]]:
        return {key: dict(degrees) for key, degrees in self.entries}

    def pairs(self) -> list[PairKey]:
        return [key for key, _ in self.entries]


def dominant_box(fam: RealFormFamily, bound: int) -> list[RealWeight]:
    """Dominant real weights with coordinates bounded by ``bound``, sorted."""
    if fam.kind == "lorentz":
        return [real_weight(fam, m) for m in range(bound + 1)]
    return [real_weight(fam, a, b) for a in range(bound + 1) for b in range(a + 1)]


def comparable_pairs(fam: RealFormFamily, bound: int) -> list[tuple[RealWeight, RealWeight]]:
    """All pairs (lam, mu) from the dominant box with mu <= lam."""
    box = dominant_box(fam, bound)
    return [
        (lam, mu)
        for lam in box
        for mu in box
        if dominance_gap(fam, lam, mu) is None
    ]


def stalk_table(fam: RealFormFamily, bound: int) -> StalkTable:
    """Stalk tables for every comparable dominant pair in the box."""
    entries = []
    for lam, mu in comparable_pairs(fam, bound):
        degrees = stalk_polynomial(fam, lam, mu)
        entries.append(
            ((lam.coords, mu.coords), tuple(sorted(degrees.items())))
        )
    return StalkTable(family=fam, entries=tuple(entries))


def parity_check(table: StalkTable) -> bool:
    """Every nonzero entry's degree lies in the residue class of the base degree mod n_X.

    Tables produced by :func:`stalk_polynomial` satisfy this by
    construction; the check exists to validate externally loaded tables.
    """
    fam = table.family
    for (lam_coords, _mu), degrees in table.entries:
        lam = real_weight(fam, *lam_coords)
        base = base_degree(fam, lam)
        for degree, dim in degrees:
            if dim != 0 and (degree - base) % fam.n_x != 0:
                return False
    return True


def support_bounds_check(table: StalkTable) -> bool:
    """All degrees lie in [-2a, -a] with a = n_X <lam, dual rho-check>."""
    fam = table.family
    for (lam_coords, _mu), degrees in table.entries:
        lam = real_weight(fam, *lam_coords)
        base = base_degree(fam, lam)
        for degree, dim in degrees:
            if dim != 0 and not (2 * base <= degree <= base):
                return False
    return True


def _offset(fam: RealFormFamily, lam: RealWeight, convention: str) -> int:
    if convention == "perverse":
        return 0
    if convention == "shifted":
        # Offset by half the real orbit dimension: diagonal classes land in
        # degree zero.
        return -base_degree(fam, lam)
    raise ValueError(f"unknown degree convention {convention!r}")


def table_to_json_obj(table: StalkTable, convention: str = "perverse") -> list[dict]:
    """One JSON object per (lambda, mu) pair: {family, lambda, mu, stalks}."""
    fam = table.family
    out = []
    for (lam_coords, mu_coords), degrees in table.entries:
        lam = real_weight(fam, *lam_coords)
        shift = _offset(fam, lam, convention)
        out.append(
            {
                "family": fam.to_json(),
                "lambda": list(lam_coords),
                "mu": list(mu_coords),
                "stalks": [
                    {"degree": degree + shift, "dim": dim}
                    for degree, dim in sorted(degrees)
                ],
            }
        )
    return out


def table_from_json(objects: list[dict]) -> StalkTable:
    """Rebuild a table from the JSON schema (for external validation)."""
    if not objects:
        raise ValueError("empty table payload")
    fam = family_from_json(objects[0]["family"])
    entries = []
    for obj in objects:
        key = (tuple(obj["lambda"]), tuple(obj["mu"]))
        degrees = tuple(sorted((int(s["degree"]), int(s["dim"])) for s in obj["stalks"]))
        entries.append((key, degrees))
    return StalkTable(family=fam, entries=tuple(entries))


def table_to_csv(table: StalkTable, convention: str = "perverse") -> str:
    """CSV with columns (lambda, mu, degree, dim); weights comma-joined and quoted."""
    fam = table.family
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["lambda", "mu", "degree", "dim"])
    for (lam_coords, mu_coords), degrees in table.entries:
        lam = real_weight(fam, *lam_coords)
        shift = _offset(fam, lam, convention)
        for degree, dim in sorted(degrees):
            writer.writerow(
                [
                    ",".join(str(c) for c in lam_coords),
                    ",".join(str(c) for c in mu_coords),
                    degree + shift,
                    dim,
                ]
            )
    return buf.getvalue()
