"""Command-line front end: polynomial queries, table sweeps, verification suites.

Output is deterministic: identical arguments (and seed) produce identical
bytes.  Exit codes: 0 all checks pass, 1 a verified invariant failed (with a
machine-readable failure list on stdout), 2 usage error.  The environment
variable SATAKE_KIT_THREADS caps the worker threads used for sweeps (default
sequential); ordering of emitted rows never depends on the execution order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import centralizer as cz
from . import graded, qanalog, realform, stalks
from .rootdata import root_system_from_label, weight


def _thread_map(fn, items):
    """Map preserving input order; parallel when SATAKE_KIT_THREADS > 1."""
    raw = os.environ.get("SATAKE_KIT_THREADS", "1")
    try:
        workers = max(1, int(raw))
    except ValueError:
        workers = 1
    items = list(items)
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _parse_family(args) -> realform.RealFormFamily:
    if args.family == "lorentz":
        if args.n is None:
            raise UsageError("--family lorentz requires --n")
        return realform.lorentz(args.n)
    return realform.octonionic()


def _parse_coords(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"bad coordinate list {text!r}; expected comma-separated integers")


class UsageError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Subcommands.


def _cmd_kostka(args) -> int:
    system = root_system_from_label(args.type)
    lam = weight(system, *_parse_coords(args.lam))
    mu = weight(system, *_parse_coords(args.mu))
    poly = qanalog.kostka_foulkes(system, lam, mu)
    if args.format == "json":
        sys.stdout.write(
            _dump_json(
                {
                    "type": system.label,
                    "lambda": list(lam.coords),
                    "mu": list(mu.coords),
                    "coefficients": {str(e): c for e, c in poly.coeffs.items()},
                    "pretty": str(poly),
                }
            )
        )
    else:
        sys.stdout.write(str(poly) + "\n")
    return 0


def _cmd_tensor(args) -> int:
    system = root_system_from_label(args.type)
    lam = weight(system, *_parse_coords(args.lam))
    mu = weight(system, *_parse_coords(args.mu))
    dec = qanalog.tensor_decompose(system, lam, mu)
    rows = sorted((w.coords, m) for w, m in dec.items())
    if args.format == "json":
        sys.stdout.write(
            _dump_json(
                {
                    "type": system.label,
                    "lambda": list(lam.coords),
                    "mu": list(mu.coords),
                    "summands": [
                        {"weight": list(coords), "multiplicity": m} for coords, m in rows
                    ],
                }
            )
        )
    else:
        parts = []
        for coords, m in rows:
            label = "(" + ",".join(str(c) for c in coords) + ")"
            parts.append(label if m == 1 else f"{m}*{label}")
        sys.stdout.write(" + ".join(parts) + "\n")
    return 0


def _cmd_stalks(args) -> int:
    fam = _parse_family(args)
    pairs = stalks.comparable_pairs(fam, args.lmax)
    rows = _thread_map(
        lambda pair_: (
            pair_[0].coords,
            pair_[1].coords,
            tuple(sorted(stalks.stalk_polynomial(fam, pair_[0], pair_[1]).items())),
        ),
        pairs,
    )
    table = stalks.StalkTable(family=fam, entries=tuple((r[:2], r[2]) for r in rows))
    if not stalks.parity_check(table) or not stalks.support_bounds_check(table):
        sys.stdout.write(_dump_json({"failures": ["stalk table failed parity/support"]}))
        return 1
    if args.format == "json":
        sys.stdout.write(_dump_json(stalks.table_to_json_obj(table, args.convention)))
    elif args.format == "csv":
        sys.stdout.write(stalks.table_to_csv(table, args.convention))
    else:
        for obj in stalks.table_to_json_obj(table, args.convention):
            lam = ",".join(str(c) for c in obj["lambda"])
            mu = ",".join(str(c) for c in obj["mu"])
            terms = "  ".join(f"H^{s['degree']}={s['dim']}" for s in obj["stalks"])
            sys.stdout.write(f"lambda=({lam}) mu=({mu}): {terms}\n")
    return 0


def _cmd_pairing_check(args) -> int:
    fam = _parse_family(args)
    failures = []
    checked = 0
    for lam in stalks.dominant_box(fam, args.lmax):
        checked += 1
        if not realform.check_pairing_identity(fam, lam):
            failures.append(list(lam.coords))
    report = {
        "family": fam.to_json(),
        "check": "pairing-identity",
        "checked": checked,
        "failures": failures,
    }
    sys.stdout.write(_dump_json(report))
    return 0 if not failures else 1


def _cmd_hilbert_check(args) -> int:
    fam = _parse_family(args)
    report = graded.cohomology_degree_report(fam)
    ext_ok = graded.ext_fiberproduct_hilbert_check(fam)
    ext_degrees = graded.ext_algebra_degrees(fam)
    payload = report.to_json()
    payload["checks"]["ext_hilbert"] = ext_ok
    payload["ext_generator_degrees"] = list(ext_degrees.degrees)
    payload["hilbert_series"] = ext_degrees.hilbert_series().to_json()
    sys.stdout.write(_dump_json(payload))
    return 0 if report.all_passed() and ext_ok else 1


def _cmd_centralizer_check(args) -> int:
    fam = _parse_family(args)
    report, ok = _centralizer_suite(fam, args.samples, args.seed)
    sys.stdout.write(_dump_json(report))
    return 0 if ok else 1


def _centralizer_suite(fam, samples: int, seed: int):
    import random

    scan = cz.regularity_scan(fam, cz.sample_points(fam, samples, seed))
    grid = [Fraction(k, 3) for k in range(1, 21)]
    points = [
        cz.cartan_point(fam, tuple(Fraction(j - 5, 4) for _ in range(fam.dual.rank)))
        for j in range(20)
    ]
    equivariance = all(
        cz.gm_equivariance_check(fam, x, pt) for x in grid for pt in points
    )
    symbolic = cz.gm_equivariance_symbolic(fam)
    rng = random.Random(seed)
    size = fam.dual.rank + 1
    nu_ok = True
    for _ in range(50):
        g = cz.random_det_one(size, rng)
        image = tuple(
            Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(fam.dual.rank)
        )
        pt = cz.cartan_point(fam, image)
        out, _ = cz.nu_map(fam, g, pt)
        if cz.char_poly_coeffs(out) != cz.char_poly_coeffs(cz.e_section(fam, pt)):
            nu_ok = False
    report = scan.to_json()
    report["equivariance"] = equivariance
    report["equivariance_symbolic"] = symbolic
    report["nu_preserves_char_poly"] = nu_ok
    ok = scan.all_regular and equivariance and symbolic and nu_ok
    return report, ok


def _cmd_verify_all(args) -> int:
    fam = _parse_family(args)
    lines = []
    failures = []

    def record(name: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        suffix = f" ({detail})" if detail else ""
        lines.append(f"{status} {name}{suffix}")
        if not ok:
            failures.append(name)

    # Pairing identity sweep.
    box = stalks.dominant_box(fam, args.lmax_pairing)
    pairing_ok = all(realform.check_pairing_identity(fam, lam) for lam in box)
    record("pairing-identity", pairing_ok, f"{len(box)} weights")

    # Degree multiset identities and the Ext Hilbert series.
    report = graded.cohomology_degree_report(fam)
    record("degree-multisets", report.all_passed())
    record("ext-hilbert-series", graded.ext_fiberproduct_hilbert_check(fam))

    # Weyl factorization and the minuscule paving.
    record("weyl-factorization", realform.weyl_factorization_check(fam))
    paving = realform.minuscule_paving(fam)
    record(
        "minuscule-paving",
        all(c % fam.n_x == 0 for c in paving),
        ",".join(str(c) for c in paving),
    )

    # Stalk sweep: parity and support bounds.
    pairs = stalks.comparable_pairs(fam, args.lmax)
    entries = _thread_map(
        lambda pair_: (
            (pair_[0].coords, pair_[1].coords),
            tuple(sorted(stalks.stalk_polynomial(fam, pair_[0], pair_[1]).items())),
        ),
        pairs,
    )
    table = stalks.StalkTable(family=fam, entries=tuple(entries))
    record("stalk-parity", stalks.parity_check(table), f"{len(pairs)} pairs")
    record("stalk-support-bounds", stalks.support_bounds_check(table))
    substitution_ok = all(
        stalks.q_substitution_view(fam, lam, mu).exponents()
        == tuple(fam.n_x // 2 * e for e in _kostka_exponents(fam, lam, mu))
        for lam, mu in pairs
    )
    record("stalk-substitution", substitution_ok)

    # Oracle equivalence on a moderate box.
    checked, mismatches = qanalog.charge_alternating_agreement(args.oracle_size, rows=2)
    checked3, mismatches3 = qanalog.charge_alternating_agreement(
        max(0, args.oracle_size - 3), rows=3
    )
    record(
        "oracle-equivalence",
        not mismatches and not mismatches3,
        f"{checked + checked3} pairs",
    )

    # Centralizer suite.
    _, cz_ok = _centralizer_suite(fam, args.samples, args.seed)
    record("centralizer-suite", cz_ok, f"{args.samples} samples, seed {args.seed}")

    for line in lines:
        sys.stdout.write(line + "\n")
    summary = {"family": fam.to_json(), "failures": failures, "seed": args.seed}
    sys.stdout.write(_dump_json(summary))
    return 0 if not failures else 1


def _kostka_exponents(fam, lam, mu):
    poly = qanalog.kostka_foulkes(
        fam.dual, realform.to_dual_weight(lam), realform.to_dual_weight(mu)
    )
    return poly.exponents()


# ---------------------------------------------------------------------------
# Argument parsing.


def _add_family_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--family", choices=("lorentz", "octonionic"), required=True, help="real-form family"
    )
    parser.add_argument("--n", type=int, default=None, help="Lorentz family parameter (n >= 2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satake-kit",
        description="Exact computations: Kostka-Foulkes polynomials, stalk tables, "
        "graded-degree and centralizer checks for two real-form families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kostka", help="Kostka-Foulkes polynomial for A1 or A2 weights")
    p.add_argument("--type", choices=("a1", "a2", "A1", "A2"), required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated coordinates")
    p.add_argument("--mu", required=True, help="comma-separated coordinates")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("tensor", help="tensor product decomposition for A1 or A2")
    p.add_argument("--type", choices=("a1", "a2", "A1", "A2"), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("stalks", help="stalk table sweep over a dominant box")
    _add_family_args(p)
    p.add_argument("--lmax", type=int, default=6, help="dominant box bound")
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="csv")
    p.add_argument(
        "--convention",
        choices=("perverse", "shifted"),
        default="perverse",
        help="degree normalization: top degree on the diagonal at -n_X<lam,rho> or 0",
    )
    p.set_defaults(func=_cmd_stalks)

    p = sub.add_parser("pairing-check", help="pairing identity sweep")
    _add_family_args(p)
    p.add_argument("--lmax", type=int, default=40)
    p.set_defaults(func=_cmd_pairing_check)

    p = sub.add_parser("hilbert-check", help="degree-multiset and Hilbert-series checks")
    _add_family_args(p)
    p.set_defaults(func=_cmd_hilbert_check)

    p = sub.add_parser("centralizer-check", help="regularity, scaling, and conjugation checks")
    _add_family_args(p)
    p.add_argument("--samples", type=int, default=120)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_centralizer_check)

    p = sub.add_parser("verify-all", help="run every verification suite for one family")
    _add_family_args(p)
    p.add_argument("--lmax", type=int, default=6, help="stalk sweep bound")
    p.add_argument("--lmax-pairing", type=int, default=40, help="pairing sweep bound")
    p.add_argument("--oracle-size", type=int, default=8, help="partition size for the oracle box")
    p.add_argument("--samples", type=int, default=120)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
