"""
Command-line front end.

    signed-mahonian dist   --group sn --stat maj --char sign -n 3
    signed-mahonian verify --identity gessel-simion --n-max 7
    signed-mahonian table  --family signed-mahonian --n-max 4

Exit codes: 0 all verified, 1 a mathematical mismatch, 2 usage error.
``--format json`` switches to one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import genfun as gf
from .genfun import CharacterSelector, GroupSelector
from .qpoly import (
    IntPoly, q_binomial, qbinom_at_minus1, olive_qbinom_at_root,
    reduce_mod_cyclotomic, render_terms,
)
from .signed_perm import OrderConvention

__all__ = ["VerifyReport", "IDENTITIES", "FAMILIES", "run_cell", "cells_for", "main"]

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class VerifyReport:
    identity: str
    params: dict[str, int]
    passed: bool
    lhs: str | None = None
    rhs: str | None = None
    elapsed_ms: int = 0
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        d = asdict(self)
        if not d["extra"]:
            del d["extra"]
        return json.dumps(d, sort_keys=True)

    def to_text(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{'PASS' if self.passed else 'FAIL'} {self.identity} {ps} ({self.elapsed_ms} ms)"]
        for k, v in self.extra.items():
            lines.append(f"    {k}: {v}")
        if self.lhs is not None:
            lines.append(f"    lhs: {self.lhs}")
            lines.append(f"    rhs: {self.rhs}")
        return "\n".join(lines)


def poly_json(p: IntPoly, var: str = "q") -> dict:
    return {"variable": var, "coeffs": list(p.coeffs)}


# ---------------------------------------------------------------------------
# identity checks; each returns (passed, lhs, rhs, extra)

def _cmp(lhs, rhs, extra=None):
    ok = lhs == rhs
    return ok, (None if ok else str(lhs)), (None if ok else str(rhs)), extra or {}


def _first_failure(pairs):
    """pairs: iterable of (label, lhs, rhs); report the first mismatch."""
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            return False, str(lhs), str(rhs), {"case": label}
    return True, None, None, {}


def _chk_macmahon(n, **_):
    closed = gf.macmahon_poly(n)
    return _first_failure([
        ("maj", gf.sn_distribution(n, "maj"), closed),
        ("inv", gf.sn_distribution(n, "inv"), closed),
    ])


def _chk_gessel_simion(n, **_):
    return _cmp(gf.sn_distribution(n, "maj", CharacterSelector.SIGN), gf.gessel_simion_poly(n))


def _chk_recurrence(n, **_):
    return _cmp(gf.dist_tri_recurrence(n), gf.dist_tri_bruteforce(n))


def _chk_gf_eps(n, eps, **_):
    return _cmp(gf.closed_form_gf(n, eps), gf.dist_tri_bruteforce(n).specialize(x=eps))


def _chk_last_indep(n, eps, **_):
    return _first_failure(
        (f"k={k}", gf.last_fixed_oracle(n, k, eps), gf.last_fixed_dist(n, k, eps))
        for k in range(1, n + 1)
    )


def _chk_poincare_b(n, **_):
    closed = gf.poincare_b_poly(n)
    return _first_failure([
        ("length", gf.bn_distribution(n, "length"), closed),
        ("fmaj", gf.bn_distribution(n, "fmaj"), closed),
    ])


def _chk_fmaj_equidist(n, **_):
    return _cmp(gf.bn_distribution(n, "fmaj"),
                gf.bn_distribution(n, "fmaj", order=OrderConvention.NATURAL))


def _chk_char(chi):
    def check(n, **_):
        return _cmp(gf.bn_distribution(n, "fmaj", chi), gf.signed_fmaj_closed(n, chi))
    return check


def _chk_un_factor(n, **_):
    gs_brute = gf.sn_distribution(n, "maj", CharacterSelector.SIGN)
    signed_sq = IntPoly.from_dict({2 * k: c for k, c in enumerate(gs_brute.coeffs) if c})
    return _first_failure([
        ("U_n oracle", gf.un_sign_neg_oracle(n), gf.un_sign_neg_gf(n)),
        ("B_n split", gf.un_sign_neg_gf(n) * signed_sq,
         gf.signed_fmaj_closed(n, CharacterSelector.SIGN)),
    ])


def _chk_olive(n, m, **_):
    return _first_failure(
        (f"k={k}", olive_qbinom_at_root(n, k, m), reduce_mod_cyclotomic(q_binomial(n, k), m))
        for k in range(n + 1)
    )


def _chk_qbinom_minus1(n, **_):
    return _first_failure(
        (f"k={k}", qbinom_at_minus1(n, k), q_binomial(n, k)(-1)) for k in range(n + 1)
    )


def _chk_root_factor(n, m, **_):
    lhs, rhs = gf._root_factorization_sides(n, m)
    return _cmp(lhs, rhs)


def _series_str(s) -> str:
    return render_terms(s, "qr")


def _chk_gordon_roselle(n, deg_cap, n_max, **_):
    prod, rhs = gf.gordon_roselle_sides(n_max, deg_cap)[n]
    ok = prod == rhs
    return ok, None if ok else _series_str(prod), None if ok else _series_str(rhs), {}


def _chk_subgroup(n, group, **_):
    g = GroupSelector(group)
    oracle, closed = gf.subgroup_oracle(g, n), gf.subgroup_dist(g, n)
    if oracle != closed:
        return False, str(oracle), str(closed), {}
    if any(c < 0 for c in closed.coeffs):
        return False, str(closed), "nonnegative coefficients", {}
    return True, None, None, {}


def _chk_order_remark(n, **_):
    ok, lhs, rhs, _ = _chk_fmaj_equidist(n)
    nat = gf.bn_distribution(n, "fmaj", CharacterSelector.SIGN, order=OrderConvention.NATURAL)
    closed = gf.signed_fmaj_closed(n, CharacterSelector.SIGN)
    extra = {"signed_differs": nat != closed}
    if nat != closed:
        extra["signed_natural"] = str(nat)
        extra["signed_closed"] = str(closed)
    return ok, lhs, rhs, extra


def _chk_order_remark_witness(n_max, **_):
    w = gf.order_remark_witness(min(n_max, 4))
    if w is None:
        return False, "no witness", "witness for some n <= 4", {}
    n, nat, closed = w
    return True, None, None, {"witness_n": n, "signed_natural": str(nat),
                              "signed_closed": str(closed)}


# identity -> (check, cell generator)
def _per_n(n_max, **_):
    return [{"n": n} for n in range(1, n_max + 1)]


def _per_n_eps(n_max, **_):
    return [{"n": n, "eps": e} for n in range(1, n_max + 1) for e in (1, -1)]


def _per_n_m(n_max, m, **_):
    return [{"n": n, "m": m} for n in range(1, n_max + 1)]


def _per_n_from0_m(n_max, m, **_):
    return [{"n": n, "m": m} for n in range(0, n_max + 1)]


def _per_n_from0(n_max, **_):
    return [{"n": n} for n in range(0, n_max + 1)]


def _per_n_group(n_max, **_):
    groups = ("an", "bn-plus", "dn", "c2-wr-an")
    return [{"n": n, "group": g} for n in range(1, n_max + 1) for g in groups]


def _per_n_deg(n_max, deg_cap, **_):
    return [{"n": n, "n_max": n_max, "deg_cap": deg_cap} for n in range(1, n_max + 1)]


def _order_remark_cells(n_max, **_):
    return _per_n(n_max) + [{"n_max": n_max, "summary": 1}]


def _chk_order_remark_any(summary=0, **kw):
    if summary:
        return _chk_order_remark_witness(**kw)
    return _chk_order_remark(**kw)


IDENTITIES: dict[str, tuple[Callable, Callable, bool]] = {
    # name: (check, cells, needs m)
    "macmahon": (_chk_macmahon, _per_n, False),
    "gessel-simion": (_chk_gessel_simion, _per_n, False),
    "recurrence": (_chk_recurrence, _per_n, False),
    "gf-eps": (_chk_gf_eps, _per_n_eps, False),
    "last-indep": (_chk_last_indep, _per_n_eps, False),
    "poincare-b": (_chk_poincare_b, _per_n, False),
    "fmaj-equidist": (_chk_fmaj_equidist, _per_n, False),
    "fm-sign": (_chk_char(CharacterSelector.SIGN), _per_n, False),
    "fm-neg": (_chk_char(CharacterSelector.NEG_CHAR), _per_n, False),
    "fm-sign-abs": (_chk_char(CharacterSelector.SIGN_ABS), _per_n, False),
    "un-factor": (_chk_un_factor, _per_n, False),
    "olive": (_chk_olive, _per_n_from0_m, True),
    "qbinom-minus1": (_chk_qbinom_minus1, _per_n_from0, False),
    "root-factor": (_chk_root_factor, _per_n_m, True),
    "gordon-roselle": (_chk_gordon_roselle, _per_n_deg, False),
    "subgroups": (_chk_subgroup, _per_n_group, False),
    "order-remark": (_chk_order_remark_any, _order_remark_cells, False),
}


def cells_for(identity: str, n_max: int, m: int | None = None,
              deg_cap: int | None = None) -> list[dict]:
    if identity not in IDENTITIES:
        raise UsageError(f"unknown identity {identity!r}")
    if n_max < 1:
        raise UsageError("--n-max must be >= 1")
    _, cells, needs_m = IDENTITIES[identity]
    if needs_m:
        if m is None or m < 1:
            raise UsageError(f"identity {identity!r} requires -m >= 1")
    if deg_cap is None:
        deg_cap = max(20, n_max**2)
    elif deg_cap < n_max**2:
        raise UsageError("--deg-cap must be at least n_max**2")
    return cells(n_max=n_max, m=m, deg_cap=deg_cap)


def run_cell(identity: str, params: dict) -> VerifyReport:
    check = IDENTITIES[identity][0]
    t0 = time.perf_counter()
    passed, lhs, rhs, extra = check(**params)
    ms = int((time.perf_counter() - t0) * 1000)
    shown = {k: v for k, v in params.items() if k != "summary"}
    return VerifyReport(identity, shown, passed, lhs, rhs, ms, extra)


def _run_cell_star(args):
    return run_cell(*args)


# ---------------------------------------------------------------------------
# tables

FAMILIES: dict[str, Callable[[int], IntPoly]] = {
    "mahonian": gf.macmahon_poly,
    "signed-mahonian": gf.gessel_simion_poly,
    "fmaj-b": gf.poincare_b_poly,
    "signed-fmaj-b": lambda n: gf.signed_fmaj_closed(n, CharacterSelector.SIGN),
    "subgroup-an": lambda n: gf.subgroup_dist(GroupSelector.AN, n),
    "subgroup-dn": lambda n: gf.subgroup_dist(GroupSelector.DN, n),
}


# ---------------------------------------------------------------------------
# commands

_S_STATS = ("maj", "inv")
_B_STATS = ("fmaj", "length")


def cmd_dist(args) -> tuple[dict, IntPoly]:
    group = GroupSelector(args.group)
    chi = CharacterSelector(args.char)
    order = OrderConvention(args.order)
    if args.n < 1:
        raise UsageError("-n must be >= 1")
    if group.is_type_b:
        if args.stat not in _B_STATS:
            raise UsageError(f"--stat {args.stat} is only defined for sn/an")
        if args.last is not None:
            raise UsageError("--last applies only to --group sn")
        poly = gf.bn_distribution(args.n, args.stat, chi, group, order)
    else:
        if args.stat not in _S_STATS:
            raise UsageError(f"--stat {args.stat} needs a B-type group")
        if chi not in (CharacterSelector.TRIVIAL, CharacterSelector.SIGN):
            raise UsageError(f"--char {args.char} needs a B-type group")
        if args.order != OrderConvention.NEG_REVERSED.value:
            raise UsageError("--order applies only to B-type groups")
        if args.last is not None:
            if group is not GroupSelector.SN:
                raise UsageError("--last applies only to --group sn")
            if not 1 <= args.last <= args.n:
                raise UsageError(f"--last must lie in 1..{args.n}")
        poly = gf.sn_distribution(args.n, args.stat, chi, group, last_digit=args.last)
    params = {"group": args.group, "stat": args.stat, "char": args.char, "n": args.n}
    if group.is_type_b and args.stat == "fmaj":
        params["order"] = args.order
    if args.last is not None:
        params["last"] = args.last
    return params, poly


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="signed-mahonian", description=__doc__.split("\n\n")[0])
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dist", help="brute-force distribution of a statistic")
    d.add_argument("--group", choices=[g.value for g in GroupSelector], default="sn")
    d.add_argument("--stat", choices=_S_STATS + _B_STATS, default="maj")
    d.add_argument("--char", choices=[c.value for c in CharacterSelector], default="trivial")
    d.add_argument("-n", type=int, required=True)
    d.add_argument("--order", choices=[o.value for o in OrderConvention],
                   default=OrderConvention.NEG_REVERSED.value)
    d.add_argument("--last", type=int, default=None, help="restrict to pi(n) = LAST")

    v = sub.add_parser("verify", help="check an identity against brute force")
    v.add_argument("--identity", required=True)
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("-m", type=int, default=None)
    v.add_argument("--deg-cap", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)

    t = sub.add_parser("table", help="closed-form polynomial table")
    t.add_argument("--family", choices=sorted(FAMILIES), required=True)
    t.add_argument("--n-max", type=int, required=True)

    for sp in (d, v, t):
        sp.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = sys.stdout
    try:
        if args.command == "dist":
            params, poly = cmd_dist(args)
            if args.format == "json":
                print(json.dumps({"command": "dist", "params": params,
                                  "poly": poly_json(poly)}, sort_keys=True), file=out)
            else:
                print(poly, file=out)
            return EXIT_OK

        if args.command == "table":
            if args.n_max < 1:
                raise UsageError("--n-max must be >= 1")
            fn = FAMILIES[args.family]
            for n in range(1, args.n_max + 1):
                poly = fn(n)
                if args.format == "json":
                    print(json.dumps({"family": args.family, "params": {"n": n},
                                      "poly": poly_json(poly)}, sort_keys=True), file=out)
                else:
                    print(poly, file=out)
            return EXIT_OK

        cells = cells_for(args.identity, args.n_max, args.m, args.deg_cap)
        jobs = [(args.identity, c) for c in cells]
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as ex:
                reports = list(ex.map(_run_cell_star, jobs))
        else:
            reports = [run_cell(*j) for j in jobs]
        for r in reports:
            print(r.to_json() if args.format == "json" else r.to_text(), file=out)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH
    except (UsageError, ValueError) as e:
        print(f"signed-mahonian: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
