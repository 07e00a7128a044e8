"""
Generating polynomials over S_n and B_n: brute-force tallies, the
inv/maj/last recurrence, the product formulas, and the root-of-unity checks.

Oracles never call the closed forms and vice versa.  Every brute-force
distribution is read off one cached joint tally per group (`sn_tally`,
`bn_tally`), which is built by sweeping the whole group once.
"""

from __future__ import annotations

import enum
from collections import Counter
from functools import lru_cache

import numpy as np

from .perm_core import sn_cap, sn_stats
from .qpoly import (
    CycloElem, CycloPoly, IntPoly, TriPoly, exact_div_tri, q_bracket,
    q_factorial, q_pochhammer, scale_var, signed_q_factorial,
)
from .signed_perm import OrderConvention, bn_blocks, bn_cap, iterate_un, neg, sign_bn

__all__ = [
    "GroupSelector", "CharacterSelector", "sn_tally", "bn_tally",
    "sn_distribution", "bn_distribution",
    "dist_tri_bruteforce", "dist_tri_recurrence", "closed_form_gf",
    "macmahon_poly", "gessel_simion_poly", "last_fixed_dist",
    "last_fixed_oracle", "poincare_b_poly", "signed_fmaj_closed",
    "un_sign_neg_gf", "un_sign_neg_oracle", "subgroup_dist", "subgroup_oracle",
    "a_n_bivariate", "a_n_at_root", "verify_root_factorization",
    "gordon_roselle_check", "gordon_roselle_sides", "order_remark_witness", "intpoly_to_tri",
]


class GroupSelector(enum.Enum):
    SN = "sn"
    AN = "an"
    BN = "bn"
    BN_PLUS = "bn-plus"
    DN = "dn"
    C2_WR_AN = "c2-wr-an"

    @property
    def is_type_b(self) -> bool:
        return self not in (GroupSelector.SN, GroupSelector.AN)


class CharacterSelector(enum.Enum):
    TRIVIAL = "trivial"
    SIGN = "sign"
    NEG_CHAR = "neg"
    SIGN_ABS = "sign-abs"


def _poly_from_counter(c: Counter) -> IntPoly:
    return IntPoly.from_dict({k: v for k, v in c.items() if v})


def intpoly_to_tri(p: IntPoly, var: int = 1) -> TriPoly:
    """Embed a q-polynomial as a TriPoly in x (0), y (1) or z (2)."""
    terms = {}
    for k, c in enumerate(p.coeffs):
        e = [0, 0, 0]
        e[var] = k
        terms[tuple(e)] = c
    return TriPoly(terms)


# ---------------------------------------------------------------------------
# brute-force tallies

def sn_tally(n: int) -> dict[tuple[int, int, int], int]:
    """Joint counts of (inv, maj, last) over S_n."""
    if n > sn_cap():
        raise ValueError(f"sn_tally: n={n} exceeds enumeration cap {sn_cap()}")
    return _sn_tally(n)


@lru_cache(maxsize=None)
def _sn_tally(n: int) -> dict[tuple[int, int, int], int]:
    st = sn_stats(n)
    cols = np.stack([st["inv"], st["maj"], st["last"]], axis=1)
    keys, counts = np.unique(cols, axis=0, return_counts=True)
    return {tuple(int(v) for v in k): int(c) for k, c in zip(keys, counts)}


def bn_tally(n: int) -> dict[tuple[int, int, int, int, int], int]:
    """Joint counts over B_n of (fmaj, fmaj_natural, length, neg, sign_abs).

    fmaj is taken in the flag-major order, fmaj_natural in the natural one.
    """
    if n > bn_cap():
        raise ValueError(f"bn_tally: n={n} exceeds enumeration cap {bn_cap()}")
    return _bn_tally(n)


@lru_cache(maxsize=None)
def _bn_tally(n: int) -> dict[tuple[int, int, int, int, int], int]:
    total: Counter = Counter()
    nat = bn_blocks(n, OrderConvention.NATURAL)
    for blk, blk_nat in zip(bn_blocks(n), nat):
        cols = np.stack([
            blk["fmaj"], blk_nat["fmaj"], blk["length"], blk["neg"], blk["sign_abs"],
        ], axis=1)
        keys, counts = np.unique(cols, axis=0, return_counts=True)
        for k, c in zip(keys, counts):
            total[tuple(int(v) for v in k)] += int(c)
    return dict(total)


_S_CHARS = (CharacterSelector.TRIVIAL, CharacterSelector.SIGN)


def sn_distribution(n: int, stat: str = "maj",
                    chi: CharacterSelector = CharacterSelector.TRIVIAL,
                    group: GroupSelector = GroupSelector.SN,
                    last_digit: int | None = None, eps: int | None = None) -> IntPoly:
    """Sum of chi(pi) q^stat(pi) over the chosen subset of S_n.

    `last_digit` restricts to pi(n) = last_digit; `eps` (if given) overrides
    the character with the weight eps^inv.
    """
    if stat not in ("maj", "inv"):
        raise ValueError(f"statistic {stat!r} is not defined on S_n")
    if group not in (GroupSelector.SN, GroupSelector.AN):
        raise ValueError(f"{group.value} is not a subgroup of S_n")
    if chi not in _S_CHARS:
        raise ValueError(f"character {chi.value!r} is not a character of S_n")
    out: Counter = Counter()
    for (i, m, l), c in sn_tally(n).items():
        if last_digit is not None and l != last_digit - 1:
            continue
        sgn = -1 if i % 2 else 1
        if group is GroupSelector.AN and sgn < 0:
            continue
        if eps is not None:
            w = eps**i
        else:
            w = sgn if chi is CharacterSelector.SIGN else 1
        out[m if stat == "maj" else i] += w * c
    return _poly_from_counter(out)


def bn_distribution(n: int, stat: str = "fmaj",
                    chi: CharacterSelector = CharacterSelector.TRIVIAL,
                    group: GroupSelector = GroupSelector.BN,
                    order: OrderConvention = OrderConvention.NEG_REVERSED) -> IntPoly:
    """Sum of chi(sigma) q^stat(sigma) over the chosen subgroup of B_n."""
    if stat not in ("fmaj", "length"):
        raise ValueError(f"statistic {stat!r} is not defined on B_n here")
    if not group.is_type_b:
        raise ValueError(f"{group.value} is not a subgroup of B_n")
    out: Counter = Counter()
    for (fm, fm_nat, length, ng, sabs), c in bn_tally(n).items():
        sgn = -1 if length % 2 else 1
        cneg = -1 if ng % 2 else 1
        if group is GroupSelector.BN_PLUS and sgn < 0:
            continue
        if group is GroupSelector.DN and cneg < 0:
            continue
        if group is GroupSelector.C2_WR_AN and sabs < 0:
            continue
        w = {
            CharacterSelector.TRIVIAL: 1,
            CharacterSelector.SIGN: sgn,
            CharacterSelector.NEG_CHAR: cneg,
            CharacterSelector.SIGN_ABS: sabs,
        }[chi]
        if stat == "length":
            e = length
        else:
            e = fm if order is OrderConvention.NEG_REVERSED else fm_nat
        out[e] += w * c
    return _poly_from_counter(out)


# ---------------------------------------------------------------------------
# trivariate f_n(x, y, z) = sum x^inv y^maj z^last

def dist_tri_bruteforce(n: int) -> TriPoly:
    return TriPoly(sn_tally(n))


@lru_cache(maxsize=None)
def dist_tri_recurrence(n: int) -> TriPoly:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > sn_cap():
        raise ValueError(f"n={n} exceeds cap {sn_cap()}")
    if n == 1:
        return TriPoly.const(1)
    prev = dist_tri_recurrence(n - 1)
    at_z1 = prev.specialize(z=1)
    # x^(n-1) * f_{n-1}(x, y, z/x); last(pi) <= n-2 keeps exponents >= 0
    shifted = prev.map_exponents(lambda e: (e[0] - e[2] + n - 1, e[1], e[2]))
    rhs = (
        (TriPoly.monomial(n, n - 1, 0) - TriPoly.monomial(0, 0, n)) * at_z1
        + (TriPoly.const(1) - TriPoly.monomial(0, n - 1, 0))
        * TriPoly.monomial(0, 0, 1) * shifted
    )
    return exact_div_tri(rhs)


def _bracket_factors(n: int, eps: int) -> IntPoly:
    """prod_{i=1}^{n-1} [i]_{eps^(i-1) q}."""
    out = IntPoly.const(1)
    for i in range(1, n):
        out = out * scale_var(q_bracket(i), eps ** (i - 1))
    return out


def closed_form_gf(n: int, eps: int) -> TriPoly:
    """Product formula in (q, z) stored as a TriPoly with q in the y slot."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    c = eps ** (n - 1)
    # [n]_{cq/z} z^(n-1), homogenised
    last_factor = TriPoly({(0, j, n - 1 - j): c**j for j in range(n)})
    return intpoly_to_tri(_bracket_factors(n, eps)) * last_factor


def macmahon_poly(n: int) -> IntPoly:
    return q_factorial(n)


def gessel_simion_poly(n: int) -> IntPoly:
    return signed_q_factorial(n)


def last_fixed_dist(n: int, k: int, eps: int) -> IntPoly:
    """Signed maj distribution over {pi : pi(n) = k}, closed form."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    c = eps ** (n - 1)
    return _bracket_factors(n, eps) * IntPoly.monomial(n - k, c ** (n - k))


def last_fixed_oracle(n: int, k: int, eps: int) -> IntPoly:
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    return sn_distribution(n, "maj", last_digit=k, eps=eps)


# ---------------------------------------------------------------------------
# type B

def poincare_b_poly(n: int) -> IntPoly:
    if n < 1:
        raise ValueError("n must be >= 1")
    out = IntPoly.const(1)
    for i in range(1, n + 1):
        out = out * q_bracket(2 * i)
    return out


def signed_fmaj_closed(n: int, chi: CharacterSelector) -> IntPoly:
    """prod [2i]_{s_i q} with the sign pattern s_i fixed by the character."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pattern = {
        CharacterSelector.TRIVIAL: lambda i: 1,
        CharacterSelector.SIGN: lambda i: (-1) ** i,
        CharacterSelector.NEG_CHAR: lambda i: -1,
        CharacterSelector.SIGN_ABS: lambda i: (-1) ** (i - 1),
    }[chi]
    out = IntPoly.const(1)
    for i in range(1, n + 1):
        out = out * scale_var(q_bracket(2 * i), pattern(i))
    return out


def un_sign_neg_gf(n: int) -> IntPoly:
    """(1+q^2)^(n/2) for even n, (1-q)(1+q^2)^((n-1)/2) for odd n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    half, odd = divmod(n, 2)
    out = (1 + IntPoly.monomial(2)) ** half
    return out * (1 - IntPoly.monomial(1)) if odd else out


def un_sign_neg_oracle(n: int) -> IntPoly:
    out: Counter = Counter()
    for tau in iterate_un(n):
        out[neg(tau)] += sign_bn(tau)
    return _poly_from_counter(out)


def _half(p: IntPoly) -> IntPoly:
    if any(c % 2 for c in p.coeffs):
        raise ArithmeticError(f"half-sum {p} has odd coefficients")
    return IntPoly(c // 2 for c in p.coeffs)


def subgroup_dist(g: GroupSelector, n: int) -> IntPoly:
    """Half-sum closed forms for the index-2 subgroups."""
    if g is GroupSelector.AN:
        return _half(macmahon_poly(n) + gessel_simion_poly(n))
    chi = {
        GroupSelector.BN_PLUS: CharacterSelector.SIGN,
        GroupSelector.DN: CharacterSelector.NEG_CHAR,
        GroupSelector.C2_WR_AN: CharacterSelector.SIGN_ABS,
    }.get(g)
    if chi is None:
        raise ValueError(f"{g.value} is not an index-2 subgroup")
    return _half(poincare_b_poly(n) + signed_fmaj_closed(n, chi))


def subgroup_oracle(g: GroupSelector, n: int) -> IntPoly:
    if g is GroupSelector.AN:
        return sn_distribution(n, "maj", group=g)
    if g in (GroupSelector.SN, GroupSelector.BN):
        raise ValueError(f"{g.value} is not an index-2 subgroup")
    return bn_distribution(n, "fmaj", group=g)


def order_remark_witness(n_max: int = 4):
    """First n <= n_max where the signed fmaj distribution in the natural
    order differs from the product formula.

    Returns ``(n, natural_order_poly, closed_poly)`` or None.
    """
    for n in range(1, n_max + 1):
        nat = bn_distribution(n, "fmaj", CharacterSelector.SIGN,
                              order=OrderConvention.NATURAL)
        closed = signed_fmaj_closed(n, CharacterSelector.SIGN)
        if nat != closed:
            return n, nat, closed
    return None


# ---------------------------------------------------------------------------
# A_n(t, q) and roots of unity

@lru_cache(maxsize=None)
def _inv_maj_counts(n: int) -> dict[tuple[int, int], int]:
    out: Counter = Counter()
    for (i, m, _), c in sn_tally(n).items():
        out[i, m] += c
    return dict(out)


def a_n_bivariate(n: int) -> TriPoly:
    """sum t^inv q^maj over S_n, stored with t in the x slot and q in y."""
    return TriPoly({(i, m, 0): c for (i, m), c in _inv_maj_counts(n).items()})


@lru_cache(maxsize=None)
def a_n_at_root(n: int, m: int) -> CycloPoly:
    """A_n(zeta_m, q), with a_0 = 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if n == 0:
        return CycloPoly.image(IntPoly.const(1), m)
    # collect integer coefficients per (maj, inv mod m), then reduce once
    buckets: Counter = Counter()
    for (i, mj), c in _inv_maj_counts(n).items():
        buckets[mj, i % m] += c
    deg = max(mj for mj, _ in buckets)
    coeffs = []
    for j in range(deg + 1):
        coeffs.append(sum(
            (c * CycloElem.zeta_power(m, r) for (mj, r), c in buckets.items() if mj == j),
            CycloElem(m),
        ))
    return CycloPoly(m, tuple(coeffs))


def _root_factorization_sides(n: int, m: int) -> tuple[CycloPoly, CycloPoly]:
    k, i = divmod(n, m)
    one_minus_qm = 1 - IntPoly.monomial(m)
    lhs = a_n_at_root(n, m) * q_pochhammer(i) * one_minus_qm**k
    rhs = a_n_at_root(i, m) * q_pochhammer(n)
    return lhs, rhs


def verify_root_factorization(n: int, m: int) -> bool:
    if n < 1 or m < 1:
        raise ValueError("n, m must be >= 1")
    lhs, rhs = _root_factorization_sides(n, m)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Gordon-Roselle product, truncated

Series = dict[tuple[int, int], int]


def _series_mul(a: Series, b: Series, cap: int) -> Series:
    out: Series = {}
    for (i1, j1), u in a.items():
        for (i2, j2), v in b.items():
            if i1 + i2 + j1 + j2 <= cap:
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + u * v
    return {k: v for k, v in out.items() if v}


def _inverse_pochhammer(n: int, cap: int, slot: int) -> Series:
    """1/(q)_n as a truncated series, in the q (slot 0) or r (slot 1) variable."""
    coeffs = [0] * (cap + 1)
    coeffs[0] = 1
    for i in range(1, n + 1):
        # multiply by 1/(1 - v^i)
        for d in range(i, cap + 1):
            coeffs[d] += coeffs[d - i]
    return {((d, 0) if slot == 0 else (0, d)): c for d, c in enumerate(coeffs) if c}


def product_side(n_max: int, deg_cap: int) -> list[Series]:
    """Coefficients of u^0..u^n_max in prod_{i,j>=0} 1/(1 - q^i r^j u)."""
    series: list[Series] = [{(0, 0): 1}] + [{} for _ in range(n_max)]
    for a in range(deg_cap + 1):
        for b in range(deg_cap + 1 - a):
            for k in range(1, n_max + 1):
                upd = dict(series[k])
                for (i, j), c in series[k - 1].items():
                    if i + j + a + b <= deg_cap:
                        key = (i + a, j + b)
                        upd[key] = upd.get(key, 0) + c
                series[k] = upd
    return series


def gordon_roselle_sides(n_max: int = 4, deg_cap: int = 20) -> dict[int, tuple[Series, Series]]:
    """For each n <= n_max: (u^n coefficient of the product,
    A_n(q, r) / ((q)_n (r)_n)), both truncated at total degree deg_cap."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if deg_cap < n_max**2:
        raise ValueError("deg_cap must be at least n_max**2")
    prod = product_side(n_max, deg_cap)
    out = {}
    for n in range(1, n_max + 1):
        a_n: Series = {k: c for k, c in _inv_maj_counts(n).items()
                       if sum(k) <= deg_cap}
        rhs = _series_mul(
            _series_mul(a_n, _inverse_pochhammer(n, deg_cap, 0), deg_cap),
            _inverse_pochhammer(n, deg_cap, 1), deg_cap,
        )
        out[n] = (prod[n], rhs)
    return out


def gordon_roselle_check(n_max: int = 4, deg_cap: int = 20) -> bool:
    return all(a == b for a, b in gordon_roselle_sides(n_max, deg_cap).values())

