"""
Exact polynomial arithmetic over the integers.

Four value types live here:

* `IntPoly`    dense univariate polynomial in ``q``
* `TriPoly`    sparse polynomial in ``x, y, z``
* `CycloElem`  element of Z[t]/Phi_m(t), i.e. of Z[zeta] for a primitive m-th root
* `CycloPoly`  polynomial in ``q`` with `CycloElem` coefficients

All coefficients are Python ints, so nothing ever overflows.  Text rendering
uses ascending exponents and omits ``*``, e.g. ``1 - q + 2q^2`` or ``xy + z``;
`parse_terms` reads the same format back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping

__all__ = [
    "NotDivisible", "IntPoly", "TriPoly", "CycloElem", "CycloPoly",
    "render_terms", "parse_terms",
    "q_bracket", "scale_var", "q_factorial", "signed_q_factorial",
    "q_pochhammer", "q_binomial", "cyclotomic", "reduce_mod_cyclotomic",
    "exact_div_tri", "olive_qbinom_at_root", "qbinom_at_minus1",
]


class NotDivisible(ArithmeticError):
    """An exact division left a nonzero remainder."""


# ---------------------------------------------------------------------------
# text format

def _render_monomial(coeff: int, exps: tuple[int, ...], names: str) -> str:
    mono = "".join(
        v if e == 1 else f"{v}^{e}" for v, e in zip(names, exps) if e
    )
    mag = abs(coeff)
    if not mono:
        return str(mag)
    return mono if mag == 1 else f"{mag}{mono}"


def render_terms(terms: Mapping[tuple[int, ...], int], names: str) -> str:
    """Render ``{exponent tuple: coeff}`` in ascending exponent order."""
    items = sorted((e, c) for e, c in terms.items() if c)
    if not items:
        return "0"
    out = []
    for i, (exps, c) in enumerate(items):
        body = _render_monomial(c, exps, names)
        if i == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


_TERM_RE = re.compile(r"([+-]?)(\d*)((?:[a-z](?:\^\d+)?)*)")


def parse_terms(text: str, names: str) -> dict[tuple[int, ...], int]:
    """Inverse of `render_terms`; repeated monomials are summed."""
    s = re.sub(r"\s*([+-])\s*", r"\1", text.strip()).replace("*", "")
    if re.search(r"\s", s):
        raise ValueError(f"unexpected whitespace inside a term in {text!r}")
    if not s:
        raise ValueError("empty polynomial text")
    terms: dict[tuple[int, ...], int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing sign between terms in {text!r}")
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(1) == "-":
            coeff = -coeff
        exps = [0] * len(names)
        for var, e in re.findall(r"([a-z])(?:\^(\d+))?", m.group(3)):
            if var not in names:
                raise ValueError(f"unknown variable {var!r} in {text!r}")
            exps[names.index(var)] += int(e) if e else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
        pos = m.end()
    return {k: v for k, v in terms.items() if v}


# ---------------------------------------------------------------------------
# univariate

def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial in q; ``coeffs[k]`` is the coefficient of q^k."""
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> IntPoly:
        if not d:
            return cls()
        c = [0] * (max(d) + 1)
        for k, v in d.items():
            c[k] += v
        return cls(c)

    @classmethod
    def parse(cls, text: str, var: str = "q") -> IntPoly:
        return cls.from_dict({e[0]: c for e, c in parse_terms(text, var).items()})

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _lift(self, other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def divmod(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Long division by a divisor whose leading coefficient is +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] * lead
            if c:
                quot[k - d] = c
                for j, dj in enumerate(divisor.coeffs):
                    rem[k - d + j] -= c * dj
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, divisor: IntPoly) -> IntPoly:
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise NotDivisible(f"({self}) / ({divisor}) leaves remainder {rem}")
        return quot

    def to_terms(self) -> dict[tuple[int, ...], int]:
        return {(k,): c for k, c in enumerate(self.coeffs) if c}

    def render(self, var: str = "q") -> str:
        return render_terms(self.to_terms(), var)

    def __str__(self) -> str:
        return self.render()


def q_bracket(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 1:
        raise ValueError(f"[n]_q needs n >= 1, got {n}")
    return IntPoly((1,) * n)


def scale_var(p: IntPoly, c: int) -> IntPoly:
    """Substitute q -> c*q for c = +-1."""
    if c not in (1, -1):
        raise ValueError("scale must be +1 or -1")
    return IntPoly(a * c**k for k, a in enumerate(p.coeffs))


def q_factorial(n: int) -> IntPoly:
    if n < 1:
        raise ValueError(f"q-factorial needs n >= 1, got {n}")
    out = IntPoly.const(1)
    for i in range(1, n + 1):
        out = out * q_bracket(i)
    return out


def signed_q_factorial(n: int) -> IntPoly:
    """[1]_q [2]_{-q} [3]_q ... [n]_{(-1)^(n-1) q}."""
    if n < 1:
        raise ValueError(f"signed q-factorial needs n >= 1, got {n}")
    out = IntPoly.const(1)
    for i in range(1, n + 1):
        out = out * scale_var(q_bracket(i), (-1) ** (i - 1))
    return out


def q_pochhammer(n: int) -> IntPoly:
    """(q)_n = (1-q)(1-q^2)...(1-q^n), with (q)_0 = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = IntPoly.const(1)
    for i in range(1, n + 1):
        out = out * (1 - IntPoly.monomial(i))
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> IntPoly:
    if n < 0 or k < 0:
        raise ValueError("q-binomial needs n, k >= 0")
    if k > n:
        return IntPoly()
    return q_pochhammer(n).exact_div(q_pochhammer(k) * q_pochhammer(n - k))


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    if m < 1:
        raise ValueError("cyclotomic order must be >= 1")
    num = IntPoly.monomial(m) - 1
    den = IntPoly.const(1)
    for d in range(1, m):
        if m % d == 0:
            den = den * cyclotomic(d)
    return num.exact_div(den)


# ---------------------------------------------------------------------------
# Z[zeta] = Z[t] / Phi_m(t)

@dataclass(frozen=True)
class CycloElem:
    """Residue modulo Phi_m in the power basis 1, t, ..., t^(phi(m)-1)."""
    m: int
    coords: tuple[int, ...] = field(default=())

    def __post_init__(self):
        width = cyclotomic(self.m).degree
        c = tuple(int(a) for a in self.coords)
        if len(c) > width:
            raise ValueError("coords longer than deg Phi_m; use reduce_mod_cyclotomic")
        object.__setattr__(self, "coords", c + (0,) * (width - len(c)))

    @classmethod
    def const(cls, m: int, c: int) -> CycloElem:
        return cls(m, (c,))

    @classmethod
    def zeta_power(cls, m: int, k: int) -> CycloElem:
        return reduce_mod_cyclotomic(IntPoly.monomial(k % m), m)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_poly(self) -> IntPoly:
        return IntPoly(self.coords)

    def _lift(self, other):
        if isinstance(other, CycloElem):
            if other.m != self.m:
                raise ValueError(f"mixing orders {self.m} and {other.m}")
            return other
        if isinstance(other, int):
            return CycloElem.const(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloElem(self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.m, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return reduce_mod_cyclotomic(self.as_poly() * other.as_poly(), self.m)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return self.as_poly().render("t")


def reduce_mod_cyclotomic(p: IntPoly, m: int) -> CycloElem:
    _, rem = p.divmod(cyclotomic(m))
    return CycloElem(m, rem.coeffs)


@dataclass(frozen=True)
class CycloPoly:
    """Polynomial in q over Z[zeta_m]."""
    m: int
    coeffs: tuple[CycloElem, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        if any(e.m != self.m for e in c):
            raise ValueError("all coefficients must share the same m")
        while c and c[-1].is_zero():
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def image(cls, p: IntPoly, m: int) -> CycloPoly:
        """Map an integer polynomial in q into Z[zeta_m][q]."""
        return cls(m, tuple(CycloElem.const(m, c) for c in p.coeffs))

    def _zero(self) -> CycloElem:
        return CycloElem(self.m)

    def __getitem__(self, k: int) -> CycloElem:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self._zero()

    def _lift(self, other):
        if isinstance(other, CycloPoly):
            if other.m != self.m:
                raise ValueError(f"mixing orders {self.m} and {other.m}")
            return other
        if isinstance(other, IntPoly):
            return CycloPoly.image(other, self.m)
        if isinstance(other, int):
            return CycloPoly.image(IntPoly.const(other), self.m)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return CycloPoly(self.m, tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return CycloPoly(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CycloPoly(self.m)
        # accumulate in Z[t] and reduce once per output coefficient
        acc = [IntPoly() for _ in range(len(a) + len(b) - 1)]
        for i, ai in enumerate(a):
            pa = ai.as_poly()
            for j, bj in enumerate(b):
                acc[i + j] = acc[i + j] + pa * bj.as_poly()
        return CycloPoly(self.m, tuple(reduce_mod_cyclotomic(p, self.m) for p in acc))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            parts.append(f"({c}){mono}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# trivariate

Exps = tuple[int, int, int]


@dataclass(frozen=True)
class TriPoly:
    """Sparse polynomial in x, y, z with integer coefficients."""
    terms: Mapping[Exps, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            e = tuple(int(v) for v in e)
            if len(e) != 3 or min(e) < 0:
                raise ValueError(f"bad exponent triple {e}")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def const(cls, c: int) -> TriPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, ex: int = 0, ey: int = 0, ez: int = 0, c: int = 1) -> TriPoly:
        return cls({(ex, ey, ez): c})

    @classmethod
    def parse(cls, text: str) -> TriPoly:
        return cls(parse_terms(text, "xyz"))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = TriPoly.const(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _lift(self, other):
        if isinstance(other, TriPoly):
            return other
        if isinstance(other, int):
            return TriPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TriPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, int] = {}
        for (a1, b1, c1), u in self.terms.items():
            for (a2, b2, c2), v in other.terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, 0) + u * v
        return TriPoly(out)

    __rmul__ = __mul__

    def map_exponents(self, fn: Callable[[Exps], Exps]) -> TriPoly:
        """Monomial substitution; raises if an exponent would go negative."""
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            new = fn(e)
            if min(new) < 0:
                raise ValueError(f"monomial substitution produced {new} from {e}")
            out[new] = out.get(new, 0) + c
        return TriPoly(out)

    def specialize(self, x: int | None = None, y: int | None = None,
                   z: int | None = None) -> TriPoly:
        """Set any of the variables to an integer value."""
        vals = (x, y, z)
        out: dict[Exps, int] = {}
        for e, c in self.terms.items():
            key = []
            for v, k in zip(vals, e):
                if v is None:
                    key.append(k)
                else:
                    c *= v**k
                    key.append(0)
            key = tuple(key)
            out[key] = out.get(key, 0) + c
        return TriPoly(out)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def render(self) -> str:
        return render_terms(self.terms, "xyz")

    def __str__(self) -> str:
        return self.render()


def exact_div_tri(num: TriPoly) -> TriPoly:
    """Divide by (x - z), viewing `num` as a polynomial in z over Z[x, y].

    Synthetic division by the root z = x; the remainder num(z=x) must vanish.
    """
    by_z: dict[int, TriPoly] = {}
    for (a, b, c), v in num.terms.items():
        by_z.setdefault(c, TriPoly())
        by_z[c] = by_z[c] + TriPoly.monomial(a, b, 0, v)
    if not by_z:
        return TriPoly()
    x = TriPoly.monomial(1, 0, 0)
    d = max(by_z)
    quot: dict[int, TriPoly] = {}
    carry = TriPoly()
    for k in range(d, 0, -1):
        carry = by_z.get(k, TriPoly()) + x * carry
        quot[k - 1] = carry
    rem = by_z.get(0, TriPoly()) + x * carry
    if not rem.is_zero():
        raise NotDivisible(f"remainder {rem} dividing by (x - z)")
    # num = (z - x) * Q, so num / (x - z) = -Q
    out = TriPoly()
    for k, coeff in quot.items():
        out = out - coeff * TriPoly.monomial(0, 0, k)
    return out


def olive_qbinom_at_root(n: int, k: int, m: int) -> CycloElem:
    """[n choose k]_q at a primitive m-th root of unity via Olive's splitting."""
    if n < 0 or k < 0:
        raise ValueError("n, k must be nonnegative")
    if k > n:
        return CycloElem(m)
    a1, b1 = divmod(k, m)
    a2, b2 = divmod(n - k, m)
    return comb(a1 + a2, a1) * reduce_mod_cyclotomic(q_binomial(b1 + b2, b1), m)


def qbinom_at_minus1(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k % 2 and (n - k) % 2:
        return 0
    return comb(n // 2, k // 2)
