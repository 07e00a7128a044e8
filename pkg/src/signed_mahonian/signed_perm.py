"""
Signed permutations (the hyperoctahedral group B_n).

A `SignedPerm` stores the window (sigma(1), ..., sigma(n)); sigma(-a) = -sigma(a)
is implicit.  Descent-based statistics depend on a total order of
[-n, n] minus 0, and both orders in use are available as `OrderConvention`:

* NEG_REVERSED:  -1 < -2 < ... < -n < 1 < ... < n   (flag-major order)
* NATURAL:       -n < ... < -1 < 1 < ... < n
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import product
from math import comb, factorial
from typing import Iterator

import numpy as np

from .perm_core import (
    Perm, inversions_array, iterate_sn, major_index_array, sn_array, sign_perm,
)

__all__ = [
    "SignedPerm", "OrderConvention", "BN_CAP_ENV", "bn_cap", "iterate_bn",
    "neg", "maj_signed", "fmaj", "length_bn", "sign_bn", "char_neg",
    "sign_abs", "un_sn_decompose", "compose", "iterate_un", "order_keys",
    "bn_blocks", "bn_order", "un_length_formula",
]

BN_CAP_ENV = "SIGNED_MAHONIAN_BN_CAP"
_DEFAULT_BN_CAP = 8


def bn_cap() -> int:
    return int(os.environ.get(BN_CAP_ENV, _DEFAULT_BN_CAP))


class OrderConvention(enum.Enum):
    NEG_REVERSED = "neg-reversed"
    NATURAL = "natural"


@dataclass(frozen=True)
class SignedPerm:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(v) for v in self.window)
        if not w:
            raise ValueError("a signed permutation needs n >= 1")
        if sorted(abs(v) for v in w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a signed permutation of 1..{len(w)}")
        object.__setattr__(self, "window", w)

    @classmethod
    def from_perm(cls, p: Perm) -> SignedPerm:
        return cls(p.window)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, a: int) -> int:
        v = self.window[abs(a) - 1]
        return v if a > 0 else -v

    def abs_perm(self) -> Perm:
        return Perm(tuple(abs(v) for v in self.window))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.window)) + ")"


def _key(v: int, n: int, order: OrderConvention) -> int:
    if order is OrderConvention.NATURAL:
        return v
    return v + n if v > 0 else -v


def order_keys(w: np.ndarray, order: OrderConvention) -> np.ndarray:
    """Integer sort keys realising `order` on an array of signed windows."""
    if order is OrderConvention.NATURAL:
        return w
    n = w.shape[-1]
    return np.where(w > 0, w + n, -w)


def iterate_bn(n: int) -> Iterator[SignedPerm]:
    """B_n ordered by |window| lexicographically, then by sign mask."""
    if n < 1:
        raise ValueError(f"iterate_bn needs n >= 1, got {n}")
    if n > bn_cap():
        raise ValueError(f"iterate_bn: n={n} exceeds enumeration cap {bn_cap()}")
    for p in iterate_sn(n):
        for mask in range(2**n):
            yield SignedPerm(tuple(
                -v if mask >> i & 1 else v for i, v in enumerate(p.window)
            ))


def neg(s: SignedPerm) -> int:
    return sum(1 for v in s.window if v < 0)


def maj_signed(s: SignedPerm, order: OrderConvention = OrderConvention.NEG_REVERSED) -> int:
    k = [_key(v, s.n, order) for v in s.window]
    return sum(i + 1 for i in range(len(k) - 1) if k[i] > k[i + 1])


def fmaj(s: SignedPerm, order: OrderConvention = OrderConvention.NEG_REVERSED) -> int:
    return 2 * maj_signed(s, order) + neg(s)


def length_bn(s: SignedPerm) -> int:
    """Coxeter length: natural-order inversions plus sum of |negative entries|."""
    w = s.window
    inversions = sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )
    return inversions + sum(-v for v in w if v < 0)


def sign_bn(s: SignedPerm) -> int:
    return -1 if length_bn(s) % 2 else 1


def char_neg(s: SignedPerm) -> int:
    return -1 if neg(s) % 2 else 1


def sign_abs(s: SignedPerm) -> int:
    return sign_perm(s.abs_perm())


def compose(tau: SignedPerm, pi: Perm | SignedPerm) -> SignedPerm:
    """The product tau*pi as functions: i -> tau(pi(i))."""
    pw = pi.window
    return SignedPerm(tuple(tau(v) for v in pw))


def un_sn_decompose(s: SignedPerm) -> tuple[SignedPerm, Perm]:
    """Split s = tau*pi with tau increasing in the flag-major order, pi in S_n.

    tau is the window sorted in NEG_REVERSED order; pi(i) is the rank of s(i).
    """
    keys = [_key(v, s.n, OrderConvention.NEG_REVERSED) for v in s.window]
    order = sorted(range(s.n), key=keys.__getitem__)
    tau = SignedPerm(tuple(s.window[i] for i in order))
    rank = [0] * s.n
    for r, i in enumerate(order):
        rank[i] = r + 1
    return tau, Perm(tuple(rank))


def iterate_un(n: int) -> Iterator[SignedPerm]:
    """U_n: one element per subset of {1..n} to negate, window sorted."""
    if n < 1:
        raise ValueError("n must be >= 1")
    for mask in product((False, True), repeat=n):
        vals = [-(i + 1) if m else i + 1 for i, m in enumerate(mask)]
        vals.sort(key=lambda v: _key(v, n, OrderConvention.NEG_REVERSED))
        yield SignedPerm(tuple(vals))


# ---------------------------------------------------------------------------
# vectorised sweep over B_n, one block per sign mask

def bn_blocks(n: int, order: OrderConvention = OrderConvention.NEG_REVERSED):
    """Yield per-sign-mask dicts of statistic arrays covering all of B_n.

    Each block holds n! rows: the signed windows plus neg, maj (under
    `order`), fmaj, length, sign, char_neg and sign_abs.
    """
    if n < 1:
        raise ValueError(f"bn_blocks needs n >= 1, got {n}")
    if n > bn_cap():
        raise ValueError(f"bn_blocks: n={n} exceeds enumeration cap {bn_cap()}")
    base = sn_array(n).astype(np.int64)
    abs_inv = inversions_array(base)
    sabs = np.where(abs_inv % 2, -1, 1)
    for mask in range(2**n):
        signs = np.array([-1 if mask >> i & 1 else 1 for i in range(n)], dtype=np.int64)
        w = base * signs
        negc = np.full(w.shape[0], bin(mask).count("1"), dtype=np.int64)
        m = major_index_array(order_keys(w, order))
        length = inversions_array(w) + np.where(w < 0, -w, 0).sum(axis=1)
        yield {
            "window": w,
            "neg": negc,
            "maj": m,
            "fmaj": 2 * m + negc,
            "length": length,
            "sign": np.where(length % 2, -1, 1),
            "char_neg": np.where(negc % 2, -1, 1),
            "sign_abs": sabs,
        }


def bn_order(n: int) -> int:
    return 2**n * factorial(n)


def un_length_formula(tau: SignedPerm) -> int:
    """C(k,2) + sum of |tau(i)| over the k negative entries, valid on U_n."""
    k = neg(tau)
    return comb(k, 2) + sum(abs(v) for v in tau.window[:k])
