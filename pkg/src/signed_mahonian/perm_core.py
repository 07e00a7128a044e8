"""
Permutations of S_n in one-line notation and their classical statistics.

Positions and values are 1-indexed, so ``Perm((2, 4, 1, 3)).window[0]`` is
pi(1) = 2.  Besides the per-permutation functions there is a vectorised path
(`sn_array`, `sn_stats`) that the brute-force oracles use to sweep all of S_n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import islice
from math import factorial
from typing import Iterator

import numpy as np

__all__ = [
    "Perm", "SN_CAP_ENV", "sn_cap", "iterate_sn", "inv", "descent_set", "maj",
    "last", "sign_perm", "append_digit", "sn_array", "sn_stats",
]

SN_CAP_ENV = "SIGNED_MAHONIAN_SN_CAP"
_DEFAULT_SN_CAP = 12


def sn_cap() -> int:
    """Largest n for which S_n may be enumerated (env override allowed)."""
    return int(os.environ.get(SN_CAP_ENV, _DEFAULT_SN_CAP))


def _check_n(n: int, cap: int, what: str) -> None:
    if n < 1:
        raise ValueError(f"{what} needs n >= 1, got {n}")
    if n > cap:
        raise ValueError(f"{what}: n={n} exceeds enumeration cap {cap}")


@dataclass(frozen=True)
class Perm:
    window: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(v) for v in self.window)
        if not w:
            raise ValueError("a permutation needs n >= 1")
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
        object.__setattr__(self, "window", w)

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.window)) + ")"


def _next_permutation(w: list[int]) -> bool:
    i = len(w) - 2
    while i >= 0 and w[i] >= w[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(w) - 1
    while w[j] <= w[i]:
        j -= 1
    w[i], w[j] = w[j], w[i]
    w[i + 1:] = reversed(w[i + 1:])
    return True


def _unrank(n: int, rank: int) -> list[int]:
    """The permutation at a given lexicographic rank."""
    pool = list(range(1, n + 1))
    out = []
    for k in range(n, 0, -1):
        idx, rank = divmod(rank, factorial(k - 1))
        out.append(pool.pop(idx))
    return out


def iterate_sn(n: int, start: int = 0, stop: int | None = None) -> Iterator[Perm]:
    """Yield S_n in lexicographic order, optionally only ranks [start, stop)."""
    _check_n(n, sn_cap(), "iterate_sn")
    total = factorial(n)
    stop = total if stop is None else min(stop, total)
    if not 0 <= start <= stop:
        raise ValueError("need 0 <= start <= stop")

    def gen():
        if start == stop:
            return
        w = _unrank(n, start)
        while True:
            yield Perm(tuple(w))
            if not _next_permutation(w):
                return

    return islice(gen(), stop - start)


def inv(p: Perm) -> int:
    w = p.window
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def descent_set(p: Perm) -> frozenset[int]:
    w = p.window
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def maj(p: Perm) -> int:
    return sum(descent_set(p))


def last(p: Perm) -> int:
    return p.window[-1] - 1


def sign_perm(p: Perm) -> int:
    return -1 if inv(p) % 2 else 1


def append_digit(p: Perm, k: int) -> Perm:
    """Append k as the new last digit, bumping every old digit >= k by one."""
    n = p.n + 1
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    return Perm(tuple(v if v < k else v + 1 for v in p.window) + (k,))


# ---------------------------------------------------------------------------
# vectorised sweep over all of S_n

def sn_array(n: int) -> np.ndarray:
    """All of S_n as an (n!, n) int8 array, rows in lexicographic order."""
    _check_n(n, sn_cap(), "sn_array")
    rows = np.zeros((1, 0), dtype=np.int8)  # S_0 on values 0..-1
    for size in range(1, n + 1):
        blocks = []
        for first in range(size):
            rest = rows + (rows >= first)
            head = np.full((rows.shape[0], 1), first, dtype=np.int8)
            blocks.append(np.hstack([head, rest.astype(np.int8)]))
        rows = np.vstack(blocks)
    return rows + 1


def inversions_array(w: np.ndarray, keys: np.ndarray | None = None) -> np.ndarray:
    """Row-wise inversion count, comparing `keys` (defaults to `w`)."""
    k = w if keys is None else keys
    n = k.shape[1]
    out = np.zeros(k.shape[0], dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            out += k[:, i] > k[:, j]
    return out


def major_index_array(keys: np.ndarray) -> np.ndarray:
    desc = keys[:, :-1] > keys[:, 1:]
    pos = np.arange(1, keys.shape[1], dtype=np.int64)
    return desc @ pos


def sn_stats(n: int) -> dict[str, np.ndarray]:
    """inv, maj and last for every permutation of S_n (lexicographic rows)."""
    w = sn_array(n)
    return {
        "window": w,
        "inv": inversions_array(w),
        "maj": major_index_array(w),
        "last": w[:, -1].astype(np.int64) - 1,
    }
