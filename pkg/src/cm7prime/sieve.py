"""Eliminate k in [1, n] whose J_k has a small prime factor.

For each odd prime ell <= L (2 and 7 never divide J_k), stream
J_k mod ell with the four-term recurrence and mark k eliminated when
the residue vanishes, guarded by J_k > ell so that an index whose J_k
IS the small prime survives.  Indices with J_k <= L are reported
separately so a caller can test them directly.

Three engines produce bit-identical reports:

  * "python": the literal jk_mod_stream per prime (reference),
  * "period": replicates the zero pattern once the residue sequence's
    period is detected (it divides ell^2 - 1 for primes other than 7),
  * "numpy": one vectorized recurrence step across all primes at once.

"auto" picks numpy when installed, else python.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

from .jk_sequence import SEEDS, jk_mod_stream, jk_stream


@dataclass(frozen=True)
class SieveReport:
    n: int
    limit: int
    survivor_mask: bytes  # indexed by k, entry 1 = survivor; index 0 unused
    per_prime: dict[int, int]  # raw hit counts; primes with zero hits omitted
    small_j_list: tuple[int, ...]  # k with J_k <= limit


def iter_primes(limit: int) -> Iterator[int]:
    """All primes <= limit by a segmented sieve, O(sqrt(limit)) memory."""
    if limit < 2:
        return
    yield 2
    root = isqrt(limit)
    # odd base primes up to root
    half = (root - 1) // 2  # flags for 3, 5, ..., root (odd only)
    flags = bytearray([1]) * half
    for i in range(half):
        if flags[i]:
            p = 2 * i + 3
            for j in range((p * p - 3) // 2, half, p):
                flags[j] = 0
    base = [2 * i + 3 for i in range(half) if flags[i]]
    yield from (p for p in base if p <= limit)
    lo = root + 1
    seg_size = max(root, 1 << 16)
    while lo <= limit:
        hi = min(lo + seg_size - 1, limit)
        seg = bytearray([1]) * (hi - lo + 1)
        for p in base:
            start = max(p * p, (lo + p - 1) // p * p)
            for m in range(start, hi + 1, p):
                seg[m - lo] = 0
        for i, flag in enumerate(seg):
            if flag and (lo + i) % 2 == 1:
                yield lo + i
        lo = hi + 1


def _small_j(n: int, limit: int) -> tuple[dict[int, int], int]:
    """({k: J_k for J_k <= limit}, largest such k or 0).  J_k is increasing."""
    small: dict[int, int] = {}
    for jv in jk_stream(n):
        if jv.value > limit:
            return small, jv.k - 1
        small[jv.k] = jv.value
    return small, n


def _engine_python(n: int, primes: list[int], small: dict[int, int],
                   kcap: int) -> tuple[bytearray, dict[int, int]]:
    elim = bytearray(n + 1)
    per_prime: dict[int, int] = {}
    for ell in primes:
        hits = 0
        for k, residue in enumerate(jk_mod_stream(ell, n), start=1):
            if residue == 0 and (k > kcap or small[k] > ell):
                hits += 1
                elim[k] = 1
        if hits:
            per_prime[ell] = hits
    return elim, per_prime


def _engine_period(n: int, primes: list[int], small: dict[int, int],
                   kcap: int) -> tuple[bytearray, dict[int, int]]:
    """Direct stream until the initial 4-window recurs, then replicate.

    If no period shows up within [1, n] the stream already covered the
    whole range, so the fallthrough is just the direct engine's answer.
    """
    elim = bytearray(n + 1)
    per_prime: dict[int, int] = {}
    for ell in primes:
        initial = tuple(s % ell for s in SEEDS)
        window: list[int] = []
        zeros: list[int] = []
        period = None
        for k, residue in enumerate(jk_mod_stream(ell, n), start=1):
            if residue == 0:
                zeros.append(k)
            window.append(residue)
            if len(window) > 4:
                window.pop(0)
            if k >= 5 and tuple(window) == initial:
                period = k - 4  # window after J_{m+4} equals (J_1..J_4)
                break
        hits = 0
        if period is None:
            for k in zeros:
                if k > kcap or small[k] > ell:
                    hits += 1
                    elim[k] = 1
        else:
            for z in (z for z in zeros if z <= period):
                for k in range(z, n + 1, period):
                    if k > kcap or small[k] > ell:
                        hits += 1
                        elim[k] = 1
        if hits:
            per_prime[ell] = hits
    return elim, per_prime


def _engine_numpy(n: int, primes: list[int], small: dict[int, int],
                  kcap: int) -> tuple[bytearray, dict[int, int]]:
    import numpy as np

    elim = bytearray(n + 1)
    if not primes:
        return elim, {}
    P = np.array(primes, dtype=np.int64)
    counts = np.zeros(len(P), dtype=np.int64)
    w = [np.full_like(P, s) % P for s in SEEDS]
    for k in range(1, min(4, n) + 1):
        hit = (w[k - 1] == 0) & (P < SEEDS[k - 1])
        if hit.any():
            elim[k] = 1
            counts += hit
    for k in range(5, n + 1):
        nxt = (4 * w[3] - 7 * w[2] + 8 * w[1] - 4 * w[0]) % P
        w = [w[1], w[2], w[3], nxt]
        hit = nxt == 0
        if k <= kcap:
            hit &= P < small[k]
        if hit.any():
            elim[k] = 1
            counts += hit
    per_prime = {int(p): int(c) for p, c in zip(primes, counts) if c}
    return elim, per_prime


_ENGINES = {
    "python": _engine_python,
    "period": _engine_period,
    "numpy": _engine_numpy,
}


def sieve_range(n: int, L: int, engine: str = "auto") -> SieveReport:
    """Sieve [1, n] by all odd primes ell <= L other than 7.

    n must be >= 4.  L = 2 is allowed and eliminates nothing.  The guard
    J_k > ell keeps any k whose J_k equals the sieving prime; k with
    J_k <= L land in small_j_list for the caller to test directly.
    """
    if n < 4:
        raise ValueError("n must be >= 4")
    if L < 2:
        raise ValueError("L must be >= 2")
    if engine == "auto":
        try:
            import numpy  # noqa: F401
            engine = "numpy"
        except ImportError:
            engine = "python"
    if engine not in _ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    primes = [p for p in iter_primes(L) if p not in (2, 7)]
    small, kcap = _small_j(n, L)
    elim, per_prime = _ENGINES[engine](n, primes, small, kcap)
    mask = bytearray(n + 1)
    for k in range(1, n + 1):
        mask[k] = 0 if elim[k] else 1
    return SieveReport(n, L, bytes(mask), per_prime, tuple(sorted(small)))


def survivors(report: SieveReport) -> list[int]:
    """The k in [1, n] not eliminated, ascending."""
    return [k for k in range(1, report.n + 1) if report.survivor_mask[k]]
