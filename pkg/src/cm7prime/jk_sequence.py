"""The integer sequence J_k = N(1 + 2*alpha^k) and its congruence structure.

Writing t_k = alpha^k + conj(alpha)^k (the trace sequence, t_0 = 2, t_1 = 1,
t_{k+1} = t_k - 2*t_{k-1}), expanding the norm gives the closed form

    J_k = 1 + 2*t_k + 2^(k+2).

J_k satisfies the linear recurrence

    J_{k+4} = 4*J_{k+3} - 7*J_{k+2} + 8*J_{k+1} - 4*J_k

with seeds J_1..J_4 = 11, 11, 23, 67 (characteristic polynomial
(x - 1)(x - 2)(x^2 - x + 2)).  The recurrence is what makes streaming
J_k mod ell cheap, which drives both the sieve and the period finder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

RECURRENCE = (4, -7, 8, -4)  # J_{k+4} = 4 J_{k+3} - 7 J_{k+2} + 8 J_{k+1} - 4 J_k
SEEDS = (11, 11, 23, 67)  # J_1, J_2, J_3, J_4


@dataclass(frozen=True)
class JkValue:
    k: int
    value: int


def trace(k: int) -> int:
    """t_k = alpha^k + conj(alpha)^k.  Defined for k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    t_prev, t_cur = 2, 1  # t_0, t_1
    if k == 0:
        return t_prev
    for _ in range(k - 1):
        t_prev, t_cur = t_cur, t_cur - 2 * t_prev
    return t_cur


def jk_closed(k: int) -> JkValue:
    """J_k by the closed form 1 + 2*t_k + 2^(k+2).  k must be >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return JkValue(k, 1 + 2 * trace(k) + (1 << (k + 2)))


def jk_stream(k_max: int) -> Iterator[JkValue]:
    """Yield JkValue(1), ..., JkValue(k_max) via the four-term recurrence."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    window = list(SEEDS)
    for k in range(1, k_max + 1):
        if k <= 4:
            yield JkValue(k, window[k - 1])
            continue
        nxt = 4 * window[3] - 7 * window[2] + 8 * window[1] - 4 * window[0]
        window = [window[1], window[2], window[3], nxt]
        yield JkValue(k, nxt)


def jk_mod_stream(ell: int, k_max: int) -> Iterator[int]:
    """Yield J_1, ..., J_{k_max} reduced mod ell, streaming the recurrence.

    ell must be odd and >= 3: mod 2 the recurrence degenerates (every J_k
    is odd anyway) and the callers only ever sieve by odd primes.
    """
    if ell < 3 or ell % 2 == 0:
        raise ValueError("ell must be odd and >= 3")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    window = [s % ell for s in SEEDS]
    for k in range(1, k_max + 1):
        if k <= 4:
            yield window[k - 1]
            continue
        nxt = (4 * window[3] - 7 * window[2] + 8 * window[1] - 4 * window[0]) % ell
        window = [window[1], window[2], window[3], nxt]
        yield nxt


def period_mod(p: int) -> int:
    """Least m >= 1 with J_{k+m} = J_k (mod p) for all k, for odd prime p.

    The sequence mod p is purely periodic: the 4x4 window matrix of
    consecutive values has determinant -2^12 * 7, a unit mod p for every
    p other than 2 and 7, and for p = 7 the states still recur (period 3).
    Detection is by first recurrence of the initial 4-value window, with
    a hard cap slightly above p^4 as a defensive bound (the true period
    divides p^2 - 1 whenever p is an odd prime not 7).
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be odd and >= 3")
    initial = tuple(s % p for s in SEEDS)
    window = list(initial)
    cap = p * p * p * p + 8
    for m in range(1, cap):
        nxt = (4 * window[3] - 7 * window[2] + 8 * window[1] - 4 * window[0]) % p
        window = [window[1], window[2], window[3], nxt]
        if tuple(window) == initial:
            return m
    raise RuntimeError(f"no period found mod {p} within {cap} steps")


def forced_composite(k: int) -> bool:
    """True when a fixed small prime forces J_k composite.

    3 | J_k exactly when k = 0 (mod 8), and 5 | J_k exactly when
    k = 6 (mod 24).  Every member of both families exceeds its small
    divisor (the smallest are J_6 = 275 = 25 * 11 and J_8 = 963 = 9 * 107),
    so these k can be rejected before any modular arithmetic.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return k % 8 == 0 or k % 24 == 6
