"""Independent test oracles: slow, obvious, and nothing shared with the prover.

Everything here recomputes results by a different route than the production
pipeline: builtin pow instead of the counted context, the full affine
chord-tangent group law instead of x-only doubling, trial division and
Miller-Rabin instead of the curve criterion.  Oracles are desk-scale by
design; the test suite keeps moduli small enough that brute force stays
obviously correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

# Strong-probable-prime bases proven sufficient for all N < 3.317e24
# (Sorenson-Webster), hence deterministic for anything a unit test feeds in.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class AffinePoint:
    """Affine point on E_a: y^2 = x^3 - 35 a^2 x - 98 a^3 over F_p.

    The identity is represented by None wherever a point is expected.
    """

    x: int
    y: int


def trial_division(N: int, bound: int) -> int | None:
    """Smallest prime factor of N that is <= bound and < N, or None."""
    if N < 2:
        raise ValueError("N must be >= 2")
    for f in (2, 3):
        if f <= bound and f < N and N % f == 0:
            return f
    f = 5
    # 6k+-1 wheel; inside the loop f*f <= N guarantees f, f+2 < N
    while f <= bound and f * f <= N:
        if N % f == 0:
            return f
        if f + 2 <= bound and N % (f + 2) == 0:
            return f + 2
        f += 6
    return None


def probable_prime(N: int) -> bool:
    """Miller-Rabin with the fixed base set above; deterministic < 3.3e24."""
    if N < 3 or N % 2 == 0:
        raise ValueError("N must be odd and >= 3")
    if N < 41:
        return N in {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}
    d = N - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, N)
        if x == 1 or x == N - 1:
            continue
        for _ in range(s - 1):
            x = x * x % N
            if x == N - 1:
                break
        else:
            return False
    return True


def curve_rhs(x: int, a: int, p: int) -> int:
    return (x * x * x - 35 * a * a * x - 98 * a ** 3) % p


def on_curve(P: AffinePoint | None, a: int, p: int) -> bool:
    if P is None:
        return True
    return P.y * P.y % p == curve_rhs(P.x, a, p)


def _check_curve_modulus(a: int, p: int) -> None:
    # disc(E_a) = -2^12 * 7^3 * a^6: good reduction needs p odd, not 7, p∤a
    if p < 3 or p == 7 or a % p == 0:
        raise ValueError(f"p={p} divides the discriminant of E_{a}")


def weier_add(P: AffinePoint | None, Q: AffinePoint | None, a: int,
              p: int) -> AffinePoint | None:
    """Chord-tangent addition on E_a over F_p."""
    if P is None:
        return Q
    if Q is None:
        return P
    if P.x == Q.x:
        if (P.y + Q.y) % p == 0:
            return None
        lam = (3 * P.x * P.x - 35 * a * a) * pow(2 * P.y, -1, p) % p
    else:
        lam = (Q.y - P.y) * pow(Q.x - P.x, -1, p) % p
    x3 = (lam * lam - P.x - Q.x) % p
    return AffinePoint(x3, (lam * (P.x - x3) - P.y) % p)


def weier_scalar_mult(e: int, P: AffinePoint | None, a: int,
                      p: int) -> AffinePoint | None:
    """e*P by double-and-add; the reference for every order claim in tests."""
    _check_curve_modulus(a, p)
    if P is not None and not on_curve(P, a, p):
        raise ValueError("point is not on the curve")
    if e < 0:
        e = -e
        if P is not None:
            P = AffinePoint(P.x, (-P.y) % p)
    acc: AffinePoint | None = None
    while e:
        if e & 1:
            acc = weier_add(acc, P, a, p)
        P = weier_add(P, P, a, p)
        e >>= 1
    return acc


def alpha_endomorphism(P: AffinePoint | None, a: int, d: int,
                       p: int) -> AffinePoint | None:
    """The degree-2 endomorphism alpha of E_a, with sqrt(-7) := d.

    alpha(x, y) = ( (2x^2 + a(7-d)x + a^2(-7-21d)) / ((d-3)x + a(5d-7)),
                    y (2x^2 + a(14-2d)x + a^2(28+14d))
                      / (-(5+d)x^2 - a(42+2d)x - a^2(77-7d)) ).

    The conjugate endomorphism is this map with d replaced by -d, and the
    composition of the two is multiplication by 2.  A vanishing
    x-denominator is the map's pole (P in the kernel, a 2-torsion point):
    the image is the identity.
    """
    _check_curve_modulus(a, p)
    if d * d % p != (-7) % p:
        raise ValueError("d^2 != -7 mod p")
    if P is None:
        return None
    x, y = P.x % p, P.y % p
    xden = ((d - 3) * x + a * (5 * d - 7)) % p
    if xden == 0:
        return None
    xnum = (2 * x * x + a * (7 - d) * x + a * a * (-7 - 21 * d)) % p
    yden = (-(5 + d) * x * x - a * (42 + 2 * d) * x - a * a * (77 - 7 * d)) % p
    if yden == 0:
        raise ArithmeticError("y-denominator vanished away from the pole")
    ynum = y * (2 * x * x + a * (14 - 2 * d) * x + a * a * (28 + 14 * d)) % p
    return AffinePoint(xnum * pow(xden, -1, p) % p,
                       ynum * pow(yden, -1, p) % p)


def sqrt_mod(n: int, p: int) -> int | None:
    """Square root mod a prime p = 3 (mod 4), or None if n is a non-residue."""
    if p % 4 != 3:
        raise ValueError("only p = 3 mod 4 supported")
    n %= p
    r = pow(n, (p + 1) // 4, p)
    return r if r * r % p == n else None


def enumerate_points(a: int, p: int) -> Iterator[AffinePoint | None]:
    """Every point of E_a(F_p), identity first.  Desk-scale p only."""
    _check_curve_modulus(a, p)
    yield None
    for x in range(p):
        r = curve_rhs(x, a, p)
        if r == 0:
            yield AffinePoint(x, 0)
            continue
        y = sqrt_mod(r, p)
        if y is not None:
            yield AffinePoint(x, y)
            yield AffinePoint(x, p - y)
