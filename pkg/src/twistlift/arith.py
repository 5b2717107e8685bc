"""Integer and character primitives.

Kronecker symbol, fundamental-discriminant tests, divisor enumeration and
the minimal solution of t^2 - D*u^2 = 4.  Everything here is exact integer
arithmetic; inputs are desk-scale but intermediates (Pell solutions) may be
arbitrarily large, so no fixed-width types anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def kronecker(n: int, m: int) -> int:
    """Kronecker symbol (n/m), defined for all integers m (including m <= 0).

    Completely multiplicative in m; (n/0) is 1 for n = +-1 and 0 otherwise.
    """
    if m == 0:
        return 1 if n in (1, -1) else 0
    result = 1
    if m < 0:
        m = -m
        if n < 0:
            result = -result
    # factor out twos: (n/2) = 0, 1, -1 for n even, n = +-1 (8), n = +-3 (8)
    if m % 2 == 0:
        if n % 2 == 0:
            return 0
        while m % 2 == 0:
            m //= 2
            if n % 8 in (3, 5):
                result = -result
    # now m is odd and positive; apply reciprocity as in the Jacobi symbol
    n %= m
    while n != 0:
        while n % 2 == 0:
            n //= 2
            if m % 8 in (3, 5):
                result = -result
        n, m = m, n
        if n % 4 == 3 and m % 4 == 3:
            result = -result
        n %= m
    return result if m == 1 else 0


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def is_discriminant(d: int) -> bool:
    """True iff d = 0 or 1 mod 4 (and d != 0)."""
    return d != 0 and d % 4 in (0, 1)


def is_fundamental(d: int) -> bool:
    """True iff d is a fundamental discriminant (d = 1 counts, as the
    trivial one)."""
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


@dataclass(frozen=True)
class Discriminant:
    """An integer = 0 or 1 mod 4, tagged with fundamentality.

    value = 1 is representable but rejected by the lift machinery (the
    untwisted case is out of scope); construct it only for bookkeeping.
    """

    value: int

    def __post_init__(self):
        if not is_discriminant(self.value):
            raise ValueError(f"{self.value} is not = 0 or 1 mod 4")

    @property
    def is_fundamental(self) -> bool:
        return is_fundamental(self.value)

    @property
    def usable_twist(self) -> bool:
        """True iff usable as the twist of a lift: fundamental and > 1."""
        return self.value > 1 and self.is_fundamental


@dataclass(frozen=True)
class PellSolution:
    """Minimal t, u > 0 with t^2 - d*u^2 = 4."""

    t: int
    u: int
    d: int

    def __post_init__(self):
        if self.t * self.t - self.d * self.u * self.u != 4:
            raise ValueError("not a solution of t^2 - d u^2 = 4")

    @property
    def epsilon(self) -> float:
        """The unit (t + u*sqrt(d))/2 > 1 as a float."""
        return (self.t + self.u * math.sqrt(self.d)) / 2

    def log_epsilon(self) -> float:
        return math.log(self.epsilon)


def _pell_one(d: int) -> tuple[int, int]:
    """Fundamental solution of x^2 - d*y^2 = 1 by continued fractions."""
    a0 = math.isqrt(d)
    m, den, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    while p * p - d * q * q != 1:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return p, q


def pell_minimal(d: int) -> PellSolution:
    """Minimal positive solution of t^2 - d*u^2 = 4 for d > 0 nonsquare.

    For d = 0 mod 4 this reduces to the Pell equation for d/4.  For odd
    discriminants the fundamental solution may be "half-integral" in the
    sense that (t + u sqrt d)/2 has t, u odd; it is then the cube root of
    the x^2 - d y^2 = 1 fundamental unit, which pins t via t^3 - 3t = 2x.
    """
    if d <= 0:
        raise ValueError("d must be positive")
    if math.isqrt(d) ** 2 == d:
        raise ValueError("d must not be a perfect square")
    if d % 4 == 0:
        x, y = _pell_one(d // 4)
        return PellSolution(2 * x, y, d)
    if d % 4 != 1:
        raise ValueError("d must be a discriminant (0 or 1 mod 4)")
    x, y = _pell_one(d)
    # search for integer t with t^3 - 3t = 2x (monotone for t >= 2)
    lo, hi = 2, 2
    while hi**3 - 3 * hi < 2 * x:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 - 3 * mid < 2 * x:
            lo = mid + 1
        else:
            hi = mid
    t = lo
    if t**3 - 3 * t == 2 * x and (t * t - 4) % d == 0:
        u2 = (t * t - 4) // d
        u = math.isqrt(u2)
        if u * u == u2 and u > 0 and u * (t * t - 1) == 2 * y:
            return PellSolution(t, u, d)
    return PellSolution(2 * x, 2 * y, d)


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def content(a: int, b: int, c: int) -> int:
    """gcd of the three coefficients of a form (content), at least 1."""
    return math.gcd(math.gcd(abs(a), abs(b)), abs(c)) or 1
