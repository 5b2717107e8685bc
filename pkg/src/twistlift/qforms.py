"""Integral binary quadratic forms.

Reduction and class enumeration for both signatures, genus characters,
Heegner points, geodesics with their automorphs, the p-quantity that
vanishes on a geodesic, bounded-component indicators, and the finite form
sets entering rational period functions.

Forms are plain integer triples [a, b, c] of discriminant b^2 - 4ac.
Imprimitive forms are first-class citizens: class enumeration returns them
and stabilizer data is computed from the primitive core, which is what the
trace sums require.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import content, kronecker, pell_minimal

BOUNDARY_EPS = 1e-12


@dataclass(frozen=True, order=True)
class QuadForm:
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        return content(self.a, self.b, self.c)

    def primitive_core(self) -> "QuadForm":
        g = self.content
        return QuadForm(self.a // g, self.b // g, self.c // g)

    def value(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def apply(self, m: tuple[int, int, int, int]) -> "QuadForm":
        """Right action by M = [[p, q], [r, s]]: (Q o M)(x, y) = Q(px+qy, rx+sy)."""
        p, q, r, s = m
        a, b, c = self.a, self.b, self.c
        return QuadForm(
            a * p * p + b * p * r + c * r * r,
            2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
            a * q * q + b * q * s + c * s * s,
        )

    def __neg__(self) -> "QuadForm":
        return QuadForm(-self.a, -self.b, -self.c)

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


@dataclass(frozen=True)
class HeegnerPoint:
    z: complex
    form: QuadForm


@dataclass(frozen=True)
class GeodesicClass:
    """A closed geodesic: representative form plus the generator of its
    (orientation-preserving) stabilizer.

    The automorph is built from the Pell solution of the primitive core's
    discriminant; for an imprimitive form the full stabilizer is that of
    the core, not the smaller group the form's own discriminant would give.
    """

    representative: QuadForm
    automorph: tuple[int, int, int, int]
    pell_t: int
    pell_u: int

    @property
    def disc(self) -> int:
        return self.representative.disc

    @property
    def endpoints(self) -> tuple[float, float]:
        """(w, w') with w > w' for a > 0; the real roots of Q(x, 1)."""
        q = self.representative
        s = math.sqrt(q.disc)
        w = (-q.b + s) / (2 * q.a)
        wp = (-q.b - s) / (2 * q.a)
        return (w, wp) if w > wp else (wp, w)

    @property
    def center(self) -> float:
        q = self.representative
        return -q.b / (2 * q.a)

    @property
    def radius(self) -> float:
        q = self.representative
        return math.sqrt(q.disc) / (2 * abs(q.a))


# ---------------------------------------------------------------------------
# reduction


def _mat_mul(m1, m2):
    p1, q1, r1, s1 = m1
    p2, q2, r2, s2 = m2
    return (p1 * p2 + q1 * r2, p1 * q2 + q1 * s2, r1 * p2 + s1 * r2, r1 * q2 + s1 * s2)


IDENTITY = (1, 0, 0, 1)


def is_reduced_definite(q: QuadForm) -> bool:
    if not (abs(q.b) <= q.a <= q.c):
        return False
    if (abs(q.b) == q.a or q.a == q.c) and q.b < 0:
        return False
    return True


def reduce_definite(q: QuadForm) -> tuple[QuadForm, tuple[int, int, int, int]]:
    """Gauss reduction of a positive definite form.

    Returns (reduced, M) with q o M = reduced and M in SL2(Z).
    """
    if q.disc >= 0:
        raise ValueError("form must be definite (disc < 0)")
    if q.a <= 0:
        raise ValueError("need a > 0")
    m = IDENTITY
    cur = q
    while True:
        # translate b into (-a, a]
        k = -((cur.b + cur.a - 1) // (2 * cur.a))
        if k != 0:
            t = (1, k, 0, 1)
            cur = cur.apply(t)
            m = _mat_mul(m, t)
        if cur.c < cur.a or (cur.a == cur.c and cur.b < 0):
            s = (0, -1, 1, 0)
            cur = cur.apply(s)
            m = _mat_mul(m, s)
            continue
        break
    return cur, m


def is_reduced_indefinite(q: QuadForm) -> bool:
    """Classical criterion: |sqrt(D) - 2|a|| < b < sqrt(D), exact arithmetic."""
    d = q.disc
    if d <= 0 or q.b <= 0 or q.b * q.b >= d:
        return False
    # b > |sqrt D - 2|a||  <=>  (2|a| - b)^2 < D < (2|a| + b)^2
    two_a = 2 * abs(q.a)
    return (two_a - q.b) ** 2 < d < (two_a + q.b) ** 2


def rho_step(q: QuadForm) -> QuadForm:
    """One step of the reduction cycle operator on an indefinite form."""
    d = q.disc
    c = q.c
    if c == 0:
        raise ValueError("square discriminant (c = 0) has no cycle")
    sq = math.isqrt(d)
    two_c = 2 * abs(c)
    r = (-q.b) % two_c
    if c * c < d:
        # unique r = -b (2|c|) with sqrt(D) - 2|c| < r < sqrt(D)
        r += ((sq - r) // two_c) * two_c
    else:
        # unique r = -b (2|c|) with -|c| < r <= |c|
        if r > abs(c):
            r -= two_c
    return QuadForm(c, r, (r * r - d) // (4 * c))


def _indefinite_reduced_forms(d: int) -> list[QuadForm]:
    forms = []
    sq = math.isqrt(d)
    for b in range(1, sq + 1):
        if (d - b * b) % 4 != 0:
            continue
        n = (d - b * b) // 4
        if n <= 0:
            continue
        for a in range(1, n + 1):
            if n % a != 0:
                continue
            c = n // a
            for q in (QuadForm(a, b, -c), QuadForm(-a, b, c)):
                if is_reduced_indefinite(q):
                    forms.append(q)
    return forms


def class_representatives(d: int) -> list[QuadForm]:
    """One form per SL2(Z)-class of discriminant d (imprimitive included).

    Definite (d < 0): the reduced forms with a > 0.
    Indefinite (d > 0, nonsquare): one per reduction cycle, chosen with
    a > 0.  Square d is rejected (regularized geodesics are out of scope).
    """
    if d == 0 or d % 4 not in (0, 1):
        raise ValueError(f"{d} is not a discriminant")
    if d < 0:
        reps = []
        amax = math.isqrt(-d // 3) if d <= -3 else 0
        for a in range(1, amax + 1):
            for b in range(-a + 1, a + 1):
                if (b * b - d) % (4 * a) != 0:
                    continue
                c = (b * b - d) // (4 * a)
                if c < a:
                    continue
                if a == c and b < 0:
                    continue
                reps.append(QuadForm(a, b, c))
        return sorted(reps)
    if math.isqrt(d) ** 2 == d:
        raise ValueError("square discriminant: regularized cycles not supported")
    remaining = set(_indefinite_reduced_forms(d))
    reps = []
    while remaining:
        start = min(remaining)
        cycle = [start]
        cur = rho_step(start)
        while cur != start:
            cycle.append(cur)
            cur = rho_step(cur)
        for q in cycle:
            remaining.discard(q)
        reps.append(min(q for q in cycle if q.a > 0))
    return sorted(reps)


def class_number(d: int) -> int:
    return len(class_representatives(d))


def stabilizer_order(q: QuadForm) -> int:
    """|stabilizer in PSL2(Z)| of a definite form: 3 and 2 for the classes
    of core discriminant -3 and -4, else 1."""
    if q.disc >= 0:
        raise ValueError("stabilizer order applies to definite forms")
    core_disc = q.primitive_core().disc
    if core_disc == -3:
        return 3
    if core_disc == -4:
        return 2
    return 1


def heegner_point(q: QuadForm) -> HeegnerPoint:
    """Root of Q(z, 1) in the upper half-plane (needs disc < 0, a > 0)."""
    if q.disc >= 0 or q.a <= 0:
        raise ValueError("need a definite form with a > 0")
    z = complex(-q.b, math.sqrt(-q.disc)) / (2 * q.a)
    return HeegnerPoint(z, q)


def genus_character(delta: int, q: QuadForm) -> int:
    """Genus character chi_delta(q) for a fundamental delta dividing disc(q).

    0 when gcd(a, b, c, delta) > 1, else the Kronecker symbol (delta/n) at
    any value n represented by q with gcd(n, delta) = 1.
    """
    d = q.disc
    if delta == 0 or d % delta != 0:
        raise ValueError("delta must divide the discriminant")
    if (d // delta) % 4 not in (0, 1):
        raise ValueError("disc/delta must be a discriminant")
    if math.gcd(content(q.a, q.b, q.c), abs(delta)) > 1:
        return 0
    bound = 1
    while True:
        for x in range(-bound, bound + 1):
            for y in (-bound, bound) if abs(x) < bound else range(-bound, bound + 1):
                n = q.value(x, y)
                if n != 0 and math.gcd(n, abs(delta)) == 1:
                    return kronecker(delta, n)
        bound += 1


def automorph(q: QuadForm) -> tuple[int, int, int, int]:
    """Generator of the stabilizer of an indefinite form in SL2(Z).

    Built from the Pell solution of the primitive core's discriminant:
    M = [[(t - b0 u)/2, -c0 u], [a0 u, (t + b0 u)/2]] for the core
    [a0, b0, c0].  M has det 1, trace t and fixes q.
    """
    core = q.primitive_core()
    sol = pell_minimal(core.disc)
    t, u = sol.t, sol.u
    return (
        (t - core.b * u) // 2,
        -core.c * u,
        core.a * u,
        (t + core.b * u) // 2,
    )


def geodesic_data(q: QuadForm) -> GeodesicClass:
    """Geodesic attached to an indefinite form of nonsquare discriminant.

    a = 0 would mean a vertical geodesic, which forces a square
    discriminant and is rejected along with them.
    """
    d = q.disc
    if d <= 0:
        raise ValueError("need disc > 0")
    if math.isqrt(d) ** 2 == d:
        raise ValueError("square discriminant: vertical/regularized geodesics unsupported")
    if q.a == 0:
        raise ValueError("a = 0 implies a square discriminant")
    core = q.primitive_core()
    sol = pell_minimal(core.disc)
    return GeodesicClass(q, automorph(q), sol.t, sol.u)


def p_value(q: QuadForm, z: complex) -> float:
    """p(z) = -(a|z|^2 + b x + c)/y; vanishes exactly on the geodesic."""
    if z.imag <= 0:
        raise ValueError("need Im z > 0")
    return -(q.a * abs(z) ** 2 + q.b * z.real + q.c) / z.imag


def circle_value(q: QuadForm, z: complex) -> float:
    """a|z|^2 + b x + c (negative inside the semicircle when a > 0)."""
    return q.a * (z.real * z.real + z.imag * z.imag) + q.b * z.real + q.c


def indicator(q: QuadForm, z: complex) -> int:
    """1 iff z lies in the bounded component of H minus the geodesic.

    Points within BOUNDARY_EPS of the circle count as outside; callers
    probing two-sided limits must offset explicitly.
    """
    if q.a <= 0:
        raise ValueError("indicator defined for a > 0")
    v = circle_value(q, z)
    if abs(v) <= BOUNDARY_EPS:
        return 0
    return 1 if v < 0 else 0


def forms_containing(d: int, z: complex) -> list[QuadForm]:
    """All forms [a, b, c] of discriminant d > 0 with a > 0 whose bounded
    component contains z.  Finite: a < sqrt(d)/(2y), and b is confined to
    an interval of length ~ 2a * width of the circle above height y."""
    if z.imag <= 0:
        raise ValueError("need Im z > 0")
    x, y = z.real, z.imag
    out = []
    amax = int(math.sqrt(d) / (2 * y))
    for a in range(1, amax + 1):
        # need (x + b/2a)^2 < d/4a^2 - y^2
        rad2 = d / (4 * a * a) - y * y
        if rad2 <= 0:
            continue
        r = math.sqrt(rad2)
        # one unit of slack on each side against float rounding; the
        # indicator re-check below discards false candidates
        blo = math.ceil(2 * a * (-x - r)) - 1
        bhi = math.floor(2 * a * (-x + r)) + 1
        for b in range(blo, bhi + 1):
            if (b * b - d) % (4 * a) != 0:
                continue
            q = QuadForm(a, b, (b * b - d) // (4 * a))
            if indicator(q, z):
                out.append(q)
    return sorted(out)


def forms_S_period(d: int) -> list[QuadForm]:
    """All forms of discriminant d > 0 with c < 0 < a (the S period set).

    Finite since 4a|c| = d - b^2 <= d.
    """
    if d <= 0 or d % 4 not in (0, 1):
        raise ValueError("need a positive discriminant")
    if math.isqrt(d) ** 2 == d:
        raise ValueError("square discriminant not supported")
    out = []
    sq = math.isqrt(d)
    for b in range(-sq, sq + 1):
        if (d - b * b) % 4 != 0:
            continue
        n = (d - b * b) // 4
        for a in range(1, n + 1):
            if n % a == 0:
                out.append(QuadForm(a, b, -(n // a)))
    return sorted(out)
