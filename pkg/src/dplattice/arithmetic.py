"""Point-count lower bounds over finite fields and unirationality thresholds.

For the three possibly-minimal cases the count of points on the singular
surface is bounded below through the trace of Frobenius on the Picard
lattice: q^2 + q*t + 1 with t the worst trace compatible with the case,
minus a further q in case 1 (the resolution can add a rational curve).
Subtracting the worst-case count of ramification points of the degree-2
anticanonical map leaves points usable for the unirationality argument;
comparisons against the 4*sqrt(q) term are done exactly by squaring,
never in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt


class ArithmeticInputError(ValueError):
    pass


@dataclass(frozen=True)
class ArithmeticCase:
    """One of the three exceptional configurations, with its constants.

    min_trace is the minimum of the matching trace set of the group
    module; required_points is one more than a quarter of the free
    (-1)-curve count (32, 20 or 8), the number of off-ramification
    points that guarantees one avoids every generalized Eckardt point.
    """

    label: int
    min_trace: int
    count_drops_by_q: bool  # resolution may exceed the surface count by q
    free_curves: int

    @property
    def required_points(self) -> int:
        return self.free_curves // 4 + 1


CASES = {
    1: ArithmeticCase(1, -4, True, 32),
    2: ArithmeticCase(2, -4, False, 20),
    3: ArithmeticCase(3, 0, False, 8),
}


def _as_case(case) -> ArithmeticCase:
    if isinstance(case, ArithmeticCase):
        return case
    return CASES[int(case)]


@lru_cache(maxsize=None)
def characteristic_of(q: int) -> int:
    """The prime p with q = p^k, or raise."""
    if q < 2:
        raise ArithmeticInputError(f"{q} is not a prime power")
    for p in range(2, isqrt(q) + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            if q != 1:
                raise ArithmeticInputError(f"{q} is not a prime power")
            return p
    return q  # q itself is prime


def is_prime_power(q: int) -> bool:
    try:
        characteristic_of(q)
        return True
    except ArithmeticInputError:
        return False


@lru_cache(maxsize=8)
def prime_powers_up_to(n: int):
    """Sorted (q, characteristic) pairs for all prime powers 2 <= q <= n."""
    if n < 2:
        raise ArithmeticInputError("bound must be at least 2")
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            q = p
            while q <= n:
                out.append((q, p))
                q *= p
    out.sort()
    return tuple(out)


@dataclass(frozen=True)
class SqrtBound:
    """The exact quantity a + b*sqrt(q), with integer a, b >= 0."""

    a: int
    b: int
    q: int

    def ceil(self) -> int:
        if self.b == 0:
            return self.a
        s = self.b * self.b * self.q
        r = isqrt(s)
        return self.a + (r if r * r == s else r + 1)

    def __float__(self):
        return self.a + self.b * self.q ** 0.5

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt({self.q})"


def min_surface_points(q: int, case) -> int:
    """Lower bound on the rational point count of the singular surface."""
    case = _as_case(case)
    characteristic_of(q)
    bound = q * q + case.min_trace * q + 1
    if case.count_drops_by_q:
        bound -= q
    return bound


def ramification_point_bound(q: int, case, char2: bool) -> SqrtBound:
    """Upper bound on rational points of the ramification divisor.

    Away from characteristic 2 the branch quartic has geometric genus at
    most 2 in cases 1 and 2 (4*sqrt(q) + q + 2 and + 1 points) and is a
    conic pair in case 3 (2q + 2); in characteristic 2 the branch locus
    is a quadric with at most 2q + 1 points in every case.
    """
    case = _as_case(case)
    p = characteristic_of(q)
    if char2 != (p == 2):
        raise ArithmeticInputError(
            f"char2={char2} inconsistent with q={q} of characteristic {p}"
        )
    if char2:
        return SqrtBound(2 * q + 1, 0, q)
    if case.label == 1:
        return SqrtBound(q + 2, 4, q)
    if case.label == 2:
        return SqrtBound(q + 1, 4, q)
    return SqrtBound(2 * q + 2, 0, q)


def off_ramification_lower_bound(q: int, case, char2: bool) -> int:
    """Guaranteed points off the ramification divisor: the floor of
    min_surface_points - ramification_point_bound, evaluated exactly."""
    return min_surface_points(q, case) - ramification_point_bound(
        q, case, char2
    ).ceil()


def required_point_count(case) -> int:
    return _as_case(case).required_points


def unirationality_threshold(case, horizon: int = 10**6) -> int:
    """Least prime power q0 such that every prime power q >= q0 yields at
    least the required number of off-ramification points.

    Verified by scanning all prime powers up to the horizon; beyond it
    the bound q^2 - 7q - 4*sqrt(q) - 1 already exceeds every requirement
    and grows monotonically, so the scan is conclusive.
    """
    case = _as_case(case)
    need = case.required_points
    last_failure = None
    for q, p in prime_powers_up_to(horizon):
        if off_ramification_lower_bound(q, case, p == 2) < need:
            last_failure = q
    if last_failure is None:
        return 2
    return next(
        q for q, _ in prime_powers_up_to(horizon) if q > last_failure
    )
