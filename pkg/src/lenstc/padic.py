"""p-adic digits, factorial and binomial valuations, and the carry-chain count alpha_p.

The binomial valuation v_p(C(n+m, n)) is computed by Kummer carry counting and
cross-checked against two other routes: the Legendre formula on factorials and
a direct count over digit-sum conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ConsistencyError

__all__ = [
    "PAdicExpansion",
    "ValuationCertificate",
    "alpha_p",
    "binomial_valuation",
    "carry_positions",
    "digit_condition_count",
    "expand",
    "factorize",
    "is_prime",
    "legendre_binomial_valuation",
    "legendre_valuation",
]


@lru_cache(maxsize=1024)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def factorize(m: int) -> list[tuple[int, int]]:
    """Prime factorization of ``m >= 1`` as ``[(p, e), ...]`` with increasing p."""
    if m < 1:
        raise ValueError(f"cannot factorize {m}")
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def _check(p: int, *values: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    for v in values:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"expected a nonnegative integer, got {v!r}")


@dataclass(frozen=True)
class PAdicExpansion:
    p: int
    digits: tuple[int, ...]  # least significant first; () for zero

    def __post_init__(self):
        if any(not 0 <= d < self.p for d in self.digits):
            raise ValueError(f"digits out of range for base {self.p}: {self.digits}")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("expansion has a trailing zero digit")

    @property
    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.p + d
        return total

    def digit(self, i: int) -> int:
        """Digit at position i; positions past the stored expansion are 0."""
        return self.digits[i] if 0 <= i < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)


@lru_cache(maxsize=65536)
def _digits(p: int, n: int) -> tuple[int, ...]:
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return tuple(out)


def expand(p: int, n: int) -> PAdicExpansion:
    _check(p, n)
    return PAdicExpansion(p, _digits(p, n))


def legendre_valuation(p: int, n: int) -> int:
    """Exponent of p in n!, as the sum of floor(n / p^i) over i >= 1."""
    _check(p, n)
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def legendre_binomial_valuation(p: int, n: int, m: int) -> int:
    return legendre_valuation(p, n + m) - legendre_valuation(p, n) - legendre_valuation(p, m)


def carry_positions(p: int, n: int, m: int) -> list[int]:
    """Digit positions that emit a carry when n and m are added in base p."""
    _check(p, n, m)
    a, b = _digits(p, n), _digits(p, m)
    positions = []
    carry = 0
    i = 0
    while i < max(len(a), len(b)) or carry:
        s = (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) + carry
        carry = 1 if s >= p else 0
        if carry:
            positions.append(i)
        i += 1
    return positions


def digit_condition_count(p: int, n: int, m: int) -> int:
    """Count indices i whose digit sums s_i = n_i + m_i satisfy either

    * s_i >= p, or
    * s_i = s_{i-1} = ... = s_{i-r} = p - 1 and s_{i-r-1} >= p for some r >= 0.

    This evaluates the digit conditions directly, with no carry bookkeeping.
    """
    _check(p, n, m)
    a, b = _digits(p, n), _digits(p, m)
    sums = [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(max(len(a), len(b)))
    ]
    count = 0
    for i, s in enumerate(sums):
        if s >= p:
            count += 1
        elif s == p - 1:
            j = i - 1
            while j >= 0 and sums[j] == p - 1:
                j -= 1
            if j >= 0 and sums[j] >= p:
                count += 1
    return count


@dataclass(frozen=True)
class ValuationCertificate:
    p: int
    n: int
    m: int
    valuation: int
    carry_positions: tuple[int, ...]

    def __post_init__(self):
        if self.valuation != len(self.carry_positions):
            raise ValueError("valuation must equal the number of carries")


def binomial_valuation(p: int, n: int, m: int, *, cross_check: bool = True) -> ValuationCertificate:
    """Exponent of p in C(n+m, n), certified by its carry positions.

    With ``cross_check`` the Legendre and digit-condition routes are evaluated
    too and a :class:`ConsistencyError` is raised if any of the three differ.
    """
    carries = carry_positions(p, n, m)
    if cross_check:
        legendre = legendre_binomial_valuation(p, n, m)
        conditions = digit_condition_count(p, n, m)
        if not len(carries) == legendre == conditions:
            raise ConsistencyError(
                f"v_{p}(C({n + m},{n})): carries={len(carries)} "
                f"legendre={legendre} digit-conditions={conditions}"
            )
    return ValuationCertificate(p, n, m, len(carries), tuple(carries))


def alpha_p(p: int, n: int) -> int:
    """Carry-chain count of the base-p digits of n.

    Every digit with 2*n_i >= p contributes r_i, one plus the length of the run
    of digits equal to (p-1)/2 immediately above it. For p = 2 no digit equals
    (p-1)/2, so the count reduces to the number of ones in binary.
    """
    _check(p, n)
    digits = expand(p, n)
    total = 0
    for i in range(len(digits)):
        if 2 * digits.digit(i) < p:
            continue
        r = 1
        # digits past the top read as 0, which never equals (p-1)/2 for odd p
        while 2 * digits.digit(i + r) == p - 1:
            r += 1
        total += r
    return total
