"""Upper and lower TC bounds for lens spaces, and the combined report."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .cohomology import LensParams
from .errors import ConsistencyError
from .padic import alpha_p, expand, factorize, is_prime
from .weights import CupLengthResult, unweighted_cup_length, weighted_lower_bound

__all__ = [
    "CitedConstant",
    "LowerCertificate",
    "SufficientConditions",
    "TCBoundReport",
    "UpperCertificate",
    "condition_a",
    "condition_b",
    "condition_c",
    "fibration_upper_rules",
    "odd_sphere_fiber_rule",
    "sphere_base_rule",
    "tc_report",
    "tc_table",
    "upper_bound",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CitedConstant:
    name: str
    value: int
    citation: str


@dataclass(frozen=True)
class UpperCertificate:
    rule: str
    value: int
    constants: tuple[CitedConstant, ...]
    superseded: tuple[tuple[str, int], ...] = ()


@dataclass(frozen=True)
class LowerCertificate:
    source: str  # "weighted" or "unweighted"
    weighted: CupLengthResult
    unweighted: CupLengthResult

    @property
    def pair(self) -> tuple[int, int] | None:
        return self.weighted.pair


@dataclass(frozen=True)
class SufficientConditions:
    # (a) p^(alpha_p(n)+1) | m for some prime p
    a: bool
    a_primes: tuple[int, ...]
    # (b) m = p an odd prime and every base-p digit of n is <= (p-1)/2
    b: bool
    # (c) m = 2^r and n has at most r-1 ones in binary
    c: bool

    def any(self) -> bool:
        return self.a or self.b or self.c


@dataclass(frozen=True)
class TCBoundReport:
    params: LensParams
    lower: int
    upper: int
    exact: int | None
    lower_certificate: LowerCertificate
    upper_certificate: UpperCertificate
    conditions: SufficientConditions
    notes: tuple[str, ...] = field(default=())


def fibration_upper_rules(tc_fiber: int, cat_base_sq: int) -> int:
    """TC(E) <= TC(F) * cat(B x B) for a fibration F -> E -> B."""
    for name, v in (("tc_fiber", tc_fiber), ("cat_base_sq", cat_base_sq)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")
    return tc_fiber * cat_base_sq


def sphere_base_rule(tc_fiber: int) -> int:
    """Base homotopy equivalent to a sphere: cat(S^k x S^k) = 3."""
    return fibration_upper_rules(tc_fiber, 3)


def odd_sphere_fiber_rule(cat_base_sq: int) -> int:
    """Fiber an odd sphere: TC(S^odd) = 2."""
    return fibration_upper_rules(2, cat_base_sq)


def upper_bound(params: LensParams) -> tuple[int, UpperCertificate]:
    """TC(L_m^{2n+1}) <= 4n+2 from the circle bundle S^1 -> L -> CP^n."""
    n = params.n
    tc_circle = CitedConstant("TC(S^1)", 2, "known: TC of odd spheres is 2")
    cat_cp = CitedConstant(f"cat(CP^{n} x CP^{n})", 2 * n + 1,
                           "known: cat(CP^n x CP^n) = TC(CP^n) = 2n+1")
    fib = fibration_upper_rules(tc_circle.value, cat_cp.value)
    dim_rule = 2 * params.dim + 1
    value = min(fib, dim_rule)
    cert = UpperCertificate("fibration", value, (tc_circle, cat_cp),
                            superseded=(("dimension: 2*dim+1", dim_rule),))
    return value, cert


def condition_a(params: LensParams) -> tuple[int, ...]:
    """Primes p with p^(alpha_p(n)+1) dividing m."""
    return tuple(p for p, e in factorize(params.m) if e >= alpha_p(p, params.n) + 1)


def condition_b(params: LensParams) -> bool:
    p = params.m
    if p == 2 or not is_prime(p):
        return False
    return all(2 * d <= p - 1 for d in expand(p, params.n).digits)


def condition_c(params: LensParams) -> bool:
    m = params.m
    if m & (m - 1):
        return False
    r = m.bit_length() - 1
    return bin(params.n).count("1") <= r - 1


def _notes(params: LensParams, source: str) -> list[str]:
    notes = []
    if params.m == 2 and params.n >= 1:
        notes.append(
            f"L_2^{params.dim} = RP^{params.dim}; external results on TC(RP^k) [FTY03] "
            "are not used in the computation"
        )
        if params.n == 1:
            notes.append("external: TC(L_2^3) = TC(RP^3) = 4 [FTY03]")
    if source == "unweighted":
        notes.append("unweighted zero-divisor cup-length exceeded the weighted bound")
    return notes


def tc_report(params: LensParams | tuple[int, int]) -> TCBoundReport:
    if not isinstance(params, LensParams):
        params = LensParams(*params)
    weighted = weighted_lower_bound(params)
    unweighted = unweighted_cup_length(params)
    source = "unweighted" if unweighted.bound > weighted.bound else "weighted"
    if source == "unweighted":
        log.info("unweighted search beat the weighted bound for %s", params)
    lower = max(weighted.bound, unweighted.bound, 2)
    upper, upper_cert = upper_bound(params)

    primes = condition_a(params)
    conds = SufficientConditions(bool(primes), primes, condition_b(params), condition_c(params))
    top = 2 * params.dim

    if not 2 <= lower <= upper <= top + 1:
        raise ConsistencyError(f"bounds out of order for {params}: {lower} <= {upper}")
    if conds.any() and lower != top:
        raise ConsistencyError(f"sufficient condition fired for {params} but lower = {lower}")
    # (a) is equivalent to m not dividing C(2n, n)
    if conds.a != (comb(2 * params.n, params.n) % params.m != 0):
        raise ConsistencyError(f"condition (a) disagrees with C(2n,n) mod m for {params}")

    notes = _notes(params, source)
    return TCBoundReport(
        params=params,
        lower=lower,
        upper=upper,
        exact=lower if lower == upper else None,
        lower_certificate=LowerCertificate(source, weighted, unweighted),
        upper_certificate=upper_cert,
        conditions=conds,
        notes=tuple(notes),
    )


def tc_table(m_range: Iterable[int], n_range: Iterable[int]) -> list[TCBoundReport]:
    """Reports over the product of the ranges, m outer and n inner."""
    ms, ns = list(m_range), list(n_range)
    if not ms or not ns:
        raise ValueError("m and n ranges must be nonempty")
    return [tc_report(LensParams(m, n)) for m in ms for n in ns]
