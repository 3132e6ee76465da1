"""Zero-divisors of H*(L) (x) H*(L) and weighted cup-length lower bounds for TC.

A nonzero product u_1 ... u_l of zero-divisors gives TC > sum of their weights.
Plain zero-divisors have weight 1; bar(y) has weight 2 because y is the
Bockstein of x and the Bockstein has excess 1 = deg x.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb

from .cohomology import (
    LensParams,
    RingElement,
    TensorElement,
    bar,
    diagonal_restriction,
    power,
    product,
    tensor_multiply,
)
from .errors import ConsistencyError
from .operations import CertificateKind, WeightCertificate, bockstein, certify_weight
from .padic import binomial_valuation, factorize

__all__ = [
    "CupLengthResult",
    "WeightedClass",
    "binomial_not_divisible",
    "canonical_zero_divisors",
    "unweighted_cup_length",
    "verify_binomial_term",
    "weighted_lower_bound",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightedClass:
    label: str
    element: TensorElement
    weight: int
    provenance: str
    certificate: WeightCertificate | None = None

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError("weights below 1 are not zero-divisors")
        if self.weight >= 2 and (self.certificate is None or not self.certificate.valid):
            raise ValueError(f"weight {self.weight} for {self.label} needs a valid excess certificate")
        if diagonal_restriction(self.element):
            raise ValueError(f"{self.label} is not a zero-divisor")

    @property
    def degree(self) -> int:
        deg = self.element.degree()
        if deg is None:
            raise ValueError(f"{self.label} is not homogeneous")
        return deg


@dataclass(frozen=True)
class CupLengthResult:
    length: int
    weighted_sum: int
    witness: tuple[WeightedClass, ...]
    product: TensorElement
    pair: tuple[int, int] | None = None  # (k, l) for the weighted construction
    certificates: tuple[WeightCertificate, ...] = field(default=())

    @property
    def bound(self) -> int:
        """The TC lower bound this witness certifies."""
        return self.weighted_sum + 1


def _mono_label(s: int, r: int) -> str:
    parts = (["x"] if s else []) + ([f"y^{r}"] if r > 1 else ["y"] if r == 1 else [])
    return "".join(parts)


def canonical_zero_divisors(params: LensParams, widened: bool = False) -> list[WeightedClass]:
    """bar(x) with weight 1 and, for n >= 1, bar(y) with weight 2.

    ``widened`` adds bar(u) with weight 1 for every other positive-degree basis monomial.
    """
    x = RingElement.x(params)
    out = [WeightedClass("bar(x)", bar(x), 1, "zero-divisor")]
    if params.n >= 1:
        cert = certify_weight(bockstein(params.m), 1, CertificateKind.TC_WEIGHT)
        out.append(WeightedClass(
            "bar(y)", bar(RingElement.y(params)), 2,
            f"y = beta(x); {cert.provenance()}", cert,
        ))
    if widened:
        for s, r in params.basis():
            if (s, r) in ((0, 0), (1, 0), (0, 1)):
                continue
            u = RingElement.monomial(params, s, r)
            out.append(WeightedClass(f"bar({_mono_label(s, r)})", bar(u), 1, "zero-divisor"))
    return out


def binomial_not_divisible(m: int, k: int, l: int) -> bool:
    """Whether m does not divide C(k+l, k), by big-integer reduction.

    Cross-checked against prime-power valuations: m fails to divide iff some
    p^e || m has v_p(C(k+l, k)) < e.
    """
    direct = comb(k + l, k) % m != 0
    via_valuations = any(binomial_valuation(p, k, l).valuation < e for p, e in factorize(m))
    if direct != via_valuations:
        raise ConsistencyError(f"divisibility of C({k + l},{k}) by {m}: direct={direct} "
                               f"valuations={via_valuations}")
    return direct


def _search_order(n: int):
    # decreasing k+l, then decreasing min(k, l), then decreasing k
    pairs = [(k, l) for k in range(n + 1) for l in range(n + 1)]
    return sorted(pairs, key=lambda kl: (-(kl[0] + kl[1]), -min(kl), -kl[0]))


def weighted_lower_bound(params: LensParams) -> CupLengthResult:
    """Best witness bar(x) * bar(y)^{k+l} with m not dividing C(k+l, k).

    The product is recomputed in the algebra and must be nonzero.
    """
    zds = {c.label: c for c in canonical_zero_divisors(params)}
    bx = zds["bar(x)"]
    for k, l in _search_order(params.n):
        if not binomial_not_divisible(params.m, k, l):
            continue
        t = k + l
        witness = (bx,) + (zds["bar(y)"],) * t if t else (bx,)
        prod = tensor_multiply(bx.element, power(zds["bar(y)"].element, t)) if t else bx.element
        if not prod:
            raise ConsistencyError(f"bar(x)*bar(y)^{t} vanished for {params} although "
                                   f"{params.m} does not divide C({t},{k})")
        certs = tuple(c.certificate for c in witness[1:2] if c.certificate is not None)
        return CupLengthResult(len(witness), sum(c.weight for c in witness), witness, prod,
                               (k, l), certs)
    raise ConsistencyError("no admissible (k, l); (0, 0) should always qualify")


def unweighted_cup_length(params: LensParams, generators: list[WeightedClass] | None = None,
                          max_len: int | None = None) -> CupLengthResult:
    """Longest nonzero product of the given zero-divisors, repetition allowed.

    Every generator counts with weight 1. In a graded-commutative algebra
    homogeneous factors commute up to sign, so whether a word's product is
    zero depends only on its multiset of letters; the search therefore
    enumerates non-decreasing index sequences. A zero product stays zero
    under further multiplication, and degrees above 2(2n+1) vanish, so
    pruning at zero is exact.
    """
    if generators is None:
        generators = canonical_zero_divisors(params)
    if max_len is None:
        max_len = 2 * params.dim
    for g in generators:
        if g.element.params != params:
            raise ValueError("generator built for different parameters")
        if diagonal_restriction(g.element):
            raise ValueError(f"{g.label} is not a zero-divisor")
    one = TensorElement.one(params)
    if not generators or max_len <= 0:
        return CupLengthResult(0, 0, (), one)

    degree_cap = 2 * params.dim
    degs = [g.degree for g in generators]
    # frontier entries: (last generator index, word, degree, product)
    frontier = [(0, (), 0, one)]
    best_word: tuple[int, ...] = ()
    best_prod = one
    for _ in range(max_len):
        nxt = []
        for last, word, deg, prod in frontier:
            for j in range(last, len(generators)):
                d = deg + degs[j]
                if d > degree_cap:
                    continue
                p = tensor_multiply(prod, generators[j].element)
                if p:
                    nxt.append((j, word + (j,), d, p))
        if not nxt:
            break
        frontier = nxt
        best_word, best_prod = nxt[0][1], nxt[0][3]
    witness = tuple(generators[j] for j in best_word)
    return CupLengthResult(len(witness), len(witness), witness, best_prod)


def verify_binomial_term(params: LensParams, k: int, l: int) -> int:
    """Coefficient of y^k (x) y^l in bar(y)^{k+l}, computed in the algebra."""
    n = params.n
    if not (0 <= k <= n and 0 <= l <= n):
        raise ValueError(f"need 0 <= k, l <= n={n}, got k={k}, l={l}")
    if k == l == 0:
        return power(TensorElement.one(params), 0).coefficient(((0, 0), (0, 0)))
    w = bar(RingElement.y(params))
    return power(w, k + l).coefficient(((0, k), (0, l)))


def witness_product(result: CupLengthResult, params: LensParams) -> TensorElement:
    return product((c.element for c in result.witness), params)
