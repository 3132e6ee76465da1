"""Exit criteria. Each test carries an ``acceptance`` marker; conftest prints one line per criterion."""

import random
import subprocess
import sys
from math import comb, factorial

import pytest

from lenstc.bounds import tc_report, tc_table
from lenstc.cohomology import (
    LensParams,
    RingElement,
    TensorElement,
    bar,
    diagonal_restriction,
    monomial_degree,
    power,
    tensor_multiply,
)
from lenstc.operations import bockstein, steenrod_power, steenrod_square
from lenstc.padic import (
    alpha_p,
    carry_positions,
    digit_condition_count,
    legendre_binomial_valuation,
)
from lenstc.weights import canonical_zero_divisors, unweighted_cup_length, weighted_lower_bound

from .oracles import admissible_sequences, longest_nonzero_word

acceptance = pytest.mark.acceptance


@acceptance(1, "alpha_3(13) = 0 and alpha_3(14) = 3")
def test_alpha_values():
    assert alpha_p(3, 13) == 0
    assert alpha_p(3, 14) == 3


def _central_binomial_valuation_by_factorials(p, n):
    c = factorial(2 * n) // (factorial(n) ** 2)
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


@acceptance(2, "Legendre / Kummer / digit-condition agreement; alpha_p(n) = v_p(C(2n,n))")
def test_binomial_valuation_routes():
    for p in (2, 3, 5, 7, 11, 13):
        for n in range(501):
            for m in range(501):
                kummer = len(carry_positions(p, n, m))
                assert kummer == legendre_binomial_valuation(p, n, m) == digit_condition_count(p, n, m), (p, n, m)
    for p in (2, 3, 5, 7, 11):
        for n in range(2001):
            assert alpha_p(p, n) == _central_binomial_valuation_by_factorials(p, n), (p, n)


def _rand_tensor(rng, P, basis_pairs, by_degree, degree=None):
    pool = basis_pairs if degree is None else by_degree[degree]
    k = rng.randint(1, min(3, len(pool)))
    return TensorElement(P, {b: rng.randrange(1, P.m) for b in rng.sample(pool, k)})


@acceptance(3, "graded commutativity, associativity, Koszul sign, x^2 = a*y, y^(n+1) = 0")
def test_algebra_axioms():
    triples = 1000
    for m in range(2, 13):
        for n in range(0, 7):
            P = LensParams(m, n)
            rng = random.Random(1000 * m + n)
            basis = P.basis()
            pairs = [(a, b) for a in basis for b in basis]
            by_degree = {}
            for kb in pairs:
                by_degree.setdefault(monomial_degree(kb[0]) + monomial_degree(kb[1]), []).append(kb)
            degrees = sorted(by_degree)

            x, y = RingElement.x(P), RingElement.y(P)
            assert x * x == y.scale(P.a)
            assert (RingElement.monomial(P, 0, n) * y).is_zero()
            assert (RingElement.monomial(P, 1, n) * y).is_zero()

            for _ in range(triples):
                a, b, c = (_rand_tensor(rng, P, pairs, by_degree) for _ in range(3))
                assert (a * b) * c == a * (b * c)
                assert diagonal_restriction(a * b) == diagonal_restriction(a) * diagonal_restriction(b)

                d1, d2 = rng.choice(degrees), rng.choice(degrees)
                u = _rand_tensor(rng, P, pairs, by_degree, d1)
                v = _rand_tensor(rng, P, pairs, by_degree, d2)
                assert u * v == (v * u).scale(-1 if d1 * d2 % 2 else 1)
                s, t = RingElement.monomial(P, *rng.choice(basis)), RingElement.monomial(P, *rng.choice(basis))
                assert s * t == (t * s).scale(-1 if s.degree() * t.degree() % 2 else 1)

                al, be, ga, de = (RingElement.monomial(P, *rng.choice(basis)) for _ in range(4))
                lhs = TensorElement.cross(al, be) * TensorElement.cross(ga, de)
                sign = -1 if be.degree() * ga.degree() % 2 else 1
                assert lhs == TensorElement.cross(al * ga, be * de).scale(sign)


@acceptance(4, "coefficient of y^k (x) y^l in bar(y)^(k+l) is (-1)^k C(k+l,k) mod m")
def test_binomial_term_identity():
    for m in range(2, 31):
        for n in range(0, 9):
            P = LensParams(m, n)
            if n == 0:
                assert power(TensorElement.one(P), 0).coefficient(((0, 0), (0, 0))) == 1
                continue
            w = bar(RingElement.y(P))
            acc = TensorElement.one(P)
            for t in range(0, 2 * n + 1):
                for k in range(max(0, t - n), min(n, t) + 1):
                    l = t - k
                    assert acc.coefficient(((0, k), (0, l))) == ((-1) ** k * comb(t, k)) % m, (m, n, k, l)
                assert power(w, t) == acc
                acc = tensor_multiply(acc, w)


@acceptance(5, "exact TC values for L_m^3, m = 3, 5, 4, 8 families")
def test_paper_table():
    assert all(r.exact == 6 for r in tc_table(range(3, 101), [1]))

    def exact_ns(m, ns):
        return {r.params.n for r in tc_table([m], ns) if r.exact == 4 * r.params.n + 2}

    assert exact_ns(3, range(1, 13)) == {1, 3, 4, 9, 10, 12}
    assert exact_ns(5, range(1, 11)) == {1, 2, 5, 6, 7, 10}
    assert {1, 2, 4, 8, 16} <= exact_ns(4, range(1, 17))
    two_ones = {n for n in range(0, 33) if bin(n).count("1") <= 2}
    assert two_ones <= exact_ns(8, range(0, 33))


@acceptance(6, "m = 2, n = 1: lower 4, upper 6, no exact, external note present")
def test_real_projective_gap():
    r = tc_report(LensParams(2, 1))
    assert r.lower == 4 and r.upper == 6 and r.exact is None
    assert any("TC(L_2^3) = TC(RP^3) = 4" in note and "FTY03" in note for note in r.notes)


@acceptance(7, "excess of Bockstein, Sq^i, P^i; admissible formula vs max-form bound")
def test_excess_calculus():
    assert bockstein().excess_exact == 1
    for i in range(1, 17):
        assert steenrod_square(i).excess_exact == i
    for p in (3, 5):
        for i in range(1, 17):
            assert steenrod_power(p, i).excess_exact == 2 * i
    n_checked = 0
    for seq in admissible_sequences(5, 32):
        op = steenrod_square(*seq)
        padded = seq + (0,)
        assert op.excess_exact == sum(a - 2 * b for a, b in zip(padded, padded[1:]))
        assert op.excess_exact >= op.excess_lower_bound
        n_checked += 1
    assert n_checked > 0


# Longest nonzero word in {bar(x), bar(y)} for L_3^3, found by the brute-force
# oracle over all words (tests/oracles.py) and frozen here.
UNWEIGHTED_CUP_LENGTH_L3_3 = 3


@acceptance(8, "m = 3, n = 1: unweighted bound 4 < weighted bound 6")
def test_weighted_beats_unweighted():
    P = LensParams(3, 1)
    gens = canonical_zero_divisors(P)
    brute = longest_nonzero_word([g.element for g in gens], 2 * P.dim, TensorElement.one(P),
                                 tensor_multiply)
    assert brute == UNWEIGHTED_CUP_LENGTH_L3_3
    unweighted = unweighted_cup_length(P, gens)
    assert unweighted.length == UNWEIGHTED_CUP_LENGTH_L3_3
    assert unweighted.bound == 4
    assert weighted_lower_bound(P).bound == 6
    assert tc_report(P).lower == 6


@acceptance(9, "table --m-range 2..20 --n-range 0..16 --format json is byte-identical across runs")
def test_cli_determinism():
    argv = [sys.executable, "-m", "lenstc", "table", "--m-range", "2..20", "--n-range", "0..16",
            "--format", "json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first and first == second
