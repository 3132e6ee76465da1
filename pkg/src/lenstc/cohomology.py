"""Arithmetic in H*(L_m^{2n+1}; Z_m) = Z_m[x, y]/(y^{n+1}, x^2 - a*y) and its tensor square.

Basis monomials are pairs ``(s, r)`` standing for x^s y^r with s in {0, 1} and
0 <= r <= n; deg = s + 2r. Elements are sparse dicts from basis keys to
residues in 1..m-1, zero coefficients are never stored.

The tensor square multiplies with the Koszul sign
(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "MAX_MODULUS",
    "LensParams",
    "RingElement",
    "TensorElement",
    "bar",
    "diagonal_restriction",
    "monomial_degree",
    "power",
    "product",
    "ring_multiply",
    "tensor_multiply",
]

MAX_MODULUS = 2**31

Monomial = tuple[int, int]
Pair = tuple[Monomial, Monomial]


@dataclass(frozen=True)
class LensParams:
    """Identifies the lens space L_m^{2n+1}; ``a`` is the constant in x^2 = a*y."""

    m: int
    n: int
    a: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError(f"m must be an integer >= 2, got {self.m!r}")
        if self.m > MAX_MODULUS:
            raise ValueError(f"m exceeds the supported cap {MAX_MODULUS}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"n must be an integer >= 0, got {self.n!r}")
        object.__setattr__(self, "a", self.m // 2 if self.m % 2 == 0 else 0)

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    def basis(self) -> list[Monomial]:
        """Monomials ordered by degree: 1, x, y, xy, y^2, ..."""
        return sorted(((s, r) for r in range(self.n + 1) for s in (0, 1)), key=monomial_degree)


def monomial_degree(mono: Monomial) -> int:
    s, r = mono
    return s + 2 * r


@lru_cache(maxsize=None)
def _monomial_product(params: LensParams, u: Monomial, v: Monomial) -> tuple[int, Monomial] | None:
    # y is even so x and y commute strictly; no sign arises in a single factor
    s = u[0] + v[0]
    r = u[1] + v[1]
    coeff = 1
    if s == 2:
        s = 0
        r += 1
        coeff = params.a
    if r > params.n or coeff == 0:
        return None
    return coeff, (s, r)


def _check_same(u, v) -> None:
    if u.params != v.params:
        raise ValueError(f"parameter mismatch: {u.params} vs {v.params}")


class _SparseElement:
    __slots__ = ("params", "coeffs", "_hash")

    def __init__(self, params: LensParams, coeffs: Mapping | None = None):
        self.params = params
        m = params.m
        clean = {}
        for key, c in (coeffs or {}).items():
            self._validate_key(params, key)
            c %= m
            if c:
                clean[key] = c
        self.coeffs = clean
        self._hash = None

    @classmethod
    def _raw(cls, params, coeffs):
        # trusted constructor: coeffs already reduced, validated and nonzero
        obj = cls.__new__(cls)
        obj.params = params
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @staticmethod
    def _validate_key(params, key):
        raise NotImplementedError

    @staticmethod
    def _key_degree(key) -> int:
        raise NotImplementedError

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def coefficient(self, key) -> int:
        return self.coeffs.get(key, 0)

    def degrees(self) -> set[int]:
        return {self._key_degree(k) for k in self.coeffs}

    def degree(self) -> int | None:
        """Common degree of all terms, or None for mixed degree (zero counts as mixed)."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) == 1

    def _combine(self, other, sign: int):
        _check_same(self, other)
        m = self.params.m
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            v = (out.get(key, 0) + sign * c) % m
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return type(self)._raw(self.params, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        m = self.params.m
        return type(self)._raw(self.params, {k: m - c for k, c in self.coeffs.items()})

    def scale(self, c: int):
        m = self.params.m
        out = {}
        for k, v in self.coeffs.items():
            w = (v * c) % m
            if w:
                out[k] = w
        return type(self)._raw(self.params, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.params == other.params and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.params, frozenset(self.coeffs.items())))
        return self._hash

    def terms(self) -> list[tuple]:
        """Nonzero terms sorted by basis key."""
        return sorted(self.coeffs.items())


def _mono_str(mono: Monomial) -> str:
    s, r = mono
    parts = []
    if s:
        parts.append("x")
    if r == 1:
        parts.append("y")
    elif r > 1:
        parts.append(f"y^{r}")
    return "".join(parts) or "1"


class RingElement(_SparseElement):
    """Element of H*(L_m^{2n+1}; Z_m) over the basis x^s y^r."""

    __slots__ = ()

    @staticmethod
    def _validate_key(params, key):
        s, r = key
        if s not in (0, 1) or not 0 <= r <= params.n:
            raise ValueError(f"monomial {key} outside the basis for n={params.n}")

    _key_degree = staticmethod(monomial_degree)

    @classmethod
    def monomial(cls, params: LensParams, s: int, r: int, coeff: int = 1) -> RingElement:
        return cls(params, {(s, r): coeff})

    @classmethod
    def one(cls, params: LensParams) -> RingElement:
        return cls.monomial(params, 0, 0)

    @classmethod
    def x(cls, params: LensParams) -> RingElement:
        return cls.monomial(params, 1, 0)

    @classmethod
    def y(cls, params: LensParams) -> RingElement:
        # y = 0 when n = 0
        return cls(params, {(0, 1): 1}) if params.n >= 1 else cls(params)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, RingElement):
            return ring_multiply(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{_mono_str(k)}" for k, c in self.terms())


def ring_multiply(u: RingElement, v: RingElement) -> RingElement:
    _check_same(u, v)
    params = u.params
    m = params.m
    out: dict[Monomial, int] = {}
    for ku, cu in u.coeffs.items():
        for kv, cv in v.coeffs.items():
            prod = _monomial_product(params, ku, kv)
            if prod is None:
                continue
            c, key = prod
            val = (out.get(key, 0) + c * cu * cv) % m
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return RingElement._raw(params, out)


def _pair_degree(pair: Pair) -> int:
    return monomial_degree(pair[0]) + monomial_degree(pair[1])


class TensorElement(_SparseElement):
    """Element of H*(L) (x) H*(L) over basis pairs of monomials."""

    __slots__ = ()

    @staticmethod
    def _validate_key(params, key):
        left, right = key
        RingElement._validate_key(params, left)
        RingElement._validate_key(params, right)

    _key_degree = staticmethod(_pair_degree)

    @classmethod
    def one(cls, params: LensParams) -> TensorElement:
        return cls(params, {((0, 0), (0, 0)): 1})

    @classmethod
    def cross(cls, u: RingElement, v: RingElement) -> TensorElement:
        """u (x) v, extended bilinearly."""
        _check_same(u, v)
        m = u.params.m
        out = {}
        for ku, cu in u.coeffs.items():
            for kv, cv in v.coeffs.items():
                c = (cu * cv) % m
                if c:
                    out[(ku, kv)] = c
        return cls._raw(u.params, out)

    @classmethod
    def left(cls, u: RingElement) -> TensorElement:
        """u (x) 1"""
        return cls.cross(u, RingElement.one(u.params))

    @classmethod
    def right(cls, u: RingElement) -> TensorElement:
        """1 (x) u"""
        return cls.cross(RingElement.one(u.params), u)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> TensorElement:
        return power(self, k)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{_mono_str(a)}|{_mono_str(b)}" for (a, b), c in self.terms())


def tensor_multiply(u: TensorElement, v: TensorElement) -> TensorElement:
    _check_same(u, v)
    params = u.params
    m, n, a_const = params.m, params.n, params.a
    out: dict[Pair, int] = {}
    # monomial products inlined: this loop dominates every search
    for ((s1, r1), (s2, r2)), cu in u.coeffs.items():
        odd_b = s2  # deg(x^s y^r) is odd iff s = 1
        for ((s3, r3), (s4, r4)), cv in v.coeffs.items():
            coeff = cu * cv
            sl, rl = s1 + s3, r1 + r3
            if sl == 2:
                sl, rl, coeff = 0, rl + 1, coeff * a_const
            if rl > n:
                continue
            sr, rr = s2 + s4, r2 + r4
            if sr == 2:
                sr, rr, coeff = 0, rr + 1, coeff * a_const
            if rr > n or not coeff:
                continue
            if odd_b and s3:
                coeff = -coeff
            key = ((sl, rl), (sr, rr))
            val = (out.get(key, 0) + coeff) % m
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return TensorElement._raw(params, out)


def bar(u: RingElement) -> TensorElement:
    """The zero-divisor 1 (x) u - u (x) 1 of a homogeneous class of positive degree."""
    deg = u.degree()
    if deg is None:
        raise ValueError("bar() needs a nonzero homogeneous class")
    if deg == 0:
        raise ValueError("bar() needs a class of positive degree")
    return TensorElement.right(u) - TensorElement.left(u)


def diagonal_restriction(u: TensorElement) -> RingElement:
    """Image under the cup product H*(L) (x) H*(L) -> H*(L)."""
    params = u.params
    m = params.m
    out: dict[Monomial, int] = {}
    for (a, b), c in u.coeffs.items():
        prod = _monomial_product(params, a, b)
        if prod is None:
            continue
        k, key = prod
        val = (out.get(key, 0) + k * c) % m
        if val:
            out[key] = val
        else:
            out.pop(key, None)
    return RingElement._raw(params, out)


def power(u: TensorElement, k: int) -> TensorElement:
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
    result = TensorElement.one(u.params)
    base = u
    # square-and-multiply; the tensor square is associative
    while k:
        if k & 1:
            result = tensor_multiply(result, base)
        k >>= 1
        if k:
            base = tensor_multiply(base, base)
    return result


def product(factors: Iterable[TensorElement], params: LensParams) -> TensorElement:
    """Left fold of tensor_multiply; the empty product is 1 (x) 1."""
    result = TensorElement.one(params)
    for f in factors:
        result = tensor_multiply(result, f)
    return result
