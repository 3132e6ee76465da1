"""Symbolic stable cohomology operations: degree, excess, and weight-2 certificates.

An operation of excess >= d kills every class of dimension below d. Applied to
a class of dimension d it yields a class of TC-weight >= 2 (for the reduced
class 1 x theta(u) - theta(u) x 1) and of strict category weight >= 2.
Operations are never evaluated on classes; only degrees and excess are tracked.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .padic import is_prime

__all__ = [
    "CertificateKind",
    "OperationDescriptor",
    "WeightCertificate",
    "bockstein",
    "certify_weight",
    "describe",
    "is_admissible",
    "parse_operation",
    "steenrod_power",
    "steenrod_square",
]


class CertificateKind(str, enum.Enum):
    TC_WEIGHT = "TC_weight_ge_2"
    STRICT_CATEGORY_WEIGHT = "strict_category_weight_ge_2"


@dataclass(frozen=True)
class OperationDescriptor:
    kind: str  # "bockstein", "sq" or "pow"
    sequence: tuple[int, ...]
    degree: int
    excess_lower_bound: int
    excess_exact: int | None = None
    p: int | None = None  # prime for power operations
    modulus: int | None = None  # coefficient modulus of a Bockstein, if given

    @property
    def guaranteed_excess(self) -> int:
        return self.excess_exact if self.excess_exact is not None else self.excess_lower_bound

    def label(self) -> str:
        if self.kind == "bockstein":
            return "beta" if self.modulus is None else f"beta_{self.modulus}"
        name = "Sq" if self.kind == "sq" else f"P[{self.p}]"
        return name + "^(" + ",".join(map(str, self.sequence)) + ")"


def _validate_sequence(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    if not seq:
        raise ValueError("operation sequence must be nonempty")
    for i in seq:
        if not isinstance(i, int) or isinstance(i, bool) or i <= 0:
            raise ValueError(f"sequence entries must be positive integers, got {i!r}")
    return seq


def is_admissible(seq: Sequence[int]) -> bool:
    """True iff i_k >= 2 * i_{k+1} for all consecutive entries."""
    seq = _validate_sequence(seq)
    return all(a >= 2 * b for a, b in zip(seq, seq[1:]))


def _max_form(excesses: Sequence[int], degrees: Sequence[int]) -> int:
    # The k-th factor sees classes raised by the degrees of the factors to its
    # right, so it kills inputs of dimension < e_k - (sum of those degrees).
    best = 0
    tail = 0
    for e, d in zip(reversed(excesses), reversed(degrees)):
        best = max(best, e - tail)
        tail += d
    return best


def bockstein(modulus: int | None = None) -> OperationDescriptor:
    if modulus is not None and (not isinstance(modulus, int) or modulus < 2):
        raise ValueError(f"Bockstein modulus must be >= 2, got {modulus!r}")
    return OperationDescriptor("bockstein", (), 1, 1, 1, modulus=modulus)


def steenrod_square(*seq: int) -> OperationDescriptor:
    """Sq^{i_1} ... Sq^{i_k}; exact excess is known only for admissible sequences."""
    seq = _validate_sequence(seq)
    lower = _max_form(seq, seq)
    exact = None
    if is_admissible(seq):
        padded = seq + (0,)
        exact = sum(a - 2 * b for a, b in zip(padded, padded[1:]))
    return OperationDescriptor("sq", seq, sum(seq), lower, exact)


def steenrod_power(p: int, *seq: int) -> OperationDescriptor:
    """P^{i_1} ... P^{i_k} at an odd prime p.

    Composites get only the max-form lower bound; a single P^i has excess 2i.
    """
    if p == 2:
        raise ValueError("p = 2: use steenrod_square for mod 2 operations")
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p!r}")
    seq = _validate_sequence(seq)
    degrees = [2 * i * (p - 1) for i in seq]
    lower = _max_form([2 * i for i in seq], degrees)
    exact = 2 * seq[0] if len(seq) == 1 else None
    return OperationDescriptor("pow", seq, sum(degrees), lower, exact, p=p)


def describe(kind: str, sequence: Sequence[int] = (), p: int | None = None,
             modulus: int | None = None) -> OperationDescriptor:
    if kind == "bockstein":
        return bockstein(modulus)
    if kind == "sq":
        return steenrod_square(*sequence)
    if kind == "pow":
        if p is None:
            raise ValueError("power operations need a prime p")
        return steenrod_power(p, *sequence)
    raise ValueError(f"unknown operation kind {kind!r}")


def parse_operation(spec: str) -> OperationDescriptor:
    """Parse ``"bockstein"``, ``"sq i1 i2 ..."`` or ``"pow p i1 i2 ..."``."""
    tokens = spec.split()
    if not tokens:
        raise ValueError("empty operation spec")
    head, rest = tokens[0].lower(), tokens[1:]
    if head not in ("bockstein", "sq", "pow"):
        raise ValueError(f"unknown operation {tokens[0]!r}")
    numbers = []
    for tok in rest:
        try:
            numbers.append(int(tok))
        except ValueError:
            raise ValueError(f"not an integer: {tok!r}") from None
    if head == "bockstein":
        if len(numbers) > 1:
            raise ValueError(f"unexpected token {rest[1]!r}")
        return bockstein(numbers[0] if numbers else None)
    if head == "sq":
        return steenrod_square(*numbers)
    if not numbers:
        raise ValueError("pow needs a prime followed by a sequence")
    return steenrod_power(numbers[0], *numbers[1:])


@dataclass(frozen=True)
class WeightCertificate:
    operation: OperationDescriptor
    class_dimension: int
    kind: CertificateKind
    valid: bool

    def provenance(self) -> str:
        status = "certified" if self.valid else "not certified"
        return (f"{self.operation.label()} has excess >= {self.operation.guaranteed_excess} "
                f"on a class of dimension {self.class_dimension}: {self.kind.value} {status}")


def certify_weight(op: OperationDescriptor, class_dim: int,
                   kind: CertificateKind | str = CertificateKind.TC_WEIGHT) -> WeightCertificate:
    if not isinstance(class_dim, int) or class_dim <= 0:
        raise ValueError(f"class dimension must be positive, got {class_dim!r}")
    kind = CertificateKind(kind)
    return WeightCertificate(op, class_dim, kind, op.guaranteed_excess >= class_dim)
