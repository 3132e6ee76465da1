"""Flattening reports into JSON-native records, CSV rows, and plain text tables."""

from __future__ import annotations

import csv
import io
import json
from itertools import groupby

from .bounds import TCBoundReport
from .cohomology import TensorElement
from .operations import OperationDescriptor, WeightCertificate
from .padic import ValuationCertificate
from .weights import CupLengthResult

CSV_HEADER = (
    "m", "n", "dim", "lower", "upper", "exact",
    "condition_a", "condition_b", "condition_c", "witness_k", "witness_l",
)


def tensor_terms(u: TensorElement) -> list[list[int]]:
    """Terms as ``[s1, r1, s2, r2, coeff]`` for x^s1 y^r1 (x) x^s2 y^r2."""
    return [[a[0], a[1], b[0], b[1], c] for (a, b), c in u.terms()]


def operation_record(op: OperationDescriptor) -> dict:
    return {
        "kind": op.kind,
        "label": op.label(),
        "sequence": list(op.sequence),
        "p": op.p,
        "modulus": op.modulus,
        "degree": op.degree,
        "admissible": None if op.kind != "sq" else op.excess_exact is not None,
        "excess_lower_bound": op.excess_lower_bound,
        "excess_exact": op.excess_exact,
    }


def certificate_record(cert: WeightCertificate) -> dict:
    return {
        "operation": operation_record(cert.operation),
        "class_dimension": cert.class_dimension,
        "kind": cert.kind.value,
        "valid": cert.valid,
        "provenance": cert.provenance(),
    }


def cup_length_record(res: CupLengthResult) -> dict:
    witness = []
    # runs of the same class collapse to one entry with a multiplicity
    for label, run in groupby(res.witness, key=lambda c: c.label):
        run = list(run)
        witness.append({
            "class": label,
            "weight": run[0].weight,
            "multiplicity": len(run),
            "provenance": run[0].provenance,
        })
    return {
        "length": res.length,
        "weighted_sum": res.weighted_sum,
        "bound": res.bound,
        "pair": None if res.pair is None else {"k": res.pair[0], "l": res.pair[1]},
        "witness": witness,
        "weight_certificates": [certificate_record(c) for c in res.certificates],
        "product": tensor_terms(res.product),
    }


def report_record(r: TCBoundReport) -> dict:
    p = r.params
    lc, uc = r.lower_certificate, r.upper_certificate
    return {
        "params": {"m": p.m, "n": p.n, "a": p.a, "dim": p.dim},
        "lower": r.lower,
        "upper": r.upper,
        "exact": r.exact,
        "lower_certificate": {
            "source": lc.source,
            "pair": None if lc.pair is None else {"k": lc.pair[0], "l": lc.pair[1]},
            "weighted": cup_length_record(lc.weighted),
            "unweighted": cup_length_record(lc.unweighted),
        },
        "upper_certificate": {
            "rule": uc.rule,
            "value": uc.value,
            "constants": [{"name": c.name, "value": c.value, "citation": c.citation}
                          for c in uc.constants],
            "superseded": [{"rule": rule, "value": v} for rule, v in uc.superseded],
        },
        "conditions": {
            "a": r.conditions.a,
            "a_primes": list(r.conditions.a_primes),
            "b": r.conditions.b,
            "c": r.conditions.c,
        },
        "notes": list(r.notes),
    }


def valuation_record(cert: ValuationCertificate) -> dict:
    return {
        "p": cert.p,
        "n": cert.n,
        "m": cert.m,
        "valuation": cert.valuation,
        "carry_positions": list(cert.carry_positions),
    }


def csv_row(r: TCBoundReport) -> tuple:
    pair = r.lower_certificate.pair or ("", "")
    flag = lambda b: "true" if b else "false"  # noqa: E731
    return (
        r.params.m, r.params.n, r.params.dim, r.lower, r.upper,
        "" if r.exact is None else r.exact,
        flag(r.conditions.a), flag(r.conditions.b), flag(r.conditions.c),
        pair[0], pair[1],
    )


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def to_csv(reports: list[TCBoundReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow(csv_row(r))
    return buf.getvalue()


def to_text_table(reports: list[TCBoundReport]) -> str:
    rows = [CSV_HEADER] + [tuple("-" if v == "" else str(v) for v in csv_row(r)) for r in reports]
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(CSV_HEADER))]
    lines = ["  ".join(str(v).rjust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def format_reports(reports: list[TCBoundReport], fmt: str) -> str:
    if fmt == "json":
        return to_json([report_record(r) for r in reports])
    if fmt == "csv":
        return to_csv(reports)
    if fmt == "text":
        return to_text_table(reports)
    raise ValueError(f"unknown format {fmt!r}")
