"""Hook/content product identities and Macdonald polynomials.

Exact values come back as Python objects: rationals as ``fractions.Fraction``,
polynomials in q and t as ``{(a, b): coefficient}`` dictionaries.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DomainError,
    Partition,
    ResourceError,
    box_stats,
    boxes,
    conjugate,
    dominated_by,
    partitions_of,
    row_ladder,
)

__all__ = [
    "DomainError",
    "Partition",
    "ResourceError",
    "box_stats",
    "boxes",
    "conjugate",
    "dominated_by",
    "elliptic_table",
    "integer_lhs",
    "integer_rhs",
    "macdonald_p",
    "partition",
    "partitions_of",
    "principal_check",
    "row_ladder",
    "run_cli",
    "specialize",
    "verify",
]


def partition(lam):
    """Accepts a Partition, a sequence of parts, or text such as "5,4,4,3,2"."""
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam)
    return Partition(list(lam))


def _poly(data):
    return {(term["q"], term["t"]): int(term["c"]) for term in data["terms"]}


def _fraction(data):
    return _poly(data["num"]), _poly(data["den"])


def _symfunc(data):
    return {tuple(entry["mu"]): _fraction(entry) for entry in data["coeffs"]}


def integer_lhs(lam, n):
    return Fraction(_core.integer_lhs(partition(lam), n))


def integer_rhs(lam, n):
    return Fraction(_core.integer_rhs(partition(lam), n))


def verify(level, lam, n=None):
    """Report for one identity instance; ``report["equal"]`` is authoritative."""
    return json.loads(_core.verify_json(level, partition(lam), n))


def elliptic_table(lam, n=None):
    return json.loads(_core.table_json(partition(lam), n))


def macdonald_p(lam):
    """Monomial coefficients of P_lambda as (numerator, denominator) pairs."""
    return _symfunc(json.loads(_core.macdonald_json(partition(lam))))


def principal_check(lam, n):
    data = json.loads(_core.principal_json(partition(lam), n))
    data["principal"] = _fraction(data["principal"])
    data["elliptic"] = _fraction(data["elliptic"])
    return data


def specialize(lam, at):
    return _symfunc(json.loads(_core.specialize_json(partition(lam), at)))


def run_cli(*args):
    """Runs the command line in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
