"""The refutation engine for indexed families of Scott opens.

Given opens U_1, U_2, ... that all contain every maximal element, each level
k must admit a finite column point x(k, n_k) inside U_k (the column top
x(k, w) is the sup of its column, and opens are inaccessible by directed
sups).  The word built from the chosen entries then lies in U_1 n ... n U_k
at every level -- it dominates x(k, n_k) -- yet any infinite completion of it
is a plain sequence and plain sequences are never maximal.  So no tested
family's intersection collapses to the maximal points; a certificate records
the levels, the witnessing generators and the diagonal word so the run can be
re-checked independently.

A finite run certifies failure up to its depth only; reports say exactly
that and nothing stronger.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .errors import InputError
from .domain import Elem, is_compact, is_maximal, leq, plain, xpoint
from .opens import Membership, OpenDesc, OpensFamily, intersection_member_prefix_check
from .seq import Seq

BUDGET_ENV = "MAXGDELTA_BUDGET"
DEFAULT_BUDGET = 4096


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{BUDGET_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise InputError(f"{BUDGET_ENV} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class DiagLevel:
    k: int
    n: int
    generator: Elem


@dataclass(frozen=True)
class DiagCertificate:
    family: str
    depth: int
    levels: tuple[DiagLevel, ...]
    prefix: tuple[int, ...]


@dataclass(frozen=True)
class DiagFailure:
    level: int
    reason: str  # "budget" | "closure"
    detail: str = ""


@dataclass(frozen=True)
class BudgetExhausted:
    tests: int


def find_level_index(open_desc: OpenDesc, k: int, budget: int):
    """Smallest n with x(k, n) in the open, scanning n = 1, 2, ...

    Returns (n, witnessing generator); BudgetExhausted after ``budget``
    membership tests, which signals the open may miss the column top x(k, w).
    UNKNOWN answers (generator streams past their scan budget) never certify.
    """
    if budget < 1:
        raise InputError(f"budget must be >= 1, got {budget}")
    for n in range(1, budget + 1):
        res = open_desc.witness(xpoint(k, n))
        if res.status is Membership.IN:
            return n, res.generator
    return BudgetExhausted(budget)


def diagonalize(family: OpensFamily, depth: int, budget: int | None = None):
    """Run the level search for k = 1..depth and assemble a certificate.

    Least-index search makes runs deterministic and certificates canonical.
    Failures: ("budget") when some level exhausts its search budget, and
    ("closure") when a level's prefix fails to land in the levels so far --
    the latter signals an invalid open description or a bug, never a valid
    run, because the level-k prefix dominates x(k, n_k) by construction.
    """
    if depth < 1:
        raise InputError(f"depth must be >= 1, got {depth}")
    budget = default_budget() if budget is None else budget
    levels: list[DiagLevel] = []
    entries: list[int] = []
    for k in range(1, depth + 1):
        hit = find_level_index(family.open_at(k), k, budget)
        if isinstance(hit, BudgetExhausted):
            return DiagFailure(
                level=k,
                reason="budget",
                detail=f"no column point x({k}, n) found in level {k} within {hit.tests} tests",
            )
        n, gen = hit
        levels.append(DiagLevel(k=k, n=n, generator=gen))
        entries.append(n)
        step = plain(Seq(tuple(entries)))
        if not leq(xpoint(k, n), step):
            return DiagFailure(level=k, reason="closure", detail=f"{step} does not dominate x({k},{n})")
        if not intersection_member_prefix_check(family, step, k):
            return DiagFailure(
                level=k, reason="closure", detail=f"{step} escapes some level <= {k}"
            )
    return DiagCertificate(
        family=family.name, depth=depth, levels=tuple(levels), prefix=tuple(entries)
    )


def witness_element(cert: DiagCertificate) -> Elem:
    """The diagonal word completed to an infinite sequence (1-padded).

    Any infinite completion stays in every certified level, since membership
    was certified through a compact dominator of the finite prefix; the
    1-padding is the canonical choice.  The result is a plain sequence, hence
    not maximal.
    """
    return plain(Seq(cert.prefix, (1,)))


def verify_certificate(cert: DiagCertificate, family: OpensFamily) -> bool:
    return not certificate_problems(cert, family)


def certificate_problems(cert: DiagCertificate, family: OpensFamily) -> list[str]:
    """Independent re-check of a certificate; empty list means valid.

    Per level: the recorded column point really lies in its open, the
    recorded generator is compact and sits below it, and the prefix up to
    that level dominates it.  Globally: the full prefix lies in every level,
    and the completed witness is a non-maximal member of every level.
    """
    problems: list[str] = []
    if cert.depth < 1:
        problems.append("depth must be >= 1")
        return problems
    if cert.depth != len(cert.levels) or cert.depth != len(cert.prefix):
        problems.append("depth disagrees with levels/prefix lengths")
        return problems
    if [lv.k for lv in cert.levels] != list(range(1, cert.depth + 1)):
        problems.append("levels are not 1..depth in order")
        return problems
    for lv in cert.levels:
        open_k = family.open_at(lv.k)
        if open_k.witness(xpoint(lv.k, lv.n)).status is not Membership.IN:
            problems.append(f"level {lv.k}: x({lv.k},{lv.n}) is not in the level's open")
        if not is_compact(lv.generator):
            problems.append(f"level {lv.k}: recorded generator {lv.generator} is not compact")
        elif not leq(lv.generator, xpoint(lv.k, lv.n)):
            problems.append(
                f"level {lv.k}: generator {lv.generator} does not sit below x({lv.k},{lv.n})"
            )
        step = plain(Seq(cert.prefix[: lv.k]))
        if not leq(xpoint(lv.k, lv.n), step):
            problems.append(f"level {lv.k}: prefix {step} does not dominate x({lv.k},{lv.n})")
    full = plain(Seq(cert.prefix))
    if not intersection_member_prefix_check(family, full, cert.depth):
        problems.append("full prefix escapes some certified level")
    witness = witness_element(cert)
    if is_maximal(witness):
        problems.append("witness is maximal")  # impossible for plain sequences
    if not intersection_member_prefix_check(family, witness, cert.depth):
        problems.append("completed witness escapes some certified level")
    return problems


def cert_to_json(cert: DiagCertificate) -> str:
    """Canonical JSON rendering; identical certificates give identical bytes."""
    doc = {
        "family": cert.family,
        "depth": cert.depth,
        "levels": [
            {"k": lv.k, "n": lv.n, "gen": str(lv.generator)} for lv in cert.levels
        ],
        "prefix": list(cert.prefix),
    }
    return json.dumps(doc, separators=(",", ":"), sort_keys=False) + "\n"


def cert_from_json(text: str) -> DiagCertificate:
    from .parsing import parse_elem

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"bad certificate JSON: {e}") from e
    try:
        levels = tuple(
            DiagLevel(k=int(lv["k"]), n=int(lv["n"]), generator=parse_elem(lv["gen"]))
            for lv in doc["levels"]
        )
        return DiagCertificate(
            family=str(doc["family"]),
            depth=int(doc["depth"]),
            levels=levels,
            prefix=tuple(int(x) for x in doc["prefix"]),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad certificate structure: {e}") from e
