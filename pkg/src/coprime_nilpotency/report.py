"""JSON-ready dictionaries for every check result.

Key order is fixed by construction so that identical runs serialize to
identical bytes. Permutations are always written in cycle notation and
re-parse with the group's degree.
"""

from __future__ import annotations

import datetime
import json

from . import __version__
from .factorization import FactorizationResult, InjectivityResult
from .groups import GroupTable, Subgroup
from .perm import format_cycles
from .properties import NilpotencyReport, PropertyAReport, TheoremVerdict
from .sylow import SylowSystem

TOOL = "coprime-nilpotency"


def group_info(name, G: GroupTable) -> dict:
    return {
        "name": name if name is not None else G.name,
        "degree": G.degree,
        "order": G.order,
        "generators": [format_cycles(g) for g in G.generators],
    }


def subgroup_info(S: Subgroup) -> dict:
    return {"order": S.order, "generators": [format_cycles(g) for g in S.generators]}


def property_a(report: PropertyAReport) -> dict:
    out = {"holds": report.holds, "tuple_size": report.tuple_size, "pairs_checked": report.pairs_checked}
    if report.skipped:
        out["skipped"] = True
    ce = report.counterexample
    if ce is None:
        out["counterexample"] = None
    elif len(ce.factors) == 2:
        out["counterexample"] = {
            "x": format_cycles(ce.x),
            "y": format_cycles(ce.y),
            "order_x": ce.order_x,
            "order_y": ce.order_y,
            "order_xy": ce.observed,
            "expected": ce.expected,
        }
    else:
        out["counterexample"] = {
            "factors": [format_cycles(f) for f in ce.factors],
            "orders": list(ce.orders),
            "order_product": ce.observed,
            "expected": ce.expected,
        }
    return out


def nilpotency(report: NilpotencyReport) -> dict:
    out = {"nilpotent": report.nilpotent, "method": report.method}
    if report.series_orders:
        out["series_orders"] = list(report.series_orders)
    if report.witness is None:
        out["witness"] = None
    else:
        witness = subgroup_info(report.witness)
        if report.witness_prime is not None:
            witness["prime"] = report.witness_prime
            witness["conjugator"] = format_cycles(report.witness_conjugator)
        out["witness"] = witness
    return out


def sylow_system(system: SylowSystem) -> list:
    return [dict(prime=p, **subgroup_info(S)) for p, S in zip(system.primes.primes, system.subgroups)]


def factorization(result: FactorizationResult) -> dict:
    out = {
        "found": result.found,
        "mode": "exhaustive" if result.exhaustive else "first-hit",
        "prime_order": list(result.prime_order),
        "product_size": result.product_size,
        "systems_tried": result.systems_tried,
        "successes": result.successes,
        "failures": result.failures,
        "multiplications": result.multiplications,
        "system": sylow_system(result.system) if result.system is not None else None,
    }
    if result.exhaustive:
        if result.failing_example is None:
            out["failing_example"] = None
        else:
            system, size = result.failing_example
            out["failing_example"] = {"product_size": size, "system": sylow_system(system)}
    return out


def injectivity(result: InjectivityResult) -> dict:
    out = {"injective": result.injective, "product_size": result.product_size, "tuple_count": result.tuple_count}
    if result.collision is not None:
        out["collision"] = [[format_cycles(s) for s in combo] for combo in result.collision]
    return out


def verdict(result: TheoremVerdict) -> dict:
    a, n, n2 = result.flags
    return {
        "property_a": property_a(result.property_a),
        "nilpotent_sylow": nilpotency(result.sylow),
        "nilpotent_lcs": nilpotency(result.lcs),
        "flags": {"property_a": a, "nilpotent_sylow": n, "nilpotent_lcs": n2},
        "consistent": result.consistent,
    }


def envelope(command: str, timestamp: bool) -> dict:
    out = {"tool": TOOL, "version": __version__, "command": command}
    if timestamp:
        out["generated_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    return out


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
