"""Report trees for the command-line front door.

Every builder returns a plain nested dict of str/int/float/bool/list values,
ordered deterministically, so that json.dumps(..., sort_keys=True) and the
text renderer are bit-identical across runs for fixed inputs and seed.
"""

from __future__ import annotations

from typing import Any

from .eps import EPS, gcd_of_differences
from .essentials import audit_divisor_coprimality, essential_elements
from .order import decide_basis, effective_bound
from .oracle import differential_check
from .primes import MRReport, SweepResult, best_constant
from .progression import (audit_decomposition, audit_reservoir_bound,
                          essential_subsets, progression_profile)
from .reduction import (BoundReport, audit_elementary_order,
                        audit_order_sandwich, audit_prime_sum_floor,
                        elementary_set, primitive_set,
                        reduction_depth_bound, strip_essential_elements)
from .setexpr import format_set_expr


def _bound_audit(rep: BoundReport) -> dict[str, Any]:
    out: dict[str, Any] = {"name": rep.name, "holds": rep.holds}
    out.update(sorted(rep.quantities.items()))
    if rep.equality is not None:
        out["equality"] = rep.equality
    return out


def analyze(s: EPS, hmax: int | None = None, at_most: bool = False) -> dict[str, Any]:
    """Full analysis tree for one set.  Non-bases get a diagnosis block
    with the same progression estimates a basis would get, plus a warning;
    every verdict-bearing field sits under "audits" or "verdict"."""
    report: dict[str, Any] = {
        "set": format_set_expr(s),
        "gcd_of_differences": gcd_of_differences(s),
        "finite": s.is_finite,
    }
    decision = decide_basis(s, allow_fewer=at_most)
    report["basis"] = decision.is_basis
    prof = progression_profile(s)
    report["progression"] = {
        "difference": prof.difference,
        "offset": prof.offset,
        "core": format_set_expr(prof.core),
        "reservoir": list(prof.reservoir),
        "radical_length": prof.radical_length,
        "total_length": prof.total_length,
    }
    if not decision.is_basis:
        report["warning"] = ("not an additive basis; progression data is "
                             "descriptive, no further invariants apply")
        if decision.cycle is not None:
            report["cycle"] = {"first_seen": decision.cycle.first_seen,
                               "repeats_at": decision.cycle.repeats_at}
        report["verdict"] = False
        return report

    cert = decision.certificate
    level = hmax if hmax is not None else decision.order
    report["order"] = {
        "order": decision.order,
        "exact_h": not at_most,
        "coverage_from": cert.coverage_from,
        "residue_minima": list(cert.residue_minima),
        "effective_bound": effective_bound(s, level, allow_fewer=at_most),
        "effective_bound_level": level,
    }

    ess = essential_elements(s)
    report["essentials"] = {
        "elements": list(ess.elements),
        "divisors": list(ess.divisors),
        "count": ess.count,
        "q": ess.q,
        "module": ess.module,
        "anchor": ess.anchor,
    }
    report["primitive_set"] = format_set_expr(primitive_set(s))
    report["elementary_set"] = format_set_expr(elementary_set(s))

    parts = essential_subsets(s)
    report["essential_subsets"] = [list(p) for p in parts]

    trace = strip_essential_elements(s)
    report["trace"] = {
        "counts": list(trace.counts),
        "delta": trace.delta,
        "stages": [format_set_expr(step.stage) for step in trace.steps],
        "delta_bound": reduction_depth_bound(s),
    }

    audits: list[dict[str, Any]] = [
        _bound_audit(audit_order_sandwich(s)),
        _bound_audit(audit_elementary_order(s)),
        _bound_audit(audit_prime_sum_floor(s)),
    ]
    reservoir = audit_reservoir_bound(s)
    audits.append({
        "name": "reservoir-bound",
        "holds": reservoir.holds,
        "parts": [list(p) for p in reservoir.parts],
        "reservoir": list(reservoir.reservoir),
        "radical_length": reservoir.radical_length,
    })
    dec = audit_decomposition(s, prof.difference, prof.offset, prof.core)
    audits.append({
        "name": "decomposition-equivalences",
        "holds": dec.consistent and dec.difference_matches,
        "difference_matches": dec.difference_matches,
        "core_translate_matches": dec.core_translate_matches,
        "core_is_free": dec.core_is_free,
    })
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            # two finite parts never exhaust an infinite basis, so the
            # coprimality precondition holds for every pair here
            cop = audit_divisor_coprimality(s, parts[i], parts[j])
            audits.append({
                "name": "divisor-coprimality",
                "holds": cop.coprime,
                "part1": list(cop.part1),
                "part2": list(cop.part2),
                "divisor1": cop.divisor1,
                "divisor2": cop.divisor2,
            })
    report["audits"] = audits
    report["verdict"] = all(a["holds"] for a in audits)
    return report


def sweep(result: SweepResult, include_rows: bool) -> dict[str, Any]:
    report: dict[str, Any] = {
        "n_max": result.n_max,
        "checked": result.checked,
        "argmax_n": result.argmax_n,
        "best_constant": f"{best_constant():.12g}",
        "equalities": list(result.equalities),
        "violations": list(result.violations),
        "flagged_ties": list(result.flagged),
        "verdict": result.holds,
    }
    if include_rows:
        report["rows"] = [
            {"n": row.n, "h": row.h, "c": f"{row.c:.12g}"}
            for row in result.rows()
        ]
    return report


def verify_mr(result: MRReport) -> dict[str, Any]:
    return {
        "n_lo": result.n_lo,
        "n_hi": result.n_hi,
        "checked": result.checked,
        "first_inequality": {
            "holds": result.first_holds,
            "violation_windows": [list(w) for w in result.first_violations],
        },
        "second_inequality": {
            "holds": result.second_holds,
            "violation_windows": [list(w) for w in result.second_violations],
        },
        "verdict": result.holds,
    }


def oracle_check(seed: int, iters: int) -> dict[str, Any]:
    result = differential_check(seed, iters)
    return {
        "seed": seed,
        "instances": result.instances,
        "conclusive_orders": result.conclusive_orders,
        "order_disagreements": list(result.order_disagreements),
        "subset_disagreements": list(result.subset_disagreements),
        "verdict": result.holds,
    }


def render_text(tree: dict[str, Any], indent: int = 0) -> str:
    """Stable plain-text rendering: keys in insertion order, scalars
    inline, nested dicts and dict-lists indented."""
    pad = "  " * indent
    lines: list[str] = []
    for key, value in tree.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(render_text(item, indent + 1))
                lines.append(f"{pad}  -")
            lines.pop()
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")
    return "\n".join(lines)


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    return str(value)
