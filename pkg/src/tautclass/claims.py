"""Claim registry and batch verification.

Claims live in a checked-in JSON document (``data/registry.json``) so the
expected constants are auditable without reading source code.  Each claim
binds one operation with arguments to an expected value; expected values
carry a provenance tag: ``reported`` for constants taken from the source
material under audit, ``derived`` for values recomputed here by an
independent route, ``trivial`` for definitional facts.  Every comparison is
exact; there are no tolerances anywhere.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Mapping

from . import hypersurfaces as hyp
from . import schur
from . import surfaces
from . import threefolds
from .chow import (BasePoly, PTClass, as_fraction, eval_top, fraction_str,
                   restrict_to_section, segre_omega, dual_vmrt_generic)
from .exprparse import format_class, parse_expr
from .profiles import get_profile

PROVENANCE_TAGS = ("reported", "derived", "trivial")


@dataclass(frozen=True)
class Claim:
    """A named expected value bound to the operation that recomputes it."""

    id: str
    description: str
    anchor: str
    op: str
    args: Mapping[str, Any]
    expected: Mapping[str, Any]
    provenance: str


@dataclass(frozen=True)
class ClaimResult:
    id: str
    status: str  # "pass" | "fail" | "skipped"
    computed: str
    expected: str
    provenance: str
    elapsed: float


@dataclass
class Report:
    results: list[ClaimResult] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for result in self.results:
            counts[result.status] += 1
        return counts

    @property
    def has_failures(self) -> bool:
        return any(result.status == "fail" for result in self.results)


# ---------------------------------------------------------------------------
# Operation bindings
# ---------------------------------------------------------------------------

def _base_poly_from_expr(profile, text: str) -> BasePoly:
    cls = parse_expr(profile, text)
    if any(zp for (zp, _), _ in cls.terms):
        raise ValueError(f"{text!r} is not a pulled-back divisor expression")
    return cls.base_part(0)


def _op_eval_expr(args) -> Fraction:
    profile = get_profile(args["profile"])
    return eval_top(profile, parse_expr(profile, args["expr"]))


def _op_segre_top(args) -> Fraction:
    profile = get_profile(args["profile"])
    return profile.evaluate(segre_omega(profile)[profile.dim])


def _op_dual_vmrt(args) -> PTClass:
    profile = get_profile(args["profile"])
    push = _base_poly_from_expr(profile, args["pushforward"])
    return dual_vmrt_generic(profile, int(args["deg_e"]), push)


def _op_restrict_section(args) -> Fraction:
    return restrict_to_section(args["splitting"], int(args["quotient_index"]),
                               as_fraction(args["eps"]))


def _op_degenerate_count(args) -> int:
    lattice = surfaces.surface_lattice(int(args["degree"]))
    counts = {len(pencil.degenerate_members)
              for pencil in surfaces.conic_pencils(lattice)}
    if len(counts) != 1:
        raise ArithmeticError(f"pencils disagree on member count: {counts}")
    return counts.pop()


def _op_lattice_check(args) -> bool:
    lattice = surfaces.surface_lattice(int(args["degree"]))
    return (lattice.pair(lattice.k, lattice.k) == lattice.degree
            and lattice.rank == 10 - lattice.degree)


def _op_noether_all(args) -> bool:
    return all(surfaces.noether_check(d) for d in range(1, 10))


def _op_chi_growth_threshold(args) -> bool:
    return all((surfaces.chi_sym_cubic_coefficient(d) > 0) == (d >= 7)
               for d in range(1, 10))


def _op_chern_value(args) -> Fraction:
    spec = hyp.HypersurfaceSpec(int(args["n"]), int(args["d"]))
    profile = hyp.hypersurface_profile(spec)
    j = int(args["j"])
    h = profile.symbol("H")
    return profile.evaluate(profile.chern[j - 1] * h ** (spec.n - j))


def _op_c1_coeff(args) -> Fraction:
    spec = hyp.HypersurfaceSpec(int(args["n"]), int(args["d"]))
    profile = hyp.hypersurface_profile(spec)
    coeffs = dict(profile.chern[0].terms)
    return coeffs.get((1,), Fraction(0))


def _op_c1_square(args) -> Fraction:
    spec = hyp.HypersurfaceSpec(int(args["n"]), int(args["d"]))
    profile = hyp.hypersurface_profile(spec)
    h = profile.symbol("H")
    return profile.evaluate(profile.chern[0] ** 2 * h ** (spec.n - 2))


def _op_comb_A(args) -> Fraction:
    brute, _ = hyp.comb_identity_A(int(args["k"]), int(args["n"]))
    return brute


def _op_comb_A_match(args) -> bool:
    brute, closed = hyp.comb_identity_A(int(args["k"]), int(args["n"]))
    return closed is not None and brute == closed


def _op_triple(args) -> Fraction:
    profile = threefolds.threefold_profile(int(args["d"]), int(args["b3"]))
    return threefolds.profile_triple(profile)[int(args["index"])]


def _op_vmrt_class(args) -> PTClass:
    row = threefolds.vmrt_table()[int(args["d"])]
    if row.cls is None:
        raise ValueError(f"degree {row.degree} row is interval-valued")
    return row.cls


def _op_vmrt_k(args) -> int:
    return threefolds.vmrt_table()[int(args["d"])].k


def _op_vmrt_m_min(args) -> Fraction:
    row = threefolds.vmrt_table()[int(args["d"])]
    if row.h_coefficient_min is None:
        raise ValueError(f"degree {row.degree} row is exact, not interval-valued")
    return row.h_coefficient_min


def _op_not_big(args) -> bool:
    return threefolds.vmrt_table()[int(args["d"])].not_big_certificate_applies()


def _op_k3_value(args) -> Fraction:
    data = threefolds.k3_quartic_data()
    return (data.zeta3, data.zeta2_h, data.zeta_h2)[int(args["index"])]


OPS: dict[str, Callable[[Mapping[str, Any]], Any]] = {
    "chow.eval_expr": _op_eval_expr,
    "chow.segre_top": _op_segre_top,
    "chow.dual_vmrt": _op_dual_vmrt,
    "chow.restrict_section": _op_restrict_section,
    "surfaces.lattice_check": _op_lattice_check,
    "surfaces.minus_one_count":
        lambda a: len(surfaces.minus_one_curves(surfaces.surface_lattice(int(a["degree"])))),
    "surfaces.conic_count":
        lambda a: len(surfaces.conic_classes(surfaces.surface_lattice(int(a["degree"])))),
    "surfaces.degenerate_count": _op_degenerate_count,
    "surfaces.degree4_pairing": lambda a: surfaces.degree4_pairing(),
    "surfaces.conic_pair_count": lambda a: len(surfaces.degree4_pencil_pairs()),
    "surfaces.degree4_vmrt_pair_sum": lambda a: surfaces.degree4_vmrt_pair_sum(),
    "surfaces.degree4_lines_covered": lambda a: surfaces.degree4_lines_covered(),
    "surfaces.quintic_pairwise": lambda a: surfaces.quintic_conics_pairwise(),
    "surfaces.degree5_sum": lambda a: surfaces.degree5_sum(),
    "surfaces.degree5_vmrt_sum": lambda a: surfaces.degree5_vmrt_sum(),
    "surfaces.cubic_conics_match_lines":
        lambda a: surfaces.cubic_conics_match_lines(),
    "surfaces.cubic_certificate":
        lambda a: getattr(surfaces.cubic_surface_certificate(), a["component"]),
    "surfaces.chi_sym":
        lambda a: surfaces.chi_sym_tangent_surface(int(a["degree"]), int(a["m"])),
    "surfaces.noether_all": _op_noether_all,
    "surfaces.chi_growth_threshold": _op_chi_growth_threshold,
    "hyp.chern_value": _op_chern_value,
    "hyp.c1_coeff": _op_c1_coeff,
    "hyp.c1_square": _op_c1_square,
    "hyp.segre_closed":
        lambda a: hyp.segre_closed_form(
            hyp.HypersurfaceSpec(int(a["n"]), int(a["d"])), int(a["l"])),
    "hyp.mnef": lambda a: hyp.cubic_mnef_number(int(a["n"])),
    "hyp.sum_positive": lambda a: hyp.sum_positive_part(int(a["n"])),
    "hyp.sum_negative": lambda a: hyp.sum_negative_part(int(a["n"])),
    "hyp.comb_A": _op_comb_A,
    "hyp.comb_A_match": _op_comb_A_match,
    "hyp.recursion_A": lambda a: hyp.recursion_check_A(int(a["k"]), int(a["n"])),
    "threefolds.triple": _op_triple,
    "threefolds.vmrt_class": _op_vmrt_class,
    "threefolds.vmrt_k": _op_vmrt_k,
    "threefolds.vmrt_m_min": _op_vmrt_m_min,
    "threefolds.not_big": _op_not_big,
    "threefolds.certificate_degree1": lambda a: threefolds.certificate_degree1(),
    "threefolds.certificate_degree2_modnef":
        lambda a: threefolds.certificate_degree2_modnef(),
    "threefolds.certificate_degree2_divisor":
        lambda a: threefolds.certificate_degree2_divisor(),
    "threefolds.k3_class": lambda a: threefolds.k3_quartic_data().bitangent_class,
    "threefolds.k3_normalized":
        lambda a: threefolds.k3_quartic_data().normalized_class,
    "threefolds.k3_value": _op_k3_value,
    "schur.dim": lambda a: schur.schur_dim(a["partition"], int(a["n"])),
    "schur.ssyt": lambda a: schur.ssyt_count(a["partition"], int(a["n"])),
    "schur.rectangle":
        lambda a: schur.plethysm_rectangle_check(int(a["n"]), int(a["k"])),
    "schur.euler_forms":
        lambda a: schur.euler_char_forms(int(a["n"]), int(a["p"]), int(a["k"])),
    "schur.bott":
        lambda a: schur.bott_vanishing(int(a["n"]), int(a["r"]), int(a["j"])),
    "schur.bridge":
        lambda a: schur.bridge_identity_check(int(a["n"]), int(a["d"]), int(a["k"])),
}


# ---------------------------------------------------------------------------
# Registry and runner
# ---------------------------------------------------------------------------

def load_registry(path: str | Path | None = None) -> tuple[Claim, ...]:
    """Load and validate the claim registry."""
    if path is None:
        text = resources.files("tautclass").joinpath("data/registry.json").read_text()
    else:
        text = Path(path).read_text()
    raw = json.loads(text)
    claims = []
    seen: set[str] = set()
    for entry in raw["claims"]:
        claim = Claim(
            id=entry["id"],
            description=entry["description"],
            anchor=entry.get("anchor", ""),
            op=entry["op"],
            args=entry.get("args", {}),
            expected=entry["expected"],
            provenance=entry["provenance"],
        )
        if claim.id in seen:
            raise ValueError(f"duplicate claim id {claim.id!r}")
        seen.add(claim.id)
        if claim.provenance not in PROVENANCE_TAGS:
            raise ValueError(f"{claim.id}: bad provenance {claim.provenance!r}")
        if len(claim.expected) != 1 or next(iter(claim.expected)) not in (
                "rational", "int", "bool", "class", "interval"):
            raise ValueError(f"{claim.id}: bad expected spec {claim.expected!r}")
        claims.append(claim)
    return tuple(claims)


def _render(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, PTClass):
        return format_class(get_profile(value.profile_label), value)
    return str(value)


def _render_expected(expected: Mapping[str, Any]) -> str:
    kind, spec = next(iter(expected.items()))
    if kind == "rational":
        return str(spec)
    if kind == "int":
        return str(spec)
    if kind == "bool":
        return "true" if spec else "false"
    if kind == "class":
        profile = get_profile(spec["profile"])
        return format_class(profile, parse_expr(profile, spec["expr"]))
    if kind == "interval":
        parts = []
        if "min" in spec:
            parts.append(f">= {spec['min']}")
        if "max" in spec:
            parts.append(f"<= {spec['max']}")
        return " and ".join(parts)
    raise ValueError(f"bad expected kind {kind!r}")


def _matches(expected: Mapping[str, Any], computed: Any) -> bool:
    kind, spec = next(iter(expected.items()))
    if kind == "rational":
        return (isinstance(computed, (int, Fraction))
                and not isinstance(computed, bool)
                and as_fraction(computed) == Fraction(str(spec)))
    if kind == "int":
        return (isinstance(computed, (int, Fraction))
                and not isinstance(computed, bool)
                and as_fraction(computed) == int(spec))
    if kind == "bool":
        return isinstance(computed, bool) and computed is bool(spec)
    if kind == "class":
        if not isinstance(computed, PTClass):
            return False
        profile = get_profile(spec["profile"])
        return computed == parse_expr(profile, spec["expr"])
    if kind == "interval":
        if not isinstance(computed, (int, Fraction)) or isinstance(computed, bool):
            return False
        value = as_fraction(computed)
        if "min" in spec and value < Fraction(str(spec["min"])):
            return False
        if "max" in spec and value > Fraction(str(spec["max"])):
            return False
        return True
    raise ValueError(f"bad expected kind {kind!r}")


def run_claims(filter_prefix: str | None = None,
               registry: tuple[Claim, ...] | None = None) -> Report:
    """Run claims in registry order; failures carry a diagnostic and the
    run continues."""
    claims = registry if registry is not None else load_registry()
    report = Report()
    for claim in claims:
        if filter_prefix and not claim.id.startswith(filter_prefix):
            continue
        start = time.perf_counter()
        op = OPS.get(claim.op)
        if op is None:
            computed_text = f"error: unknown operation {claim.op!r}"
            status = "fail"
        else:
            try:
                computed = op(claim.args)
            except Exception as exc:  # diagnostic, keep running
                computed_text = f"error: {exc}"
                status = "fail"
            else:
                computed_text = _render(computed)
                status = "pass" if _matches(claim.expected, computed) else "fail"
        report.results.append(ClaimResult(
            id=claim.id,
            status=status,
            computed=computed_text,
            expected=_render_expected(claim.expected),
            provenance=claim.provenance,
            elapsed=time.perf_counter() - start,
        ))
    return report


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------

def emit(report: Report, format: str = "json") -> str:
    """Render a report as JSON or markdown.

    Output is byte-identical across runs for the same registry: per-claim
    timings stay on the in-memory result objects and are not emitted.
    """
    if format == "json":
        doc = {
            "claims": [{
                "id": r.id,
                "status": r.status,
                "computed": r.computed,
                "expected": r.expected,
                "provenance": r.provenance,
            } for r in report.results],
            "summary": report.summary,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if format == "markdown":
        groups: dict[str, list[ClaimResult]] = {}
        for result in report.results:
            groups.setdefault(result.id.split(".")[0], []).append(result)
        lines = ["# Claim verification report", ""]
        for group in sorted(groups):
            lines.append(f"## {group}")
            lines.append("")
            lines.append("| claim | status | computed | expected |")
            lines.append("| --- | --- | --- | --- |")
            for r in groups[group]:
                lines.append(f"| {r.id} | {r.status} | {r.computed} | {r.expected} |")
            lines.append("")
        summary = report.summary
        lines.append(f"**summary:** {summary['pass']} pass, "
                     f"{summary['fail']} fail, {summary['skipped']} skipped")
        lines.append("")
        return "\n".join(lines)
    raise ValueError(f"unknown format {format!r}")
