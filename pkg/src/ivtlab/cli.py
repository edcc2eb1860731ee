"""Command-line front end with machine-readable output.

Every subcommand prints one report, JSON by default, shaped as
{"config": ..., "result": ..., "findings": [...]}.  Integers are emitted
as decimal strings (values near p**k overflow common JSON consumers), sets
come out sorted, and repeated runs with the same configuration produce
byte-identical bytes.

Exit codes: 0 success, 1 a checked property failed (conjugacy or
cross-factor verification), 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from enum import Enum

from .conjugacy import (
    DigitMap,
    IntertwineFailure,
    check_semiconjugacy,
    cross_factor_check,
    find_digit_conjugacies,
)
from .dynamics import (
    CollatzPredicate,
    census,
    contraction_check,
    fixed_points,
    global_stability_check,
    invariant_set_search,
    orbit,
    periodic_points,
)
from .measure import injectivity_audit, measure_audit, preimage
from .rules import compose_rules, rule_from_index
from .transforms import TRIMMED, FixedWidth, IvtSystem, apply, iterate

# Embedded in every JSON report; the output path is deliberately absent so
# the payload does not depend on where it is written.
CONFIG_KEYS = (
    "radix",
    "rule",
    "j1",
    "j2",
    "outer",
    "inner",
    "semantics",
    "x",
    "n",
    "width",
    "fixed_value",
    "set",
    "sigma",
    "bound",
    "max_steps",
    "format",
)


def _parse_semantics(text: str):
    if text == "trimmed":
        return TRIMMED
    if text.startswith("fixed:"):
        try:
            return FixedWidth(int(text.split(":", 1)[1]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad fixed width in {text!r}") from exc
    raise argparse.ArgumentTypeError(
        f"semantics must be 'trimmed' or 'fixed:K', got {text!r}"
    )


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc


def _semantics_label(semantics) -> str:
    if isinstance(semantics, FixedWidth):
        return f"fixed:{semantics.width}"
    return "trimmed"


def _stringify(obj):
    """Recursively convert integers to decimal strings and sets to sorted lists."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (set, frozenset)):
        return [_stringify(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    if isinstance(obj, dict):
        return {str(_key(k)): _stringify(v) for k, v in obj.items()}
    raise TypeError(f"cannot serialize {obj!r}")


def _key(k):
    return k.value if isinstance(k, Enum) else k


def _system(args) -> IvtSystem:
    semantics = getattr(args, "semantics", None) or TRIMMED
    return IvtSystem(args.radix, args.rule, semantics)


def _orbit_result(record) -> dict:
    return {
        "start": record.start,
        "transient": list(record.transient),
        "cycle": list(record.cycle),
        "steps_to_cycle": record.steps_to_cycle,
        "cycle_length": record.cycle_length,
        "visited": record.visited,
    }


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (result, findings, exit_code, csv_header,
# csv_rows).
# ---------------------------------------------------------------------------


def _cmd_apply(args):
    value = apply(_system(args), args.x)
    return {"value": value}, [], 0, ["value"], [[value]]


def _cmd_iterate(args):
    value = iterate(_system(args), args.x, args.n)
    return {"value": value}, [], 0, ["value"], [[value]]


def _cmd_orbit(args):
    record = orbit(_system(args), args.x, args.max_steps)
    rows = [[i, v, "transient"] for i, v in enumerate(record.transient)]
    offset = len(record.transient)
    rows += [[offset + i, v, "cycle"] for i, v in enumerate(record.cycle)]
    return _orbit_result(record), [], 0, ["step", "value", "phase"], rows


def _cmd_fixed_points(args):
    values = fixed_points(_system(args), args.bound)
    result = {"fixed_points": values, "count": len(values)}
    return result, [], 0, ["value"], [[v] for v in values]


def _cmd_periodic_points(args):
    pairs = periodic_points(args.radix, args.rule, args.width)
    result = {
        "periodic_points": [{"value": v, "period": n} for v, n in pairs],
        "count": len(pairs),
    }
    return result, [], 0, ["value", "period"], [[v, n] for v, n in pairs]


def _cmd_census(args):
    report = census(args.radix, args.bound, args.max_steps)
    entries = [
        {
            "rule": e.rule_index,
            "results": {p.value: e.results[p] for p in CollatzPredicate},
            "witnesses": {p.value: e.witnesses[p] for p in CollatzPredicate},
        }
        for e in report.entries
    ]
    result = {
        "claim_count": report.claim_count,
        "counts": {p.value: report.counts[p] for p in CollatzPredicate},
        "agreement": {p.value: report.agreement[p] for p in CollatzPredicate},
        "rules": entries,
    }
    findings = [
        f"{p.value}: {report.counts[p]} of {len(report.entries)} rules qualify; "
        f"reference count {report.claim_count} "
        f"({'match' if report.agreement[p] else 'no match'})"
        for p in CollatzPredicate
    ]
    header = ["rule"] + [p.value for p in CollatzPredicate] + [
        f"witness_{p.value}" for p in CollatzPredicate
    ]
    rows = [
        [e.rule_index]
        + [e.results[p] for p in CollatzPredicate]
        + [e.witnesses[p] for p in CollatzPredicate]
        for e in report.entries
    ]
    return result, findings, 0, header, rows


def _cmd_stability(args):
    outcome = global_stability_check(
        _system(args), args.fixed_value, args.bound, args.max_steps
    )
    result = {
        "fixed_value": outcome.fixed_value,
        "stable": outcome.stable,
        "witness": outcome.witness,
    }
    rows = [[outcome.stable, outcome.fixed_value, outcome.witness]]
    return result, [], 0, ["stable", "fixed_value", "witness"], rows


def _cmd_contraction(args):
    contracting = contraction_check(args.radix, args.rule, args.bound)
    return {"contracting": contracting}, [], 0, ["contracting"], [[contracting]]


def _cmd_invariant_sets(args):
    report = invariant_set_search(_system(args), args.bound)
    result = {
        "components": [list(c) for c in report.components],
        "component_count": len(report.components),
        "nontrivial_sets": [list(c) for c in report.nontrivial_sets],
    }
    if len(report.components) == 1:
        findings = [f"no nontrivial invariant set within [0, {args.bound}]"]
    else:
        findings = [
            f"{len(report.components)} components; every union of them is invariant"
        ]
    rows = [
        [i, v] for i, comp in enumerate(report.components) for v in comp
    ]
    return result, findings, 0, ["component", "value"], rows


def _cmd_preimage(args):
    values = preimage(_system(args), args.set, args.bound)
    result = {"preimage": values, "count": len(values)}
    return result, [], 0, ["value"], [[v] for v in values]


def _cmd_measure(args):
    audit = measure_audit(_system(args), args.set, args.bound)
    result = {
        "targets": list(audit.targets),
        "mu_targets": audit.mu_targets,
        "preimage": list(audit.preimage_values),
        "mu_preimage": audit.mu_preimage,
        "preserving_on_bound": audit.preserving_on_bound,
        "growth_flag": audit.growth_flag,
    }
    findings = []
    if audit.preserving_on_bound:
        findings.append("counting measure preserved on this bound")
    else:
        findings.append(
            f"not measure preserving on this bound "
            f"(mu(A) = {audit.mu_targets}, mu(preimage) = {audit.mu_preimage})"
        )
    if audit.growth_flag:
        findings.append("preimage cardinality grows when the bound doubles")
    header = ["mu_targets", "mu_preimage", "preserving_on_bound", "growth_flag"]
    rows = [
        [audit.mu_targets, audit.mu_preimage, audit.preserving_on_bound, audit.growth_flag]
    ]
    return result, findings, 0, header, rows


def _cmd_injectivity(args):
    audit = injectivity_audit(_system(args), args.bound)
    collision = None
    if audit.collision is not None:
        collision = {
            "x": audit.collision[0],
            "y": audit.collision[1],
            "value": audit.collision[2],
        }
    result = {
        "injective": audit.injective,
        "collision": collision,
        "structural_injective": audit.structural_injective,
        "characterization_match": audit.characterization_match,
    }
    header = [
        "injective",
        "structural_injective",
        "characterization_match",
        "collision_x",
        "collision_y",
        "collision_value",
    ]
    c = audit.collision or (None, None, None)
    rows = [
        [audit.injective, audit.structural_injective, audit.characterization_match,
         c[0], c[1], c[2]]
    ]
    return result, [], 0, header, rows


def _certificate_dict(cert) -> dict:
    return {
        "sigma": list(cert.sigma.mapping),
        "kind": cert.kind,
        "width": cert.width,
    }


def _cmd_conjugacy(args):
    certificates = []
    failure = None
    if args.sigma is not None:
        sigma = DigitMap(args.radix, args.sigma)
        outcome = check_semiconjugacy(args.radix, args.j1, args.j2, sigma, args.width)
        if isinstance(outcome, IntertwineFailure):
            failure = {
                "level": outcome.level,
                "witness": outcome.witness,
                "left": outcome.left,
                "right": outcome.right,
            }
        else:
            certificates.append(outcome)
    else:
        for sigma in find_digit_conjugacies(args.radix, args.j1, args.j2):
            outcome = check_semiconjugacy(
                args.radix, args.j1, args.j2, sigma, args.width
            )
            if not isinstance(outcome, IntertwineFailure):
                certificates.append(outcome)
    found = bool(certificates)
    result = {
        "certificates": [_certificate_dict(c) for c in certificates],
        "found": found,
        "failure": failure,
    }
    findings = []
    if not found:
        findings.append("no digit-induced conjugacy verified for this pair")
    header = ["sigma", "kind", "width"]
    rows = [
        [" ".join(str(d) for d in c.sigma.mapping), c.kind, c.width]
        for c in certificates
    ]
    return result, findings, 0 if found else 1, header, rows


def _cmd_cross_factor(args):
    holds = cross_factor_check(args.radix, args.j1, args.j2, args.width)
    return {"holds": holds}, [], 0 if holds else 1, ["holds"], [[holds]]


def _cmd_compose(args):
    index = compose_rules(args.radix, args.outer, args.inner)
    table = rule_from_index(args.radix, index)
    result = {"index": index, "table": list(table.table)}
    return result, [], 0, ["index"], [[index]]


HANDLERS = {
    "apply": _cmd_apply,
    "iterate": _cmd_iterate,
    "orbit": _cmd_orbit,
    "fixed-points": _cmd_fixed_points,
    "periodic-points": _cmd_periodic_points,
    "census": _cmd_census,
    "stability": _cmd_stability,
    "contraction": _cmd_contraction,
    "invariant-sets": _cmd_invariant_sets,
    "preimage": _cmd_preimage,
    "measure": _cmd_measure,
    "injectivity": _cmd_injectivity,
    "conjugacy": _cmd_conjugacy,
    "cross-factor": _cmd_cross_factor,
    "compose": _cmd_compose,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ivt",
        description="Explore p-adic integral value transformations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, rule=False, pair=False, compose=False,
            semantics=False, x=False, n=False, width=False, bound=False,
            max_steps=False, target_set=False, sigma=False, fixed_value=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--radix", type=int, required=True, help="base p, 2..16")
        if rule:
            p.add_argument("--rule", type=int, required=True,
                           help="rule index j < p**p")
        if pair:
            p.add_argument("--j1", type=int, required=True, help="source rule index")
            p.add_argument("--j2", type=int, required=True, help="target rule index")
        if compose:
            p.add_argument("--outer", type=int, required=True)
            p.add_argument("--inner", type=int, required=True)
        if semantics:
            p.add_argument("--semantics", type=_parse_semantics, default=TRIMMED,
                           help="trimmed (default) or fixed:K")
        if x:
            p.add_argument("--x", type=int, required=True, help="input value")
        if n:
            p.add_argument("--n", type=int, required=True, help="iteration count")
        if width:
            p.add_argument("--width", type=int, required=True,
                           help="fixed word width k")
        if fixed_value:
            p.add_argument("--fixed-value", type=int, required=True,
                           dest="fixed_value", help="candidate fixed point")
        if target_set:
            p.add_argument("--set", type=_parse_int_list, required=True,
                           help="comma-separated target values")
        if bound:
            p.add_argument("--bound", type=int, required=True,
                           help="inclusive search bound")
        if max_steps:
            p.add_argument("--max-steps", type=int, default=10_000,
                           dest="max_steps", help="step budget (default 10000)")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        return p

    add("apply", "evaluate one step", rule=True, semantics=True, x=True)
    add("iterate", "evaluate n steps", rule=True, semantics=True, x=True, n=True)
    orbit_p = add("orbit", "transient and cycle of a trajectory",
                  rule=True, semantics=True, x=True)
    orbit_p.add_argument("--max-steps", type=int, default=None, dest="max_steps",
                         help="step budget (default: state-space size)")
    add("fixed-points", "all fixed values up to a bound",
        rule=True, semantics=True, bound=True)
    add("periodic-points", "periodic width-k words with least periods",
        rule=True, width=True)
    add("census", "classify every rule of a radix",
        bound=True, max_steps=True)
    add("stability", "does every start converge to a fixed point",
        rule=True, semantics=True, fixed_value=True, bound=True, max_steps=True)
    add("contraction", "is the map constant (discrete-metric contraction)",
        rule=True, bound=True)
    add("invariant-sets", "weakly connected components of [0, bound]",
        rule=True, semantics=True, bound=True)
    add("preimage", "all values mapping into a target set",
        rule=True, semantics=True, target_set=True, bound=True)
    add("measure", "counting-measure audit of a target set",
        rule=True, semantics=True, target_set=True, bound=True)
    add("injectivity", "collision scan plus structural characterization",
        rule=True, semantics=True, bound=True)
    conj = add("conjugacy", "find or check digit-induced conjugacies",
               pair=True, width=True)
    conj.add_argument("--sigma", type=_parse_int_list, default=None,
                      help="check this digit map instead of searching")
    add("cross-factor", "mutual factor check for the two composites",
        pair=True, width=True)
    add("compose", "index of the digit-wise composition", compose=True)
    return parser


def _render_json(config: dict, result: dict, findings: list[str]) -> str:
    document = {
        "config": _stringify(config),
        "result": _stringify(result),
        "findings": findings,
    }
    return json.dumps(document, indent=2) + "\n"


def _render_csv(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buffer.getvalue()


def _build_config(args) -> dict:
    config = {"command": args.command}
    for key in CONFIG_KEYS:
        if not hasattr(args, key):
            continue
        value = getattr(args, key)
        if key == "semantics":
            value = _semantics_label(value)
        if key in ("set", "sigma") and value is not None:
            value = list(value)
        config[key] = value
    return config


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, findings, code, header, rows = HANDLERS[args.command](args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        text = _render_json(_build_config(args), result, findings)
    else:
        text = _render_csv(header, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
