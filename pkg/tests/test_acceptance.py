"""Acceptance suite: the package's exit criteria, one test per criterion.

Each test prints a single pass/fail line (visible with pytest -s or in the
captured output of a failure) and then asserts.  Expected values are either
frozen worked examples or recomputed here by independent brute-force
oracles; bounds and step budgets are pinned in the tests themselves.
"""

import json
import random
import time
from collections import Counter

from ivtlab.cli import main as cli_main
from ivtlab.conjugacy import DigitMap, find_digit_conjugacies
from ivtlab.digits import DigitWord
from ivtlab.dynamics import (
    CollatzPredicate,
    census,
    contraction_check,
    fixed_points,
    orbit,
    periodic_points,
)
from ivtlab.measure import injectivity_audit, measure_audit, preimage
from ivtlab.rules import compose_rules, rule_count, rule_from_index
from ivtlab.transforms import (
    FixedWidth,
    IvtSystem,
    apply,
    iterate,
    iterate_via_decomposition,
    word_map,
)


def _report(number: int, title: str, ok: bool) -> None:
    print(f"criterion {number:02d} [{'PASS' if ok else 'FAIL'}] {title}")


def test_criterion_01_worked_evaluations():
    ok = apply(IvtSystem(3, 7), 55) == 14 and apply(IvtSystem(3, 16), 55) == 41
    _report(1, "worked evaluations (base 3, rules 7 and 16, x = 55)", ok)
    assert ok


def test_criterion_02_orbit_fidelity():
    expected = {
        0: {0, 1},
        1: {0, 1},
        2: {2, 1, 0},
        3: {3, 1, 0},
        4: {4, 3, 1, 0},
        5: {5, 2, 1, 0},
        6: {6, 1, 0},
        7: {7, 1, 0},
        15: {15, 1, 0},
    }
    system = IvtSystem(2, 1)
    mismatches = [
        x0
        for x0, visited in expected.items()
        if set(orbit(system, x0).visited) != visited
    ]
    mismatches += [
        2**n - 1
        for n in range(2, 17)
        if len(orbit(system, 2**n - 1).visited) != 3
    ]
    ok = not mismatches
    _report(2, "orbit visited sets of the base-2 complement rule", ok)
    assert ok, f"mismatched starts: {mismatches}"


def test_criterion_03_mersenne_preimage():
    system = IvtSystem(2, 1)
    values = preimage(system, {0}, 10**6)
    audit = measure_audit(system, {0}, 10**6)
    ok = (
        values == [2**n - 1 for n in range(1, 20)]
        and not audit.preserving_on_bound
        and audit.growth_flag
    )
    _report(3, "preimage of {0} under the complement rule is the Mersenne set", ok)
    assert ok


def test_criterion_04_base3_bijective_rule_audit():
    system = IvtSystem(3, 15)
    values = preimage(system, {0, 1, 2, 7, 10}, 10**4)
    audit = measure_audit(system, {0, 1, 2, 7, 10}, 10**4)
    inj = injectivity_audit(system, 10**4)
    ok = (
        values == [0, 1, 2, 5, 20]
        and audit.preserving_on_bound
        and inj.injective
        and inj.structural_injective
    )
    _report(4, "base-3 rule 15: preserving preimage and bijective behavior", ok)
    assert ok


def test_criterion_05_composition_identity():
    ok = compose_rules(3, 16, 18) == 13 and compose_rules(3, 13, 16) == 13
    f16 = rule_from_index(3, 16)
    f18 = rule_from_index(3, 18)
    f13 = rule_from_index(3, 13)
    if ok:
        from itertools import product

        for width in range(1, 5):
            for combo in product(range(3), repeat=width):
                word = DigitWord(combo, 3)
                collapsed = word_map(f13, word)
                if word_map(f16, word_map(f18, word)) != collapsed:
                    ok = False
                if word_map(f13, word_map(f16, word)) != collapsed:
                    ok = False
    _report(5, "composition collapse 16∘18 = 13∘16 = 13, words up to width 4", ok)
    assert ok


def _cycle_length_multiset(base, rule_index, width):
    system = IvtSystem(base, rule_index, FixedWidth(width))
    cycles = {frozenset(orbit(system, x).cycle) for x in range(base**width)}
    return Counter(len(c) for c in cycles)


def test_criterion_06_conjugacy_certificate():
    from ivtlab.conjugacy import ConjugacyCertificate, check_semiconjugacy

    found = find_digit_conjugacies(3, 16, 8)
    ok = DigitMap(3, (1, 2, 0)) in found
    for width in range(1, 5):
        outcome = check_semiconjugacy(3, 16, 8, DigitMap(3, (1, 2, 0)), width)
        ok = ok and isinstance(outcome, ConjugacyCertificate)
    for width in (1, 2, 3):
        ok = ok and _cycle_length_multiset(3, 16, width) == _cycle_length_multiset(
            3, 8, width
        )
    _report(6, "digit shift conjugates rules 16 and 8; cycle structure agrees", ok)
    assert ok


def test_criterion_07_decomposition_identity():
    mismatches = []
    for base in (2, 3):
        width = 4
        for j in range(rule_count(base)):
            system = IvtSystem(base, j, FixedWidth(width))
            for x in range(base**width):
                y = x
                for n in range(21):
                    if y != iterate_via_decomposition(system, x, n):
                        mismatches.append((base, j, x, n))
                    y = apply(system, y)
    counterexample = (
        iterate(IvtSystem(2, 1), 2, 2) == 0
        and iterate(IvtSystem(2, 1, FixedWidth(2)), 2, 2) == 2
    )
    ok = not mismatches and counterexample
    _report(7, "fixed-width digit-power decomposition; trimmed counterexample", ok)
    assert ok, f"first mismatches: {mismatches[:5]}"


def test_criterion_08_census_findings():
    start = time.monotonic()
    report2 = census(2, 2**12, 10**4)
    report3 = census(3, 3**8, 10**4)
    elapsed = time.monotonic() - start
    ok = elapsed < 60
    for report, base in ((report2, 2), (report3, 3)):
        ok = ok and report.claim_count == base ** (base - 1) - 1
        ok = ok and len(report.entries) == rule_count(base)
        for predicate in CollatzPredicate:
            ok = ok and report.counts[predicate] == sum(
                1 for e in report.entries if e.results[predicate]
            )
            ok = ok and report.agreement[predicate] == (
                report.counts[predicate] == report.claim_count
            )
    _report(8, f"census for bases 2 and 3 in {elapsed:.1f}s with claim comparison", ok)
    assert ok


def test_criterion_09_oracle_equivalences():
    mismatches = []
    bound = 10**4
    for base in (2, 3):
        for j in range(rule_count(base)):
            system = IvtSystem(base, j)
            brute_fixed = [x for x in range(bound + 1) if apply(system, x) == x]
            if fixed_points(system, bound) != brute_fixed:
                mismatches.append(("fixed", base, j))
    for base in (2, 3):
        for j in range(rule_count(base)):
            for width in (1, 2, 3, 4):
                wide = IvtSystem(base, j, FixedWidth(width))
                brute = []
                for x in range(base**width):
                    y = x
                    for n in range(1, base**width + 1):
                        y = apply(wide, y)
                        if y == x:
                            brute.append((x, n))
                            break
                if periodic_points(base, j, width) != brute:
                    mismatches.append(("periodic", base, j, width))
    rng = random.Random(9)
    for base in (2, 3):
        for j in range(rule_count(base)):
            system = IvtSystem(base, j)
            targets = {rng.randrange(2 * bound) for _ in range(rng.randint(1, 8))}
            brute = [x for x in range(bound + 1) if apply(system, x) in targets]
            if preimage(system, targets, bound) != brute:
                mismatches.append(("preimage", base, j))
    ok = not mismatches
    _report(9, "structural computations equal brute-force oracles", ok)
    assert ok, f"mismatches: {mismatches[:5]}"


def test_criterion_10_contraction_characterization():
    mismatches = [
        (base, j)
        for base in (2, 3)
        for j in range(rule_count(base))
        if contraction_check(base, j, 10**4) != (j == 0)
    ]
    ok = not mismatches
    _report(10, "contraction holds exactly for the zero rule", ok)
    assert ok, f"mismatches: {mismatches}"


def test_criterion_11_action_laws():
    failures = []
    for base in (2, 3):
        rng = random.Random(base * 7)
        for _ in range(200):
            j = rng.randrange(rule_count(base))
            x = rng.randrange(10**4)
            a = rng.randrange(9)
            b = rng.randrange(9)
            system = IvtSystem(base, j)
            if iterate(system, x, a + b) != iterate(system, iterate(system, x, a), b):
                failures.append(("add", base, j, x, a, b))
            stepwise = x
            for _ in range(b):
                stepwise = iterate(system, stepwise, a)
            if iterate(system, x, a * b) != stepwise:
                failures.append(("mul", base, j, x, a, b))
    ok = not failures
    _report(11, "additive and multiplicative iteration laws, 200 samples/radix", ok)
    assert ok, f"failures: {failures[:5]}"


def test_criterion_12_cli_determinism(tmp_path, capsys):
    configs = [
        ["orbit", "--radix", "2", "--rule", "1", "--x", "5"],
        ["census", "--radix", "2", "--bound", "4096", "--max-steps", "10000"],
        ["preimage", "--radix", "3", "--rule", "15", "--set", "0,1,2,7,10",
         "--bound", "10000"],
        ["conjugacy", "--radix", "3", "--j1", "16", "--j2", "8", "--width", "4"],
        ["census", "--radix", "2", "--bound", "256", "--format", "csv"],
    ]
    ok = True
    for argv in configs:
        first = tmp_path / "first.out"
        second = tmp_path / "second.out"
        cli_main([*argv, "--out", str(first)])
        cli_main([*argv, "--out", str(second)])
        if first.read_bytes() != second.read_bytes():
            ok = False
        if argv[-1] != "csv":
            doc = json.loads(first.read_text())
            if set(doc) != {"config", "result", "findings"}:
                ok = False
    capsys.readouterr()
    _report(12, "repeated CLI runs are byte-identical", ok)
    assert ok
