"""Acceptance suite: one test per criterion, each printing a verdict line.

Everything here is exact symbolic computation at desk scale; the stated
runtime budgets are asserted, not aspirational.  Run with

    pytest tests/test_acceptance.py -v
"""

import random
import time

from effhom import (
    IntMatrix,
    Sampler,
    bottom_morphism,
    check_chain_morphism,
    check_contracting,
    check_nilpotency,
    check_reduction_laws,
    cone,
    cone_contraction,
    format_element,
    homology_at,
    homology_via_effective_homology,
    parse_element,
)
from effhom.cli import main as cli_main
from effhom.homology import HomologyGroup
from effhom.instances import (
    alpha_pi1,
    cc1,
    cc2,
    cc2_to_null,
    cone_example,
    fcc1,
    h1_bottom,
    h2_bottom,
    h_top,
    idz2x0,
    sum12,
    zxznat,
)
from test_cone import expansion_oracle
from test_grammar import random_desc
from test_snf import assert_snf_contract

SEED = 7
SAMPLER = Sampler(seed=SEED)
WINDOW = range(-8, 9)


def report(number, ok, detail):
    verdict = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number}: {verdict} - {detail}")
    assert ok, detail


def test_criterion_1_golden_cone_differential():
    start = time.perf_counter()
    top = cone_example().reduction.top
    x = parse_element("(5, 7*x4+8*x0, 3)", top.module_at(3))
    image = top.diff_at(2)(x)
    expected = parse_element("(-10, -8*x0-7*x4, 5)", top.module_at(2))
    ok = image == expected
    ok = ok and top.diff_at(1)(image) == top.module_at(1).zero()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    report(1, ok, f"cone differential evaluations, exact, {elapsed:.3f}s < 1s")


def test_criterion_2_golden_bottom_homotopies():
    bottom = cone_example().reduction.bottom
    e = parse_element("(5, 7)", bottom.module_at(2))

    def composite(h):
        return bottom.diff_at(2)(h.at(2)(e)) + h.at(1)(bottom.diff_at(1)(e))

    ok = composite(h1_bottom()) == bottom.module_at(2).zero()
    ok = ok and composite(h2_bottom()) == e
    report(2, ok, "d.h1 + h1.d = 0 and d.h2 + h2.d = id on (5, 7), exact")


def test_criterion_3_golden_top_contraction():
    top = cone_example().reduction.top
    ht = h_top()
    x = parse_element("(5, 7*x4+8*x0, 3)", top.module_at(2))
    composite = top.diff_at(2)(ht.at(2)(x)) + ht.at(1)(top.diff_at(1)(x))
    ok = composite == x
    cycle = parse_element("(-10, -8*x0-7*x4, 5)", top.module_at(2))
    lifted = ht.at(2)(cycle)
    ok = ok and lifted == parse_element("(5, 8*x0+7*x4, 0)", top.module_at(3))
    ok = ok and top.diff_at(2)(lifted) == cycle
    report(3, ok, "top contraction composite, lift, and boundary, exact")


def test_criterion_4_law_suites():
    start = time.perf_counter()
    failures = []

    cone_top = cone_example().reduction.top
    cone_bottom = cone_example().reduction.bottom
    for name, cc in (
        ("cc1", cc1()),
        ("cc2", cc2()),
        ("sum12", sum12()),
        ("cone-top", cone_top),
        ("cone-bottom", cone_bottom),
    ):
        if not check_nilpotency(cc, WINDOW, SAMPLER).ok:
            failures.append(f"nilpotency:{name}")

    induced = bottom_morphism(zxznat().reduction, idz2x0().reduction, alpha_pi1())
    r_cone = cone_example().reduction
    for name, morphism in (
        ("projection", alpha_pi1()),
        ("induced-bottom", induced),
        ("cone-f", r_cone.f),
        ("cone-g", r_cone.g),
    ):
        if not check_chain_morphism(morphism, WINDOW, SAMPLER).ok:
            failures.append(f"chain-morphism:{name}")

    for name, eh in (
        ("idz2x0", idz2x0()),
        ("zxznat", zxznat()),
        ("cc2-to-null", cc2_to_null()),
        ("cone-example", cone_example()),
    ):
        if not check_reduction_laws(eh.reduction, WINDOW, SAMPLER).ok:
            failures.append(f"reduction:{name}")

    h1_report = check_contracting(cone_bottom, h1_bottom(), WINDOW, SAMPLER)
    if h1_report.violations < 1:
        failures.append("h1 unexpectedly contracting")

    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10.0
    report(
        4,
        ok,
        f"13 law suites at -8..8 x 32 samples, seed {SEED}; "
        f"h1 violations={h1_report.violations}; {elapsed:.2f}s < 10s"
        + (f"; failures={failures}" if failures else ""),
    )


def test_criterion_5_cone_contraction_witness():
    r = zxznat().reduction
    over = cone(r.f)
    k = cone_contraction(r)
    oracle_samples = 0
    ok = True
    for i in range(-6, 7):
        for e in SAMPLER.elements(over.module_at(i), f"acc5@{i}"):
            direct = over.diff_at(i)(k.at(i)(e)) + k.at(i - 1)(over.diff_at(i - 1)(e))
            expanded = expansion_oracle(r, i, e)
            ok = ok and direct == expanded == e
            oracle_samples += 1
    ok = ok and oracle_samples >= 100
    checker = check_contracting(over, k, WINDOW, SAMPLER)
    ok = ok and checker.ok
    report(
        5,
        ok,
        f"expansion oracle agreed on {oracle_samples} samples; "
        f"checker violations={checker.violations}",
    )


def test_criterion_6_snf_property_suite():
    start = time.perf_counter()
    rng = random.Random(1729)
    for _ in range(100):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        a = IntMatrix.from_rows(
            [[rng.randint(-50, 50) for _ in range(cols)] for _ in range(rows)],
            rows,
            cols,
        )
        assert_snf_contract(a)
    elapsed = time.perf_counter() - start
    ok = elapsed < 5.0
    report(6, ok, f"100 seeded matrices: UAV=D, unimodular, chained; {elapsed:.2f}s < 5s")


def test_criterion_7_homology_values():
    trivial = HomologyGroup(0)
    z2 = HomologyGroup(0, (2,))
    ok = True
    for i in range(-4, 5):
        expected = z2 if i % 2 == 0 else trivial
        ok = ok and homology_at(fcc1(), i) == expected
        ok = ok and homology_at(cone_example().reduction.bottom, i) == trivial
        ok = ok and homology_via_effective_homology(zxznat(), i) == homology_at(
            fcc1(), i
        )
    report(7, ok, "fcc1 alternates Z/2 and 0; cone bottom acyclic; transfer agrees")


def test_criterion_8_cli_contract(capsys):
    transcripts = [
        (
            ["eval", "cone-example", "diff", "2", "(5, 7*x4+8*x0, 3)",
             "--format", "text"],
            "(-10, -8*x0-7*x4, 5)\n",
        ),
        (
            ["eval", "cone-example", "h:htop", "2", "(-10, -8*x0-7*x4, 5)",
             "--format", "text"],
            "(5, 8*x0+7*x4, 0)\n",
        ),
        (
            ["preimage", "cone-example", "2", "(-10, -8*x0-7*x4, 5)",
             "--h", "htop", "--format", "text"],
            "(5, 8*x0+7*x4, 0)\n",
        ),
    ]
    ok = True
    for argv, expected in transcripts:
        code = cli_main(argv)
        out = capsys.readouterr().out
        ok = ok and code == 0 and out == expected

    rng = random.Random(8128)
    sampler = Sampler(seed=8128)
    round_trips = 0
    for _ in range(1000):
        desc = random_desc(rng)
        e = sampler.element(rng, desc)
        ok = ok and parse_element(format_element(e, desc), desc) == e
        round_trips += 1

    with capsys.disabled():
        report(8, ok, f"3 transcripts byte-identical; {round_trips} round trips")
