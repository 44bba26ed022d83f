"""Acceptance suite: one test per criterion, exact integer checks only.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one pass line
per criterion.  Criteria 5, 6 and 8 share the session-scoped exhaustive
sweep fixture (radii <= 12, second center over [0, 24]^2).
"""

import random

from discprox import (
    PI_L1,
    DigitalCircle,
    DigitalDisc,
    DiscPair,
    PixelPoint,
    PixelSet,
    circle_cardinality_closed,
    circumference_closed,
    disc_cardinality_closed,
    enumerate_circle,
    enumerate_disc,
    hausdorff_distance,
    intersection_cardinality_oracle,
    l1_distance,
    m_closed_thm3,
    symmetric_difference_metric,
    thm3_intersection_disc,
    verify_pair,
)
from discprox.cli import main


def _ok(num, text):
    print(f"PASS criterion {num}: {text}")


def test_criterion_1_circle_cardinality():
    rng = random.Random(101)
    centers = [PixelPoint(rng.randint(-100, 100), rng.randint(-100, 100)) for _ in range(20)]
    for r in range(1, 65):
        expected = circle_cardinality_closed(r)
        assert expected == 4 * r
        for center in centers:
            assert enumerate_circle(DigitalCircle(center, r)).cardinality == expected
    _ok(1, "card(circle) = 4r for all 1 <= r <= 64 at 20 random centers")


def test_criterion_2_disc_cardinality_and_decomposition():
    for radius in range(0, 65):
        disc = enumerate_disc(DigitalDisc(PixelPoint(0, 0), radius))
        assert disc.cardinality == disc_cardinality_closed(radius) == 2 * radius**2 + 2 * radius + 1
    center = PixelPoint(-7, 3)
    for radius in range(0, 33):
        disc = enumerate_disc(DigitalDisc(center, radius))
        rings = [enumerate_circle(DigitalCircle(center, r)) for r in range(1, radius + 1)]
        union = PixelSet([center])
        for ring in rings:
            assert union.isdisjoint(ring)
            union = union | ring
        assert union == disc
    _ok(2, "card(disc) = 2R^2+2R+1 for R <= 64; disjoint ring decomposition for R <= 32")


def test_criterion_3_pi_l1():
    for r in range(1, 1001):
        circumference = circumference_closed(r)
        assert circumference == 8 * r
        assert circumference % (2 * r) == 0
        assert circumference // (2 * r) == PI_L1 == 4
    _ok(3, "circumference/diameter = 4 exactly for all 1 <= r <= 1000")


def test_criterion_4_metric_identity_and_axioms():
    rng = random.Random(104)

    def random_disc_pair():
        ax, ay = rng.randint(-40, 40), rng.randint(-40, 40)
        bx, by = ax + rng.randint(-40, 40), ay + rng.randint(-40, 40)
        return (enumerate_disc(DigitalDisc(PixelPoint(ax, ay), rng.randint(0, 16))),
                enumerate_disc(DigitalDisc(PixelPoint(bx, by), rng.randint(0, 16))))

    for _ in range(1000):
        a, b = random_disc_pair()
        m = symmetric_difference_metric(a, b)
        assert m == a.cardinality + b.cardinality - 2 * (a & b).cardinality
    for _ in range(200):
        a, b = random_disc_pair()
        c, _ = random_disc_pair()
        assert symmetric_difference_metric(a, b) == symmetric_difference_metric(b, a)
        assert symmetric_difference_metric(a, c) <= (
            symmetric_difference_metric(a, b) + symmetric_difference_metric(b, c)
        )
    _ok(4, "m = cardA + cardB - 2 card(A&B) on 1000 pairs; symmetry + triangle on 200 triples")


def test_criterion_5_thm1_sweep(sweep_12_24):
    checked = sweep_12_24.checked_by_formula["thm1"]
    bad = sweep_12_24.disagreements_for("thm1")
    assert checked == 8268
    assert bad == ()
    _ok(5, f"thm1 closed form = oracle on all {checked} pairs (radii <= 12, offsets <= 24)")


def test_criterion_6_thm2_sweep(sweep_12_24):
    checked = sweep_12_24.checked_by_formula["thm2"]
    bad = sweep_12_24.disagreements_for("thm2")
    assert checked == 4732
    assert bad == ()
    _ok(6, f"thm2 closed form = oracle on all {checked} pairs (radii <= 12, offsets <= 24)")


def test_criterion_7_thm3_sweep_with_set_equality():
    checked = 0
    for r1 in range(0, 17):
        for r2 in range(0, 17):
            for gap in range(1, r1 + r2 + 1):
                if (r1 + r2 - gap) % 2 or gap < abs(r1 - r2):
                    continue
                for pair in (
                    DiscPair(DigitalDisc(PixelPoint(0, 0), r1), DigitalDisc(PixelPoint(gap, 0), r2)),
                    DiscPair(DigitalDisc(PixelPoint(0, 0), r1), DigitalDisc(PixelPoint(0, gap), r2)),
                ):
                    overlap = enumerate_disc(pair.d1) & enumerate_disc(pair.d2)
                    m = symmetric_difference_metric(enumerate_disc(pair.d1), enumerate_disc(pair.d2))
                    assert m_closed_thm3(pair) == m == (r1 - r2) ** 2 + 2 * (r1 + r2 + 1) * gap - gap**2
                    assert enumerate_disc(thm3_intersection_disc(pair)) == overlap
                    checked += 1
    assert checked == 2 * 1768
    _ok(7, f"thm3 = oracle and overlap = predicted disc (set equality) on {checked} collinear pairs")


def test_criterion_8_corollary_adjudication(sweep_12_24, tmp_path, capsys):
    reports = sweep_12_24.disagreements_for("corollary")
    assert reports, "corollary sweep must disagree somewhere"
    documented = [
        r for r in reports
        if (r.pair.d1.R, r.pair.d2.R, r.pair.d2.center) == (3, 2, (2, 0))
    ]
    assert documented
    case = documented[0]
    assert case.oracle_m == 22
    assert case.agreement["corollary"] is False
    assert case.agreement["corollary_signfix"] is False
    assert all(r in sweep_12_24.disagreements_for("corollary_signfix") for r in documented)
    exit_code = main(["verify", "--max-radius", "4", "--max-offset", "4",
                      "--formulas", "corollary", "--out", str(tmp_path / "r.tsv")])
    assert exit_code == 3
    capsys.readouterr()
    _ok(8, f"corollary disagrees on {len(reports)} pairs incl. R1=3,R2=2,gap=2 "
           "(oracle m=22) under both sign readings; cmd_verify exits 3")


def test_criterion_9_hausdorff_axioms():
    rng = random.Random(109)

    def random_set():
        size = rng.randint(1, 40)
        return PixelSet((rng.randint(-50, 50), rng.randint(-50, 50)) for _ in range(size))

    for i in range(500):
        a = random_set()
        b = PixelSet(a) if i % 10 == 0 else random_set()
        d = hausdorff_distance(a, b)
        assert d == hausdorff_distance(b, a)
        assert (d == 0) == (a == b)
        c = random_set()
        assert hausdorff_distance(a, c) <= hausdorff_distance(a, b) + hausdorff_distance(b, c)
    for _ in range(100):
        p = (rng.randint(-50, 50), rng.randint(-50, 50))
        q = (rng.randint(-50, 50), rng.randint(-50, 50))
        assert hausdorff_distance(PixelSet([p]), PixelSet([q])) == l1_distance(p, q)
    _ok(9, "d_H separation/symmetry/triangle on 500 random pairs; singletons reduce to l1")


def test_criterion_10_cli_golden_files(golden_dir, scenes_dir, tmp_path, capsys):
    for name, overlap in (("fig2", 5), ("fig3", 8)):
        out = tmp_path / f"{name}.txt"
        assert main(["render", "--scene", str(scenes_dir / f"{name}.scene"),
                     "--out", str(out)]) == 0
        rendered = out.read_bytes()
        assert rendered == (golden_dir / f"{name}.ascii.txt").read_bytes()
        assert rendered.decode().count("X") == overlap
    assert main(["verify", "--max-radius", "12", "--max-offset", "24",
                 "--formulas", "thm1,thm2,thm3", "--out", str(tmp_path / "clean.tsv")]) == 0
    clean_summary = capsys.readouterr().out
    assert clean_summary == (golden_dir / "verify_clean.txt").read_text()
    assert main(["verify", "--max-radius", "4", "--max-offset", "8",
                 "--formulas", "corollary", "--out", str(tmp_path / "cor.tsv")]) == 3
    cor_summary = capsys.readouterr().out
    assert cor_summary == (golden_dir / "verify_corollary.txt").read_text()
    _ok(10, "renders byte-identical to goldens (overlaps 5 and 8); verify summaries match goldens")


def test_oracle_identity_spotcheck(sweep_12_24):
    # every closed form the sweep checked is tied to enumeration; spot-check
    # the reporting path itself on a fresh pair
    pair = DiscPair(DigitalDisc(PixelPoint(0, 0), 2), DigitalDisc(PixelPoint(2, 0), 2))
    report = verify_pair(pair)
    assert report.oracle_m == 16
    assert intersection_cardinality_oracle(pair) == 5
