import math
from fractions import Fraction

import pytest

import permemc


def test_counts():
    assert permemc.derangement_count(6) == 265
    assert permemc.pointed_derangement_count(6) == 53
    d = [1, 0]
    for n in range(2, 31):
        d.append((n - 1) * (d[-1] + d[-2]))
    assert permemc.derangement_count(30) == d[30]
    assert permemc.factorial(25) == math.factorial(25)


def test_permanent_matches_expansion():
    rows = [[0 if j in (i, (i + 1) % 6) else 1 for j in range(6)] for i in range(6)]
    assert permemc.permanent(rows) == 80
    assert permemc.permanent(rows, "brute") == 80
    assert permemc.permanent_bound_check(rows)["holds"]


def test_families_and_solvers():
    hm = permemc.make_hm([2, 1, 4, 3])
    assert hm == [[1, 2, 4, 3], [1, 3, 4, 2], [1, 4, 2, 3], [2, 1, 4, 3]]
    assert permemc.matching_number(4, hm)[0] == 1
    tau, cells = permemc.covering_number(4, hm)
    assert tau == 2 and cells == [(1, 1), (1, 2)]
    assert permemc.matching_number(4, permemc.derangements(4))[0] == 3
    f1 = permemc.make_star(4, (1, 2), derangement=True)
    f2 = permemc.make_star(4, (2, 1), derangement=True)
    assert permemc.cross_matching(4, [f1, f2]) == [[2, 3, 4, 1], [4, 1, 2, 3]]
    assert permemc.cross_matching(4, [[[2, 1, 4, 3]], [[2, 1, 4, 3]]]) is None


def test_spreadness():
    s3 = permemc.all_permutations(3)
    assert permemc.is_r_spread(3, s3, Fraction(9, 5))["is_spread"]
    assert not permemc.is_r_spread(3, s3, 2)["is_spread"]
    assert permemc.exact_spreadness(3, s3)["value"] == pytest.approx(6 ** (1 / 3), rel=1e-9)
    star = permemc.make_star(5, (1, 1))
    out = permemc.spread_approximate(5, star, permemc.all_permutations(5), "5/2", 4)
    assert out["supports"] == [["1:1"]]
    assert out["check"]["covered"] and out["check"]["branches_spread"]


def test_containment():
    assert permemc.containment_probability(2, permemc.all_permutations(2), Fraction(1, 2)) == Fraction(7, 16)
    mc = permemc.containment_probability_monte_carlo(2, permemc.all_permutations(2), "1/2", 100000, 3)
    assert abs(mc["value"] - 7 / 16) <= 3 * mc["standard_error"]


def test_errors():
    with pytest.raises(permemc.CapExceeded):
        permemc.all_permutations(11)
    with pytest.raises(permemc.DimensionMismatch):
        permemc.matching_number(3, [[1, 2]])
    with pytest.raises(ValueError):
        permemc.make_hm([1, 2, 3])
    with pytest.raises(OSError):
        permemc.load_family("/nonexistent/family.fam")


def test_file_round_trip(tmp_path):
    path = str(tmp_path / "f.fam")
    fam = permemc.make_star(4, (2, 3))
    permemc.save_family(path, 4, fam)
    n, members, warnings = permemc.load_family(path)
    assert (n, members, warnings) == (4, fam, [])


def test_suite_report():
    report = permemc.run_suite("extremal", 0)
    assert report["summary"]["fail"] == 0
    assert "extremal" in permemc.suite_names()
