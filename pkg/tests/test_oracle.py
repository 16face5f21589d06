from fractions import Fraction

import pytest

from aperyfib import oracle
from aperyfib.series import SeriesSpec


def test_lemma3_grid_counts():
    reports = oracle.fuzz_lemmas(["3"])
    assert [r.identity for r in reports] == ["lemma3[fib]", "lemma3[lucas]"]
    for r in reports:
        assert r.cases == 1250 and r.passed


def test_lemma1_grid_counts():
    (r,) = oracle.fuzz_lemmas(["1"])
    assert r.cases == 500 and r.passed


def test_negative_control_detects_misprint():
    r = oracle.fuzz_identity("lemma6-literal")
    assert not r.passed
    assert all(point["p"] >= 5 for point, _, _ in r.failures)
    point, lhs, rhs = r.failures[0]
    assert point == {"p": 5, "m": 2, "n": 2}
    assert lhs != rhs


def test_grid_respects_index_cap():
    r = oracle.fuzz_identity("lemma5", bound=1000)
    assert r.passed
    points = list(oracle.grid_lemma5(bound=1000))
    assert r.cases == len(points)
    assert all(pt["m"] * pt["p"] ** pt["n"] <= 1000 for pt in points)


def test_grid_override():
    r = oracle.fuzz_identity("lemma3[fib]", q=4, m=3)
    assert r.cases == 12


def test_reports_deterministic():
    a = oracle.fuzz_lemmas(["5", "ratio"], bound=5000)
    b = oracle.fuzz_lemmas(["5", "ratio"], bound=5000)
    assert [(r.identity, r.grid, r.cases, r.failures) for r in a] == [
        (r.identity, r.grid, r.cases, r.failures) for r in b
    ]


def test_unknown_identity():
    with pytest.raises(KeyError):
        oracle.fuzz_identity("lemma9")


def test_lucas_square_termwise(L):
    for n in range(4):
        k = 3**n
        assert L[k] ** 2 == L[2 * k] - 2
    assert oracle.rearrangement_check("lucas-square", 4).holds


@pytest.mark.parametrize("identity", ["reciprocal-3", "reciprocal-7"])
def test_odd_reciprocal_rearrangements(identity):
    for N in range(1, 6):
        assert oracle.rearrangement_check(identity, N).holds


def test_reciprocal_4m3_family():
    for m in range(0, 3):
        for N in range(1, 4):
            assert oracle.rearrangement_check("reciprocal-4m3", N, m=m).holds


def test_reciprocal_7_first_summand(F, L):
    assert Fraction(L[6] - L[4] + L[2], F[7]) == Fraction(14, 13)


def test_reciprocal_even():
    for p, m in [(2, 1), (2, 3), (4, 1)]:
        for N in range(1, 4):
            assert oracle.rearrangement_check("reciprocal-even", N, m=m, p=p).holds


def test_rearrangement_argument_errors():
    with pytest.raises(ValueError):
        oracle.rearrangement_check("reciprocal-3", 0)
    with pytest.raises(ValueError):
        oracle.rearrangement_check("reciprocal-even", 2, m=1, p=3)
    with pytest.raises(ValueError):
        oracle.rearrangement_check("nope", 2)


def test_reciprocal_3_decimal_agreement():
    left, right = oracle.rearranged_decimal("reciprocal-3", 20)
    assert left == right
    left, right = oracle.rearranged_decimal("reciprocal-7", 20)
    assert left == right


@pytest.mark.parametrize(
    "spec, digits",
    [(SeriesSpec("T1"), 9), (SeriesSpec("R2"), 6), (SeriesSpec("T8", p=3), 10)],
)
def test_decimal_crosscheck(spec, digits):
    assert oracle.decimal_crosscheck(spec, digits)
