import pytest

from aperyfib import identities as ids
from aperyfib.exactnum import ONE, QuadRat
from aperyfib.lucas import IndexBoundError, index_bound

# hand expansions of alpha = (1 + r)/2 by repeated multiplication
ALPHA = QuadRat(1, 1, 2)


def test_lemma1_examples():
    c = ids.lemma1_eval(1)
    assert c.holds and c.lhs == QuadRat(5, 1, 2)
    c = ids.lemma1_eval(2)
    assert c.holds and c.lhs == QuadRat(9, 3, 2) == 3 * ALPHA * ALPHA
    c = ids.lemma1_eval(3)
    # 1 + alpha^6 = 10 + 4 sqrt5
    assert c.holds and c.lhs == ONE + ALPHA**6 == QuadRat(10, 4, 1)


def test_lemma1_grid():
    assert all(ids.lemma1_eval(n).holds for n in range(1, 200))


def test_lemma2_examples(F, L):
    c = ids.lemma2_eval(1, 2)
    assert c.holds and c.lhs == F[4] == F[1] * L[1] * L[2] == 3
    c = ids.lemma2_eval(1, 3)
    assert c.holds and c.lhs == 21 == 1 * 1 * 3 * 7
    c = ids.lemma2_eval(3, 1)
    assert c.holds and c.lhs == F[6] == F[3] * L[3] == 8


def test_lemma2_guard():
    with index_bound(1000):
        with pytest.raises(IndexBoundError):
            ids.lemma2_eval(1, 10)


def test_lemma3_examples(F, L):
    c = ids.lemma3_eval("fib", 1, 1)
    assert c.holds and c.rhs == F[1] * (-1 + L[2]) == 2
    c = ids.lemma3_eval("fib", 2, 1)
    assert c.holds and c.rhs == F[2] * (1 + L[4]) == 8
    c = ids.lemma3_eval("lucas", 1, 1)
    assert c.holds and c.rhs == L[1] * (1 + L[2]) == 4
    with pytest.raises(ValueError):
        ids.lemma3_eval("tribonacci", 1, 1)


def test_lemma4_examples(F, L):
    c = ids.lemma4_eval("fib", 1, 2)
    assert c.holds and c.lhs == F[9] == (-1 + L[2]) * (-1 + L[6]) == 34
    c = ids.lemma4_eval("lucas", 1, 2)
    assert c.holds and c.lhs == L[9] == (1 + L[2]) * (1 + L[6]) == 76
    assert ids.lemma4_eval("fib", 1, 1).lhs == 2


def test_lemma5_examples(F, L):
    c = ids.lemma5_eval(2, 1, 3)
    assert c.holds and c.rhs == F[2] * L[2] * L[4] == 21
    c = ids.lemma5_eval(2, 1, 1)
    assert c.holds and c.rhs == F[2]
    c = ids.lemma5_eval(4, 1, 2)
    assert c.holds and c.lhs == F[16] == 3 * (7 + 322) == 987


def test_lemma6_examples(F, L):
    c = ids.lemma6_eval(3, 2, 2)
    assert c.holds and c.lhs == F[18] == F[6] * (1 + L[12]) == 2584
    assert ids.lemma6_eval(3, 2, 1).rhs == F[6]
    c = ids.lemma6_eval(5, 2, 2)
    assert c.holds and c.lhs == F[50] == F[10] * (1 + L[20] + L[40])


def test_lemma6_literal_form_breaks_at_p5(F, L):
    # p = 3 has a single k, so both readings agree
    assert ids.lemma6_eval(3, 2, 2, literal=True).holds
    c = ids.lemma6_eval(5, 2, 2, literal=True)
    assert not c.holds
    assert c.rhs == F[10] * (1 + 2 * L[20])


def test_lemma7_examples(F, L):
    c = ids.lemma7_eval(3, 2)
    assert c.holds and c.lhs == F[9] == (-1) * F[3] * (1 - L[6]) == 34
    assert ids.lemma7_eval(3, 1).rhs == F[3]
    c = ids.lemma7_eval(5, 2)
    assert c.holds and c.lhs == F[25] == 75025 == F[5] * (1 - L[10] + L[20])


def test_lemma8_examples(L):
    c = ids.lemma8_eval(2, 2)
    assert c.holds and c.rhs == 2 + (L[4] - 2)
    c = ids.lemma8_eval(2, 3)
    assert c.holds and c.lhs == L[8] == 47 == 2 + 5 * L[2] ** 2
    c = ids.lemma8_eval(2, 4)
    assert c.holds and c.lhs == L[16] == 2207 == 2 + 5 * L[2] ** 2 * L[4] ** 2


def test_ratio_examples(F, L):
    c = ids.ratio_eval("fib", 1, 1)
    assert c.holds and c.lhs == F[3] * (-1 + L[6]) == 34
    c = ids.ratio_eval("fib", 2, 1)
    # both sides are F_15 computed through the factor 5 or the factor 3
    assert c.holds and c.lhs == F[15] == F[5] * (-1 + L[10])
    assert c.rhs == F[3] * (1 - L[6] + L[12])
    c = ids.ratio_eval("lucas", 1, 2)
    assert c.holds and c.lhs == L[3] * (1 + L[6] + L[12]) == L[5] * (1 + L[10]) == 1364


@pytest.mark.parametrize(
    "call, msg",
    [
        (lambda: ids.lemma5_eval(3, 1, 1), "even"),
        (lambda: ids.lemma6_eval(5, 3, 1), "even"),
        (lambda: ids.lemma7_eval(4, 1), "odd"),
        (lambda: ids.lemma8_eval(2, 1), "n must"),
        (lambda: ids.lemma1_eval(0), "n must"),
    ],
)
def test_preconditions(call, msg):
    with pytest.raises(ValueError, match=msg):
        call()


def test_cross_lemma_consistency():
    for m in range(1, 5):
        for n in range(1, 5):
            a = ids.lemma4_eval("fib", m, n)
            b = ids.lemma7_eval(2 * m + 1, n)
            assert a.lhs == b.lhs == a.rhs == b.rhs


def test_lemma2_gives_millin_denominators(L):
    for n in range(1, 12):
        c = ids.lemma2_eval(1, n)
        prod = 1
        for j in range(n):
            prod *= L[2**j]
        assert c.lhs == prod
