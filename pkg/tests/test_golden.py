import random
from fractions import Fraction

from chromalg.golden import PHI, GoldenNum, golden_eval, golden_sign
from chromalg.poly import IntPoly


def test_phi_defining_relation():
    assert PHI * PHI == PHI + 1
    assert PHI.inverse() == PHI - 1
    assert PHI ** -3 == GoldenNum.of(-3, 2)  # phi^-3 = 2phi - 3


def test_golden_eval_examples():
    # Q(Q-1)(Q-2)(Q-3)
    p = IntPoly.one("Q")
    for k in range(4):
        p = p * IntPoly.of((-k, 1), "Q")
    # hand expansion with phi^2 = phi+1: (phi+1) phi (phi-1) (phi-2) = -1
    assert golden_eval(p, "phi_plus_1") == GoldenNum.of(-1)
    assert golden_eval(p, "phi_plus_2") == GoldenNum.of(3, 4)
    assert golden_eval(IntPoly.zero("Q"), "phi_plus_1") == GoldenNum.of(0)


def test_golden_sign_cases():
    assert golden_sign(GoldenNum.of(3, 4)) == "pos"
    assert golden_sign(GoldenNum.of(-1, 1)) == "pos"   # phi - 1 > 0
    assert golden_sign(GoldenNum.of(0)) == "zero"
    assert golden_sign(GoldenNum.of(1, -1)) == "neg"   # 1 - phi < 0
    assert golden_sign(GoldenNum.of(2, -1)) == "pos"   # 2 - phi > 0
    assert golden_sign(GoldenNum.of(-2, 1)) == "neg"   # phi - 2 < 0
    assert golden_sign(GoldenNum.of(Fraction(-8, 5), 1)) == "pos"
    assert golden_sign(GoldenNum.of(Fraction(-13, 8), 1)) == "neg"


def test_golden_sign_against_rational_interval():
    # Oracle: 1.6 < phi < 1.62 with exact rational endpoints.
    rng = random.Random(11)
    lo, hi = Fraction(8, 5), Fraction(81, 50)
    for _ in range(300):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        x = GoldenNum.of(a, b)
        bounds = sorted((a + b * lo, a + b * hi))
        if bounds[0] > 0:
            assert golden_sign(x) == "pos"
        elif bounds[1] < 0:
            assert golden_sign(x) == "neg"
        # otherwise the interval straddles zero and the oracle abstains


def test_golden_eval_is_ring_hom():
    rng = random.Random(5)
    for _ in range(100):
        p = IntPoly.of([rng.randint(-5, 5) for _ in range(rng.randint(1, 6))], "Q")
        q = IntPoly.of([rng.randint(-5, 5) for _ in range(rng.randint(1, 6))], "Q")
        for pt in ("phi_plus_1", "phi_plus_2"):
            assert golden_eval(p * q, pt) == golden_eval(p, pt) * golden_eval(q, pt)
            assert golden_eval(p + q, pt) == golden_eval(p, pt) + golden_eval(q, pt)


def test_json_round_trip():
    x = GoldenNum.of(Fraction(3, 7), Fraction(-2, 5))
    assert GoldenNum.from_json(x.to_json()) == x
