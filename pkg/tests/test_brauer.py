import random
from fractions import Fraction as Fr

from bmwfusion import BrauerAlgebra
from bmwfusion.brauer import all_diagrams
from bmwfusion.bmwcore import double_factorial


def test_generator_relations():
    B = BrauerAlgebra(3, Fr(5))
    one = B.one()
    for i in (1, 2):
        s, e = B.s(i), B.e(i)
        assert (s * s - one).is_zero()
        assert (e * e - e.scale(B.omega)).is_zero()
        assert (s * e - e).is_zero() and (e * s - e).is_zero()
    assert (B.s(1) * B.s(2) * B.s(1) - B.s(2) * B.s(1) * B.s(2)).is_zero()
    assert (B.e(1) * B.e(2) * B.e(1) - B.e(1)).is_zero()
    assert (B.e(1) * B.s(2) * B.s(1) - B.e(1) * B.e(2)).is_zero()


def test_diagram_counts():
    for n in (1, 2, 3, 4, 5):
        assert len(all_diagrams(n)) == double_factorial(2 * n - 1)


def test_brauer_associativity():
    B = BrauerAlgebra(3, Fr(7, 2))
    diagrams = all_diagrams(3)
    rnd = random.Random(0)

    def rand():
        terms = {}
        for _ in range(3):
            terms[rnd.choice(diagrams)] = Fr(rnd.randint(-4, 4) or 2)
        return B.from_terms(terms)

    for _ in range(100):
        a, b, c = rand(), rand(), rand()
        assert ((a * b) * c - a * (b * c)).is_zero()


def test_loop_factor():
    B = BrauerAlgebra(2, Fr(5))
    e = B.e(1)
    assert (e * e - e.scale(5)).is_zero()
