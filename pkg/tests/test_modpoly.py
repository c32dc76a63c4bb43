import random

from hasse5 import modpoly as mp
from hasse5.poly import Poly, resultant


def test_basic_ops():
    p = 7
    assert mp.add([1, 2], [6, 5], p) == []
    assert mp.mul([1, 1], [1, 1], p) == [1, 2, 1]
    q, r = mp.divmod_([1, 0, 1], [3, 1], p)
    assert mp.add(mp.mul(q, [3, 1], p), r, p) == [1, 0, 1]
    assert mp.gcd([6, 0, 1], [1, 2, 1], p) == [1, 1]
    assert mp.monic([2, 4], p) == [4, 1]


def test_pow_mod():
    p = 13
    m = [1, 0, 0, 1]  # x^3 + 1
    got = mp.pow_mod([0, 1], p, m, p)
    f = Poly([0, 1]) ** p
    want = mp.rem(mp.from_int_poly(f.c, p), m, p)
    assert got == want


def test_large_poly_numpy_path_matches_schoolbook():
    rng = random.Random(30)
    p = 40961  # large enough that the int64 guard still passes at this size
    a = [rng.randrange(p) for _ in range(300)]
    b = [rng.randrange(p) for _ in range(200)]
    fast = mp.mul(a, b, p)
    slow = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            slow[i + j] = (slow[i + j] + x * y) % p
    assert fast == mp.trim(slow)


def test_resultant_prs_matches_sylvester():
    rng = random.Random(31)
    for _ in range(50):
        p = rng.choice([5, 7, 13, 101])
        f = [rng.randrange(p) for _ in range(rng.randrange(1, 6))] + [rng.randrange(1, p)]
        g = [rng.randrange(p) for _ in range(rng.randrange(1, 6))] + [rng.randrange(1, p)]
        got = mp.resultant(f, g, p)
        want = resultant(Poly(f), Poly(g)) % p
        assert got == want


def test_eval_and_compose():
    p = 11
    F = [8, 1]  # t + 8
    num = [0, 0, 1]
    den = [1, 1]
    out = mp.compose_rational(F, num, den, p)
    # den^1 * F(num/den) = num + 8 den
    assert out == mp.add(num, mp.scale(den, 8, p), p)
