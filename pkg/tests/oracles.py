"""Independent brute-force oracles for the test suite.

Nothing in here uses the polynomial/factorization machinery of the package
under test: quadratic residues are found by exhaustive squaring, elliptic
curve orders by literal point counting, F_{p^2} is built directly from a
non-residue, and irreducibility by exhaustive divisor search.
"""

from __future__ import annotations


def squares_mod(p: int) -> set[int]:
    return {x * x % p for x in range(p)}


def legendre_naive(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


def sqrts_naive(a: int, p: int) -> list[int]:
    a %= p
    return sorted(r for r in range(p) if r * r % p == a)


def curve_from_j_fp(j: int, p: int) -> tuple[int, int]:
    """Short Weierstrass (a, b) over F_p with the given j-invariant."""
    j %= p
    if j == 0:
        return 0, 1
    if j == 1728 % p:
        return 1, 0
    m = (1728 - j) % p
    return 3 * j * m % p, 2 * j * m * m % p


def count_points_fp(a: int, b: int, p: int) -> int:
    sq = squares_mod(p)
    n = p + 1  # point at infinity plus one per x with rhs = 0 handled below
    total = 0
    for x in range(p):
        rhs = (x * x * x + a * x + b) % p
        if rhs == 0:
            total += 1
        elif rhs in sq:
            total += 2
    return 1 + total


def supersingular_js_fp(p: int) -> set[int]:
    """j in F_p with a trace-zero curve (point count p + 1)."""
    return {j for j in range(p) if count_points_fp(*curve_from_j_fp(j, p), p) == p + 1}


class Fp2:
    """Standalone F_{p^2} = F_p(w), w^2 = u for the smallest non-residue u."""

    def __init__(self, p: int):
        self.p = p
        sq = squares_mod(p)
        self.u = next(u for u in range(2, p) if u not in sq)

    def mul(self, x, y):
        p, u = self.p, self.u
        return ((x[0] * y[0] + u * x[1] * y[1]) % p, (x[0] * y[1] + x[1] * y[0]) % p)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def sub(self, x, y):
        return ((x[0] - y[0]) % self.p, (x[1] - y[1]) % self.p)

    def neg(self, x):
        return ((-x[0]) % self.p, (-x[1]) % self.p)

    def inv(self, x):
        p, u = self.p, self.u
        n = (x[0] * x[0] - u * x[1] * x[1]) % p
        ninv = pow(n, p - 2, p)
        return (x[0] * ninv % p, (-x[1]) * ninv % p)

    def elements(self):
        return ((a, b) for a in range(self.p) for b in range(self.p))

    def squares(self) -> set:
        return {self.mul(z, z) for z in self.elements()}


def supersingular_poly_fp2_oracle(p: int) -> list[int]:
    """Coefficients (ascending, over F_p) of prod (X - j) over all supersingular
    j in F_{p^2}, by exhaustive point counting over F_{p^2}."""
    F = Fp2(p)
    sq = F.squares()
    one = (1, 0)
    js = []
    for j in F.elements():
        if j == (0, 0):
            a, b = (0, 0), one
        elif j == (1728 % p, 0):
            a, b = one, (0, 0)
        else:
            m = F.sub((1728 % p, 0), j)
            jm = F.mul(j, m)
            a = F.mul((3, 0), jm)
            b = F.mul((2, 0), F.mul(jm, m))
        total = 0
        for x in F.elements():
            rhs = F.add(F.mul(F.mul(x, x), x), F.add(F.mul(a, x), b))
            if rhs == (0, 0):
                total += 1
            elif rhs in sq:
                total += 2
        n_points = 1 + total
        t = p * p + 1 - n_points
        if t % p == 0:
            js.append(j)
    # expand prod (X - j) with F_{p^2} arithmetic; coefficients must land in F_p
    prod = [one]
    for j in js:
        nxt = []
        for k in range(len(prod) + 1):
            lower = prod[k - 1] if k >= 1 else (0, 0)
            upper = F.mul(prod[k], j) if k < len(prod) else (0, 0)
            nxt.append(F.sub(lower, upper))
        prod = nxt
    assert all(c[1] == 0 for c in prod), "oracle polynomial not Galois-stable"
    return [c[0] for c in prod]


def quartic_irreducible_naive(coeffs: tuple[int, ...], p: int) -> bool:
    """Monic quartic irreducibility by exhaustive root and quadratic-divisor search."""
    assert len(coeffs) == 5 and coeffs[4] == 1

    def ev(x):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        return acc

    if any(ev(x) == 0 for x in range(p)):
        return False
    for b in range(p):
        for c in range(p):
            # divide by x^2 + bx + c and check the remainder
            q2 = 1
            q1 = (coeffs[3] - b * q2) % p
            q0 = (coeffs[2] - b * q1 - c * q2) % p
            r1 = (coeffs[1] - b * q0 - c * q1) % p
            r0 = (coeffs[0] - c * q0) % p
            if r1 == 0 and r0 == 0:
                return False
    return True
