"""Exact number field elements used as polynomial coefficients.

Three small field types, all with rational (Fraction/int) coordinates:

* ``QuadElem``   -- a + b*sqrt(m) in Q(sqrt(m)), m a non-square integer;
* ``BiQuadElem`` -- c0 + c1*s + c2*t + c3*s*t in Q(s, t) with s^2 = m1, t^2 = m2;
* ``CycNum``     -- c0 + c1*z + c2*z^2 + c3*z^3 in Q(z), z a primitive 5th
  root of unity (z^4 = -1 - z - z^2 - z^3), with sqrt(5) = 1 + 2(z + z^4).

Coordinates stay plain ``int`` whenever possible so the hot resultant paths
avoid Fraction overhead; a Fraction coordinate is normalized back to ``int``
when its denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction


def _q(x):
    """Normalize a rational: Fractions with denominator 1 collapse to int."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    return x


class QuadElem:
    """a + b*sqrt(m) with exact rational a, b."""

    __slots__ = ("m", "a", "b")

    def __init__(self, m: int, a=0, b=0):
        self.m = m
        self.a = _q(a)
        self.b = _q(b)

    def _lift(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.m != self.m:
                raise TypeError(f"mixed radicands {self.m} and {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.m, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.m, self.a, self.b))

    def __neg__(self):
        return QuadElem(self.m, -self.a, -self.b)

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.m, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.m, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.m, self.a * other, self.b * other)
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.m, self.a * o.a + self.m * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self) -> "QuadElem":
        return QuadElem(self.m, self.a, -self.b)

    def norm(self):
        return _q(self.a * self.a - self.m * self.b * self.b)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadElem(self.m, Fraction(self.a, 1) / other, Fraction(self.b, 1) / other)
        o = self._lift(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic element")
        t = self * o.conj()
        return QuadElem(self.m, Fraction(t.a, 1) / n, Fraction(t.b, 1) / n)

    def __rtruediv__(self, other):
        return QuadElem(self.m, other) / self

    def __pow__(self, e: int):
        if e < 0:
            return (QuadElem(self.m, 1) / self) ** (-e)
        out = QuadElem(self.m, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"({self.a}+{self.b}*sqrt({self.m}))"


class BiQuadElem:
    """c0 + c1*s + c2*t + c3*s*t over Q, with s^2 = m1, t^2 = m2.

    The product of the two radicals is represented by the basis element s*t,
    whose square is m1*m2; callers pick which square root of m1*m2 the symbol
    in a printed constant denotes via the sign of the c3 coordinate.
    """

    __slots__ = ("m1", "m2", "c")

    def __init__(self, m1: int, m2: int, c0=0, c1=0, c2=0, c3=0):
        self.m1 = m1
        self.m2 = m2
        self.c = (_q(c0), _q(c1), _q(c2), _q(c3))

    def _lift(self, other) -> "BiQuadElem":
        if isinstance(other, BiQuadElem):
            if (other.m1, other.m2) != (self.m1, self.m2):
                raise TypeError("mixed biquadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return BiQuadElem(self.m1, self.m2, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash((self.m1, self.m2, self.c))

    def __neg__(self):
        return BiQuadElem(self.m1, self.m2, *(-x for x in self.c))

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return BiQuadElem(self.m1, self.m2, *(x + y for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return BiQuadElem(self.m1, self.m2, *(x - y for x, y in zip(self.c, o.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiQuadElem(self.m1, self.m2, *(x * other for x in self.c))
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        m1, m2, m12 = self.m1, self.m2, self.m1 * self.m2
        c0 = a0 * b0 + m1 * a1 * b1 + m2 * a2 * b2 + m12 * a3 * b3
        c1 = a0 * b1 + a1 * b0 + m2 * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + m1 * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return BiQuadElem(self.m1, self.m2, c0, c1, c2, c3)

    __rmul__ = __mul__

    def conj(self, flip_s: bool, flip_t: bool) -> "BiQuadElem":
        c0, c1, c2, c3 = self.c
        if flip_s:
            c1, c3 = -c1, -c3
        if flip_t:
            c2, c3 = -c2, -c3
        return BiQuadElem(self.m1, self.m2, c0, c1, c2, c3)

    def conjugates(self):
        return [self.conj(fs, ft) for fs in (False, True) for ft in (False, True)]

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiQuadElem(self.m1, self.m2, *(Fraction(x, 1) / other for x in self.c))
        o = self._lift(other)
        prod = BiQuadElem(self.m1, self.m2, 1)
        for g in (o.conj(True, False), o.conj(False, True), o.conj(True, True)):
            prod = prod * g
        n = (o * prod).c
        if n[1:] != (0, 0, 0) or n[0] == 0:
            raise ZeroDivisionError("norm not rational or zero")
        t = self * prod
        return BiQuadElem(self.m1, self.m2, *(Fraction(x, 1) / n[0] for x in t.c))

    def __pow__(self, e: int):
        if e < 0:
            return (BiQuadElem(self.m1, self.m2, 1) / self) ** (-e)
        out = BiQuadElem(self.m1, self.m2, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def __repr__(self):
        return f"BiQuad[{self.m1},{self.m2}]{self.c}"


_CYC_SIGMA = {
    # sigma_k: z -> z^k expressed on the basis (1, z, z^2, z^3); z^4 = -1-z-z^2-z^3
    1: ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    2: ((1, 0, 0, 0), (0, 0, 1, 0), (-1, -1, -1, -1), (0, 1, 0, 0)),
    3: ((1, 0, 0, 0), (0, 0, 0, 1), (0, 1, 0, 0), (-1, -1, -1, -1)),
    4: ((1, 0, 0, 0), (-1, -1, -1, -1), (0, 0, 0, 1), (0, 0, 1, 0)),
}


class CycNum:
    """Element of Q(z), z a fixed primitive 5th root of unity."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (_q(c0), _q(c1), _q(c2), _q(c3))

    @classmethod
    def zeta(cls, k: int = 1) -> "CycNum":
        k %= 5
        if k == 4:
            return cls(-1, -1, -1, -1)
        coords = [0, 0, 0, 0]
        coords[k] = 1
        return cls(*coords)

    @classmethod
    def sqrt5(cls) -> "CycNum":
        # 1 + 2(z + z^4) = -1 - 2 z^2 - 2 z^3
        return cls(-1, 0, -2, -2)

    @classmethod
    def eps5(cls) -> "CycNum":
        """(( -1+sqrt5)/2)^5 = (-11 + 5 sqrt5)/2, a root of x^2 + 11x - 1."""
        return (cls(-11) + 5 * cls.sqrt5()) / 2

    @classmethod
    def eps5bar(cls) -> "CycNum":
        return (cls(-11) - 5 * cls.sqrt5()) / 2

    def _lift(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __neg__(self):
        return CycNum(*(-x for x in self.c))

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return CycNum(*(x + y for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return CycNum(*(x - y for x, y in zip(self.c, o.c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(*(x * other for x in self.c))
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        a = self.c
        b = o.c
        # convolution to degree 6, then fold z^5 = 1 and z^4 = -1-z-z^2-z^3
        w = [0] * 7
        for i in range(4):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(4):
                if b[j] != 0:
                    w[i + j] += ai * b[j]
        c0, c1, c2, c3, c4, c5, c6 = w
        c0 += c5
        c1 += c6
        return CycNum(c0 - c4, c1 - c4, c2 - c4, c3 - c4)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycNum":
        """Apply z -> z^k (k in 1..4)."""
        rows = _CYC_SIGMA[k]
        out = [0, 0, 0, 0]
        for i, coord in enumerate(self.c):
            if coord == 0:
                continue
            row = rows[i]
            for j in range(4):
                if row[j]:
                    out[j] += coord * row[j]
        return CycNum(*out)

    def norm(self):
        t = self * self.galois(2) * self.galois(3) * self.galois(4)
        if t.c[1:] != (0, 0, 0):
            raise ArithmeticError("norm computation produced non-rational value")
        return t.c[0]

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(*(_exact_or_fraction(x, other) for x in self.c))
        o = self._lift(other)
        cof = o.galois(2) * o.galois(3) * o.galois(4)
        n = (o * cof).c[0]
        if n == 0:
            raise ZeroDivisionError("division by zero cyclotomic element")
        t = self * cof
        return CycNum(*(_exact_or_fraction(x, n) for x in t.c))

    def __rtruediv__(self, other):
        return CycNum(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return (CycNum(1) / self) ** (-e)
        out = CycNum(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def __repr__(self):
        return f"Cyc{self.c}"


def _exact_or_fraction(x, d):
    if isinstance(x, int) and isinstance(d, int):
        q, r = divmod(x, d)
        if r == 0:
            return q
    return _q(Fraction(x) / d)
