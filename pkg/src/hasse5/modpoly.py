"""Dense polynomial arithmetic over F_l with a vectorized fast path.

Polynomials are ascending lists of ints in [0, l).  Multiplication and
remainder go through int64 numpy kernels whenever the worst-case convolution
coefficient n*(l-1)^2 fits in a signed 64-bit word (always true for the prime
ranges this toolkit sweeps); otherwise the pure-Python schoolbook path runs.
"""

from __future__ import annotations

import numpy as np

_I64_MAX = 2**62  # conservative headroom under 2^63 - 1


def _np_ok(n: int, p: int) -> bool:
    return n * (p - 1) * (p - 1) < _I64_MAX


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: list[int]) -> int:
    return len(f) - 1


def add(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def sub(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def neg(f, p):
    return [(-c) % p for c in f]


def scale(f, c, p):
    c %= p
    if c == 0:
        return []
    return [a * c % p for a in f]


def mul(f, g, p):
    if not f or not g:
        return []
    n = len(f) + len(g) - 1
    if _np_ok(min(len(f), len(g)), p):
        out = np.convolve(np.asarray(f, dtype=np.int64), np.asarray(g, dtype=np.int64))
        return trim((out % p).tolist())
    out = [0] * n
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def divmod_(f, g, p):
    """Euclidean quotient and remainder."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = deg(g)
    if deg(f) < dg:
        return [], list(f)
    inv = pow(g[-1], p - 2, p)
    if len(f) > 64 and _np_ok(len(g), p):
        r = np.asarray(f, dtype=np.int64)
        garr = np.asarray(g[:-1], dtype=np.int64)
        q = np.zeros(len(f) - dg, dtype=np.int64)
        for k in range(len(f) - 1, dg - 1, -1):
            c = r[k] % p
            if c:
                t = c * inv % p
                q[k - dg] = t
                if dg:
                    r[k - dg : k] = (r[k - dg : k] - t * garr) % p
                r[k] = 0
        return trim(q.tolist()), trim(r[:dg].tolist())
    r = list(f)
    q = [0] * (len(f) - dg)
    for k in range(len(f) - 1, dg - 1, -1):
        c = r[k] % p
        if c:
            t = c * inv % p
            q[k - dg] = t
            for j in range(dg + 1):
                r[k - dg + j] = (r[k - dg + j] - t * g[j]) % p
    return trim(q), trim(r[:dg])


def rem(f, g, p):
    return divmod_(f, g, p)[1]


def quo(f, g, p):
    return divmod_(f, g, p)[0]


def exact_div(f, g, p):
    q, r = divmod_(f, g, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def gcd(f, g, p):
    a, b = list(f), list(g)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def deriv(f, p):
    return trim([k * c % p for k, c in enumerate(f)][1:])


def pow_mod(f, e: int, m, p):
    """f^e mod m."""
    out = [1]
    base = rem(f, m, p)
    while e:
        if e & 1:
            out = rem(mul(out, base, p), m, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), m, p)
    return out


def xpow_qk(m, p, k: int, start=None):
    """x^(p^k) mod m (repeatedly raising to the p-th power), optionally continuing
    from start = x^(p^j) mod m to save repeated work."""
    h = start if start is not None else [0, 1]
    for _ in range(k):
        h = pow_mod(h, p, m, p)
    return h


def eval_at(f, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def from_int_poly(coeffs, p):
    return trim([c % p for c in coeffs])


def mul_many(polys, p):
    out = [1]
    for f in polys:
        out = mul(out, f, p)
    return out


def compose_rational(F, num, den, p):
    """den^deg(F) * F(num/den) over F_p."""
    n = deg(F)
    if n < 0:
        return []
    acc = [F[n] % p]
    dpow = [1]
    for k in range(n - 1, -1, -1):
        dpow = mul(dpow, den, p)
        acc = add(mul(acc, num, p), scale(dpow, F[k], p), p)
    return acc


def resultant(f, g, p):
    """Resultant over F_p by the Euclidean PRS with the standard transfer rules."""
    f, g = trim(list(f)), trim(list(g))
    if not f or not g:
        raise ZeroDivisionError("resultant of zero polynomial")
    res = 1
    while True:
        df, dgg = deg(f), deg(g)
        if dgg == 0:
            return res * pow(g[0], df, p) % p
        r = rem(f, g, p)
        dr = deg(r) if r else -1
        if not r:
            return 0
        # Res(f, g) = (-1)^(df*dg) lc(g)^(df - dr) Res(g, r)
        sign = -1 if (df * dgg) % 2 else 1
        res = res * sign * pow(g[-1], df - dr, p) % p
        f, g = g, r
