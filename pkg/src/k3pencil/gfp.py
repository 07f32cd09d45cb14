"""Polynomials over a prime field F_p as lists of ints, lowest degree first.

The zero polynomial is ``[]``; results never carry trailing zeros.
"""

from __future__ import annotations


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(a, p: int) -> list[int]:
    return trim([c % p for c in a])


def add(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def scale(a: list[int], c: int, p: int) -> list[int]:
    return trim([(c * x) % p for x in a])


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial over F_p")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) - 1 < db:
        return [], trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = (r[k + db] * inv) % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] = (r[k + j] - c * y) % p
    return trim(q), trim(r[:db])


def exact_div(a: list[int], b: list[int], p: int) -> list[int]:
    q, r = divmod_(a, b, p)
    if r:
        raise ArithmeticError("inexact division over F_p")
    return q


def monic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    return scale(a, pow(a[-1], -1, p), p)


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, divmod_(a, b, p)[1]
    return monic(a, p)


def evaluate(a: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = divmod_(base, mod, p)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, base, p), mod, p)[1]
        base = divmod_(mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def is_irreducible(f: list[int], p: int) -> bool:
    """gcd(f, x^(p^i) - x) = 1 for all i <= deg(f)/2, plus x^(p^deg f) = x mod f."""
    k = len(f) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    x = [0, 1]
    xp = x
    for i in range(1, k // 2 + 1):
        xp = powmod(xp, p, f, p)
        if len(gcd(f, sub(xp, x, p), p)) > 1:
            return False
    return True


def bareiss_det(mat: list[list[list[int]]], p: int) -> list[int]:
    """Determinant of a square matrix with entries in F_p[x] (fraction-free)."""
    m = [[list(e) for e in row] for row in mat]
    n = len(m)
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(m[i][j], piv, p), mul(m[i][k], m[k][j], p), p)
                m[i][j] = exact_div(num, prev, p)
            m[i][k] = []
        prev = piv
    det = m[n - 1][n - 1]
    return scale(det, sign % p, p)
