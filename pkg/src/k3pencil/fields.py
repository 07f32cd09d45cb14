"""Finite fields F_p and F_{p^k} with elements encoded as integers.

An element of F_{p^k} is the integer sum(c_i * p^i) of its coefficient
vector in the basis 1, x, ..., x^(k-1) of F_p[x]/(modulus).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np
from sympy import isprime

from . import gfp


class FieldError(ValueError):
    pass


class PrimeFieldCtx:
    def __init__(self, p: int):
        if p < 3 or p >= 2**62 or not isprime(p):
            raise FieldError(f"{p} is not an odd prime below 2^62")
        self.p = p

    def reduce(self, value) -> int:
        """Image of a rational number in F_p."""
        v = Fraction(value)
        if v.denominator % self.p == 0:
            raise FieldError(f"denominator {v.denominator} is not invertible mod {self.p}")
        return v.numerator * pow(v.denominator, -1, self.p) % self.p

    def chi(self, a: int) -> int:
        a %= self.p
        if a == 0:
            return 0
        return 1 if pow(a, (self.p - 1) // 2, self.p) == 1 else -1

    @cached_property
    def squares_bitmap(self) -> np.ndarray:
        sq = np.zeros(self.p, dtype=bool)
        y = np.arange(1, self.p, dtype=np.int64)
        sq[(y * y) % self.p] = True
        return sq


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Monic irreducible of degree k with the smallest coefficient code."""
    for code in range(p**k):
        f = [(code // p**i) % p for i in range(k)] + [1]
        if f[0] == 0 and k > 1:
            continue
        if gfp.is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


class ExtFieldCtx:
    """F_q with q = p^k; k = 1 gives the prime field with the same interface."""

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        self.base = PrimeFieldCtx(p)
        if k < 1:
            raise FieldError("extension degree must be positive")
        self.p, self.k, self.q = p, k, p**k
        if modulus is None:
            modulus = [0, 1] if k == 1 else smallest_irreducible(p, k)
        modulus = gfp.reduce(list(modulus), p)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {k}")
        if not gfp.is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self.weights = np.array([p**i for i in range(k)], dtype=np.int64)
        # x^(k+j) reduced, for j = 0..k-2
        self._reduction = []
        for j in range(max(k - 1, 0)):
            r = gfp.divmod_([0] * (k + j) + [1], modulus, p)[1]
            self._reduction.append(r + [0] * (k - len(r)))

    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def encode(self, digits: Sequence[int]) -> int:
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(digits[: self.k]))

    def from_rational(self, value) -> int:
        return self.base.reduce(value)

    def add(self, a: int, b: int) -> int:
        return self.encode([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        prod = gfp.mul(self.digits(a), self.digits(b), self.p)
        return self.encode(gfp.divmod_(prod, self.modulus, self.p)[1])

    def power(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def chi(self, a: int) -> int:
        if a == 0:
            return 0
        return 1 if self.power(a, (self.q - 1) // 2) == 1 else -1

    def elements_digits(self) -> np.ndarray:
        """All elements as a (q, k) digit array, row index = element code."""
        codes = np.arange(self.q, dtype=np.int64)
        return (codes[:, None] // self.weights[None, :]) % self.p

    def vec_mul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Row-wise product of two (n, k) digit arrays."""
        k, p = self.k, self.p
        conv = np.zeros((A.shape[0], 2 * k - 1), dtype=np.int64)
        for i in range(k):
            conv[:, i : i + k] += A[:, i : i + 1] * B
        conv %= p
        out = conv[:, :k].copy()
        for j, red in enumerate(self._reduction):
            out += conv[:, k + j : k + j + 1] * np.array(red, dtype=np.int64)[None, :]
        return out % p

    def mul_matrix(self, c: int) -> np.ndarray:
        """k x k matrix of multiplication by c acting on digit row vectors (v @ M)."""
        rows = []
        for i in range(self.k):
            basis = self.p**i
            rows.append(self.digits(self.mul(c, basis)))
        return np.array(rows, dtype=np.int64)

    def codes(self, digits: np.ndarray) -> np.ndarray:
        return digits @ self.weights

    @cached_property
    def squares_bitmap(self) -> np.ndarray:
        """Boolean table over element codes: nonzero squares."""
        if self.k == 1:
            return self.base.squares_bitmap
        y = self.elements_digits()[1:]
        sq = np.zeros(self.q, dtype=bool)
        sq[self.codes(self.vec_mul(y, y))] = True
        return sq

    @cached_property
    def chi_table(self) -> np.ndarray:
        """1 + chi(a) for every element code a: number of square roots."""
        t = np.where(self.squares_bitmap, 2, 0).astype(np.int64)
        t[0] = 1
        return t
