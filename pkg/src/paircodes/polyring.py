"""Polynomials over F_{p^m} and the cyclic quotient ring F_q[x]/(x^n - 1).

Two value types with one coefficient convention (constant term first):

* Poly normalizes away trailing zeros so degree queries are canonical.
* RingElement keeps a fixed length n with explicit zeros, because
  codewords and channel vectors need positional semantics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .gf import Field

NEG_INF = float("-inf")


@dataclass(frozen=True)
class Poly:
    """A polynomial with coefficients in a Field, no trailing zeros."""

    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.field.check(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        """len(coeffs) - 1, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_compat(self, other: "Poly"):
        if self.field != other.field:
            raise ValueError("polynomials from different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        fs = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = fs.add(out[j], c)
        return Poly(fs, tuple(out))

    def __neg__(self) -> "Poly":
        fs = self.field
        return Poly(fs, tuple(fs.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compat(other)
        fs = self.field
        if self.is_zero() or other.is_zero():
            return Poly(fs, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = fs.add(out[i + j], fs.mul(a, b))
        return Poly(fs, tuple(out))

    def divrem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder with deg(remainder) < deg(divisor)."""
        self._check_compat(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        fs = self.field
        lead_inv = fs.inv(other.coeffs[-1])
        db = len(other.coeffs) - 1
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                f = fs.mul(c, lead_inv)
                quot[k - db] = f
                for j, bj in enumerate(other.coeffs):
                    rem[k - db + j] = fs.sub(rem[k - db + j], fs.mul(f, bj))
        return Poly(fs, tuple(quot)), Poly(fs, tuple(rem))

    def to_ring(self, n: int) -> "RingElement":
        """Reduce into F_q[x]/(x^n - 1): exponents wrap mod n."""
        if n < 1:
            raise ValueError("ring length must be positive")
        fs = self.field
        out = [0] * n
        for j, c in enumerate(self.coeffs):
            if c:
                out[j % n] = fs.add(out[j % n], c)
        return RingElement(fs, tuple(out))


@dataclass(frozen=True)
class RingElement:
    """An element of F_q[x]/(x^n - 1): exactly n coefficients, zeros kept."""

    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("ring length must be positive")
        object.__setattr__(
            self, "coeffs", tuple(self.field.check(c) for c in self.coeffs)
        )

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def lift(self) -> Poly:
        """The unique representative of degree < n in F_q[x]."""
        return Poly(self.field, self.coeffs)

    def _check_compat(self, other: "RingElement"):
        if self.field != other.field:
            raise ValueError("ring elements from different fields")
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check_compat(other)
        fs = self.field
        return RingElement(
            fs, tuple(fs.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "RingElement":
        fs = self.field
        return RingElement(fs, tuple(fs.neg(a) for a in self.coeffs))

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check_compat(other)
        fs = self.field
        return RingElement(
            fs, tuple(fs.sub(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def scale(self, s: int) -> "RingElement":
        fs = self.field
        return RingElement(fs, tuple(fs.mul(s, a) for a in self.coeffs))

    def __mul__(self, other: "RingElement") -> "RingElement":
        """Cyclic convolution (multiplication mod x^n - 1)."""
        self._check_compat(other)
        fs = self.field
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        k = i + j
                        if k >= n:
                            k -= n
                        out[k] = fs.add(out[k], fs.mul(a, b))
        return RingElement(fs, tuple(out))

    def shift(self, s: int) -> "RingElement":
        """Cyclic shift: coefficient at j moves to (j + s) mod n."""
        n = self.n
        s %= n
        if s == 0:
            return self
        out = [0] * n
        for j, c in enumerate(self.coeffs):
            out[(j + s) % n] = c
        return RingElement(self.field, tuple(out))


def zero_ring_element(field: Field, n: int) -> RingElement:
    return RingElement(field, (0,) * n)


def ring_one(field: Field, n: int) -> RingElement:
    return RingElement(field, (1,) + (0,) * (n - 1))


def _binom_mod_p(i: int, j: int, p: int) -> int:
    # Lucas: C(i, j) mod p is the product of digitwise binomials base p
    r = 1
    while j:
        r = r * math.comb(i % p, j % p) % p
        if r == 0:
            return 0
        i //= p
        j //= p
    return r


def _prime_power_exponent(n: int, p: int) -> int:
    e = 0
    while n > 1 and n % p == 0:
        n //= p
        e += 1
    if n != 1 or e < 1:
        raise ValueError("ring length must be a positive power of the characteristic")
    return e


def x_minus_one_power(field: Field, i: int, n: int) -> RingElement:
    """(x - 1)^i in F_q[x]/(x^n - 1), for n = p^e and 0 <= i <= n.

    Expanded by the binomial theorem with coefficients reduced mod p via
    Lucas' theorem: the x^j coefficient is (-1)^(i-j) C(i, j).  At i = n
    all inner binomials vanish mod p and the ends cancel, giving zero.
    """
    p = field.p
    _prime_power_exponent(n, p)
    if not 0 <= i <= n:
        raise ValueError(f"exponent must lie in [0, {n}], got {i}")
    out = [0] * n
    for j in range(i + 1):
        c = _binom_mod_p(i, j, p)
        if c:
            if (i - j) % 2:
                c = -c % p
            k = j % n
            out[k] = field.add(out[k], c)
    return RingElement(field, tuple(out))


def cyclic_shift(v: RingElement, s: int) -> RingElement:
    return v.shift(s)


def vector(field: Field, entries: Sequence[int]) -> RingElement:
    """Convenience constructor from a plain coefficient sequence."""
    return RingElement(field, tuple(entries))
