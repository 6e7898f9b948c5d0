"""The repeated-root cyclic code family C_i = <(x-1)^i> of length p^e.

Over F_{p^m} with n = p^e, every cyclic code of length n is generated by
a power of (x - 1); the generator exponent i in [0, n] determines the
code completely (dimension n - i).  Both the minimum Hamming distance
and the minimum pair distance of C_i are known in closed form as
piecewise functions of i; this module implements those formulas with an
explicit branch label per value so tables stay auditable, plus MDS
symbol-pair classification against the pair-metric Singleton bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import Field, build_field, is_prime
from .polyring import Poly, RingElement, x_minus_one_power


@dataclass(frozen=True)
class CodeSpec:
    """Parameters (p, m, e, i) identifying C_i of length p^e over F_{p^m}."""

    p: int
    m: int
    e: int
    i: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.e < 1:
            raise ValueError(f"e must be >= 1, got {self.e}")
        if not 0 <= self.i <= self.p**self.e:
            raise ValueError(f"generator exponent must lie in [0, {self.p**self.e}]")

    @property
    def n(self) -> int:
        return self.p**self.e

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def dimension(self) -> int:
        return self.n - self.i

    @property
    def size(self) -> int:
        return self.q**self.dimension

    def field(self) -> Field:
        return build_field(self.p, self.m)


@dataclass(frozen=True)
class DistanceRecord:
    """One distance-table row: closed-form values for a single i."""

    i: int
    dimension: int
    d_hamming: int
    d_pair: int
    branch: str
    mds_pair: bool
    verified: str | None = None


def generator(spec: CodeSpec, field: Field | None = None) -> RingElement:
    """The generator (x - 1)^i as a length-n vector."""
    if field is None:
        field = spec.field()
    return x_minus_one_power(field, spec.i, spec.n)


def encode(spec: CodeSpec, message: Poly) -> RingElement:
    """message * (x - 1)^i in the quotient ring; injective on messages.

    The message degree must be below the code dimension (zero message
    allowed); that range makes encoding a bijection onto the code.
    """
    if message.field.p != spec.p or message.field.m != spec.m:
        raise ValueError("message field does not match the code parameters")
    if message.degree >= spec.dimension:
        raise ValueError(
            f"message degree {message.degree} too large for dimension {spec.dimension}"
        )
    gen = generator(spec, message.field)
    return message.to_ring(spec.n) * gen


def contains(spec: CodeSpec, v: RingElement) -> bool:
    """Membership: (x - 1)^i divides the degree-< n lift of v."""
    if v.field.p != spec.p or v.field.m != spec.m:
        raise ValueError("vector field does not match the code parameters")
    if v.n != spec.n:
        raise ValueError(f"length mismatch: {v.n} vs {spec.n}")
    fs = v.field
    x_minus_one = Poly(fs, (fs.neg(1), 1))
    cur = v.lift()
    for _ in range(spec.i):
        if cur.is_zero():
            return True
        cur, rem = cur.divrem(x_minus_one)
        if not rem.is_zero():
            return False
    return True


def _hamming_branches(p: int, e: int, i: int):
    n = p**e
    if i == 0:
        yield 1, "1"
    if i == n:
        yield 0, "0"
    for beta in range(0, p - 1):
        if beta * p ** (e - 1) + 1 <= i <= (beta + 1) * p ** (e - 1):
            yield beta + 2, f"beta+2[beta={beta}]"
    for k in range(1, e):
        for t in range(1, p):
            lo = n - p ** (e - k) + (t - 1) * p ** (e - k - 1) + 1
            hi = n - p ** (e - k) + t * p ** (e - k - 1)
            if lo <= i <= hi:
                yield (t + 1) * p**k, f"(t+1)p^k[t={t},k={k}]"


def hamming_branch(spec: CodeSpec) -> tuple[int, str]:
    """Closed-form minimum Hamming distance with its branch label.

    The branch ranges partition [0, p^e]; hitting zero or several is an
    internal error (a transcription tripwire), never a caller mistake.
    """
    matches = list(_hamming_branches(spec.p, spec.e, spec.i))
    if len(matches) != 1:
        raise AssertionError(
            f"Hamming branches must partition [0, n]; i={spec.i} hit {matches}"
        )
    return matches[0]


def closed_form_hamming_distance(spec: CodeSpec) -> int:
    return hamming_branch(spec)[0]


def _pair_branches(p: int, e: int, i: int):
    n = p**e
    if i == n:
        yield 0, "0"
        return
    if n == 2 and i == 1:
        # n = 2 caps the pair distance at 2; handled before the e = 1 rule
        yield 2, "n=2"
        return
    if e == 1:
        if 0 <= i <= p - 2:
            yield i + 2, "i+2"
        if i == p - 1:
            yield p, "p"
        return
    if i == 0:
        yield 2, "2"
    if i == 1:
        yield 3, "3"
    if 2 <= i <= p ** (e - 1):
        yield 4, "4"
    for beta in range(1, p - 1):
        if beta * p ** (e - 1) + 1 <= i <= (beta + 1) * p ** (e - 1):
            yield 2 * (beta + 2), f"2(beta+2)[beta={beta}]"
    for k in range(1, e - 1):
        base = n - p ** (e - k)
        if i == base + 1:
            yield 3 * p**k, f"3p^k[k={k}]"
        if base + 2 <= i <= base + p ** (e - k - 1):
            yield 4 * p**k, f"4p^k[k={k}]"
        for beta in range(1, p - 1):
            lo = base + beta * p ** (e - k - 1) + 1
            hi = base + (beta + 1) * p ** (e - k - 1)
            if lo <= i <= hi:
                yield 2 * (beta + 2) * p**k, f"2(beta+2)p^k[k={k},beta={beta}]"
    for j in range(0, p - 1):
        if i == n - p + j:
            yield (j + 2) * p ** (e - 1), f"(j+2)p^(e-1)[j={j}]"
    if i == n - 1:
        yield n, "p^e"


def pair_branch(spec: CodeSpec) -> tuple[int, str]:
    """Closed-form minimum pair distance with its branch label.

    The piecewise ranges genuinely overlap at a few boundary exponents;
    every branch that fires must agree on the value, and disagreement is
    an internal error rather than a silently-picked winner.
    """
    matches = list(_pair_branches(spec.p, spec.e, spec.i))
    if not matches:
        raise AssertionError(f"no pair-distance branch matched i={spec.i}")
    values = {value for value, _ in matches}
    if len(values) != 1:
        raise AssertionError(
            f"overlapping pair-distance branches disagree at i={spec.i}: {matches}"
        )
    return matches[0]


def closed_form_pair_distance(spec: CodeSpec) -> int:
    return pair_branch(spec)[0]


def is_mds_pair(spec: CodeSpec) -> bool:
    """Whether C_i meets the pair-metric Singleton bound with equality.

    The bound M <= q^(n - d_p + 2) holds for 2 <= d_p <= n; with
    M = q^(n-i) equality is the integer identity d_p = i + 2.  The zero
    code (i = p^e, d_p = 0) sits outside the bound's hypothesis and is
    rejected.
    """
    if spec.i == spec.n:
        raise ValueError("the zero code is excluded from MDS classification")
    return closed_form_pair_distance(spec) == spec.i + 2


def distance_table(p: int, e: int, m: int) -> list[DistanceRecord]:
    """Closed-form records for every i in [0, p^e]; `verified` left unset."""
    records = []
    for i in range(p**e + 1):
        spec = CodeSpec(p, m, e, i)
        d_h = closed_form_hamming_distance(spec)
        d_p, branch = pair_branch(spec)
        mds = False if i == spec.n else is_mds_pair(spec)
        records.append(
            DistanceRecord(
                i=i,
                dimension=spec.dimension,
                d_hamming=d_h,
                d_pair=d_p,
                branch=branch,
                mds_pair=mds,
            )
        )
    return records
