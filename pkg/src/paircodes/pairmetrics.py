"""The symbol-pair metric layer.

A length-n word x is read cyclically as overlapping adjacent pairs
(x_i, x_{i+1 mod n}).  Pair weight counts positions whose pair is not
(0, 0); pair distance counts positions where two words' pair reads
differ.  For 0 < d_H(x, y) < n the two metrics are linked exactly by

    d_p(x, y) = d_H(x, y) + L,

where L is the number of maximal cyclically-consecutive blocks in the
disagreement set (run_count below).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import Field
from .polyring import RingElement


@dataclass(frozen=True)
class PairVector:
    """A symbol-pair read: n ordered pairs over the field alphabet.

    Produced from a word, pair i is (x_i, x_{(i+1) mod n}) and adjacent
    pairs agree on the shared symbol.  Arbitrary PairVectors (corrupted
    channel reads) may be inconsistent; see consistent().
    """

    field: Field
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.pairs) < 2:
            raise ValueError("a cyclic pair read needs at least two positions")
        pairs = tuple(
            (self.field.check(a), self.field.check(b)) for a, b in self.pairs
        )
        object.__setattr__(self, "pairs", pairs)

    @property
    def n(self) -> int:
        return len(self.pairs)

    def consistent(self) -> bool:
        """Whether every pair's right symbol matches the next pair's left."""
        n = self.n
        return all(
            self.pairs[i][1] == self.pairs[(i + 1) % n][0] for i in range(n)
        )


@dataclass(frozen=True)
class RunProfile:
    """Disagreement set of two words plus its minimal cyclic-block count."""

    support: frozenset[int]
    block_count: int


def pair_read(x: RingElement) -> PairVector:
    """The symbol-pair read vector of x; requires n >= 2."""
    if x.n < 2:
        raise ValueError("pair read needs length >= 2")
    c = x.coeffs
    n = x.n
    return PairVector(x.field, tuple((c[i], c[(i + 1) % n]) for i in range(n)))


def hamming_weight(x: RingElement) -> int:
    return sum(1 for c in x.coeffs if c)


def pair_weight(x: RingElement) -> int:
    """Number of positions i with (x_i, x_{i+1 mod n}) != (0, 0)."""
    if x.n < 2:
        raise ValueError("pair weight needs length >= 2")
    c = x.coeffs
    n = x.n
    return sum(1 for i in range(n) if c[i] or c[(i + 1) % n])


def _check_same_shape(x: RingElement, y: RingElement):
    if x.field != y.field:
        raise ValueError("words from different fields")
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")


def hamming_distance(x: RingElement, y: RingElement) -> int:
    _check_same_shape(x, y)
    return sum(1 for a, b in zip(x.coeffs, y.coeffs) if a != b)


def pair_distance(x: RingElement, y: RingElement) -> int:
    """Positions where the pair reads of x and y differ (cyclic indices)."""
    _check_same_shape(x, y)
    if x.n < 2:
        raise ValueError("pair distance needs length >= 2")
    a, b = x.coeffs, y.coeffs
    n = x.n
    return sum(
        1
        for i in range(n)
        if a[i] != b[i] or a[(i + 1) % n] != b[(i + 1) % n]
    )


def pair_seq_distance(u: PairVector, v: PairVector) -> int:
    """Positionwise disagreement count of two raw pair sequences."""
    if u.field != v.field:
        raise ValueError("pair vectors from different fields")
    if u.n != v.n:
        raise ValueError(f"length mismatch: {u.n} vs {v.n}")
    return sum(1 for a, b in zip(u.pairs, v.pairs) if a != b)


def run_count(x: RingElement, y: RingElement) -> RunProfile:
    """Disagreement support and its number of maximal cyclic runs.

    Runs are cyclic: indices n-1 and 0 are consecutive.  Full support is
    a single run by convention (the wrap makes all of Z_n one block).
    """
    _check_same_shape(x, y)
    n = x.n
    support = frozenset(i for i in range(n) if x.coeffs[i] != y.coeffs[i])
    if not support:
        return RunProfile(support, 0)
    if len(support) == n:
        return RunProfile(support, 1)
    blocks = sum(1 for i in support if (i - 1) % n not in support)
    return RunProfile(support, blocks)
