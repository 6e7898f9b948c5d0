"""Pair-read channel simulation: error injection and nearest decoding.

The channel reads overlapping symbol pairs, so received words live in
pair-sequence space and need not be consistent reads of any word.  The
decoder is exhaustive nearest-codeword search in that space; a code
with minimum pair distance d corrects t pair errors whenever
d >= 2t + 1, and the experiment below validates exactly that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .codes import CodeSpec
from .gf import Field
from .oracle import BudgetExhausted, EnumBudget, _codeword_stream
from .pairmetrics import PairVector, pair_read
from .polyring import RingElement


@dataclass(frozen=True)
class PairErrorPattern:
    """Which pair positions were corrupted and what was written there."""

    positions: tuple[int, ...]
    replacements: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TrialOutcome:
    transmitted: RingElement
    received: PairVector
    decoded: RingElement | None
    success: bool


def inject_pair_errors(
    u: PairVector, t: int, seed: int
) -> tuple[PairVector, PairErrorPattern]:
    """Corrupt exactly t distinct pair positions of u, seeded.

    Positions are drawn uniformly without replacement; each hit pair is
    replaced by a uniformly chosen different pair, so the corrupted read
    sits at pair-sequence distance exactly t from u (and may well be an
    inconsistent read).
    """
    n = u.n
    if not 0 <= t <= n:
        raise ValueError(f"error count must lie in [0, {n}], got {t}")
    rng = random.Random(seed)
    positions = tuple(sorted(rng.sample(range(n), t)))
    q = u.field.q
    pairs = list(u.pairs)
    replacements = []
    for pos in positions:
        a, b = pairs[pos]
        original = a * q + b
        z = rng.randrange(q * q - 1)
        if z >= original:
            z += 1
        new_pair = (z // q, z % q)
        pairs[pos] = new_pair
        replacements.append(new_pair)
    return (
        PairVector(u.field, tuple(pairs)),
        PairErrorPattern(positions, tuple(replacements)),
    )


@lru_cache(maxsize=8)
def _codebook(
    spec: CodeSpec, field: Field, max_codewords: int
) -> tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...]], ...]:
    # full codebook (zero first, then ascending messages) with pair reads
    if spec.size > max_codewords:
        raise BudgetExhausted(
            f"codebook of {spec.size} codewords exceeds the budget of {max_codewords}",
            space=spec.size,
        )
    n = spec.n
    zero = (0,) * n
    book = [(zero, tuple(((0, 0) for _ in range(n))))]
    if spec.dimension >= 1:
        budget = EnumBudget(max_codewords=max_codewords, reduce_by_scalars=False)
        for word in _codeword_stream(spec, field, budget):
            pairs = tuple((word[k], word[(k + 1) % n]) for k in range(n))
            book.append((word, pairs))
    return tuple(book)


def decode_min_pair_distance(
    spec: CodeSpec, received: PairVector, budget: EnumBudget | None = None
) -> RingElement | None:
    """Nearest codeword in pair-sequence distance, or None on a tie.

    Scans every codeword (scalar reduction would merge words that decode
    differently); a tie between distinct codewords is reported as an
    ambiguous failure rather than resolved arbitrarily.
    """
    if budget is None:
        budget = EnumBudget()
    if received.field.p != spec.p or received.field.m != spec.m:
        raise ValueError("received word's field does not match the code")
    if received.n != spec.n:
        raise ValueError(f"length mismatch: {received.n} vs {spec.n}")
    book = _codebook(spec, received.field, budget.max_codewords)
    target = received.pairs
    best = None
    best_d = spec.n + 1
    ambiguous = False
    for word, pairs in book:
        d = 0
        for a, b in zip(pairs, target):
            if a != b:
                d += 1
                if d > best_d:
                    break
        if d < best_d:
            best_d = d
            best = word
            ambiguous = False
        elif d == best_d:
            ambiguous = True
    if ambiguous or best is None:
        return None
    return RingElement(received.field, best)


def correctability_experiment(
    spec: CodeSpec,
    t: int,
    trials: int,
    seed: int,
    budget: EnumBudget | None = None,
) -> tuple[float, list[TrialOutcome]]:
    """Transmit random codewords, inject t pair errors, decode, tally.

    Trials are independently seeded from (seed, trial index), so results
    are bit-for-bit reproducible.  When 2t + 1 <= d_p the decoder must
    recover every trial; larger t is permitted for exploratory runs.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if budget is None:
        budget = EnumBudget()
    field = spec.field()
    book = _codebook(spec, field, budget.max_codewords)
    outcomes = []
    successes = 0
    for k in range(trials):
        rng = random.Random(seed * 1_000_003 + k)
        transmitted = RingElement(field, book[rng.randrange(len(book))][0])
        clean = pair_read(transmitted)
        received, _pattern = inject_pair_errors(clean, t, rng.randrange(2**63))
        decoded = decode_min_pair_distance(spec, received, budget)
        success = decoded is not None and decoded.coeffs == transmitted.coeffs
        successes += success
        outcomes.append(TrialOutcome(transmitted, received, decoded, success))
    return successes / trials, outcomes
