"""Brute-force ground truth for the closed-form distance formulas.

Everything here is deliberately dumb: exhaustive codeword enumeration
(optionally one representative per scalar class, which preserves both
minimum weights), exact minima with witnesses, and report objects that
never mark a budget-truncated search as verified.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .gf import Field, build_field
from .codes import (
    CodeSpec,
    closed_form_hamming_distance,
    closed_form_pair_distance,
)
from .pairmetrics import hamming_distance, pair_distance, run_count
from .polyring import RingElement, x_minus_one_power


@dataclass(frozen=True)
class EnumBudget:
    """Caps exhaustive searches; scalar reduction is a q-1 factor saving."""

    max_codewords: int = 10_000_000
    reduce_by_scalars: bool = True

    def __post_init__(self):
        if self.max_codewords < 1:
            raise ValueError("max_codewords must be >= 1")


class BudgetExhausted(RuntimeError):
    """An enumeration hit its budget before completing.

    Carries whatever was scanned so far; any attached minima are lower
    evidence only, explicitly NOT certified minima.
    """

    def __init__(self, message, scanned=0, space=None, best_pair=None, best_hamming=None):
        super().__init__(message)
        self.scanned = scanned
        self.space = space
        self.best_pair = best_pair
        self.best_hamming = best_hamming


@dataclass(frozen=True)
class FamilyEntry:
    i: int
    dimension: int
    formula_d_hamming: int
    oracle_d_hamming: int | None
    formula_d_pair: int
    oracle_d_pair: int | None
    witness: RingElement | None
    status: str  # "match" | "mismatch" | "skipped"


@dataclass(frozen=True)
class VerificationReport:
    p: int
    e: int
    m: int
    entries: tuple[FamilyEntry, ...]
    verdict: str  # "all-match" | "mismatch" | "incomplete"


@dataclass(frozen=True)
class IdentityViolation:
    x: tuple[int, ...]
    y: tuple[int, ...]
    d_hamming: int
    block_count: int
    d_pair: int


@dataclass(frozen=True)
class IdentityReport:
    q: int
    n: int
    mode: str
    pairs_checked: int
    full_support_pairs: int
    violations: tuple[IdentityViolation, ...]


def codeword_class_count(spec: CodeSpec, reduce_by_scalars: bool) -> int:
    """Number of codewords the enumeration will visit (nonzero only)."""
    full = spec.size - 1
    if reduce_by_scalars:
        return full // (spec.q - 1)
    return full


def _codeword_stream(
    spec: CodeSpec, field: Field, budget: EnumBudget
) -> Iterator[tuple[int, ...]]:
    """Nonzero codewords as coefficient tuples, ascending message order.

    Messages f are ordered by the integer whose base-q digits are the
    coefficient encodings of f (constant digit least significant); with
    scalar reduction only messages with leading coefficient 1 appear.
    Each codeword is obtained from its predecessor by adding the scaled
    generator-shift deltas of the digits that changed, so the walk stays
    exhaustive while costing O(n) per codeword.
    """
    q = field.q
    n = spec.n
    dim = spec.dimension
    cap = budget.max_codewords
    gen = x_minus_one_power(field, spec.i, n).coeffs
    add_table = [[field.add(a, b) for b in range(q)] for a in range(q)]
    shifts = [tuple(gen[(k - j) % n] for k in range(n)) for j in range(dim)]

    scaled: dict[tuple[int, int], tuple[int, ...]] = {}

    def scaled_vec(j: int, v: int) -> tuple[int, ...]:
        key = (j, v)
        vec = scaled.get(key)
        if vec is None:
            vec = tuple(field.mul(v, c) for c in shifts[j])
            scaled[key] = vec
        return vec

    deltas: dict[tuple[int, int], tuple[int, ...]] = {}

    def delta_vec(j: int, v: int) -> tuple[int, ...]:
        # digit j steps v -> v+1, or wraps q-1 -> 0
        key = (j, v)
        vec = deltas.get(key)
        if vec is None:
            if v == q - 1:
                vec = tuple(field.neg(c) for c in scaled_vec(j, q - 1))
            else:
                hi = scaled_vec(j, v + 1)
                lo = scaled_vec(j, v)
                vec = tuple(field.sub(a, b) for a, b in zip(hi, lo))
            deltas[key] = vec
        return vec

    leads = (1,) if budget.reduce_by_scalars else tuple(range(1, q))
    count = 0
    for d in range(dim):
        for lead in leads:
            word = list(scaled_vec(d, lead))
            digits = [0] * d
            for step in range(q**d):
                if step:
                    j = 0
                    while digits[j] == q - 1:
                        dv = delta_vec(j, q - 1)
                        word = [add_table[a][b] for a, b in zip(word, dv)]
                        digits[j] = 0
                        j += 1
                    dv = delta_vec(j, digits[j])
                    word = [add_table[a][b] for a, b in zip(word, dv)]
                    digits[j] += 1
                count += 1
                if count > cap:
                    raise BudgetExhausted(
                        f"budget of {cap} codewords exhausted for {spec}",
                        scanned=cap,
                        space=codeword_class_count(spec, budget.reduce_by_scalars),
                    )
                yield tuple(word)


def enumerate_codewords(
    spec: CodeSpec, budget: EnumBudget | None = None, field: Field | None = None
) -> Iterator[RingElement]:
    """Deterministic stream of nonzero codewords of C_i.

    Yields encode(f) for every nonzero message f in ascending encoding
    order (one representative per scalar class when the budget says so).
    Exceeding the budget raises BudgetExhausted after the capped prefix,
    which callers can tell apart from normal completion.
    """
    if spec.dimension < 1:
        raise ValueError("enumeration needs dimension >= 1")
    if budget is None:
        budget = EnumBudget()
    if field is None:
        field = spec.field()
    for coeffs in _codeword_stream(spec, field, budget):
        yield RingElement(field, coeffs)


@dataclass(frozen=True)
class _ScanResult:
    min_hamming: int
    hamming_witness: tuple[int, ...]
    min_pair: int
    pair_witness: tuple[int, ...]
    scanned: int


def _scan_min_weights(spec: CodeSpec, budget: EnumBudget, field: Field) -> _ScanResult:
    """One exhaustive pass computing both minimum weights with witnesses."""
    n = spec.n
    if spec.i == spec.n:
        zero = (0,) * n
        return _ScanResult(0, zero, 0, zero, 0)
    space = codeword_class_count(spec, budget.reduce_by_scalars)
    if space > budget.max_codewords:
        raise BudgetExhausted(
            f"{space} codewords exceed the budget of {budget.max_codewords}",
            scanned=0,
            space=space,
        )
    best_h = n + 1
    best_p = n + 1
    wit_h: tuple[int, ...] | None = None
    wit_p: tuple[int, ...] | None = None
    scanned = 0
    for word in _codeword_stream(spec, field, budget):
        scanned += 1
        w_h = n - word.count(0)
        if w_h < best_h:
            best_h = w_h
            wit_h = word
        if w_h < best_p:
            w_p = 0
            prev = word[-1]
            for cur in word:
                if prev or cur:
                    w_p += 1
                prev = cur
            if w_p < best_p:
                best_p = w_p
                wit_p = word
    return _ScanResult(best_h, wit_h, best_p, wit_p, scanned)


def min_pair_weight_bruteforce(
    spec: CodeSpec, budget: EnumBudget | None = None, field: Field | None = None
) -> tuple[int, RingElement]:
    """Exact minimum pair weight over nonzero codewords, with a witness.

    The zero code (i = p^e) returns 0 with the zero witness by the usual
    convention.  A budget overrun raises BudgetExhausted rather than
    passing off a partial scan as a minimum.
    """
    if budget is None:
        budget = EnumBudget()
    if field is None:
        field = spec.field()
    res = _scan_min_weights(spec, budget, field)
    return res.min_pair, RingElement(field, res.pair_witness)


def min_hamming_weight_bruteforce(
    spec: CodeSpec, budget: EnumBudget | None = None, field: Field | None = None
) -> tuple[int, RingElement]:
    """Exact minimum Hamming weight over nonzero codewords, with a witness."""
    if budget is None:
        budget = EnumBudget()
    if field is None:
        field = spec.field()
    res = _scan_min_weights(spec, budget, field)
    return res.min_hamming, RingElement(field, res.hamming_witness)


def verify_family(
    p: int,
    e: int,
    m: int,
    budget: EnumBudget | None = None,
    field: Field | None = None,
) -> VerificationReport:
    """Compare both closed forms against both oracles for every i.

    Entries whose enumeration exceeds the budget are marked skipped,
    never silently trusted; the verdict is "incomplete" when any entry
    was skipped and "mismatch" as soon as one disagrees.
    """
    if budget is None:
        budget = EnumBudget()
    if field is None:
        field = build_field(p, m)
    entries = []
    any_mismatch = False
    any_skip = False
    for i in range(p**e + 1):
        spec = CodeSpec(p, m, e, i)
        f_dh = closed_form_hamming_distance(spec)
        f_dp = closed_form_pair_distance(spec)
        try:
            res = _scan_min_weights(spec, budget, field)
        except BudgetExhausted:
            any_skip = True
            entries.append(
                FamilyEntry(i, spec.dimension, f_dh, None, f_dp, None, None, "skipped")
            )
            continue
        ok = res.min_hamming == f_dh and res.min_pair == f_dp
        if not ok:
            any_mismatch = True
        entries.append(
            FamilyEntry(
                i,
                spec.dimension,
                f_dh,
                res.min_hamming,
                f_dp,
                res.min_pair,
                RingElement(field, res.pair_witness),
                "match" if ok else "mismatch",
            )
        )
    if any_mismatch:
        verdict = "mismatch"
    elif any_skip:
        verdict = "incomplete"
    else:
        verdict = "all-match"
    return VerificationReport(p, e, m, tuple(entries), verdict)


_EXHAUSTIVE_PAIR_LIMIT = 2**20


def verify_run_identity(
    field: Field,
    n: int,
    samples: int | None = None,
    seed: int | None = None,
) -> IdentityReport:
    """Check d_p = d_H + L over ordered word pairs with 0 < d_H < n.

    Exhaustive when samples is None (requires q^(2n) ordered pairs to
    stay under 2^20), else a seeded random sample.  Pairs with d_H = n
    are checked for d_p = n instead; d_H = 0 pairs are out of scope.
    """
    q = field.q
    if samples is None:
        if q ** (2 * n) > _EXHAUSTIVE_PAIR_LIMIT:
            raise ValueError(
                "exhaustive mode needs q^(2n) <= 2^20; use sampled mode"
            )
        words = [
            RingElement(field, t)
            for t in itertools.product(field.elements(), repeat=n)
        ]
        pair_iter = itertools.product(words, words)
        mode = "exhaustive"
    else:
        if seed is None:
            raise ValueError("sampled mode needs a seed")
        rng = random.Random(seed)

        def _sampled():
            for _ in range(samples):
                x = RingElement(field, tuple(rng.randrange(q) for _ in range(n)))
                y = RingElement(field, tuple(rng.randrange(q) for _ in range(n)))
                yield x, y

        pair_iter = _sampled()
        mode = f"sample({samples},{seed})"

    checked = 0
    full_support = 0
    violations = []
    for x, y in pair_iter:
        d_h = hamming_distance(x, y)
        if d_h == 0:
            continue
        d_p = pair_distance(x, y)
        if d_h == n:
            full_support += 1
            if d_p != n:
                violations.append(
                    IdentityViolation(x.coeffs, y.coeffs, d_h, -1, d_p)
                )
            continue
        checked += 1
        blocks = run_count(x, y).block_count
        if d_p != d_h + blocks:
            violations.append(
                IdentityViolation(x.coeffs, y.coeffs, d_h, blocks, d_p)
            )
    return IdentityReport(q, n, mode, checked, full_support, tuple(violations))
