"""Seeded random generators for ordinals, lists and sequences.

Shapes are kept at desk scale on purpose (few terms, shallow exponents,
single-digit coefficients) so that brute-force cross-checks stay feasible.
"""

from __future__ import annotations

import random

from .core import Ordinal, ZERO, add, as_ordinal, omega_pow
from .sequences import DegreeRamp, OmegaSequence, Periodic, Zero


def random_ordinal(
    rng: random.Random, max_terms: int = 4, depth: int = 3, max_coeff: int = 9
) -> Ordinal:
    """A random ordinal with at most max_terms terms and bounded nesting."""
    if depth <= 1:
        return Ordinal(rng.randint(0, max_coeff))
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        e = random_ordinal(rng, max_terms=2, depth=depth - 1, max_coeff=min(3, max_coeff))
        pairs.append((e, rng.randint(1, max_coeff)))
    return Ordinal.from_terms(pairs)


def random_ordinal_list(
    rng: random.Random, max_len: int = 6, **kwargs
) -> list[Ordinal]:
    return [random_ordinal(rng, **kwargs) for _ in range(rng.randint(0, max_len))]


def random_natural_list(rng: random.Random) -> list[int]:
    """2-3 naturals, each <= 6, totalling <= 12 (the interleaving bounds)."""
    while True:
        ns = [rng.randint(0, 6) for _ in range(rng.randint(2, 3))]
        if sum(ns) <= 12:
            return ns


def _random_period(rng: random.Random, max_period: int = 3) -> tuple[Ordinal, ...]:
    period = []
    for _ in range(rng.randint(1, max_period)):
        if rng.random() < 0.25:
            period.append(ZERO)
        else:
            period.append(random_ordinal(rng, max_terms=2, depth=2, max_coeff=4))
    if not any(period):
        period[rng.randrange(len(period))] = Ordinal(1)
    return tuple(period)


def random_periodic_sequence(
    rng: random.Random, max_head: int = 4, max_period: int = 3
) -> OmegaSequence:
    """Random small head, random (not all zero) periodic tail: xi > 0 always."""
    head = tuple(
        random_ordinal(rng, max_terms=3, depth=3, max_coeff=6)
        for _ in range(rng.randint(0, max_head))
    )
    return OmegaSequence(head, Periodic(_random_period(rng, max_period)))


def random_sequence_with_tail(rng: random.Random) -> OmegaSequence:
    """A sequence with infinitely many nonzero elements (periodic or ramp tail)."""
    if rng.random() < 0.25:
        head = tuple(
            random_ordinal(rng, max_terms=2, depth=2, max_coeff=4)
            for _ in range(rng.randint(0, 3))
        )
        base = random_ordinal(rng, max_terms=1, depth=2, max_coeff=2)
        return OmegaSequence(head, DegreeRamp(base))
    return random_periodic_sequence(rng)


def random_sequence(rng: random.Random) -> OmegaSequence:
    """Any tail kind, zero tails included."""
    if rng.random() < 0.25:
        head = tuple(
            random_ordinal(rng, max_terms=3, depth=3, max_coeff=6)
            for _ in range(rng.randint(0, 4))
        )
        return OmegaSequence(head, Zero())
    return random_sequence_with_tail(rng)


def random_light_heavy_case(
    rng: random.Random,
) -> tuple[list[Ordinal], list[Ordinal], Ordinal]:
    """Up to 3 elements >= w^xi and up to 3 below it, for absorption checks."""
    xi = Ordinal(rng.randint(1, 2))
    heavies = []
    for _ in range(rng.randint(1, 3)):
        bump = Ordinal(rng.randint(0, 1))
        lead = omega_pow(add(xi, bump))
        extra = _below_power(rng, xi)
        heavies.append(add(lead * rng.randint(1, 3), extra))
    lights = [_below_power(rng, xi) for _ in range(rng.randint(0, 3))]
    return heavies, lights, xi


def _below_power(rng: random.Random, xi: Ordinal) -> Ordinal:
    # a random ordinal < w^xi: take any sample and keep its terms below xi
    a = random_ordinal(rng, max_terms=3, depth=2, max_coeff=5)
    return Ordinal.from_terms((e, c) for e, c in a.terms if e < xi)


def shrink_ordinal(rng: random.Random, a: Ordinal) -> Ordinal:
    """A random ordinal <= a (frequently a itself)."""
    a = as_ordinal(a)
    t = a.terms
    if not t or rng.random() < 0.3:
        return a
    mode = rng.randrange(3)
    if mode == 0:
        return ZERO
    k = rng.randrange(len(t))
    if mode == 1:
        return Ordinal.from_terms(t[:k])
    e, c = t[k]
    return Ordinal.from_terms((*t[:k], (e, rng.randrange(0, c + 1)), *t[k + 1 :]))


def shrink_sequence(rng: random.Random, s: OmegaSequence) -> OmegaSequence:
    """Elementwise random shrink: every element of the result is <= the original."""
    head = tuple(shrink_ordinal(rng, h) for h in s.head)
    tail = s.tail
    if isinstance(tail, Periodic):
        tail = Periodic(tuple(shrink_ordinal(rng, p) for p in tail.period))
    elif isinstance(tail, DegreeRamp):
        tail = DegreeRamp(shrink_ordinal(rng, tail.base))
    return OmegaSequence(head, tail)
