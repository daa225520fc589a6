"""Omega-indexed ordinal sequences and the closed forms of their infinite sums.

A sequence is a finite head plus one of three tail rules: all zeros, a
repeating period, or a degree ramp whose element at tail offset k is
w^(base+k).  These tails are the representability compromise of the module:
they keep the critical exponent computable while covering the zero,
successor and limit shapes it can take, and every closed form stays exact.

The critical exponent xi of a sequence is the least ordinal such that only
finitely many elements reach w^xi; the elements that do are the heavy ones,
and m is the first index after the last of them.  Both infinite sums then
collapse to finite expressions:

    natural sum  =  (natural sum of the heavy elements) + w^xi
    ordered sum  =  (heavy elements added in index order) + w^xi

with the xi == 0 case degenerating to plain finite sums over the head.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .core import (
    InvariantError,
    OMEGA,
    Ordinal,
    OrdinalLike,
    ZERO,
    add,
    as_ordinal,
    compare,
    degree,
    nat_sum_many,
    omega_pow,
    ordered_sum,
    successor,
    truncate,
)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantError(message)


@dataclass(frozen=True)
class Zero:
    """Tail of zeros: the sequence has finite support."""


@dataclass(frozen=True)
class Periodic:
    """Tail repeating ``period`` forever; not all entries may be zero."""

    period: tuple[Ordinal, ...]

    def __post_init__(self) -> None:
        period = tuple(as_ordinal(p) for p in self.period)
        if not period:
            raise ValueError("a periodic tail needs a nonempty period")
        object.__setattr__(self, "period", period)


@dataclass(frozen=True)
class DegreeRamp:
    """Tail whose element at offset k is w^(base+k): degrees grow unboundedly."""

    base: Ordinal

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_ordinal(self.base))


Tail = Union[Zero, Periodic, DegreeRamp]


@dataclass(frozen=True)
class OmegaSequence:
    """A total function on omega, described by a finite head and a tail rule.

    Normalized on construction: a periodic tail of zeros is stored as Zero,
    so ``tail`` being Zero is equivalent to finite support.
    """

    head: tuple[Ordinal, ...] = ()
    tail: Tail = Zero()

    def __post_init__(self) -> None:
        object.__setattr__(self, "head", tuple(as_ordinal(h) for h in self.head))
        if isinstance(self.tail, Periodic) and not any(self.tail.period):
            object.__setattr__(self, "tail", Zero())

    @classmethod
    def finite(cls, elements: Iterable[OrdinalLike]) -> "OmegaSequence":
        return cls(tuple(elements), Zero())

    @classmethod
    def periodic(
        cls, period: Iterable[OrdinalLike], head: Iterable[OrdinalLike] = ()
    ) -> "OmegaSequence":
        return cls(tuple(head), Periodic(tuple(period)))

    @classmethod
    def ramp(cls, base: OrdinalLike, head: Iterable[OrdinalLike] = ()) -> "OmegaSequence":
        return cls(tuple(head), DegreeRamp(as_ordinal(base)))


@dataclass(frozen=True)
class SumAnalysis:
    """The (xi, m, heavy) decomposition of a sequence plus both sum values.

    ``heavy`` lists the indices of elements >= w^xi (all below ``m``);
    ``inat`` and ``iord`` are the infinite natural and ordered sums.
    """

    xi: Ordinal
    m: int
    heavy: tuple[int, ...]
    inat: Ordinal
    iord: Ordinal


def element_at(s: OmegaSequence, i: int) -> Ordinal:
    """Element at any index i < omega; total by construction."""
    if not isinstance(i, int) or isinstance(i, bool) or i < 0:
        raise ValueError(f"index must be a natural number, got {i!r}")
    if i < len(s.head):
        return s.head[i]
    off = i - len(s.head)
    tail = s.tail
    if isinstance(tail, Zero):
        return ZERO
    if isinstance(tail, Periodic):
        return tail.period[off % len(tail.period)]
    return omega_pow(add(tail.base, off))


def shift(s: OmegaSequence, n: int) -> OmegaSequence:
    """The sequence with the first n elements dropped."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"shift must be a natural number, got {n!r}")
    if n <= len(s.head):
        return OmegaSequence(s.head[n:], s.tail)
    off = n - len(s.head)
    tail = s.tail
    if isinstance(tail, Zero):
        return OmegaSequence((), Zero())
    if isinstance(tail, Periodic):
        k = off % len(tail.period)
        return OmegaSequence((), Periodic(tail.period[k:] + tail.period[:k]))
    return OmegaSequence((), DegreeRamp(add(tail.base, off)))


def xi_of(s: OmegaSequence) -> Ordinal:
    """Least xi such that only finitely many elements are >= w^xi.

    Rule-based per tail kind: the head is finite, so only the tail matters.
    A period recurs forever, so xi must clear its largest degree; ramp
    degrees are unbounded below base+w and xi lands exactly there.
    """
    tail = s.tail
    if isinstance(tail, Zero):
        return ZERO
    if isinstance(tail, Periodic):
        top = max((degree(p) for p in tail.period if p))
        return successor(top)
    return add(tail.base, OMEGA)


def analyze(s: OmegaSequence) -> SumAnalysis:
    """Compute xi, m, the heavy indices, and both infinite sums exactly.

    Each sum is evaluated along two routes (heavy elements directly, and
    their truncations at xi joined with w^xi) plus the head-prefix route;
    the routes must agree, and disagreement raises InvariantError.
    """
    xi = xi_of(s)
    head = s.head
    if not xi:
        heavy = tuple(i for i, h in enumerate(head) if h)
        m = heavy[-1] + 1 if heavy else 0
        inat = nat_sum_many(head)
        iord = ordered_sum(head)
    else:
        w = omega_pow(xi)
        tail = s.tail
        if isinstance(tail, Periodic):
            for p in tail.period:
                _check(compare(p, w) < 0, "periodic tail element reaches w^xi")
        else:
            _check(xi == add(tail.base, OMEGA), "ramp xi rule out of step")
        heavy = tuple(i for i, h in enumerate(head) if compare(h, w) >= 0)
        m = heavy[-1] + 1 if heavy else 0
        heavies = [head[i] for i in heavy]
        inat = add(nat_sum_many(heavies), w)
        iord = add(ordered_sum(heavies), w)
        cut = [truncate(h, xi) for h in heavies]
        _check(inat == nat_sum_many(cut + [w]), "natural-sum truncation route differs")
        _check(iord == add(ordered_sum(cut), w), "ordered-sum truncation route differs")
        _check(inat == add(nat_sum_many(head[:m]), w), "head-prefix natural route differs")
        _check(iord == add(ordered_sum(head[:m]), w), "head-prefix ordered route differs")
    _check(compare(iord, inat) <= 0, "ordered sum exceeds natural sum")
    return SumAnalysis(xi, m, heavy, inat, iord)


def inat_sum(s: OmegaSequence) -> Ordinal:
    """Infinite natural sum: the sup of the finite natural partial sums."""
    return analyze(s).inat


def iord_sum(s: OmegaSequence) -> Ordinal:
    """Infinite ordered sum, in index order."""
    return analyze(s).iord


def partial_nat_sum(s: OmegaSequence, n: int) -> Ordinal:
    """Natural sum of the first n elements (0 for n == 0)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"prefix length must be a natural number, got {n!r}")
    return nat_sum_many(element_at(s, i) for i in range(n))


def tail_sum_from(s: OmegaSequence, n: int) -> Ordinal:
    """Infinite natural sum of the elements from index n on.

    For n >= m (and xi > 0) this is exactly w^xi; for xi == 0 it is the
    finite natural sum of whatever nonzero elements remain.
    """
    return analyze(shift(s, n)).inat


def truncate_seq(s: OmegaSequence, eps: OrdinalLike) -> OmegaSequence:
    """Truncate every element at eps; both infinite sums are unchanged.

    Requires eps < xi (a ValueError otherwise): at or above xi truncation
    can wipe the infinite part out.
    """
    eps = as_ordinal(eps)
    xi = xi_of(s)
    if compare(eps, xi) >= 0:
        raise ValueError("truncation level must be below the critical exponent xi")
    head = tuple(truncate(h, eps) for h in s.head)
    tail = s.tail
    if isinstance(tail, Periodic):
        tail = Periodic(tuple(truncate(p, eps) for p in tail.period))
    elif isinstance(tail, DegreeRamp):
        # ramp offsets below eps truncate to zero; fold them into the head
        j = 0
        while compare(add(tail.base, j), eps) < 0:
            j += 1
        head = head + (ZERO,) * j
        tail = DegreeRamp(add(tail.base, j))
    out = OmegaSequence(head, tail)
    before = analyze(s)
    after = analyze(out)
    _check(before.inat == after.inat, "truncation changed the natural sum")
    _check(before.iord == after.iord, "truncation changed the ordered sum")
    return out


def regroup_head(
    s: OmegaSequence, blocks: Sequence[Iterable[int]]
) -> OmegaSequence:
    """Replace an initial segment by the per-block natural sums.

    ``blocks`` must be disjoint, finite, nonempty, and cover exactly [0, n)
    for some n.  The infinite natural sum is invariant; only finite blocks
    are expressible here, which is what keeps the invariance true.
    """
    groups = [tuple(b) for b in blocks]
    seen: set[int] = set()
    total = 0
    for g in groups:
        if not g:
            raise ValueError("blocks must be nonempty")
        for i in g:
            if not isinstance(i, int) or isinstance(i, bool) or i < 0:
                raise ValueError(f"block indices must be naturals, got {i!r}")
            if i in seen:
                raise ValueError(f"blocks overlap at index {i}")
            seen.add(i)
        total += len(g)
    if seen and (total != len(seen) or max(seen) != total - 1):
        raise ValueError("blocks must cover an initial segment [0, n) exactly")
    n = total
    new_head = tuple(nat_sum_many(element_at(s, i) for i in g) for g in groups)
    rest = shift(s, n)
    out = OmegaSequence(new_head + rest.head, rest.tail)
    _check(
        analyze(s).inat == analyze(out).inat,
        "regrouping changed the infinite natural sum",
    )
    return out
