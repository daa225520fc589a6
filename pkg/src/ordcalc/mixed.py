"""Mixed-sum realizations of ordinals and their exact enumeration.

A mixed sum of a family of ordinals is an ordinal partitioned into disjoint
pieces whose induced order types are the given summands.  A Certificate is
a finite witness for one: an ordered list of convex blocks tagged by
summand, optionally followed by a compact rule covering an omega-tail of
summands with one convex block each.  Left-finiteness is structural in this
encoding: any point of the value is preceded by blocks of finitely many
summands.

Carruth's theorem makes the natural sum the largest mixed sum of a finite
list, and here the same construction realizes the infinite natural sum as
the largest left-finite mixed sum of a sequence.  Reordered sums (the
left-finite piecewise-convex values) form a finite set, enumerated exactly
over permutations of the heavy elements; everything lighter than w^xi is
absorbed by the cofinal w^xi block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence, Union

from .core import (
    Ordinal,
    OrdinalLike,
    ZERO,
    add,
    as_ordinal,
    compare,
    nat_sum_many,
    omega_pow,
    ordered_sum,
    render,
)
from .sequences import OmegaSequence, Zero, analyze, element_at, shift


class CertificateError(Exception):
    """A certificate failed mechanical validation."""


class OrderTypeMismatch(CertificateError):
    def __init__(self, summand: int, expected: Ordinal, actual: Ordinal):
        super().__init__(
            f"summand #{summand} has order type {render(actual)}, "
            f"expected {render(expected)}"
        )
        self.summand = summand
        self.expected = expected
        self.actual = actual


class ValueMismatch(CertificateError):
    def __init__(self, claimed: Ordinal, actual: Ordinal):
        super().__init__(
            f"certificate claims {render(claimed)} but its blocks sum to {render(actual)}"
        )
        self.claimed = claimed
        self.actual = actual


class ZeroLengthBlock(CertificateError):
    def __init__(self, summand: int):
        super().__init__(f"zero-length block for summand #{summand}")
        self.summand = summand


class UnknownSummandIndex(CertificateError):
    def __init__(self, index: int):
        super().__init__(f"summand index {index} is out of range")
        self.index = index


@dataclass(frozen=True)
class Certificate:
    """An ordered block decomposition witnessing a mixed sum.

    ``head_blocks`` are (summand index, block length) in position order;
    ``tail_from`` (when set) means: one convex block per summand, in
    sequence order, from that index on, each of the summand's full length.
    """

    head_blocks: tuple[tuple[int, Ordinal], ...]
    tail_from: int | None
    value: Ordinal


class ValueSet:
    """A finite, deduplicated, strictly increasing set of ordinals."""

    __slots__ = ("_values",)

    def __init__(self, values):
        self._values = tuple(sorted({as_ordinal(v) for v in values}))

    @property
    def values(self) -> tuple[Ordinal, ...]:
        return self._values

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, x: OrdinalLike) -> bool:
        return as_ordinal(x) in self._values

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ValueSet):
            return self._values == other._values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def max(self) -> Ordinal:
        if not self._values:
            raise ValueError("empty value set has no maximum")
        return self._values[-1]

    def __repr__(self) -> str:
        return "{" + ", ".join(render(v) for v in self._values) + "}"


def carruth_realize(summands: Sequence[OrdinalLike]) -> Certificate:
    """Realize the natural sum of a finite list as a mixed sum.

    Each summand is split into its normal-form terms, one block per term,
    and all blocks are laid out by nonincreasing exponent (ties broken by
    ascending summand index, so certificates are deterministic).  Blocks
    in nonincreasing-exponent order add up linearly, which is exactly the
    natural sum; each summand's own blocks keep its normal-form order.
    """
    values = [as_ordinal(a) for a in summands]
    blocks: list[tuple[Ordinal, int, Ordinal]] = []
    for i, a in enumerate(values):
        for e, c in a.terms:
            blocks.append((e, i, Ordinal.from_terms([(e, c)])))
    blocks.sort(key=cmp_to_key(lambda x, y: compare(x[0], y[0])), reverse=True)
    head = tuple((i, length) for _, i, length in blocks)
    return Certificate(head, None, nat_sum_many(values))


def realize_inat_sum(s: OmegaSequence) -> Certificate:
    """The largest left-finite mixed sum of a sequence, with its witness.

    The elements before m are realized bottom-most by the Carruth layout;
    the rest ride in one convex block per summand.  Only the finitely many
    bottom summands may end up non-convex, so the realization is almost
    piecewise convex, and its value is the infinite natural sum.
    """
    an = analyze(s)
    prefix = [element_at(s, i) for i in range(an.m)]
    base = carruth_realize(prefix)
    tail_from = an.m if an.xi else None
    return Certificate(base.head_blocks, tail_from, an.inat)


def _first_nonzero_tail_index(s: OmegaSequence) -> int:
    # normalization guarantees a non-Zero tail has a nonzero element within
    # one period (ramps are nonzero everywhere)
    i = len(s.head)
    while not element_at(s, i):
        i += 1
    return i


def validate_certificate(
    cert: Certificate, summands: Union[OmegaSequence, Sequence[OrdinalLike]]
) -> Ordinal:
    """Recompute what a certificate realizes and check it mechanically.

    Verifies block shape, that each summand's blocks add up (in certificate
    order) to the summand, and that the full block layout adds up to the
    claimed value; returns that value.  Raises a CertificateError subclass
    on the first violation.
    """
    if isinstance(summands, OmegaSequence):
        seq = summands
        finite_len = None
    else:
        seq = None
        elems = tuple(as_ordinal(x) for x in summands)
        finite_len = len(elems)

    def element(i: int) -> Ordinal:
        if seq is not None:
            return element_at(seq, i)
        return elems[i]

    per_summand: dict[int, list[Ordinal]] = {}
    for i, length in cert.head_blocks:
        if not isinstance(i, int) or isinstance(i, bool) or i < 0:
            raise UnknownSummandIndex(i)
        if finite_len is not None and i >= finite_len:
            raise UnknownSummandIndex(i)
        length = as_ordinal(length)
        if not length:
            raise ZeroLengthBlock(i)
        per_summand.setdefault(i, []).append(length)

    tf = cert.tail_from
    if tf is not None:
        if not isinstance(tf, int) or isinstance(tf, bool) or tf < 0:
            raise UnknownSummandIndex(tf)
        if finite_len is not None and tf > finite_len:
            raise UnknownSummandIndex(tf)

    # per-summand order types: the ordered sum of the summand's block
    # lengths, in certificate order (tail block, if any, comes last)
    for i in sorted(per_summand):
        lengths = list(per_summand[i])
        if tf is not None and i >= tf:
            lengths.append(element(i))
        got = ordered_sum(lengths)
        expected = element(i)
        if got != expected:
            raise OrderTypeMismatch(i, expected, got)

    # summands with no blocks at all must be zero
    if seq is not None:
        scan_to = tf if tf is not None else len(seq.head)
        for i in range(scan_to):
            if i not in per_summand and element(i):
                raise OrderTypeMismatch(i, element(i), ZERO)
        if tf is None and not isinstance(seq.tail, Zero):
            i = _first_nonzero_tail_index(seq)
            raise OrderTypeMismatch(i, element(i), ZERO)
    else:
        scan_to = tf if tf is not None else finite_len
        for i in range(scan_to):
            if i not in per_summand and elems[i]:
                raise OrderTypeMismatch(i, elems[i], ZERO)

    total = ordered_sum(length for _, length in cert.head_blocks)
    if tf is not None:
        if seq is not None:
            total = add(total, analyze(shift(seq, tf)).iord)
        else:
            total = add(total, ordered_sum(elems[tf:]))
    if total != cert.value:
        raise ValueMismatch(cert.value, total)
    return total


def _reordered_sums(items: Sequence[Ordinal]) -> set[Ordinal]:
    """Values of the ordered sum over every ordering of the multiset.

    Recursive multiset walk (equal elements explored once per position), so
    it stays well clear of n! work on repetitive inputs.
    """
    counts: dict[Ordinal, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    distinct = sorted(counts)
    out: set[Ordinal] = set()

    def walk(remaining: int, acc: Ordinal) -> None:
        if not remaining:
            out.add(acc)
            return
        for x in distinct:
            if counts[x]:
                counts[x] -= 1
                walk(remaining - 1, add(acc, x))
                counts[x] += 1

    walk(len(items), ZERO)
    return out


def enumerate_pwc_sums_finite(
    summands: Sequence[OrdinalLike], max_len: int = 8
) -> ValueSet:
    """All values of ordered sums over permutations of a finite list.

    These are exactly the piecewise-convex mixed sums of the list.  The set
    is finite of size at most n!, and its maximum never exceeds the natural
    sum (which a permutation may or may not attain).
    """
    values = [as_ordinal(a) for a in summands]
    if len(values) > max_len:
        raise ValueError(
            f"{len(values)} summands exceed the permutation bound {max_len}"
        )
    return ValueSet(_reordered_sums(values))


def enumerate_lf_pwc_sums(s: OmegaSequence, max_heavies: int = 8) -> ValueSet:
    """All left-finite piecewise-convex mixed-sum values of a sequence.

    With infinitely many nonzero elements every such value is a reordered
    sum over omega, and only the order of the heavy elements matters: the
    light ones are swallowed by the cofinal w^xi stretch, since w^xi is
    closed under finite sums of smaller ordinals.  So the set is

        { (heavy elements in some order, added left to right) + w^xi }.

    Sequences with finite support fall back to the finite enumeration of
    their nonzero elements.
    """
    if isinstance(s.tail, Zero):
        support = [h for h in s.head if h]
        return enumerate_pwc_sums_finite(support, max_len=max_heavies)
    an = analyze(s)
    heavies = [element_at(s, i) for i in an.heavy]
    if len(heavies) > max_heavies:
        raise ValueError(
            f"{len(heavies)} heavy elements exceed the permutation bound {max_heavies}"
        )
    w = omega_pow(an.xi)
    return ValueSet(add(v, w) for v in _reordered_sums(heavies))


def max_lf_mixed_sum(s: OmegaSequence) -> tuple[Ordinal, Certificate]:
    """The largest left-finite mixed sum of the sequence, with certificate.

    The value is the infinite natural sum; it strictly beats every
    piecewise-convex value whenever the heavy elements' natural sum beats
    each of their ordered arrangements.
    """
    cert = realize_inat_sum(s)
    return cert.value, cert


def absorb_cofinal_power(lights: Sequence[OrdinalLike], xi: OrdinalLike) -> Ordinal:
    """Value of any mixed sum of ordinals < w^xi with a cofinal w^xi piece.

    Whatever sits below or between, a cofinal additively indecomposable
    block flattens the whole thing back to w^xi.  Preconditions: xi > 0 and
    every light strictly below w^xi.
    """
    xi = as_ordinal(xi)
    if not xi:
        raise ValueError("xi must be positive")
    w = omega_pow(xi)
    for x in lights:
        if compare(as_ordinal(x), w) >= 0:
            raise ValueError(f"{render(as_ordinal(x))} is not below w^{render(xi)}")
    return w


def render_certificate(cert: Certificate) -> str:
    """Machine-readable text form: one block per line, then tail, then value."""
    lines = [f"#{i} : {render(length)}" for i, length in cert.head_blocks]
    if cert.tail_from is not None:
        lines.append(f"tail from {cert.tail_from}")
    lines.append(f"value: {render(cert.value)}")
    return "\n".join(lines)
