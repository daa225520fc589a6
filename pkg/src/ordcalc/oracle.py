"""Slow, independent recomputations that cross-check the main engine.

Everything here rederives a result from a more primitive definition: the
successor/sup recursions for sums over a small downward-sampled universe,
raw permutation and interleaving enumeration, and honest partial-sum scans.
None of it looks at the closed-form code paths it validates.
"""

from __future__ import annotations

import bisect
import math
import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

from .core import (
    Ordinal,
    OrdinalLike,
    Term,
    ZERO,
    add,
    as_ordinal,
    compare,
    nat_sum,
    nat_sum_many,
    omega_pow,
    ordered_sum,
    render,
    to_int,
)
from .mixed import ValueSet, enumerate_lf_pwc_sums, enumerate_pwc_sums_finite
from .sampling import (
    random_light_heavy_case,
    random_natural_list,
    random_ordinal_list,
    random_sequence_with_tail,
)
from .sequences import OmegaSequence, analyze, element_at, partial_nat_sum


class UniverseExhausted(Exception):
    """A sup escaped the small universe; the check cannot proceed honestly."""


def _succ(a: Ordinal) -> Ordinal:
    # successor by direct term surgery, independent of the addition code
    t = a.terms
    if t and not t[-1].exponent:
        return Ordinal._raw(t[:-1] + (Term(t[-1].exponent, t[-1].coefficient + 1),))
    return Ordinal._raw(t + (Term(ZERO, 1),))


class SmallUniverse:
    """Every ordinal below w^degree with natural exponents and small coefficients.

    ``pair_coeff`` bounds the coefficients of the pairs meant to be queried;
    members carry coefficients up to 2*pair_coeff + 1 so that the values of
    queried pairs, and the successor candidates leading to them, stay
    representable.  Members are totally ordered, and the recursions' sups
    over finite candidate sets are resolved against the member list, which
    stands in for the unbounded sup of the definitions.  When no member fits,
    the computation fails loudly rather than guess.

    Memo tables are built per universe on first use; build separate
    universes for independent concurrent sessions.
    """

    def __init__(self, degree: int = 3, pair_coeff: int = 3):
        if degree < 1 or pair_coeff < 1:
            raise ValueError("degree and pair_coeff must be positive")
        self.degree = degree
        self.pair_coeff = pair_coeff
        self.coeff_cap = 2 * pair_coeff + 1
        self.bound = omega_pow(degree)
        # mixed-radix codes order-isomorphic to the members; one spare digit
        # value keeps successor candidates representable
        self._radix = self.coeff_cap + 2
        members = []
        for digits in product(range(self.coeff_cap + 1), repeat=degree):
            members.append(
                Ordinal.from_terms(
                    (Ordinal(degree - 1 - k), c) for k, c in enumerate(digits)
                )
            )
        self.members: tuple[Ordinal, ...] = tuple(members)
        self._codes = [self._encode(m) for m in members]
        self._rank = {m: r for r, m in enumerate(members)}
        self._inf = self._radix**degree
        member_set = set(self._codes)
        least = [self._inf] * self._inf
        nxt = self._inf
        for v in range(self._inf - 1, -1, -1):
            if v in member_set:
                nxt = v
            least[v] = nxt
        self._least_geq = least
        self._nat_grid: list[list[int]] | None = None
        # ordered-sum rows, filled lazily: rank(x) -> (values, running max)
        self._add_rows: dict[int, tuple[list[Ordinal], list[Ordinal]]] = {}

    def _encode(self, a: Ordinal) -> int:
        code = 0
        for e, c in a.terms:
            k = to_int(e)
            if k >= self.degree or c > self.coeff_cap:
                raise ValueError(f"{render(a)} is not a member of this universe")
            code += c * self._radix**k
        return code

    def _decode(self, code: int) -> Ordinal:
        pairs = []
        for k in range(self.degree):
            c = code // self._radix**k % self._radix
            if c:
                pairs.append((Ordinal(k), c))
        return Ordinal.from_terms(pairs)

    def rank_of(self, a: OrdinalLike) -> int:
        a = as_ordinal(a)
        try:
            return self._rank[a]
        except KeyError:
            raise ValueError(f"{render(a)} is not a member of this universe") from None

    def tested_pairs(self) -> Iterable[tuple[Ordinal, Ordinal]]:
        """All pairs of members whose coefficients stay within pair_coeff."""
        small = [
            m for m in self.members if all(c <= self.pair_coeff for _, c in m.terms)
        ]
        for a in small:
            for b in small:
                yield a, b

    # -- natural sum: two-sided successor/sup recursion ---------------------

    def _ensure_nat_grid(self) -> list[list[int]]:
        # f(x, y) = least member dominating every candidate S(f(x, y')) for
        # members y' < y and S(f(x', y)) for members x' < x, with f(0,0) = 0.
        # Members are totally ordered, so a running maximum along each
        # predecessor chain enumerates the candidate families exactly; no
        # monotonicity of f itself is assumed.  Cells whose sup escapes the
        # universe carry an infinity marker.
        if self._nat_grid is not None:
            return self._nat_grid
        n = len(self.members)
        inf = self._inf
        least = self._least_geq
        f = [[0] * n for _ in range(n)]
        h = [-1] * n
        for i in range(n):
            row = f[i]
            g = -1
            for j in range(n):
                if i == 0 and j == 0:
                    continue
                m = -1
                if j:
                    c = row[j - 1]
                    c = inf if c >= inf else c + 1
                    if c > g:
                        g = c
                    m = g
                if i and h[j] > m:
                    m = h[j]
                row[j] = least[m] if m < inf else inf
            for j in range(n):
                c = row[j]
                c = inf if c >= inf else c + 1
                if c > h[j]:
                    h[j] = c
        self._nat_grid = f
        return f

    # -- ordered sum: right-argument recursion with honest values ----------

    def _add_cell(self, i: int, j: int) -> Ordinal:
        # f(x, 0) = x; at a successor member y the single maximal candidate
        # S(f(x, pred y)) is the value; at a limit member y the family
        # f(x, y') is capped by no candidate, so take the least member
        # strictly above everything sampled so far.  Values are honest
        # ordinals (not necessarily members); only limit sups consult the
        # member list.
        if i not in self._add_rows:
            x = self.members[i]
            self._add_rows[i] = ([x], [x])
        values, running = self._add_rows[i]
        while len(values) <= j:
            k = len(values)
            if self._codes[k] % self._radix:
                # immediate predecessor member is the ordinal predecessor
                v = _succ(values[k - 1])
            else:
                top = running[k - 1]
                pos = bisect.bisect_right(self.members, top)
                if pos == len(self.members):
                    raise UniverseExhausted(
                        f"sup above {render(top)} escapes the universe "
                        f"below {render(self.bound)}"
                    )
                v = self.members[pos]
            values.append(v)
            running.append(v if compare(v, running[k - 1]) > 0 else running[k - 1])
        return values[j]


def nat_sum_recursive(a: OrdinalLike, b: OrdinalLike, u: SmallUniverse) -> Ordinal:
    """Natural sum by its successor/sup recursion, evaluated inside ``u``.

    Base case 0 # 0 = 0; otherwise the sup of S(a # b') over b' < b and
    S(a' # b) over a' < a, with predecessors and the sup both taken over
    the universe members.  Must agree with the normal-form natural sum.
    """
    grid = u._ensure_nat_grid()
    code = grid[u.rank_of(a)][u.rank_of(b)]
    if code >= u._inf:
        raise UniverseExhausted(
            f"sup of ({render(as_ordinal(a))}, {render(as_ordinal(b))}) "
            f"escapes the universe below {render(u.bound)}"
        )
    return u._decode(code)


def add_recursive(a: OrdinalLike, b: OrdinalLike, u: SmallUniverse) -> Ordinal:
    """Ordered sum by recursion on the right argument, inside ``u``."""
    return u._add_cell(u.rank_of(a), u.rank_of(b))


def check_universe_equivalence(u: SmallUniverse) -> tuple[int, list[str]]:
    """Compare both recursions against the normal-form operations.

    Runs over every tested pair of the universe; returns the pair count and
    any mismatch descriptions (ideally none).
    """
    mismatches = []
    count = 0
    for a, b in u.tested_pairs():
        count += 1
        got = nat_sum_recursive(a, b, u)
        want = nat_sum(a, b)
        if got != want:
            mismatches.append(
                f"nat_sum({render(a)}, {render(b)}): recursion {render(got)} "
                f"!= normal form {render(want)}"
            )
        got = add_recursive(a, b, u)
        want = add(a, b)
        if got != want:
            mismatches.append(
                f"add({render(a)}, {render(b)}): recursion {render(got)} "
                f"!= normal form {render(want)}"
            )
    return count, mismatches


def brute_force_perm_sums(items: Sequence[OrdinalLike], max_len: int = 7) -> ValueSet:
    """Ordered sums over all n! permutations, the blunt way."""
    values = tuple(as_ordinal(x) for x in items)
    if len(values) > max_len:
        raise ValueError(f"{len(values)} summands exceed the brute-force bound {max_len}")
    return ValueSet(ordered_sum(p) for p in set(permutations(values)))


def brute_force_interleavings_naturals(ns: Sequence[int]) -> ValueSet:
    """Mixed sums of finite chains by enumerating every interleaving.

    Each interleaving of chains of sizes n_i is a labelled arrangement of
    sum(n_i) positions; its order type is that total, whatever the labels,
    which is the finite case of natural-sum maximality.  Inputs are capped
    (each <= 6, total <= 12, and at most a million arrangements).
    """
    counts = list(ns)
    for n in counts:
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"summands must be naturals, got {n!r}")
        if n > 6:
            raise ValueError(f"summand {n} exceeds the bound 6")
    total = sum(counts)
    if total > 12:
        raise ValueError(f"total {total} exceeds the bound 12")
    arrangements = math.factorial(total)
    for n in counts:
        arrangements //= math.factorial(n)
    if arrangements > 1_000_000:
        raise ValueError(f"{arrangements} interleavings exceed the bound")

    values: set[Ordinal] = set()

    def walk(remaining: list[int], placed: int) -> None:
        if placed == total:
            values.add(Ordinal(total))
            return
        for label in range(len(remaining)):
            if remaining[label]:
                remaining[label] -= 1
                walk(remaining, placed + 1)
                remaining[label] += 1

    walk(counts, 0)
    return ValueSet(values)


@dataclass(frozen=True)
class GrowthReport:
    """Outcome of a partial-sum scan; failures carry the witness index."""

    ok: bool
    checked: int
    failures: tuple[str, ...]


def partial_sum_growth_check(s: OmegaSequence, n_max: int) -> GrowthReport:
    """Scan n in [m, n_max) verifying the growth picture behind the closed forms.

    The ordered partial sums of the tail must stay strictly below w^xi and
    increase exactly over the nonzero elements, and every natural partial
    sum must stay strictly below the total.  Report-only; requires xi > 0.
    """
    an = analyze(s)
    if not an.xi:
        raise ValueError("growth check needs a sequence with xi > 0")
    w = omega_pow(an.xi)
    failures = []
    t = ZERO
    part = partial_nat_sum(s, an.m)
    checked = 0
    for n in range(an.m, n_max):
        checked += 1
        if compare(t, w) >= 0:
            failures.append(f"n={n}: tail partial {render(t)} reached w^xi")
        if compare(part, an.inat) >= 0:
            failures.append(f"n={n}: natural partial {render(part)} reached the total")
        el = element_at(s, n)
        t2 = add(t, el)
        if compare(t2, t) < 0 or (el and compare(t2, t) <= 0):
            failures.append(f"n={n}: tail partials failed to increase")
        t = t2
        part = nat_sum(part, el)
    return GrowthReport(not failures, checked, tuple(failures))


# -- the battery behind `ord oracle` ----------------------------------------


def check_light_absorption(rng: random.Random, cases: int = 25) -> list[str]:
    """Interleave lights below w^xi among heavy elements before a cofinal w^xi.

    However the lights are threaded through, the total must equal the
    heavy-only arrangement followed by w^xi; this is the collapse that lets
    the reordered-sum enumeration ignore everything below w^xi.
    """
    failures = []
    for _ in range(cases):
        heavies, lights, xi = random_light_heavy_case(rng)
        w = omega_pow(xi)
        expected = add(ordered_sum(heavies), w)
        slots = len(heavies) + len(lights)
        for positions in permutations(range(slots), len(lights)):
            arrangement: list[Ordinal | None] = [None] * slots
            for p, light in zip(positions, lights):
                arrangement[p] = light
            it = iter(heavies)
            filled = [x if x is not None else next(it) for x in arrangement]
            got = add(ordered_sum(filled), w)
            if got != expected:
                failures.append(
                    f"lights {[render(x) for x in lights]} moved the value "
                    f"to {render(got)}, expected {render(expected)}"
                )
                break
    return failures


def run_oracle_checks(
    pair_coeff: int = 3, seed: int = 20260810
) -> list[tuple[str, bool, str]]:
    """Run the whole cross-validation battery; returns (name, ok, detail) rows."""
    rng = random.Random(seed)
    results = []

    u = SmallUniverse(3, pair_coeff)
    count, mismatches = check_universe_equivalence(u)
    results.append(
        (
            f"sum recursions match normal-form sums on {count} pairs below w^3",
            not mismatches,
            mismatches[0] if mismatches else "",
        )
    )

    bad = ""
    for _ in range(200):
        items = random_ordinal_list(rng, max_len=6)
        if brute_force_perm_sums(items) != enumerate_pwc_sums_finite(items):
            bad = f"enumerations differ on {[render(x) for x in items]}"
            break
    results.append(("permutation-sum enumerations agree on 200 random lists", not bad, bad))

    bad = ""
    for _ in range(30):
        ns = random_natural_list(rng)
        got = brute_force_interleavings_naturals(ns)
        want = ValueSet([nat_sum_many(ns)])
        if got != want:
            bad = f"interleavings of {ns} gave {got}"
            break
    results.append(
        ("interleavings of naturals collapse to the arithmetic sum", not bad, bad)
    )

    bad = ""
    for _ in range(50):
        s = random_sequence_with_tail(rng)
        report = partial_sum_growth_check(s, 40)
        if not report.ok:
            bad = report.failures[0]
            break
    results.append(
        ("partial sums stay below w^xi on 50 random sequences", not bad, bad)
    )

    failures = check_light_absorption(rng, 25)
    results.append(
        (
            "lights are absorbed by a cofinal w^xi block (25 cases)",
            not failures,
            failures[0] if failures else "",
        )
    )

    bad = ""
    for _ in range(50):
        s = random_sequence_with_tail(rng)
        an = analyze(s)
        for v in enumerate_lf_pwc_sums(s):
            if compare(v, an.inat) > 0:
                bad = (
                    f"reordered value {render(v)} exceeds the natural sum "
                    f"{render(an.inat)}"
                )
                break
        if bad:
            break
    results.append(
        ("reordered-sum values never exceed the infinite natural sum", not bad, bad)
    )
    return results
