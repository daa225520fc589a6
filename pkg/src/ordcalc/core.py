"""Exact arithmetic on ordinals below epsilon-0.

Every value is kept in Cantor normal form: a finite sum

    w^e_k * c_k  +  ...  +  w^e_1 * c_1  +  w^e_0 * c_0

with ordinal exponents e_k > ... > e_0 (themselves in normal form) and
positive integer coefficients.  The empty sum is 0.  Normal form is unique,
so structural equality coincides with ordinal equality.

Values are immutable and hashable; every operation is a pure function, so
values may be shared freely across threads.  Construction canonicalizes:
like exponents are merged and zero coefficients dropped, and a configurable
depth limit guards against runaway exponent towers.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Union

OrdinalLike = Union["Ordinal", int]

DEFAULT_DEPTH_LIMIT = 32

_depth_limit = DEFAULT_DEPTH_LIMIT


class DepthLimitExceeded(ValueError):
    """Raised when construction would nest exponents deeper than the limit."""


class InvariantError(AssertionError):
    """An internal cross-check failed: a bug in this library, not bad input."""


def get_depth_limit() -> int:
    return _depth_limit


def set_depth_limit(limit: int) -> None:
    """Set the construction depth guard (0 has depth 0, naturals 1, w has 2)."""
    global _depth_limit
    if limit < 1:
        raise ValueError("depth limit must be at least 1")
    _depth_limit = limit


class Term(NamedTuple):
    exponent: "Ordinal"
    coefficient: int


class Ordinal:
    """An ordinal below epsilon-0, stored as its Cantor normal form.

    ``Ordinal(n)`` builds a natural number; ``Ordinal.from_terms`` builds from
    (exponent, coefficient) pairs in any order, canonicalizing as it goes.
    Comparisons, ``+`` (ordered sum) and ``* n`` are available as operators;
    the full algebra lives in the module-level functions.
    """

    __slots__ = ("_terms", "_depth", "_hash")

    def __init__(self, value: int = 0):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"expected an int, got {value!r}")
        if value < 0:
            raise ValueError("ordinals are nonnegative")
        terms: tuple[Term, ...]
        if value == 0:
            terms = ()
        else:
            terms = (Term(ZERO, value),)
        self._init(terms)

    # -- construction ----------------------------------------------------

    def _init(self, terms: tuple[Term, ...]) -> None:
        depth = 0
        for t in terms:
            d = t.exponent._depth + 1
            if d > depth:
                depth = d
        if depth > _depth_limit:
            raise DepthLimitExceeded(
                f"ordinal nesting depth {depth} exceeds the limit {_depth_limit}"
            )
        self._terms = terms
        self._depth = depth
        if not terms:
            self._hash = hash(0)
        elif len(terms) == 1 and not terms[0].exponent:
            self._hash = hash(terms[0].coefficient)
        else:
            self._hash = hash(terms)

    @staticmethod
    def _raw(terms: tuple[Term, ...]) -> "Ordinal":
        """Trusted constructor: ``terms`` must already be canonical."""
        self = object.__new__(Ordinal)
        self._init(terms)
        return self

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[OrdinalLike, int]]) -> "Ordinal":
        """Build from (exponent, coefficient) pairs, merging and sorting."""
        acc: dict[Ordinal, int] = {}
        for e, c in pairs:
            e = as_ordinal(e)
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient must be an int, got {c!r}")
            if c < 0:
                raise ValueError("coefficients are nonnegative")
            if c:
                acc[e] = acc.get(e, 0) + c
        terms = tuple(Term(e, acc[e]) for e in sorted(acc, reverse=True))
        return cls._raw(terms)

    # -- accessors -------------------------------------------------------

    @property
    def terms(self) -> tuple[Term, ...]:
        return self._terms

    @property
    def depth(self) -> int:
        return self._depth

    # -- dunder sugar ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Ordinal):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            t = self._terms
            if other == 0:
                return not t
            return len(t) == 1 and not t[0].exponent and t[0].coefficient == other
        return NotImplemented

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: OrdinalLike) -> bool:
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return compare(self, other) < 0

    def __le__(self, other: OrdinalLike) -> bool:
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return compare(self, other) <= 0

    def __gt__(self, other: OrdinalLike) -> bool:
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return compare(self, other) > 0

    def __ge__(self, other: OrdinalLike) -> bool:
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return compare(self, other) >= 0

    def __add__(self, other: OrdinalLike) -> "Ordinal":
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return add(self, other)

    def __radd__(self, other: OrdinalLike) -> "Ordinal":
        if not isinstance(other, int):
            return NotImplemented
        return add(other, self)

    def __mul__(self, n: int) -> "Ordinal":
        if not isinstance(n, int):
            return NotImplemented
        return mul_nat(self, n)

    def __int__(self) -> int:
        return to_int(self)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Ordinal({render(self)!r})"


def as_ordinal(x: OrdinalLike) -> Ordinal:
    """Coerce an int to an Ordinal; pass Ordinals through."""
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal(x)
    raise TypeError(f"expected an Ordinal or int, got {x!r}")


# -- comparison ----------------------------------------------------------


def compare(a: OrdinalLike, b: OrdinalLike) -> int:
    """Total order on ordinals: -1, 0 or +1.

    Lexicographic on the term lists: the first differing (exponent,
    coefficient) pair decides, and when one list is a prefix of the other
    the longer value is larger.
    """
    a = as_ordinal(a)
    b = as_ordinal(b)
    for (ea, ca), (eb, cb) in zip(a._terms, b._terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a._terms), len(b._terms)
    if la == lb:
        return 0
    return -1 if la < lb else 1


# -- sums ----------------------------------------------------------------


def add(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Ordered ordinal sum a + b.

    Terms of ``a`` with exponent below the leading exponent of ``b`` are
    absorbed: 2 + w == w.
    """
    a = as_ordinal(a)
    b = as_ordinal(b)
    if not b._terms:
        return a
    if not a._terms:
        return b
    e = b._terms[0].exponent
    ts = a._terms
    i = 0
    while i < len(ts) and compare(ts[i].exponent, e) > 0:
        i += 1
    if i < len(ts) and ts[i].exponent == e:
        merged = Term(e, ts[i].coefficient + b._terms[0].coefficient)
        return Ordinal._raw(ts[:i] + (merged,) + b._terms[1:])
    return Ordinal._raw(ts[:i] + b._terms)


def nat_sum(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    """Natural (Hessenberg) sum: coefficient-wise addition of normal forms.

    Commutative, associative, cancellative, and strictly monotone in both
    arguments; always >= the ordered sum.
    """
    a = as_ordinal(a)
    b = as_ordinal(b)
    if not a._terms:
        return b
    if not b._terms:
        return a
    acc: dict[Ordinal, int] = {t.exponent: t.coefficient for t in a._terms}
    for t in b._terms:
        acc[t.exponent] = acc.get(t.exponent, 0) + t.coefficient
    terms = tuple(Term(e, acc[e]) for e in sorted(acc, reverse=True))
    return Ordinal._raw(terms)


def nat_sum_many(items: Iterable[OrdinalLike]) -> Ordinal:
    """Natural sum of finitely many ordinals; the empty sum is 0."""
    acc: dict[Ordinal, int] = {}
    for x in items:
        for t in as_ordinal(x)._terms:
            acc[t.exponent] = acc.get(t.exponent, 0) + t.coefficient
    if not acc:
        return ZERO
    terms = tuple(Term(e, acc[e]) for e in sorted(acc, reverse=True))
    return Ordinal._raw(terms)


def ordered_sum(items: Iterable[OrdinalLike]) -> Ordinal:
    """Left-to-right fold of the ordered sum; the empty sum is 0."""
    acc = ZERO
    for x in items:
        acc = add(acc, x)
    return acc


def mul_nat(a: OrdinalLike, n: int) -> Ordinal:
    """a repeated n times under the ordered sum: a*2 == a + a."""
    a = as_ordinal(a)
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("multiplier must be an int")
    if n < 0:
        raise ValueError("multiplier is nonnegative")
    if n == 0 or not a._terms:
        return ZERO
    if n == 1:
        return a
    # the middle copies absorb each other's small tails, so only the leading
    # coefficient scales
    lead = a._terms[0]
    return Ordinal._raw((Term(lead.exponent, lead.coefficient * n),) + a._terms[1:])


# -- normal-form surgery ---------------------------------------------------


def truncate(a: OrdinalLike, xi: OrdinalLike) -> Ordinal:
    """Keep exactly the terms of ``a`` with exponent >= xi; 0 when a < w^xi."""
    a = as_ordinal(a)
    xi = as_ordinal(xi)
    keep = tuple(t for t in a._terms if compare(t.exponent, xi) >= 0)
    if len(keep) == len(a._terms):
        return a
    return Ordinal._raw(keep)


def omega_pow(xi: OrdinalLike) -> Ordinal:
    """The additively indecomposable ordinal w^xi (w^0 == 1)."""
    xi = as_ordinal(xi)
    return Ordinal._raw((Term(xi, 1),))


def successor(a: OrdinalLike) -> Ordinal:
    return add(a, ONE)


def is_limit(a: OrdinalLike) -> bool:
    """True iff a is a nonzero limit ordinal (no trailing finite part)."""
    a = as_ordinal(a)
    t = a._terms
    return bool(t) and bool(t[-1].exponent)


def degree(a: OrdinalLike) -> Ordinal:
    """Leading exponent of a.  The one domain error: degree(0) is undefined."""
    a = as_ordinal(a)
    if not a._terms:
        raise ValueError("degree of 0 is undefined")
    return a._terms[0].exponent


def is_finite(a: OrdinalLike) -> bool:
    a = as_ordinal(a)
    t = a._terms
    return not t or (len(t) == 1 and not t[0].exponent)


def to_int(a: OrdinalLike) -> int:
    a = as_ordinal(a)
    if not is_finite(a):
        raise ValueError(f"{render(a)} is not a natural number")
    return a._terms[0].coefficient if a._terms else 0


# -- rendering -------------------------------------------------------------

# Canonical text form: terms joined by " + ", each "w^(E)*C" with the
# contractions  w^1 -> w,  w^0*C -> C,  *1 omitted,  parentheses dropped for
# a single natural exponent.  Rendering then parsing is the identity.


def render(a: OrdinalLike) -> str:
    a = as_ordinal(a)
    if not a._terms:
        return "0"
    parts = []
    for e, c in a._terms:
        if not e:
            parts.append(str(c))
            continue
        if e == ONE:
            base = "w"
        elif is_finite(e):
            base = f"w^{to_int(e)}"
        else:
            base = f"w^({render(e)})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)


def render_unicode(a: OrdinalLike) -> str:
    """Display-only variant using the omega glyph; never fed back to parsers."""
    return render(a).replace("w", "ω")


ZERO = Ordinal(0)
ONE = Ordinal(1)
OMEGA = Ordinal._raw((Term(ONE, 1),))
