"""Core exact types: rings, monomials, roots of unity, binomials, term orders.

All arithmetic is exact.  Monomial exponents are kept inside the signed
64-bit range and every operation that could leave it raises instead of
wrapping.  Coefficients are roots of unity stored as fractions q with
0 <= q < 1, meaning e^(2*pi*i*q); the group law is addition mod 1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ExponentOverflowError

MAX_EXPONENT = 2**63 - 1

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_ROOT_NAME_RE = re.compile(r"ww\d+\Z")


@dataclass(frozen=True, slots=True)
class RingSpec:
    """A polynomial ring given by its ordered variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.names, tuple):
            object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise DomainError("ring variable names must be unique")
        for name in self.names:
            if not _IDENT_RE.match(name):
                raise DomainError(f"invalid variable name: {name!r}")
            if _ROOT_NAME_RE.match(name):
                raise DomainError(f"variable name {name!r} is reserved for roots of unity")

    @property
    def n(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise DomainError(f"unknown variable: {name!r}") from None

    def one(self) -> Monomial:
        return Monomial((0,) * self.n)

    def variable(self, i: int, power: int = 1) -> Monomial:
        exps = [0] * self.n
        exps[i] = power
        return Monomial(tuple(exps))


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial as a tuple of nonnegative exponents."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        for e in self.exponents:
            if e < 0:
                raise DomainError("monomial exponents must be nonnegative")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds the 64-bit range")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def mul(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def pow(self, k: int) -> Monomial:
        if k < 0:
            raise DomainError("monomial powers must be nonnegative")
        return Monomial(tuple(e * k for e in self.exponents))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def divide(self, other: Monomial) -> Monomial:
        """Return self / other; other must divide self."""
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def coprime(self, other: Monomial) -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exponents, other.exponents))

    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def restrict(self, indices) -> tuple[int, ...]:
        """Exponents at the given indices, in the given order."""
        return tuple(self.exponents[i] for i in indices)

    def supported_on(self, indices) -> bool:
        allowed = set(indices)
        return all(e == 0 or i in allowed for i, e in enumerate(self.exponents))

    __mul__ = mul


@dataclass(frozen=True, slots=True, order=True)
class RootOfUnity:
    """The root of unity e^(2*pi*i*q) for a fraction q in [0, 1)."""

    q: Fraction

    def __post_init__(self):
        if not isinstance(self.q, Fraction):
            object.__setattr__(self, "q", Fraction(self.q))
        if not (0 <= self.q < 1):
            raise DomainError("root-of-unity fraction must lie in [0, 1)")

    @classmethod
    def of(cls, num: int, den: int = 1) -> RootOfUnity:
        return cls(Fraction(num, den) % 1)

    @classmethod
    def from_fraction(cls, f: Fraction) -> RootOfUnity:
        return cls(f % 1)

    @property
    def order(self) -> int:
        """The multiplicative order: the denominator of q in lowest terms."""
        return self.q.denominator

    def is_one(self) -> bool:
        return self.q == 0

    def mul(self, other: RootOfUnity) -> RootOfUnity:
        return RootOfUnity((self.q + other.q) % 1)

    def inverse(self) -> RootOfUnity:
        return RootOfUnity((-self.q) % 1)

    def pow(self, k: int) -> RootOfUnity:
        return RootOfUnity((self.q * k) % 1)

    def negate(self) -> RootOfUnity:
        """Multiply by -1."""
        return RootOfUnity((self.q + Fraction(1, 2)) % 1)

    def nth_roots(self, d: int) -> list[RootOfUnity]:
        """All d-th roots of this root of unity, sorted by their fraction."""
        if d <= 0:
            raise DomainError("root degree must be positive")
        return [RootOfUnity((self.q + j) / d) for j in range(d)]

    __mul__ = mul


ONE = RootOfUnity(Fraction(0))
MINUS_ONE = RootOfUnity(Fraction(1, 2))


@dataclass(frozen=True, slots=True)
class Binomial:
    """A monic binomial lead - coeff * tail_monomial, or a bare monomial.

    Instances stored in ideals and bases are normalized: the lead strictly
    exceeds the tail monomial under the active term order and the lead
    coefficient is one.
    """

    lead: Monomial
    tail: tuple[Monomial, RootOfUnity] | None = None

    def is_monomial(self) -> bool:
        return self.tail is None

    def is_unital(self) -> bool:
        return self.tail is None or self.tail[1].is_one()

    def monomials(self):
        if self.tail is None:
            return (self.lead,)
        return (self.lead, self.tail[0])

    def coefficient_order(self) -> int:
        return 1 if self.tail is None else self.tail[1].order

    def supported_on(self, indices) -> bool:
        return all(m.supported_on(indices) for m in self.monomials())


@dataclass(frozen=True, slots=True)
class TermOrder:
    """A monomial well-order: degrevlex, lex, or a block elimination order.

    Variable priority is declaration order.  A block order compares the
    restriction to the first block (degrevlex) before the rest.
    """

    kind: str = "degrevlex"
    first_block: frozenset[int] = frozenset()

    @classmethod
    def degrevlex(cls) -> TermOrder:
        return cls("degrevlex")

    @classmethod
    def lex(cls) -> TermOrder:
        return cls("lex")

    @classmethod
    def elimination(cls, block) -> TermOrder:
        return cls("elim", frozenset(block))

    def key(self, exponents: tuple[int, ...]):
        if self.kind == "degrevlex":
            return _grevlex_key(exponents)
        if self.kind == "lex":
            return exponents
        first, rest = _block_split(tuple(sorted(self.first_block)), len(exponents))
        return (
            _grevlex_key(tuple(exponents[i] for i in first)),
            _grevlex_key(tuple(exponents[i] for i in rest)),
        )

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a.exponents), self.key(b.exponents)
        return (ka > kb) - (ka < kb)

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a.exponents) > self.key(b.exponents)


def _grevlex_key(exponents: tuple[int, ...]):
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


@lru_cache(maxsize=None)
def _block_split(block: tuple[int, ...], n: int):
    inside = set(block)
    first = tuple(i for i in range(n) if i in inside)
    rest = tuple(i for i in range(n) if i not in inside)
    return first, rest


DEGREVLEX = TermOrder.degrevlex()


@dataclass(frozen=True, slots=True)
class CellStructure:
    """A partition of variables: J holds the regular ones, the rest are nilpotent."""

    n: int
    J: frozenset[int]

    def __post_init__(self):
        if not all(0 <= i < self.n for i in self.J):
            raise DomainError("cell indices out of range")

    @property
    def regular(self) -> tuple[int, ...]:
        return tuple(sorted(self.J))

    @property
    def nilpotent(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if i not in self.J)


@dataclass(eq=False)
class BinomialIdeal:
    """An ideal generated by binomials, with a transparent basis cache."""

    ring: RingSpec
    generators: tuple[Binomial, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.generators, tuple):
            self.generators = tuple(self.generators)
        for g in self.generators:
            for m in g.monomials():
                if len(m.exponents) != self.ring.n:
                    raise DomainError("generator does not live in the ring")

    @classmethod
    def zero(cls, ring: RingSpec) -> BinomialIdeal:
        return cls(ring, ())

    def is_unital(self) -> bool:
        return all(g.is_unital() for g in self.generators)


def format_monomial(ring: RingSpec, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.names, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_root(r: RootOfUnity) -> str:
    """Symbolic form of a root of unity: 1, -1, or a power of ww_d."""
    if r.is_one():
        return "1"
    if r == MINUS_ONE:
        return "-1"
    d = r.order
    k = r.q.numerator * (d // r.q.denominator)
    return f"ww{d}" if k == 1 else f"ww{d}^{k}"


def format_binomial(ring: RingSpec, b: Binomial) -> str:
    head = format_monomial(ring, b.lead)
    if b.tail is None:
        return head
    mono, coeff = b.tail
    if coeff.is_one():
        return f"{head} - {format_monomial(ring, mono)}"
    if coeff == MINUS_ONE:
        return f"{head} + {format_monomial(ring, mono)}"
    root = format_root(coeff)
    if mono.is_one():
        return f"{head} - {root}"
    return f"{head} - {root}*{format_monomial(ring, mono)}"
