"""Monomials as exponent vectors and monomial ideals as antichains of generators.

A monomial x^a in n variables is stored as a plain tuple of n non-negative
integers.  Tuples keep everything hashable and comparable, which the lattice
and homology layers rely on heavily.  All arithmetic here is exact integer
arithmetic; nothing in this package ever touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .errors import DimensionMismatchError, DomainError, IdealFormatError

Exponents = tuple  # tuple[int, ...], one entry per ambient variable


def _check_same_ambient(a: Exponents, b: Exponents) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"exponent vectors of length {len(a)} and {len(b)} do not share an ambient ring"
        )


def lcm(a: Exponents, b: Exponents) -> Exponents:
    """Componentwise max of two exponent vectors."""
    _check_same_ambient(a, b)
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd(a: Exponents, b: Exponents) -> Exponents:
    """Componentwise min of two exponent vectors."""
    _check_same_ambient(a, b)
    return tuple(x if x <= y else y for x, y in zip(a, b))


def divides(a: Exponents, b: Exponents) -> bool:
    """True when x^a divides x^b, i.e. a <= b componentwise."""
    _check_same_ambient(a, b)
    return all(x <= y for x, y in zip(a, b))


def strictly_divides(a: Exponents, b: Exponents) -> bool:
    return a != b and divides(a, b)


def support(a: Exponents) -> frozenset:
    """Indices (0-based) of the variables that occur in x^a."""
    return frozenset(i for i, x in enumerate(a) if x > 0)


def degree(a: Exponents) -> int:
    """Total degree: the sum of the exponents."""
    return sum(a)


def multiply(a: Exponents, b: Exponents) -> Exponents:
    _check_same_ambient(a, b)
    return tuple(x + y for x, y in zip(a, b))


def quotient(a: Exponents, b: Exponents) -> Exponents:
    """Exponent vector of x^a / gcd(x^a, x^b)."""
    _check_same_ambient(a, b)
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def is_coprime(a: Exponents, b: Exponents) -> bool:
    _check_same_ambient(a, b)
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def is_squarefree(a: Exponents) -> bool:
    return all(x <= 1 for x in a)


def one(n: int) -> Exponents:
    """The monomial 1 in n variables."""
    return (0,) * n


def variable(n: int, index: int) -> Exponents:
    """The variable x_{index+1} as an exponent vector (0-based index)."""
    return tuple(1 if i == index else 0 for i in range(n))


def monomials_of_degree(n: int, d: int):
    """All exponent vectors in n variables of total degree d."""
    if n == 0:
        if d == 0:
            yield ()
        return
    # choose positions of the d "stars" among n variables
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


# --- monomial string grammar: x<idx> optionally ^<exp>, factors joined by * ---

_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Exponents:
    """Parse a monomial string like ``x1*x2^2`` into an exponent vector.

    Variables are 1-indexed; ``1`` denotes the monomial 1.  Raises
    IdealFormatError on malformed factors, indices outside 1..n, or
    exponents below 1.
    """
    text = text.strip()
    if text == "1":
        return one(n)
    exps = [0] * n
    pos = 0
    for factor in text.split("*"):
        stripped = factor.strip()
        m = _FACTOR_RE.match(stripped)
        if m is None:
            raise IdealFormatError(
                f"malformed monomial factor {stripped!r} in {text!r}", position=pos
            )
        idx = int(m.group(1))
        if not 1 <= idx <= n:
            raise IdealFormatError(
                f"variable index {idx} outside 1..{n} in {text!r}", position=pos
            )
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp < 1:
            raise IdealFormatError(
                f"exponent {exp} below 1 in {text!r}", position=pos
            )
        exps[idx - 1] += exp
        pos += len(factor) + 1
    return tuple(exps)


def monomial_str(a: Exponents) -> str:
    """Render an exponent vector in the x<idx>^<exp> grammar."""
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def minimal_elements(monomials) -> tuple:
    """Divisibility-minimal elements of a set of exponent vectors.

    The result is duplicate-free, sorted lexicographically, and is an
    antichain under componentwise <=.
    """
    distinct = sorted(set(monomials), key=lambda a: (degree(a), a))
    kept: list = []
    for cand in distinct:
        # only earlier (lower or equal degree) elements can divide cand
        if not any(divides(k, cand) for k in kept):
            kept.append(cand)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored by its unique minimal generating set.

    ``gens`` is always an antichain under divisibility, sorted
    lexicographically for deterministic hashing and output.  The zero ideal
    has no generators; the unit ideal is rejected.
    """

    n: int
    gens: tuple = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("ambient variable count must be positive")
        gens = tuple(tuple(g) for g in self.gens)
        for g in gens:
            if len(g) != self.n:
                raise DimensionMismatchError(
                    f"generator {g} does not live in {self.n} variables"
                )
            if any(e < 0 for e in g):
                raise DomainError(f"negative exponent in generator {g}")
            if all(e == 0 for e in g):
                raise DomainError("unit ideal: 1 is not allowed as a generator")
        reduced = minimal_elements(gens)
        if set(reduced) != set(gens):
            raise DomainError(
                "generators are not an antichain; use MonomialIdeal.from_monomials"
            )
        object.__setattr__(self, "gens", reduced)

    @classmethod
    def from_monomials(cls, n: int, monomials) -> "MonomialIdeal":
        """Build the ideal generated by arbitrary monomials, minimalizing."""
        mons = [tuple(m) for m in monomials]
        for m in mons:
            if all(e == 0 for e in m):
                raise DomainError("unit ideal: 1 is not allowed as a generator")
        return cls(n, minimal_elements(mons))

    @classmethod
    def from_strings(cls, n: int, strings) -> "MonomialIdeal":
        return cls.from_monomials(n, (parse_monomial(s, n) for s in strings))

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"

    def contains(self, m: Exponents) -> bool:
        """Membership test: some generator divides m."""
        return any(divides(g, m) for g in self.gens)

    def gen_degrees(self) -> tuple:
        return tuple(sorted({degree(g) for g in self.gens}))

    def structural_flags(self) -> dict:
        """Square-freeness, presence of a variable, and the degree range."""
        if self.is_zero:
            raise DomainError("flags are undefined for the zero ideal")
        degs = [degree(g) for g in self.gens]
        return {
            "is_squarefree": all(is_squarefree(g) for g in self.gens),
            "contains_variable": min(degs) == 1,
            "min_degree": min(degs),
            "max_degree": max(degs),
        }

    # -- ideal arithmetic ---------------------------------------------------

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.n != other.n:
            raise DimensionMismatchError("ideals live in different rings")
        if self.is_zero or other.is_zero:
            return MonomialIdeal(self.n)
        prods = {multiply(a, b) for a in self.gens for b in other.gens}
        return MonomialIdeal(self.n, minimal_elements(prods))

    def power(self, s: int) -> "MonomialIdeal":
        """Minimal generators of the s-th power, s >= 1.

        Computed by iterated products with minimalization after each step so
        that intermediate generator sets stay small.
        """
        if s < 1:
            raise DomainError("power exponent must be >= 1 (unit ideal excluded)")
        if self.is_zero:
            return self
        result = self
        for _ in range(s - 1):
            result = result.product(self)
        return result

    def componentwise_piece(self, j: int) -> "MonomialIdeal":
        """The ideal generated by all monomials of degree j that lie in I."""
        if j < 0:
            raise DomainError("degree must be non-negative")
        pieces = set()
        for g in self.gens:
            d = degree(g)
            if d > j:
                continue
            for extra in monomials_of_degree(self.n, j - d):
                pieces.add(multiply(g, extra))
        # all generators share degree j, so the set is already an antichain
        return MonomialIdeal(self.n, tuple(sorted(pieces)))

    def colon(self, u: Exponents) -> "MonomialIdeal":
        """The colon ideal I : u for a monomial u.

        Equals the ideal generated by g / gcd(g, u) over the generators g.
        Raises DomainError when u lies in I, since the result would be the
        unit ideal, which this package does not represent.
        """
        u = tuple(u)
        if len(u) != self.n:
            raise DimensionMismatchError("colon monomial in wrong ambient ring")
        if self.is_zero:
            return self
        quotients = {quotient(g, u) for g in self.gens}
        if any(all(e == 0 for e in q) for q in quotients):
            raise DomainError(f"colon by {monomial_str(u)} is the unit ideal")
        return MonomialIdeal(self.n, minimal_elements(quotients))

    def relabel(self, perm) -> "MonomialIdeal":
        """Apply a variable permutation: position i receives old entry perm[i]."""
        return MonomialIdeal(
            self.n, tuple(sorted(tuple(g[perm[i]] for i in range(self.n)) for g in self.gens))
        )
