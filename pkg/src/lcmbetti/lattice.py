"""Lcm lattices of monomial ideals, open intervals, and order complexes.

The lattice of an ideal consists of 1 together with the lcms of all non-empty
subsets of the minimal generators, ordered by divisibility.  Closure is
computed with a worklist of single-atom joins instead of subset enumeration;
a degree-ordered variant feeds scans that want to stop early.
"""

from __future__ import annotations

import heapq

from .errors import DomainError, ResourceCapError
from .monomials import MonomialIdeal, degree, divides, lcm, monomial_str, one

DEFAULT_LATTICE_CAP = 1 << 20


def lattice_elements_by_degree(ideal: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP):
    """Yield the non-bottom lattice elements in non-decreasing total degree.

    Every element is the join of the atoms below it and is reachable by
    adding one atom at a time without ever exceeding its own degree, so by
    the time an element is yielded all of its strict divisors in the lattice
    have already been yielded.
    """
    if ideal.is_zero:
        raise DomainError("the zero ideal has no lcm lattice")
    atoms = ideal.gens
    pushed = set()
    heap = []
    for a in atoms:
        if a not in pushed:
            pushed.add(a)
            heapq.heappush(heap, (degree(a), a))
    while heap:
        d, m = heapq.heappop(heap)
        yield m
        for a in atoms:
            j = lcm(m, a)
            if j not in pushed:
                if len(pushed) >= cap:
                    raise ResourceCapError("lattice-elements", cap, len(pushed) + 1)
                pushed.add(j)
                heapq.heappush(heap, (degree(j), j))


class LcmLattice:
    """The full lcm lattice with its divisibility relation precomputed.

    ``elements`` starts with the bottom (the monomial 1) and is otherwise
    sorted by (total degree, exponents); the strict-divisibility successor
    lists along that order are shared by every interval extracted later.
    """

    def __init__(self, ideal: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP):
        self.ideal = ideal
        bottom = one(ideal.n)
        body = sorted(
            lattice_elements_by_degree(ideal, cap), key=lambda m: (degree(m), m)
        )
        self.elements = (bottom,) + tuple(body)
        self._index = {m: i for i, m in enumerate(self.elements)}
        self.atoms = ideal.gens
        self.top = self.elements[-1] if body else bottom
        # strict divisibility among non-bottom elements; index 0 is bottom
        k = len(body)
        succ = [[] for _ in range(k)]
        for i in range(k):
            mi = body[i]
            for j in range(i + 1, k):
                if divides(mi, body[j]) and mi != body[j]:
                    succ[i].append(j)
        self._body = body
        self._succ = succ

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, m) -> bool:
        return tuple(m) in self._index

    def join(self, a, b):
        return lcm(a, b)

    def open_interval(self, m) -> tuple:
        """All lattice elements strictly between 1 and m."""
        m = tuple(m)
        if m not in self._index:
            raise DomainError(f"{monomial_str(m)} is not a lattice element")
        return tuple(
            p for p in self._body if p != m and divides(p, m)
        )

    def interval_complex(self, m):
        """Order complex of the open interval (1, m), chains generated lazily."""
        from .homology import SimplicialComplex

        m = tuple(m)
        if m not in self._index:
            raise DomainError(f"{monomial_str(m)} is not a lattice element")
        body = self._body
        members = [i for i, p in enumerate(body) if p != m and divides(p, m)]
        member_pos = {i: k for k, i in enumerate(members)}
        successors = [
            [member_pos[j] for j in self._succ[i] if j in member_pos] for i in members
        ]
        return SimplicialComplex.from_poset([body[i] for i in members], successors)

    def lower_covers(self, m) -> tuple:
        """Elements covered by m (maximal strict divisors within the lattice)."""
        m = tuple(m)
        if m not in self._index:
            raise DomainError(f"{monomial_str(m)} is not a lattice element")
        below = [p for p in self.elements if p != m and divides(p, m)]
        covers = [p for p in below if not any(p != q and divides(p, q) for q in below)]
        return tuple(sorted(covers, key=lambda x: (degree(x), x)))

    def dump(self) -> str:
        """Debug text: one element per line with the elements it covers."""
        lines = []
        for m in self.elements:
            covered = ", ".join(monomial_str(c) for c in self.lower_covers(m)) if m != self.elements[0] else ""
            lines.append(f"{monomial_str(m)}  <-  [{covered}]" if covered else monomial_str(m))
        return "\n".join(lines)


def build_lcm_lattice(ideal: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> LcmLattice:
    """Join-closure of the generators with bottom 1; see LcmLattice."""
    return LcmLattice(ideal, cap)


def order_complex(interval):
    """Order complex of a set of monomials ordered by divisibility.

    Vertices are the given monomials; faces are the chains.  An empty
    collection yields the void complex.
    """
    from .homology import SimplicialComplex

    elems = sorted(set(tuple(m) for m in interval), key=lambda m: (degree(m), m))
    if not elems:
        return SimplicialComplex.void()
    succ = [
        [j for j in range(i + 1, len(elems)) if divides(elems[i], elems[j]) and elems[i] != elems[j]]
        for i in range(len(elems))
    ]
    return SimplicialComplex.from_poset(elems, succ)
