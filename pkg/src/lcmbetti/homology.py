"""Exact reduced simplicial homology over GF(p) or the rationals.

Complexes are processed dimension by dimension: boundary columns are streamed
straight into a sparse elimination, so only two face levels are ever held in
memory.  The chain complex is always augmented (the empty face is the unique
face of dimension -1), which makes the VOID/EMPTY conventions come out
uniformly:

* VOID complex (no faces at all): every reduced homology group is 0.
* EMPTY complex ({} only, i.e. just the empty face): dim H~_{-1} = 1.

Two internal consistency checks run on every computation: the composite of
consecutive boundary maps is verified to vanish column by column, and the
reduced Euler characteristic is compared against the alternating sum of the
homology dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd as int_gcd

from .errors import DomainError, ResourceCapError
from .fields import FieldSpec

DEFAULT_FACE_CAP = 2_000_000


# ---------------------------------------------------------------------------
# sparse column eliminators (one per coefficient field)
# ---------------------------------------------------------------------------


class _GF2Eliminator:
    """Streamed column reduction over GF(2); columns are int bitmasks."""

    def __init__(self):
        self.pivots = {}
        self.rank = 0

    def add_column(self, entries) -> None:
        col = 0
        for row, _coeff in entries:
            col ^= 1 << row
        pivots = self.pivots
        while col:
            low = col.bit_length() - 1
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                self.rank += 1
                return
            col ^= piv


class _GFpEliminator:
    """Streamed column reduction over GF(p); columns are row->coeff dicts."""

    def __init__(self, p: int):
        self.p = p
        self.pivots = {}
        self.rank = 0

    def add_column(self, entries) -> None:
        p = self.p
        col = {}
        for row, coeff in entries:
            v = (col.get(row, 0) + coeff) % p
            if v:
                col[row] = v
            else:
                col.pop(row, None)
        pivots = self.pivots
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(col[low], p - 2, p)
                pivots[low] = {r: (c * inv) % p for r, c in col.items()}
                self.rank += 1
                return
            c = col.pop(low)
            for r, v in piv.items():
                if r == low:
                    continue
                nv = (col.get(r, 0) - c * v) % p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)


class _QQEliminator:
    """Fraction-free streamed column reduction over the rationals.

    Columns are integer dicts; each reduction step is an integer cross
    multiplication followed by content (gcd) stripping, so ranks are exact
    and entry growth stays bounded at desk scale.
    """

    def __init__(self):
        self.pivots = {}
        self.rank = 0

    @staticmethod
    def _strip(col: dict) -> dict:
        g = 0
        for v in col.values():
            g = int_gcd(g, v)
            if g == 1:
                return col
        if g > 1:
            return {r: v // g for r, v in col.items()}
        return col

    def add_column(self, entries) -> None:
        col = {}
        for row, coeff in entries:
            v = col.get(row, 0) + coeff
            if v:
                col[row] = v
            else:
                col.pop(row, None)
        pivots = self.pivots
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = self._strip(col)
                self.rank += 1
                return
            a = piv[low]
            b = col[low]
            new = {}
            for r in col.keys() | piv.keys():
                v = a * col.get(r, 0) - b * piv.get(r, 0)
                if v:
                    new[r] = v
            col = self._strip(new)


def _make_eliminator(fld: FieldSpec):
    if fld.is_rational:
        return _QQEliminator()
    if fld.characteristic == 2:
        return _GF2Eliminator()
    return _GFpEliminator(fld.characteristic)


def exact_rank(rows, fld: FieldSpec) -> int:
    """Exact rank of a dense matrix given as a list of rows of integers."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DomainError("ragged matrix")
    elim = _make_eliminator(fld)
    for j in range(width):
        elim.add_column([(i, row[j]) for i, row in enumerate(rows) if row[j]])
    return elim.rank


# ---------------------------------------------------------------------------
# simplicial complexes
# ---------------------------------------------------------------------------


class SimplicialComplex:
    """A finite simplicial complex, explicit or chain-of-poset.

    Faces are strictly increasing tuples of 0-based vertex indices; the empty
    tuple is the empty face.  Two storage modes:

    * explicit -- built from facets (closure taken) or from a downward-closed
      face family; used for fixtures and small complexes.
    * poset -- vertices carry a partial order given by successor lists; the
      faces are the chains, generated level by level on demand so long
      intervals never materialize all chains at once.
    """

    def __init__(self, vertices=(), *, faces_by_dim=None, successors=None):
        self.vertices = tuple(vertices)
        self._faces_by_dim = faces_by_dim  # dict dim -> sorted tuple of faces
        self._successors = successors  # list of sorted index lists

    # -- constructors -------------------------------------------------------

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls((), faces_by_dim={})

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls((), faces_by_dim={-1: ((),)})

    @classmethod
    def from_facets(cls, facets, vertices=None) -> "SimplicialComplex":
        """Closure of the given maximal faces (vertex labels, not indices)."""
        facet_sets = [tuple(sorted(set(f))) for f in facets]
        if vertices is None:
            labels = sorted({v for f in facet_sets for v in f})
        else:
            labels = sorted(vertices)
        index = {v: i for i, v in enumerate(labels)}
        faces = {(): None}
        from itertools import combinations

        for f in facet_sets:
            idx = tuple(sorted(index[v] for v in f))
            for k in range(len(idx) + 1):
                for sub in combinations(idx, k):
                    faces[sub] = None
        if not facet_sets:
            # no facets listed at all: the void complex
            return cls.void()
        by_dim: dict = {}
        for f in faces:
            by_dim.setdefault(len(f) - 1, []).append(f)
        return cls(labels, faces_by_dim={d: tuple(sorted(fs)) for d, fs in by_dim.items()})

    @classmethod
    def from_poset(cls, elements, successors) -> "SimplicialComplex":
        """Order complex: faces are the chains of the poset.

        ``elements`` must be sorted along a linear extension and
        ``successors[i]`` lists the indices j > i with element_i < element_j.
        """
        return cls(tuple(elements), successors=[sorted(s) for s in successors])

    # -- structure ----------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return self._faces_by_dim == {} and self._successors is None

    @property
    def is_empty(self) -> bool:
        return self._faces_by_dim == {-1: ((),)} and not self.vertices

    def face_levels(self):
        """Yield (dim, list_of_faces) from dim -1 upward; nothing if void."""
        if self._successors is not None:
            yield -1, [()]
            level = [(i,) for i in range(len(self.vertices))]
            d = 0
            succ = self._successors
            while level:
                yield d, level
                level = [c + (w,) for c in level for w in succ[c[-1]]]
                d += 1
            return
        by_dim = self._faces_by_dim
        if not by_dim:
            return
        d = -1
        while d in by_dim:
            yield d, list(by_dim[d])
            d += 1

    def f_vector(self) -> dict:
        """Face counts per dimension (includes the empty face at -1)."""
        return {d: len(fs) for d, fs in self.face_levels()}

    @property
    def dim(self):
        """Top face dimension; -1 for the empty complex, None for the void one."""
        best = None
        for d, _fs in self.face_levels():
            best = d
        return best

    def facets(self):
        """Maximal faces as tuples of vertex labels."""
        all_faces = []
        for _d, fs in self.face_levels():
            all_faces.extend(fs)
        face_set = set(all_faces)
        maximal = []
        for f in all_faces:
            if self._successors is not None:
                if self._chain_is_maximal(f):
                    maximal.append(f)
            else:
                fset = set(f)
                bigger = (g for g in face_set if len(g) == len(f) + 1)
                if not any(fset < set(g) for g in bigger):
                    maximal.append(f)
        return [tuple(self.vertices[i] for i in f) for f in maximal]

    def _chain_is_maximal(self, chain) -> bool:
        # maximal iff no further poset element is comparable with every entry
        succ = self._successors
        chain_set = set(chain)
        for v in range(len(self.vertices)):
            if v in chain_set:
                continue
            if all(v in succ[c] or c in succ[v] for c in chain):
                return False
        return True


# ---------------------------------------------------------------------------
# reduced homology
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReducedHomologyProfile:
    """Finitely supported map i -> dim H~_i; absent keys are zero."""

    dims: tuple = field(default=())  # sorted tuple of (i, dim) with dim > 0

    def __getitem__(self, i: int) -> int:
        for k, v in self.dims:
            if k == i:
                return v
        return 0

    def as_dict(self) -> dict:
        return dict(self.dims)

    def support(self):
        return [k for k, _v in self.dims]

    @classmethod
    def from_dict(cls, d: dict) -> "ReducedHomologyProfile":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))


def _boundary_entries(face, prev_index):
    """Column of the boundary map on one face, as (row, sign) pairs."""
    entries = []
    sign = 1
    for k in range(len(face)):
        sub = face[:k] + face[k + 1 :]
        entries.append((prev_index[sub], sign))
        sign = -sign
    return entries


def reduced_homology(
    complex_: SimplicialComplex,
    fld: FieldSpec,
    *,
    max_dim: int | None = None,
    face_cap: int = DEFAULT_FACE_CAP,
) -> ReducedHomologyProfile:
    """Reduced homology dimensions of a complex over the given field.

    ``max_dim`` truncates the computation: only dims up to it are reported
    (the Euler check is skipped for truncated runs).  ``face_cap`` bounds the
    total number of faces processed.
    """
    dims: dict = {}
    f_counts: dict = {}
    total_faces = 0

    prev_faces = None
    prev_index: dict = {}
    prev_cols: list = []
    prev_rank = 0  # rank of the boundary map leaving the previous level
    prev_d = None

    levels = complex_.face_levels()
    for d, faces in levels:
        total_faces += len(faces)
        if total_faces > face_cap:
            raise ResourceCapError("face-count", face_cap, total_faces)
        index = {f: i for i, f in enumerate(faces)}
        elim = _make_eliminator(fld)
        cols = []
        if prev_faces is not None:
            for f in faces:
                entries = _boundary_entries(f, prev_index)
                cols.append(entries)
                # boundary-of-boundary must vanish before the column is used
                if prev_cols:
                    acc: dict = {}
                    for row, sign in entries:
                        for r2, s2 in prev_cols[row]:
                            v = acc.get(r2, 0) + sign * s2
                            if v:
                                acc[r2] = v
                            else:
                                acc.pop(r2, None)
                    if acc:
                        raise AssertionError(
                            f"boundary composite nonzero on face {f} (dim {d})"
                        )
                elim.add_column(entries)
            rank_out = elim.rank
            dims[prev_d] = len(prev_faces) - prev_rank - rank_out
            prev_rank = rank_out
        f_counts[d] = len(faces)
        prev_faces = faces
        prev_index = index
        prev_cols = cols
        prev_d = d
        if max_dim is not None and d > max_dim:
            break
    else:
        if prev_faces is not None:
            dims[prev_d] = len(prev_faces) - prev_rank

    if max_dim is not None:
        dims = {i: v for i, v in dims.items() if i <= max_dim}
    else:
        # reduced Euler characteristic must match the homology
        chi_faces = sum((-1) ** (d % 2) * c for d, c in f_counts.items())
        chi_hom = sum((-1) ** (i % 2) * v for i, v in dims.items())
        if chi_faces != chi_hom:
            raise AssertionError(
                f"Euler check failed: faces give {chi_faces}, homology gives {chi_hom}"
            )
    return ReducedHomologyProfile.from_dict(dims)
