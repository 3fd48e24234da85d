"""Finite permutation group engine.

Groups are handles over a generator list.  The element set is computed once
by a hash-set closure under composition (default cap 2,000,000 elements) and
stored as a single numpy matrix of image rows, sorted lexicographically; all
heavy operations (conjugacy classes, centralizers, normalizers, coset
actions) are vectorized against that matrix.  Handles are immutable after
construction: caches are write-once, so sharing a handle across threads for
reading is safe, and every output is deterministic.

Conventions:
  * composition is left-to-right, ``(a*b)(x) = b(a(x))``;
  * conjugation is ``x^g = g^-1 x g``;
  * class representatives are the lexicographically minimal elements of
    their classes, and classes are sorted by (size, representative).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .permutation import Permutation, _dtype_for

__all__ = [
    "DEFAULT_ELEMENT_CAP",
    "CapExceededError",
    "ClassData",
    "PermutationGroup",
    "group_from_generators",
]

DEFAULT_ELEMENT_CAP = 2_000_000


class CapExceededError(RuntimeError):
    """Raised when a closure would enumerate more elements than the cap."""


def _native_dtype_for(degree: int) -> np.dtype:
    return np.dtype(np.uint16) if degree <= 0xFFFF else np.dtype(np.uint32)


class ClassData:
    """Conjugacy class partition: representatives, sizes, and k = len."""

    __slots__ = ("sizes", "_rep_rows", "_reps")

    def __init__(self, rep_rows: np.ndarray, sizes: Sequence[int]):
        self._rep_rows = rep_rows
        self.sizes = tuple(int(s) for s in sizes)
        self._reps: tuple[Permutation, ...] | None = None

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def representatives(self) -> tuple[Permutation, ...]:
        # materialized lazily: large abelian groups have |G| singleton classes
        if self._reps is None:
            be = _dtype_for(self._rep_rows.shape[1])
            rows = np.ascontiguousarray(self._rep_rows).astype(be, copy=False)
            perms = []
            for row in rows:
                r = np.ascontiguousarray(row)
                r.setflags(write=False)
                perms.append(Permutation(r, _raw=True))
            self._reps = tuple(perms)
        return self._reps

    def __repr__(self) -> str:
        return f"ClassData(k={self.k}, sizes={self.sizes})"


def _keys_of(rows: np.ndarray) -> np.ndarray:
    """Per-row byte keys ('S' array); memcmp order == lexicographic order."""
    n, deg = rows.shape
    be = rows.astype(_dtype_for(deg), copy=False)
    be = np.ascontiguousarray(be)
    return be.view(f"S{be.dtype.itemsize * deg}").ravel()


class PermutationGroup:
    """A finitely generated group of permutations of ``{1..degree}``."""

    def __init__(self, degree: int, generators: Iterable[Permutation] = (),
                 element_cap: int = DEFAULT_ELEMENT_CAP):
        if degree < 1:
            raise ValueError("degree must be >= 1")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError(
                    f"degree mismatch among generators: group degree {degree}, "
                    f"generator degree {g.degree}")
        self.degree = degree
        self.generators = gens
        self.element_cap = element_cap
        # write-once caches
        self._mat: np.ndarray | None = None       # sorted (N, degree) element rows
        self._keys: np.ndarray | None = None      # matching 'S' key array
        self._inv_mat: np.ndarray | None = None   # inverse rows, aligned with _mat
        self._elements: tuple[Permutation, ...] | None = None
        self._classdata: ClassData | None = None
        self._class_of: np.ndarray | None = None  # element index -> class index
        self._orders: np.ndarray | None = None    # element orders, aligned

    # -- construction helpers -------------------------------------------

    @classmethod
    def _from_closed_rows(cls, degree: int, rows: np.ndarray,
                          element_cap: int) -> "PermutationGroup":
        """Build a handle from an already-closed, subgroup element set."""
        rows = np.ascontiguousarray(rows)
        keys = _keys_of(rows)
        idx = np.argsort(keys)
        rows, keys = np.ascontiguousarray(rows[idx]), keys[idx]
        gen_rows = _small_generating_set(rows, keys)
        be = _dtype_for(degree)
        gens = []
        for r in gen_rows:
            arr = np.ascontiguousarray(r.astype(be, copy=False))
            arr.setflags(write=False)
            gens.append(Permutation(arr, _raw=True))
        group = cls(degree, gens, element_cap)
        group._mat, group._keys = rows, keys
        return group

    def _gen_rows(self) -> list[np.ndarray]:
        """Native-endian non-identity generator image rows."""
        dt = _native_dtype_for(self.degree)
        ident = np.arange(self.degree, dtype=dt)
        out = []
        for g in self.generators:
            row = np.ascontiguousarray(g.images.astype(dt, copy=False))
            if not np.array_equal(row, ident):
                out.append(row)
        return out

    # -- element enumeration ---------------------------------------------

    def _ensure_elements(self) -> None:
        if self._mat is not None:
            return
        gens = self._gen_rows()
        if len(gens) == 1:
            mat = _cyclic_closure(gens[0], self.element_cap)
        else:
            mat = _bfs_closure(self.degree, gens, self.element_cap)
        keys = _keys_of(mat)
        idx = np.argsort(keys)
        self._mat = np.ascontiguousarray(mat[idx])
        self._keys = keys[idx]

    def order(self) -> int:
        """Exact group order (memoized)."""
        self._ensure_elements()
        return len(self._mat)

    def elements(self) -> tuple[Permutation, ...]:
        """All elements, sorted lexicographically by image sequence."""
        if self._elements is None:
            self._ensure_elements()
            be = _dtype_for(self.degree)
            rows = self._mat.astype(be, copy=False)
            perms = []
            for row in rows:
                r = np.ascontiguousarray(row)
                r.setflags(write=False)
                perms.append(Permutation(r, _raw=True))
            self._elements = tuple(perms)
        return self._elements

    def _inverses(self) -> np.ndarray:
        if self._inv_mat is None:
            self._ensure_elements()
            inv = np.argsort(self._mat, axis=1)
            self._inv_mat = inv.astype(self._mat.dtype)
        return self._inv_mat

    def _locate_rows(self, rows: np.ndarray) -> np.ndarray:
        """Indices of the given element rows inside the sorted matrix.

        Caller must guarantee membership (rows of products of elements).
        """
        return np.searchsorted(self._keys, _keys_of(rows))

    def _membership_mask(self, rows: np.ndarray) -> np.ndarray:
        q = _keys_of(rows)
        idx = np.searchsorted(self._keys, q)
        idx_c = np.minimum(idx, len(self._keys) - 1)
        return (self._keys[idx_c] == q) & (idx < len(self._keys))

    def __contains__(self, perm: Permutation) -> bool:
        if not isinstance(perm, Permutation) or perm.degree != self.degree:
            return False
        self._ensure_elements()
        row = perm.images.astype(self._mat.dtype, copy=False).reshape(1, -1)
        return bool(self._membership_mask(row)[0])

    def contains_group(self, other: "PermutationGroup") -> bool:
        """Whether every element of ``other`` lies in this group."""
        if other.degree != self.degree:
            return False
        self._ensure_elements()
        other._ensure_elements()
        return bool(self._membership_mask(other._mat).all())

    def same_group_as(self, other: "PermutationGroup") -> bool:
        """Element-set equality (same degree, same elements)."""
        if other.degree != self.degree:
            return False
        self._ensure_elements()
        other._ensure_elements()
        return self._mat.shape == other._mat.shape and bool(
            np.array_equal(self._keys, other._keys))

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_abelian(self) -> bool:
        gens = self._gen_rows()
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if not np.array_equal(a[b], b[a]):
                    return False
        return True

    def element_orders(self) -> np.ndarray:
        """Orders of all elements, aligned with the sorted element matrix."""
        if self._orders is None:
            self._ensure_elements()
            self._orders = np.array(
                [_row_order(row) for row in self._mat], dtype=np.int64)
        return self._orders

    def exponent(self) -> int:
        orders = np.unique(self.element_orders())
        return math.lcm(*(int(o) for o in orders))

    # -- conjugacy classes -------------------------------------------------

    def conjugacy_classes(self) -> ClassData:
        """Partition into conjugation orbits (memoized).

        Representatives are the lex-minimal class members; classes are
        sorted by (size, representative), so output is deterministic.
        """
        if self._classdata is not None:
            return self._classdata
        self._ensure_elements()
        mat, keys = self._mat, self._keys
        n = len(mat)
        if self.is_abelian():
            self._class_of = np.arange(n, dtype=np.int64)
            self._classdata = ClassData(mat, [1] * n)
            return self._classdata
        gens = self._gen_rows()
        cols = []
        for g in gens:
            ginv = np.empty_like(g)
            ginv[g] = np.arange(self.degree, dtype=g.dtype)
            conj = g[mat[:, ginv]]           # rows of g^-1 x g
            cols.append(self._locate_rows(conj))
        src = np.tile(np.arange(n, dtype=np.int64), len(cols))
        dst = np.concatenate(cols)
        adj = csr_matrix(
            (np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
        ncomp, comp = connected_components(adj, directed=False)
        sizes = np.bincount(comp, minlength=ncomp)
        rep_idx = np.full(ncomp, n, dtype=np.int64)
        np.minimum.at(rep_idx, comp, np.arange(n, dtype=np.int64))
        # order classes by (size, lex-min representative); rep indices are
        # into the sorted matrix, so index order = lex order on elements
        class_order = sorted(range(ncomp),
                             key=lambda c: (sizes[c], rep_idx[c]))
        relabel = np.empty(ncomp, dtype=np.int64)
        relabel[class_order] = np.arange(ncomp)
        self._class_of = relabel[comp]
        rep_idx = rep_idx[class_order]
        self._classdata = ClassData(mat[rep_idx], sizes[class_order].tolist())
        return self._classdata

    def class_index_of(self) -> np.ndarray:
        """Element index (sorted order) -> conjugacy class index."""
        self.conjugacy_classes()
        return self._class_of

    # -- subgroup operations ----------------------------------------------

    def _require_subgroup(self, other: "PermutationGroup", what: str) -> None:
        if not self.contains_group(other):
            raise ValueError(f"{what} is not contained in the group")

    def centralizer(self, other: "PermutationGroup") -> "PermutationGroup":
        """Subgroup of elements commuting with all of ``other``."""
        self._require_subgroup(other, "centralized subgroup")
        self._ensure_elements()
        mat = self._mat
        mask = np.ones(len(mat), dtype=bool)
        for s in other._gen_rows():
            # x*s == s*x  <=>  s[x-images] == x-images-at-s
            mask &= (s[mat] == mat[:, s]).all(axis=1)
        return PermutationGroup._from_closed_rows(
            self.degree, mat[mask], self.element_cap)

    def center(self) -> "PermutationGroup":
        return self.centralizer(self)

    def normalizer(self, other: "PermutationGroup") -> "PermutationGroup":
        """Subgroup of elements g with g * other * g^-1 = other."""
        self._require_subgroup(other, "normalized subgroup")
        self._ensure_elements()
        mat = self._mat
        inv = self._inverses()
        mask = np.ones(len(mat), dtype=bool)
        for h in other._gen_rows():
            # per element g: (g^-1 h g)(pt) = g[h[g^-1[pt]]]
            conj = np.take_along_axis(mat, h[inv].astype(np.int64), axis=1)
            mask &= other._membership_mask(conj)
        return PermutationGroup._from_closed_rows(
            self.degree, mat[mask], self.element_cap)

    def is_normal(self, other: "PermutationGroup") -> bool:
        """Whether ``other`` (a subgroup) is normal in this group."""
        self._require_subgroup(other, "subgroup")
        for g in self._gen_rows():
            ginv = np.empty_like(g)
            ginv[g] = np.arange(self.degree, dtype=g.dtype)
            for h in other._gen_rows():
                conj = g[h[ginv]].reshape(1, -1)
                if not other._membership_mask(conj)[0]:
                    return False
        return True

    def sylow(self, p: int) -> "PermutationGroup":
        """A Sylow p-subgroup, grown deterministically.

        Starts from the lex-least p-element of maximal order and repeatedly
        adjoins the lex-least p-element of the current subgroup's normalizer
        that lies outside it, until the full p-part of the order is reached.
        """
        from .numtheory import is_prime
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        n = self.order()
        p_part = 1
        while n % p == 0:
            p_part *= p
            n //= p
        if p_part == 1:
            return PermutationGroup(self.degree, (), self.element_cap)
        orders = self.element_orders()
        is_p_elem = np.array([_is_p_power(int(o), p) for o in orders])
        p_orders = np.where(is_p_elem, orders, 0)
        max_ord = int(p_orders.max())
        start = int(np.flatnonzero(p_orders == max_ord)[0])
        sub = PermutationGroup._from_closed_rows(
            self.degree, _cyclic_closure(
                np.ascontiguousarray(self._mat[start]), self.element_cap),
            self.element_cap)
        while sub.order() < p_part:
            norm = self.normalizer(sub)
            inside = sub._membership_mask(norm._mat)
            cand_orders = np.array(
                [_row_order(row) for row in norm._mat], dtype=np.int64)
            eligible = np.flatnonzero(
                ~inside
                & np.array([_is_p_power(int(o), p) and o > 1
                            for o in cand_orders]))
            new_row = norm._mat[int(eligible[0])]
            rows = np.vstack([m.images.astype(sub._mat.dtype)
                              for m in sub.generators] + [new_row]) \
                if sub.generators else new_row.reshape(1, -1)
            grown = _bfs_closure_seeded(self.degree, rows, self.element_cap)
            sub = PermutationGroup._from_closed_rows(
                self.degree, grown, self.element_cap)
        return sub

    def quotient(self, normal: "PermutationGroup") -> "PermutationGroup":
        """The coset action of the group on the right cosets of ``normal``.

        For a normal subgroup this is a faithful representation of G/N on
        |G|/|N| points.  Cosets are numbered in order of their lex-minimal
        representatives.
        """
        if not self.is_normal(normal):
            raise ValueError("subgroup is not normal")
        self._ensure_elements()
        normal._ensure_elements()
        mat = self._mat
        n = len(mat)
        nmat = normal._mat
        coset_of = np.full(n, -1, dtype=np.int64)
        rep_indices = []
        for i in range(n):
            if coset_of[i] >= 0:
                continue
            # coset N*x: rows x(n(pt)) for n in N
            members = mat[i][nmat]
            coset_of[self._locate_rows(members)] = len(rep_indices)
            rep_indices.append(i)
        m = len(rep_indices)
        reps = mat[np.array(rep_indices, dtype=np.int64)]
        gen_perms = []
        for g in self._gen_rows():
            moved = self._locate_rows(g[reps])
            images = coset_of[moved]
            arr = np.ascontiguousarray(images.astype(_dtype_for(m)))
            arr.setflags(write=False)
            gen_perms.append(Permutation(arr, _raw=True))
        quot = PermutationGroup(m, gen_perms, self.element_cap)
        assert quot.order() * normal.order() == self.order()
        return quot

    def stabilizer(self, point: int) -> "PermutationGroup":
        """Stabilizer of a 1-based point."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} outside 1..{self.degree}")
        self._ensure_elements()
        mask = self._mat[:, point - 1] == point - 1
        return PermutationGroup._from_closed_rows(
            self.degree, self._mat[mask], self.element_cap)

    def subgroup_generated(self, perms: Sequence[Permutation]) -> "PermutationGroup":
        """Subgroup generated by the given elements of this group."""
        dt = _native_dtype_for(self.degree)
        for q in perms:
            if q not in self:
                raise ValueError("generator is not an element of the group")
        if not perms:
            return PermutationGroup(self.degree, (), self.element_cap)
        rows = np.vstack([q.images.astype(dt, copy=False) for q in perms])
        closed = _bfs_closure_seeded(self.degree, rows, self.element_cap)
        return PermutationGroup._from_closed_rows(
            self.degree, closed, self.element_cap)

    def normal_closure(self, perm: Permutation) -> "PermutationGroup":
        """Smallest normal subgroup containing ``perm``: the subgroup
        generated by its whole conjugacy class."""
        if perm not in self:
            raise ValueError("element is not in the group")
        labels = self.class_index_of()
        idx = int(self._locate_rows(
            perm.images.astype(self._mat.dtype, copy=False).reshape(1, -1))[0])
        class_rows = self._mat[labels == labels[idx]]
        closed = _greedy_closure(class_rows, self.element_cap)
        return PermutationGroup._from_closed_rows(
            self.degree, closed, self.element_cap)

    def derived_subgroup(self) -> "PermutationGroup":
        """Normal closure of the commutators of the generators."""
        gens = self._gen_rows()
        if len(gens) < 2:
            return PermutationGroup(self.degree, (), self.element_cap)
        self._ensure_elements()
        comms = []
        ident = np.arange(self.degree, dtype=self._mat.dtype)
        for i, a in enumerate(gens):
            ainv = np.empty_like(a)
            ainv[a] = ident
            for b in gens[i + 1:]:
                binv = np.empty_like(b)
                binv[b] = ident
                # [a,b] = a^-1 b^-1 a b, left-to-right composition
                comm = b[a[binv[ainv]]]
                if not np.array_equal(comm, ident):
                    comms.append(comm)
        if not comms:
            return PermutationGroup(self.degree, (), self.element_cap)
        labels = self.class_index_of()
        comm_idx = self._locate_rows(np.vstack(comms))
        wanted = np.unique(labels[comm_idx])
        class_rows = self._mat[np.isin(labels, wanted)]
        closed = _greedy_closure(class_rows, self.element_cap)
        return PermutationGroup._from_closed_rows(
            self.degree, closed, self.element_cap)

    def is_solvable(self) -> bool:
        """Derived series reaches the trivial group."""
        current = self
        prev_order = current.order()
        while prev_order > 1:
            current = current.derived_subgroup()
            new_order = current.order()
            if new_order == prev_order:
                return False
            prev_order = new_order
        return True

    # -- actions on points ---------------------------------------------------

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbit partition of {1..degree}; orbits sorted by least point."""
        gens = self._gen_rows()
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            frontier = [start]
            while frontier:
                nxt = []
                for pt in frontier:
                    for g in gens:
                        img = int(g[pt])
                        if not seen[img]:
                            seen[img] = True
                            orbit.append(img)
                            nxt.append(img)
                frontier = nxt
            out.append(tuple(sorted(pt + 1 for pt in orbit)))
        return tuple(out)

    def moved_points(self) -> tuple[int, ...]:
        """1-based points moved by at least one generator."""
        moved: set[int] = set()
        for g in self.generators:
            moved.update(g.support())
        return tuple(sorted(moved))

    def is_frobenius_transitive(self) -> bool:
        """Frobenius test on the moved-point set: transitive there, point
        stabilizers nontrivial, and no non-identity element fixes two or
        more moved points."""
        moved = self.moved_points()
        if not moved:
            return False
        moved0 = np.array([p - 1 for p in moved], dtype=np.int64)
        # transitivity on the moved set
        for orbit in self.orbits():
            if moved[0] in orbit:
                if set(orbit) != set(moved):
                    return False
                break
        if self.order() <= len(moved):
            return False  # regular action: trivial stabilizers
        self._ensure_elements()
        fixed_counts = (self._mat[:, moved0] == moved0).sum(axis=1)
        ident_idx = self._locate_rows(
            np.arange(self.degree, dtype=self._mat.dtype).reshape(1, -1))[0]
        bad = fixed_counts >= 2
        bad[ident_idx] = False
        return not bool(bad.any())

    def __repr__(self) -> str:
        cached = "" if self._mat is None else f", order={len(self._mat)}"
        return (f"PermutationGroup(degree={self.degree}, "
                f"ngens={len(self.generators)}{cached})")


def group_from_generators(degree: int, gens: Iterable[Permutation],
                          element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """Group handle over the closure of ``gens`` under composition."""
    return PermutationGroup(degree, gens, element_cap)


# -- closure kernels ---------------------------------------------------------


def _bfs_closure(degree: int, gen_rows: list[np.ndarray], cap: int) -> np.ndarray:
    dt = _native_dtype_for(degree)
    ident = np.arange(degree, dtype=dt)
    if not gen_rows:
        return ident.reshape(1, -1)
    return _bfs_closure_seeded(degree, np.vstack(gen_rows), cap)


def _bfs_closure_seeded(degree: int, seed_rows: np.ndarray, cap: int) -> np.ndarray:
    """Close the seed rows under right-composition with themselves."""
    dt = _native_dtype_for(degree)
    ident = np.arange(degree, dtype=dt)
    gens = []
    seen_gen = set()
    for row in np.asarray(seed_rows, dtype=dt):
        key = row.tobytes()
        if key not in seen_gen and not np.array_equal(row, ident):
            seen_gen.add(key)
            gens.append(np.ascontiguousarray(row))
    if not gens:
        return ident.reshape(1, -1)
    rows = [ident]
    seen = {ident.tobytes()}
    frontier = ident.reshape(1, -1)
    while len(frontier):
        new_rows = []
        for g in gens:
            batch = np.ascontiguousarray(g[frontier])
            for row in batch:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    new_rows.append(row)
        if len(seen) > cap:
            raise CapExceededError(
                f"group order exceeds the enumeration cap ({cap})")
        if not new_rows:
            break
        frontier = np.vstack(new_rows)
        rows.append(frontier)
    return np.vstack(rows) if len(rows) > 1 else rows[0].reshape(1, -1)


def _cyclic_closure(gen_row: np.ndarray, cap: int) -> np.ndarray:
    """All powers of one permutation, by block doubling."""
    dt = _native_dtype_for(len(gen_row))
    g = np.ascontiguousarray(np.asarray(gen_row, dtype=dt))
    order = _row_order(g)
    if order > cap:
        raise CapExceededError(
            f"group order exceeds the enumeration cap ({cap})")
    ident = np.arange(len(g), dtype=dt)
    block = ident.reshape(1, -1)
    h = g
    # invariant: block = powers 0..len-1, h = g^len (until the final step)
    while len(block) < order:
        need = order - len(block)
        block = np.vstack([block, h[block[:need]]])
        h = np.ascontiguousarray(h[h])
    return np.ascontiguousarray(block)


def _greedy_closure(candidate_rows: np.ndarray, cap: int) -> np.ndarray:
    """Closure of a set of rows, adding generators only when they enlarge
    the subgroup built so far.  Used for large conjugation-closed sets."""
    degree = candidate_rows.shape[1]
    dt = _native_dtype_for(degree)
    rows = np.asarray(candidate_rows, dtype=dt)
    order = np.argsort(_keys_of(rows))
    rows = rows[order]
    current = np.arange(degree, dtype=dt).reshape(1, -1)
    current_keys = _keys_of(current)
    gens: list[np.ndarray] = []
    for row in rows:
        key = _keys_of(row.reshape(1, -1))
        pos = np.searchsorted(current_keys, key)[0]
        if pos < len(current_keys) and current_keys[pos] == key[0]:
            continue
        gens.append(np.ascontiguousarray(row))
        current = _bfs_closure_seeded(degree, np.vstack(gens), cap)
        current_keys = np.sort(_keys_of(current))
    return current


def _small_generating_set(rows_sorted: np.ndarray, keys_sorted: np.ndarray) -> list[np.ndarray]:
    """Greedy small generating set for a closed (subgroup) element set."""
    degree = rows_sorted.shape[1]
    dt = _native_dtype_for(degree)
    ident = np.arange(degree, dtype=dt)
    if len(rows_sorted) == 1:
        return []
    gens: list[np.ndarray] = []
    current_keys = _keys_of(ident.reshape(1, -1))
    cap = len(rows_sorted)
    for i in range(len(rows_sorted)):
        if len(current_keys) == len(rows_sorted):
            break
        key = keys_sorted[i]
        pos = np.searchsorted(current_keys, key)
        if pos < len(current_keys) and current_keys[pos] == key:
            continue
        gens.append(np.ascontiguousarray(np.asarray(rows_sorted[i], dtype=dt)))
        closed = _bfs_closure_seeded(degree, np.vstack(gens), cap)
        current_keys = np.sort(_keys_of(closed))
    return gens


def _row_order(row: np.ndarray) -> int:
    """Order of a permutation given as an image row: lcm of cycle lengths."""
    n = len(row)
    seen = np.zeros(n, dtype=bool)
    result = 1
    for start in range(n):
        if seen[start] or row[start] == start:
            continue
        length = 1
        seen[start] = True
        j = int(row[start])
        while j != start:
            seen[j] = True
            length += 1
            j = int(row[j])
        result = math.lcm(result, length)
    return result


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1
