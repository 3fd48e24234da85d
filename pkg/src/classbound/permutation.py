"""Permutations of the points 1..n.

Points are 1-based everywhere in the public API (cycle notation, images,
orbits); internally images are stored 0-based in a read-only numpy array
using a big-endian unsigned dtype, so that the raw bytes of a permutation
compare in the same (lexicographic) order as its image sequence.  That
byte key is what makes element sets, sorting, and class representatives
deterministic.

Composition is left-to-right: ``(a * b)(x) == b(a(x))``, i.e. apply ``a``
first.  Permutation objects are immutable and hashable.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

import numpy as np

__all__ = ["Permutation", "parse_cycles", "format_cycles"]


def _dtype_for(degree: int) -> np.dtype:
    # big-endian so that memcmp order on the raw bytes == numeric lex order
    return np.dtype(">u2") if degree <= 0xFFFF else np.dtype(">u4")


class Permutation:
    """An element of the symmetric group on ``{1, ..., degree}``."""

    __slots__ = ("_img", "_key")

    def __init__(self, images: np.ndarray | Sequence[int], *, _raw: bool = False):
        """Build from 0-based images (``images[i]`` = image of point ``i``).

        Library code mostly uses the classmethod constructors below; this
        validates unless ``_raw`` is set by trusted internal callers.
        """
        if _raw:
            img = images
        else:
            img = np.asarray(images)
            n = len(img)
            if n == 0:
                raise ValueError("degree 0 permutations are not allowed")
            if not np.array_equal(np.sort(img), np.arange(n)):
                raise ValueError("images are not a bijection on 0..n-1")
            img = np.ascontiguousarray(img, dtype=_dtype_for(n))
            img.setflags(write=False)
        self._img = img
        self._key = img.tobytes()

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be >= 1")
        img = np.arange(degree, dtype=_dtype_for(degree))
        img.setflags(write=False)
        return cls(img, _raw=True)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles of 1-based points."""
        if degree < 1:
            raise ValueError("degree must be >= 1")
        img = np.arange(degree, dtype=np.int64)
        seen: set[int] = set()
        for cyc in cycles:
            if not cyc:
                continue
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated across cycles")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls(img)

    @classmethod
    def from_images(cls, images: Sequence[int]) -> "Permutation":
        """Build from the 1-based one-line image sequence."""
        return cls([i - 1 for i in images])

    # -- basic accessors ----------------------------------------------

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> np.ndarray:
        """The 0-based image array (read-only view)."""
        return self._img

    @property
    def key(self) -> bytes:
        """Canonical byte key; lexicographic on the image sequence."""
        return self._key

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} outside 1..{self.degree}")
        return int(self._img[point - 1]) + 1

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self._img, np.arange(self.degree)))

    # -- group operations ----------------------------------------------

    def _check_degree(self, other: "Permutation") -> None:
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}")

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        self._check_degree(other)
        img = other._img[self._img]
        img.setflags(write=False)
        return Permutation(img, _raw=True)

    def inverse(self) -> "Permutation":
        inv = np.empty(self.degree, dtype=self._img.dtype)
        inv[self._img] = np.arange(self.degree, dtype=self._img.dtype)
        inv.setflags(write=False)
        return Permutation(inv, _raw=True)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 * self * g``."""
        return g.inverse() * self * g

    def order(self) -> int:
        cycles = self.cycles()
        if not cycles:
            return 1
        return math.lcm(*(len(c) for c in cycles))

    # -- cycle structure -----------------------------------------------

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles as 1-based tuples, each rotated to start at its
        least point, sorted by first point."""
        img = self._img
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for start in range(self.degree):
            if seen[start] or img[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = int(img[start])
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = int(img[j])
            out.append(tuple(pt + 1 for pt in cyc))
        return tuple(out)

    def fixed_points(self) -> tuple[int, ...]:
        """1-based points fixed by this permutation."""
        return tuple(int(i) + 1 for i in np.flatnonzero(self._img == np.arange(self.degree)))

    def support(self) -> tuple[int, ...]:
        """1-based points moved by this permutation."""
        return tuple(int(i) + 1 for i in np.flatnonzero(self._img != np.arange(self.degree)))

    # -- comparisons / formatting ---------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._key == other._key and self.degree == other.degree

    def __hash__(self) -> int:
        return hash(self._key)

    def __lt__(self, other: "Permutation") -> bool:
        self._check_degree(other)
        return self._key < other._key

    def __le__(self, other: "Permutation") -> bool:
        self._check_degree(other)
        return self._key <= other._key

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({self.degree}, {list(self.cycles())!r})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def format_cycles(perm: Permutation) -> str:
    """Cycle notation with 1-based points; identity renders as ``()``."""
    cycles = perm.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation like ``(1 2 3)(4 5)``; ``()`` is the identity.

    Points may be separated by spaces or commas.  The degree defaults to the
    largest point mentioned; an explicit larger degree appends fixed points.
    Raises ValueError on malformed text, a repeated point, or a degree
    smaller than the largest point.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation text")
    consumed = _CYCLE_RE.sub("", stripped).strip()
    if consumed:
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles: list[list[int]] = []
    max_point = 0
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue
        try:
            pts = [int(tok) for tok in re.split(r"[,\s]+", body)]
        except ValueError:
            raise ValueError(f"malformed cycle: ({body})") from None
        if any(p < 1 for p in pts):
            raise ValueError("points must be positive integers")
        cycles.append(pts)
        max_point = max(max_point, max(pts))
    if degree is None:
        degree = max(max_point, 1)
    elif degree < max_point:
        raise ValueError(
            f"degree {degree} smaller than largest point {max_point}")
    return Permutation.from_cycles(degree, cycles)
