"""Builders for the group families under study.

The affine model is used for C_p x| C_m: permutations x -> u*x + v of Z_p,
with point i+1 standing for the residue i, and u running over the unique
order-m subgroup of (Z/p)* generated by g^((p-1)/m) for the least primitive
root g.  This is the smallest faithful degree and identifies the translation
subgroup with the permuted points, which makes orbit counting on the kernel
and the Frobenius property directly visible.

PSL(2,p) acts on the projective line: points 1..p are the residues 0..p-1,
point p+1 is the point at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import numtheory
from .permutation import Permutation
from .permgroup import DEFAULT_ELEMENT_CAP, PermutationGroup

__all__ = [
    "FamilySpec",
    "ExtremalPair",
    "build_family",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "direct_product",
    "cp_semidirect",
    "extremal_pair",
    "psl2",
    "k_frobenius_metacyclic",
]

_FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "direct_product")


@dataclass(frozen=True)
class FamilySpec:
    """A named family member: ('cyclic', (6,)), ('direct_product', (spec, spec))."""

    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def label(self) -> str:
        if self.family == "direct_product":
            inner = ",".join(p.label() for p in self.params)
            return f"direct_product({inner})"
        return f"{self.family}({','.join(str(p) for p in self.params)})"


def build_family(spec: FamilySpec,
                 element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """Standard permutation representation of a family member."""
    if spec.family == "direct_product":
        if len(spec.params) < 2:
            raise ValueError("direct_product needs at least two components")
        groups = [build_family(s, element_cap) for s in spec.params]
        result = groups[0]
        for h in groups[1:]:
            result = direct_product(result, h)
        return result
    if len(spec.params) != 1 or not isinstance(spec.params[0], int):
        raise ValueError(f"{spec.family} takes a single integer parameter")
    n = spec.params[0]
    builder = {"cyclic": cyclic, "dihedral": dihedral,
               "symmetric": symmetric, "alternating": alternating}[spec.family]
    return builder(n, element_cap)


def cyclic(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """C_n as the rotation of n points."""
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    if n == 1:
        return PermutationGroup(1, (), element_cap)
    gen = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    return PermutationGroup(n, [gen], element_cap)


def dihedral(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """D_n of order 2n, acting on the n vertices of the n-gon."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    rot = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    refl = Permutation.from_images(
        [1] + list(range(n, 1, -1)))  # fixes 1, reverses the rest
    return PermutationGroup(n, [rot, refl], element_cap)


def symmetric(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """S_n on n points."""
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    if n == 1:
        return PermutationGroup(1, (), element_cap)
    gens = [Permutation.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return PermutationGroup(n, gens, element_cap)


def alternating(n: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """A_n on n points (trivial for n <= 2)."""
    if n < 1:
        raise ValueError("alternating group needs n >= 1")
    if n <= 2:
        return PermutationGroup(max(n, 1), (), element_cap)
    gens = [Permutation.from_cycles(n, [(i, i + 1, i + 2)])
            for i in range(1, n - 1)]
    return PermutationGroup(n, gens, element_cap)


def direct_product(g: PermutationGroup, h: PermutationGroup,
                   element_cap: int | None = None) -> PermutationGroup:
    """G x H acting on the disjoint union of their point sets."""
    cap = element_cap if element_cap is not None else max(
        g.element_cap, h.element_cap)
    degree = g.degree + h.degree
    gens = []
    for gen in g.generators:
        images = list(range(degree))
        images[:g.degree] = [int(i) for i in gen.images]
        gens.append(Permutation(images))
    for gen in h.generators:
        images = list(range(degree))
        images[g.degree:] = [int(i) + g.degree for i in gen.images]
        gens.append(Permutation(images))
    return PermutationGroup(degree, gens, cap)


def cp_semidirect(p: int, m: int,
                  element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """The affine group {x -> u*x + v} on Z_p with u of multiplicative order
    dividing m, for m a divisor of p-1.

    The complement acts faithfully, so the centralizer of the translation
    subgroup is the translation subgroup itself; m = 1 degenerates to C_p.
    """
    if not numtheory.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1 or (p - 1) % m != 0:
        raise ValueError(f"m = {m} does not divide p-1 = {p - 1}")
    translation = Permutation.from_cycles(p, [tuple(range(1, p + 1))])
    gens = [translation]
    if m > 1:
        g0 = pow(numtheory.primitive_root(p), (p - 1) // m, p)
        mult = Permutation([(g0 * x) % p for x in range(p)])
        gens.append(mult)
    return PermutationGroup(p, gens, element_cap)


@dataclass(frozen=True)
class ExtremalPair:
    """The two conjecturally class-minimal groups attached to a prime."""

    p: int
    a: int
    b: int
    K: PermutationGroup = field(repr=False)
    L: PermutationGroup = field(repr=False)


def extremal_pair(p: int,
                  element_cap: int = DEFAULT_ELEMENT_CAP) -> ExtremalPair:
    """K = C_p x| C_a and L = C_p x| C_b for the balanced pair (a, b).

    Ordered so a <= b, making K the smaller group.  For p = 2 both collapse
    to C_2; for p = 3 they are C_3 and the nonabelian group of order 6.
    """
    a, b = numtheory.balanced_divisor_pair(p)
    return ExtremalPair(p=p, a=a, b=b,
                        K=cp_semidirect(p, a, element_cap),
                        L=cp_semidirect(p, b, element_cap))


def psl2(p: int, element_cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """PSL(2,p) on the p+1 points of the projective line, p >= 5 prime.

    Generated by x -> x+1 and x -> -1/x; infinity is the highest point.
    """
    if not numtheory.is_prime(p) or p < 5:
        raise ValueError("psl2 requires a prime p >= 5")
    inf = p  # 0-based index of the point at infinity
    shift = list(range(p + 1))
    for x in range(p):
        shift[x] = (x + 1) % p
    inv_neg = list(range(p + 1))
    inv_neg[0] = inf
    inv_neg[inf] = 0
    for x in range(1, p):
        inv_neg[x] = (-pow(x, p - 2, p)) % p
    return PermutationGroup(
        p + 1, [Permutation(shift), Permutation(inv_neg)], element_cap)


def k_frobenius_metacyclic(p: int, c: int) -> int:
    """Closed-form class count c + (p-1)/c of the affine group C_p x| C_c."""
    if not numtheory.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if c < 1 or (p - 1) % c != 0:
        raise ValueError(f"c = {c} does not divide p-1 = {p - 1}")
    return c + (p - 1) // c
