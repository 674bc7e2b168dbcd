"""Finite abelian groups given by generators and relations.

A presentation is normalized once, via Smith normal form of its relation
matrix, into invariant-factor coordinates: the group becomes
Z/d_1 x ... x Z/d_r with d_1 | d_2 | ... and every d_i >= 2 (factors equal
to 1 are dropped; the trivial group has an empty coordinate vector).  All
subgroup and quotient arithmetic then happens on these coordinates through
integer lattices that always contain the relation lattice diag(d).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from math import gcd, prod

from .intlinalg import (
    DimensionError,
    IntMatrix,
    hnf,
    invert_unimodular,
    kernel_mod_lattice,
    snf,
    solve_congruence,
    vec_mat,
)


class NotFiniteError(ValueError):
    """The presented group is infinite (relation matrix has rank < #gens)."""


class GroupMismatchError(ValueError):
    """Operands belong to different ambient groups."""


class NotHomomorphismError(ValueError):
    """A generator-image assignment does not define a homomorphism."""


@dataclass(frozen=True)
class Presentation:
    """An abelian group Z^k modulo the lattice spanned by relation rows."""

    num_gens: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.cols != self.num_gens:
            raise DimensionError(
                f"relations have {self.relations.cols} columns for {self.num_gens} generators")


class CanonicalGroup:
    """A finite abelian group in invariant-factor coordinates.

    `to_can` (k x r) and `from_can` (r x k) translate between user
    coordinates (length k, the presentation's generators) and canonical
    coordinates (length r, one per invariant factor).
    """

    __slots__ = ("invariant_factors", "num_user_gens", "to_can", "from_can")

    def __init__(self, invariant_factors, num_user_gens: int,
                 to_can: IntMatrix, from_can: IntMatrix):
        self.invariant_factors = tuple(int(d) for d in invariant_factors)
        self.num_user_gens = num_user_gens
        self.to_can = to_can
        self.from_can = from_can

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    def reduce(self, coords) -> tuple:
        d = self.invariant_factors
        return tuple(c % d[i] for i, c in enumerate(coords))

    def element(self, coords) -> "Element":
        if len(coords) != self.rank:
            raise DimensionError(f"expected {self.rank} coordinates, got {len(coords)}")
        return Element(self, self.reduce(coords))

    def zero(self) -> "Element":
        return Element(self, (0,) * self.rank)

    def gens(self) -> list:
        r = self.rank
        return [Element(self, tuple(1 if j == i else 0 for j in range(r))) for i in range(r)]

    def from_user(self, vec) -> "Element":
        return self.element(vec_mat(list(vec), self.to_can))

    def to_user(self, el: "Element") -> list:
        _check_group(self, el.group)
        return vec_mat(list(el.coords), self.from_can)

    def elements(self):
        """All elements, canonical coordinates in lexicographic order."""
        for coords in _cartesian(*(range(d) for d in self.invariant_factors)):
            yield Element(self, coords)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, CanonicalGroup)
                and self.invariant_factors == other.invariant_factors
                and self.num_user_gens == other.num_user_gens
                and self.to_can == other.to_can
                and self.from_can == other.from_can)

    def __hash__(self):
        return hash((self.invariant_factors, self.num_user_gens))

    def __repr__(self) -> str:
        if not self.invariant_factors:
            return "CanonicalGroup(trivial)"
        return "CanonicalGroup(" + " x ".join(f"C{d}" for d in self.invariant_factors) + ")"


def _same_group(g1: CanonicalGroup, g2: CanonicalGroup) -> bool:
    return g1 is g2 or g1 == g2


def _check_group(g1: CanonicalGroup, g2: CanonicalGroup):
    if not _same_group(g1, g2):
        raise GroupMismatchError(f"ambient groups differ: {g1!r} vs {g2!r}")


class Element:
    """A group element as a reduced canonical coordinate vector."""

    __slots__ = ("group", "coords")

    def __init__(self, group: CanonicalGroup, coords: tuple):
        self.group = group
        self.coords = coords

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Element") -> "Element":
        _check_group(self.group, other.group)
        return self.group.element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return self.group.element(tuple(-a for a in self.coords))

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, n: int) -> "Element":
        return self.group.element(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def additive_order(self) -> int:
        n = 1
        for c, d in zip(self.coords, self.group.invariant_factors):
            k = d // gcd(c, d)
            n = n * k // gcd(n, k)
        return n

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Element) and _same_group(self.group, other.group)
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"Element{self.coords}"


def canonicalize(p: Presentation) -> CanonicalGroup:
    """Normalize a presentation; raises NotFiniteError on infinite groups."""
    k = p.num_gens
    res = snf(p.relations)
    diag = res.d.diagonal_entries()
    if sum(1 for x in diag if x != 0) < k:
        raise NotFiniteError("not finite: relation matrix rank is below the generator count")
    vinv = invert_unimodular(res.v)
    kept = [i for i, di in enumerate(diag) if di > 1]
    factors = [diag[i] for i in kept]
    to_can = res.v.take_columns(kept)
    from_can = vinv.take_rows(kept)
    return CanonicalGroup(factors, k, to_can, from_can)


def direct_sum(groups) -> CanonicalGroup:
    """External direct sum; user coordinates are the concatenated canonical
    coordinates of the summands."""
    factors = []
    for g in groups:
        factors.extend(g.invariant_factors)
    return canonicalize(Presentation(len(factors), IntMatrix.diagonal(factors)))


class Subgroup:
    """A subgroup of a canonical group, carried by an integer lattice.

    `basis` is the full-rank HNF basis of span(gens) + diag(d); `gens` keeps
    the construction-order generator list (used when a deterministic
    element choice matters downstream).
    """

    __slots__ = ("ambient", "gens", "basis")

    def __init__(self, ambient: CanonicalGroup, gens: tuple, basis: IntMatrix):
        self.ambient = ambient
        self.gens = gens
        self.basis = basis

    def order(self) -> int:
        return self.ambient.order // self.index()

    def index(self) -> int:
        return prod(self.basis.diagonal_entries()) if self.ambient.rank else 1

    def contains(self, x: Element) -> bool:
        _check_group(self.ambient, x.group)
        return solve_congruence(self.basis, IntMatrix.zeros(0, self.ambient.rank),
                                list(x.coords)) is not None

    def elements(self) -> list:
        """Brute enumeration; intended for small ambient groups (tests)."""
        return [x for x in self.ambient.elements() if self.contains(x)]

    def basis_elements(self) -> list:
        """Nonzero reductions of the basis rows; a deterministic generator
        list for the subgroup."""
        out = []
        for row in self.basis.data:
            el = self.ambient.element(row)
            if not el.is_zero():
                out.append(el)
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subgroup) and _same_group(self.ambient, other.ambient)
                and self.basis == other.basis)

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order()} of {self.ambient!r})"


def _lattice_to_subgroup(g: CanonicalGroup, rows, gens=None) -> Subgroup:
    r = g.rank
    all_rows = [list(row) for row in rows]
    all_rows.extend([g.invariant_factors[i] if j == i else 0 for j in range(r)]
                    for i in range(r))
    h, _ = hnf(IntMatrix(len(all_rows), r, all_rows))
    nonzero = [row for row in h.data if any(row)]
    if len(nonzero) != r:
        raise RuntimeError("subgroup lattice lost full rank")
    basis = IntMatrix(r, r, nonzero)
    sub = Subgroup(g, () if gens is None else tuple(gens), basis)
    if gens is None:
        sub = Subgroup(g, tuple(sub.basis_elements()), basis)
    return sub


def subgroup_span(g: CanonicalGroup, elems) -> Subgroup:
    """Smallest subgroup containing the given elements."""
    elems = list(elems)
    for e in elems:
        _check_group(g, e.group)
    return _lattice_to_subgroup(g, [e.coords for e in elems], gens=elems)


def subgroup_meet(s1: Subgroup, s2: Subgroup) -> Subgroup:
    """Intersection, via the kernel of the stacked-basis map."""
    _check_group(s1.ambient, s2.ambient)
    g = s1.ambient
    r = g.rank
    if r == 0:
        return _lattice_to_subgroup(g, [])
    rows = []
    for row in s1.basis.data:
        rows.append(list(row) + list(row))
    for row in s2.basis.data:
        rows.append(list(row) + [0] * r)
    h, _ = hnf(IntMatrix(2 * r, 2 * r, rows))
    inter = [row[r:] for row in h.data if not any(row[:r]) and any(row[r:])]
    return _lattice_to_subgroup(g, inter)


def subgroup_join(s1: Subgroup, s2: Subgroup) -> Subgroup:
    """Span of the union."""
    _check_group(s1.ambient, s2.ambient)
    rows = list(s1.basis.data) + list(s2.basis.data)
    return _lattice_to_subgroup(s1.ambient, rows, gens=tuple(s1.gens) + tuple(s2.gens))


def subgroup_eq(s1: Subgroup, s2: Subgroup) -> bool:
    return s1 == s2


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism between canonical groups; acts as coords @ matrix."""

    domain: CanonicalGroup
    codomain: CanonicalGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.domain.rank or self.matrix.cols != self.codomain.rank:
            raise DimensionError("homomorphism matrix shape does not match the groups")
        for i, d in enumerate(self.domain.invariant_factors):
            image = self.codomain.reduce([d * x for x in self.matrix.data[i]])
            if any(image):
                raise NotHomomorphismError(f"generator {i} of order {d} maps to an element "
                                           f"whose order does not divide {d}")

    def __call__(self, x: Element) -> Element:
        _check_group(self.domain, x.group)
        return self.codomain.element(vec_mat(list(x.coords), self.matrix))

    def kernel(self) -> Subgroup:
        return hom_kernel(self.domain, [self(g) for g in self.domain.gens()])


def quotient(g: CanonicalGroup, s: Subgroup):
    """Quotient group and the projection homomorphism onto it."""
    _check_group(g, s.ambient)
    q = canonicalize(Presentation(g.rank, s.basis))
    proj = GroupHom(g, q, q.to_can)
    if q.order * s.order() != g.order:
        raise RuntimeError("quotient order mismatch")
    return q, proj


def hom_kernel(domain: CanonicalGroup, images) -> Subgroup:
    """Kernel of the homomorphism sending the i-th canonical generator of
    `domain` to images[i].

    The assignment must be well defined (d_i * images[i] = 0), otherwise
    NotHomomorphismError is raised.
    """
    images = list(images)
    if len(images) != domain.rank:
        raise DimensionError("one image per canonical generator is required")
    if domain.rank == 0:
        return _lattice_to_subgroup(domain, [])
    codomain = images[0].group
    for im in images:
        _check_group(codomain, im.group)
    for i, (d, im) in enumerate(zip(domain.invariant_factors, images)):
        if not (d * im).is_zero():
            raise NotHomomorphismError(f"d_{i} * image_{i} is nonzero; the map is not "
                                       "well defined on the presented group")
    a = IntMatrix(domain.rank, codomain.rank, [list(im.coords) for im in images])
    ker = kernel_mod_lattice(a, IntMatrix.diagonal(codomain.invariant_factors))
    return _lattice_to_subgroup(domain, ker.data)
