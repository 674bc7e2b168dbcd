"""Finite modules over a finite commutative ring: submodules, scalar
extension M_A = M/(I_A M), and element annihilators."""

from __future__ import annotations

from .abelian import (
    CanonicalGroup,
    Element,
    GroupHom,
    Subgroup,
    _check_group,
    hom_kernel,
    quotient,
    subgroup_join,
    subgroup_span,
)
from .rings import (
    Diagnostic,
    FiniteRing,
    PreIdeal,
    QuotientRing,
    _assoc_diagnostics,
)


class FiniteModule:
    """A finite R-module: abelian group plus the generator action table.

    `action_table[i][j]` is (ring generator i) * (module generator j), both
    in canonical coordinates; arbitrary products are bilinear extensions.
    """

    __slots__ = ("ring", "group", "action_table")

    def __init__(self, ring: FiniteRing, group: CanonicalGroup, action_table):
        table = tuple(tuple(row) for row in action_table)
        if len(table) != ring.group.rank or any(len(row) != group.rank for row in table):
            raise ValueError(
                f"action table must be {ring.group.rank}x{group.rank}")
        self.ring = ring
        self.group = group
        self.action_table = table

    @property
    def order(self) -> int:
        return self.group.order

    def zero(self) -> Element:
        return self.group.zero()

    def act(self, r: Element, m: Element) -> Element:
        _check_group(self.ring.group, r.group)
        _check_group(self.group, m.group)
        rank = self.group.rank
        acc = [0] * rank
        for i, ri in enumerate(r.coords):
            if not ri:
                continue
            row = self.action_table[i]
            for j, mj in enumerate(m.coords):
                if not mj:
                    continue
                c = ri * mj
                for t, x in enumerate(row[j].coords):
                    if x:
                        acc[t] += c * x
        return self.group.element(acc)

    def gen_action(self, i: int, m: Element) -> Element:
        """g_i * m for a single ring generator (sparse fast path)."""
        _check_group(self.group, m.group)
        rank = self.group.rank
        acc = [0] * rank
        row = self.action_table[i]
        for j, mj in enumerate(m.coords):
            if not mj:
                continue
            for t, x in enumerate(row[j].coords):
                if x:
                    acc[t] += mj * x
        return self.group.element(acc)

    def __repr__(self) -> str:
        return f"FiniteModule(order={self.order})"


def module_validate(ring: FiniteRing, mod: FiniteModule) -> list:
    """Check the module axioms on generators; collects all diagnostics."""
    diags = []
    dr = ring.group.invariant_factors
    dm = mod.group.invariant_factors
    table = mod.action_table
    for i in range(ring.group.rank):
        for j in range(mod.group.rank):
            el = table[i][j]
            if not (dr[i] * el).is_zero() or not (dm[j] * el).is_zero():
                diags.append(Diagnostic(
                    "well-definedness", f"g{i}*m{j}",
                    f"action product does not vanish under the generator orders "
                    f"({dr[i]}, {dm[j]})"))
    diags.extend(_assoc_diagnostics(ring, table, dm, "act"))
    for j, gen in enumerate(mod.group.gens()):
        if mod.act(ring.one, gen) != gen:
            diags.append(Diagnostic(
                "identity", f"1*m{j}",
                f"ring identity does not fix module generator {j}"))
    return diags


class Submodule:
    """Submodule of M, carried by an action-closed subgroup."""

    __slots__ = ("module", "carrier")

    def __init__(self, module: FiniteModule, carrier: Subgroup):
        self.module = module
        self.carrier = carrier

    @classmethod
    def span(cls, module: FiniteModule, gens) -> "Submodule":
        """Smallest submodule containing `gens`; the carrier generator list
        is the given elements followed by their generator actions."""
        gens = list(gens)
        closure = list(gens)
        seen = {el.coords for el in gens}
        for i in range(module.ring.group.rank):
            for el in gens:
                prod = module.gen_action(i, el)
                if not prod.is_zero() and prod.coords not in seen:
                    seen.add(prod.coords)
                    closure.append(prod)
        return cls(module, subgroup_span(module.group, closure))

    @classmethod
    def full(cls, module: FiniteModule) -> "Submodule":
        return cls(module, subgroup_span(module.group, module.group.gens()))

    @classmethod
    def zero(cls, module: FiniteModule) -> "Submodule":
        return cls(module, subgroup_span(module.group, []))

    def order(self) -> int:
        return self.carrier.order()

    def contains(self, x: Element) -> bool:
        return self.carrier.contains(x)

    def is_action_closed(self) -> bool:
        return all(self.carrier.contains(self.module.gen_action(i, el))
                   for i in range(self.module.ring.group.rank)
                   for el in self.carrier.gens)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Submodule) and self.carrier == other.carrier

    def __repr__(self) -> str:
        return f"Submodule(order={self.order()})"


def ideal_times_submodule(i: PreIdeal, n: Submodule) -> Submodule:
    """The submodule i*N spanned by all products u*z, u over carrier
    generators of the ideal, z over carrier generators of N."""
    module = n.module
    products = []
    seen = set()
    for u in i.carrier.gens:
        for z in n.carrier.gens:
            p = module.act(u, z)
            if not p.is_zero() and p.coords not in seen:
                seen.add(p.coords)
                products.append(p)
    # Products of an ideal with a submodule are already action closed:
    # g*(u*z) = (g*u)*z and g*u stays inside the ideal.
    return Submodule(module, subgroup_span(module.group, products))


class ScalarExtension:
    """M_A = M/(I_A M) for A = R/I_A, with the projection from M.

    The element 1 (x) m of the extension is represented by projection(m);
    no tensor machinery is involved.
    """

    __slots__ = ("quotient", "projection", "i_a", "iam")

    def __init__(self, quotient_group: CanonicalGroup, projection: GroupHom,
                 i_a: PreIdeal, iam: Submodule):
        self.quotient = quotient_group
        self.projection = projection
        self.i_a = i_a
        self.iam = iam

    @property
    def order(self) -> int:
        return self.quotient.order

    def __repr__(self) -> str:
        return f"ScalarExtension(order={self.order})"


def scalar_extension(module: FiniteModule, i_a: PreIdeal) -> ScalarExtension:
    """Base change of M along R -> R/I_A, computed as M/(I_A M)."""
    iam = ideal_times_submodule(i_a, Submodule.full(module))
    q, proj = quotient(module.group, iam.carrier)
    return ScalarExtension(q, proj, i_a, iam)


def ann_element(a: QuotientRing, module: FiniteModule, x: Element,
                ext: ScalarExtension | None = None) -> PreIdeal:
    """Ann_A(1 (x) x): the kernel of r -> projection(r*x) into M_A."""
    if ext is None:
        ext = scalar_extension(module, a.i_a)
    ring = a.base
    images = [ext.projection(module.gen_action(i, x))
              for i in range(ring.group.rank)]
    return PreIdeal(hom_kernel(ring.group, images))


def spans_extension(elems, ext: ScalarExtension) -> bool:
    """Do the projections of `elems` generate the whole extension group?"""
    span = subgroup_span(ext.quotient, [ext.projection(e) for e in elems])
    return span.order() == ext.order


def cyclic_span_is_all(ring: FiniteRing, module: FiniteModule, y: Element) -> bool:
    """Does R*y equal M?  R*y is the subgroup generated by the g_i*y."""
    images = [module.gen_action(i, y) for i in range(ring.group.rank)]
    span = subgroup_span(module.group, images)
    return span.order() == module.order


def submodule_plus_ideal_module_is_all(n: Submodule, iam: Submodule) -> bool:
    """carrier(N) + carrier(I_A M) = M, one of the live state invariants."""
    return subgroup_join(n.carrier, iam.carrier).order() == n.module.order
