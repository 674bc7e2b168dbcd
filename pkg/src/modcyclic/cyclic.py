"""Driver that decides cyclicity of a finite module and finds a generator.

The run keeps a live triple (I_A, y, N): the ideal defining the current
quotient ring A = R/I_A, the candidate generator accumulated so far, and a
submodule N that still surjects onto M_A.  Each step either finishes (M_A
trivial: y generates; or a size obstruction |A/a| < |M_{A/a}| appears: no
generator exists) or shrinks A by an index of at least two, so the number
of steps is logarithmic in |R|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .abelian import Element
from .modules import (
    FiniteModule,
    ScalarExtension,
    Submodule,
    ann_element,
    cyclic_span_is_all,
    ideal_times_submodule,
    scalar_extension,
    spans_extension,
    submodule_plus_ideal_module_is_all,
)
from .rings import FiniteRing, PreIdeal, QuotientRing, ideal_annihilator, ideal_meet_is_zero


class InvariantViolationError(RuntimeError):
    """A live-state invariant failed; carries the trace collected so far."""

    def __init__(self, message: str, trace=None):
        super().__init__(message + (f"\ntrace: {trace}" if trace else ""))
        self.trace = list(trace or [])


BRANCH_YES = "yes"
BRANCH_IV = "iv"
BRANCH_V_YES = "v-yes"
BRANCH_V_NO = "v-no"


@dataclass(frozen=True)
class TraceEntry:
    """One executed step of the main loop."""

    iteration: int
    order_A: int
    branch: str
    chosen_x: Optional[tuple] = None
    order_a: Optional[int] = None
    order_b: Optional[int] = None
    meet_zero: Optional[bool] = None
    order_A_mod_a: Optional[int] = None
    order_ext_mod_a: Optional[int] = None

    def to_json_dict(self) -> dict:
        def enc(v):
            if isinstance(v, bool) or v is None:
                return v
            if isinstance(v, int):
                return str(v)
            if isinstance(v, tuple):
                return [str(c) for c in v]
            return v
        return {
            "iteration": self.iteration,
            "order_A": enc(self.order_A),
            "branch": self.branch,
            "chosen_x": enc(self.chosen_x),
            "order_a": enc(self.order_a),
            "order_b": enc(self.order_b),
            "meet_zero": self.meet_zero,
            "order_A_mod_a": enc(self.order_A_mod_a),
            "order_ext_mod_a": enc(self.order_ext_mod_a),
        }


@dataclass
class AlgState:
    """Live state: A = R/I_A is implicit in i_a; y and N live in M."""

    ring: FiniteRing
    module: FiniteModule
    i_a: PreIdeal
    y: Element
    n: Submodule
    iteration: int = 0
    trace: list = field(default_factory=list)

    @property
    def order_A(self) -> int:
        return self.ring.order // self.i_a.order()


@dataclass(frozen=True)
class NotCyclicWitness:
    """Size obstruction found at some iteration: |A/a| < |M_{A/a}| while a
    copy of A/a must embed into M_{A/a}."""

    iteration: int
    quotient_ring_order: int
    extension_order: int


@dataclass(frozen=True)
class Yes:
    generator: Element


@dataclass(frozen=True)
class No:
    witness: NotCyclicWitness


@dataclass
class CyclicityResult:
    cyclic: bool
    generator: Optional[Element]
    witness: Optional[NotCyclicWitness]
    iterations: int
    trace: list

    @property
    def verdict(self) -> str:
        return "cyclic" if self.cyclic else "not_cyclic"


def init(ring: FiniteRing, module: FiniteModule) -> AlgState:
    """Starting state: A = R (zero ideal), y = 0, N = M."""
    return AlgState(ring, module, PreIdeal.zero(ring), module.zero(),
                    Submodule.full(module))


def pick_x(state: AlgState, ext: ScalarExtension) -> Element:
    """First carrier generator of N (in stored order) with nonzero image in
    M_A.  One must exist while M_A is nontrivial, since N surjects onto
    M_A; anything else means the state is corrupt."""
    for el in state.n.carrier.gens:
        if not ext.projection(el).is_zero():
            return el
    raise InvariantViolationError(
        "no N-generator has nonzero image although M_A is nontrivial",
        state.trace)


def check_state_invariants(state: AlgState, ext: Optional[ScalarExtension] = None):
    """Checkable fragment of the quadruple invariants: y dies in M_A, N
    covers M_A, and N together with I_A*M fills M."""
    if ext is None:
        ext = scalar_extension(state.module, state.i_a)
    if not ext.projection(state.y).is_zero():
        raise InvariantViolationError(
            "candidate generator y has nonzero image in M_A", state.trace)
    if not spans_extension(state.n.carrier.gens, ext):
        raise InvariantViolationError(
            "N-generator images do not span M_A", state.trace)
    if not submodule_plus_ideal_module_is_all(state.n, ext.iam):
        raise InvariantViolationError(
            "carrier(N) + carrier(I_A*M) is a proper subgroup of M", state.trace)


def step(state: AlgState, *, check_invariants: bool = True):
    """Execute one loop iteration; returns a new AlgState, Yes, or No."""
    ring, module = state.ring, state.module
    iteration = state.iteration + 1
    order_A = state.order_A
    ext = scalar_extension(module, state.i_a)

    if ext.order == 1:
        state.trace.append(TraceEntry(iteration, order_A, BRANCH_YES))
        state.iteration = iteration
        return Yes(state.y)

    x = pick_x(state, ext)
    quot = QuotientRing(ring, state.i_a)
    a = ann_element(quot, module, x, ext)
    b = ideal_annihilator(quot, a)
    meet, meet_zero = ideal_meet_is_zero(quot, a, b)
    i_a_order = state.i_a.order()
    order_a = a.order() // i_a_order
    order_b = b.order() // i_a_order

    if not meet_zero:
        entry = TraceEntry(iteration, order_A, BRANCH_IV, x.coords,
                           order_a, order_b, meet_zero)
        new_state = AlgState(ring, module, meet, state.y, state.n,
                             iteration, state.trace + [entry])
        _after_continue(state, new_state, order_A, check_invariants)
        return new_state

    ext_a = scalar_extension(module, a)
    gen_images = [module.gen_action(i, x) for i in range(ring.group.rank)]
    order_A_mod_a = ring.order // a.order()
    if not spans_extension(gen_images, ext_a):
        entry = TraceEntry(iteration, order_A, BRANCH_V_NO, x.coords,
                           order_a, order_b, meet_zero,
                           order_A_mod_a, ext_a.order)
        state.trace.append(entry)
        state.iteration = iteration
        return No(NotCyclicWitness(iteration, order_A_mod_a, ext_a.order))

    entry = TraceEntry(iteration, order_A, BRANCH_V_YES, x.coords,
                       order_a, order_b, meet_zero,
                       order_A_mod_a, ext_a.order)
    new_state = AlgState(ring, module, b, x + state.y,
                         ideal_times_submodule(a, state.n),
                         iteration, state.trace + [entry])
    _after_continue(state, new_state, order_A, check_invariants)
    return new_state


def _after_continue(old: AlgState, new: AlgState, order_A: int, check: bool):
    if not check:
        return
    if new.order_A * 2 > order_A:
        raise InvariantViolationError(
            f"|A| did not halve: {order_A} -> {new.order_A}", new.trace)
    check_state_invariants(new)


def iteration_bound(ring: FiniteRing) -> int:
    """|A| at least halves per continue, so floor(log2 |R|) + 1 steps."""
    return max(ring.order.bit_length() - 1, 0) + 1


def run(ring: FiniteRing, module: FiniteModule, *,
        check_invariants: bool = True) -> CyclicityResult:
    """Decide M = Ry; the yes-verdict generator is always re-verified."""
    state = init(ring, module)
    bound = iteration_bound(ring)
    while True:
        if state.iteration >= bound:
            raise InvariantViolationError(
                f"iteration bound {bound} exceeded for |R| = {ring.order}",
                state.trace)
        out = step(state, check_invariants=check_invariants)
        if isinstance(out, Yes):
            # Unconditional, not gated by check_invariants.
            if not cyclic_span_is_all(ring, module, out.generator):
                raise InvariantViolationError(
                    "claimed generator fails the span re-verification",
                    state.trace)
            return CyclicityResult(True, out.generator, None,
                                   state.iteration, state.trace)
        if isinstance(out, No):
            return CyclicityResult(False, None, out.witness,
                                   state.iteration, state.trace)
        state = out
