"""Flag-and-witness verifier circuits and their composition.

A verifier morphism is a circuit whose inputs split into a state bus
and a witness bus, and whose outputs are a single acceptance flag
followed by a state bus. Composing two verifiers chains the state
buses, concatenates the witness buses and ANDs the flags, so a k-fold
composite of the one-step checker accepts exactly the k-step walks of
a graph. The snarkizator then folds the state output into the inputs
(as a claimed result) leaving a single output bit, the shape SNARK
toolchains consume.

Composition is left-associated everywhere; all associations compute
the same function, and equality of verifiers is always extensional,
never gate-list identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import (
    BitVector,
    Circuit,
    CircuitBuilder,
    and_gate,
    bus_copy,
    constant,
    identity,
    primitive,
    seq,
    tensor,
    TRUE,
)
from .errors import LengthError, ValidationError, WidthError
from .graphs import Enumeration, Graph, IdStep, Path, Step
from .synth import assigned_vertex_circuit, match_circuit, source_circuit, target_circuit


@dataclass(frozen=True)
class KpMorphism:
    """A circuit with the (state-in ++ witness) -> (flag ++ state-out) wire split."""

    in_width: int
    witness_width: int
    out_width: int
    circuit: Circuit

    def __post_init__(self):
        if self.circuit.n_inputs != self.in_width + self.witness_width:
            raise ValidationError("circuit inputs do not match state+witness widths")
        if self.circuit.n_outputs != 1 + self.out_width:
            raise ValidationError("circuit outputs do not match flag+state widths")

    def run(self, state: BitVector, witness: BitVector | None = None) -> tuple[int, BitVector]:
        """Evaluate, returning (flag, state out)."""
        if witness is None:
            witness = BitVector(())
        out = self.circuit.evaluate(state + witness)
        return out.bits[0], BitVector(out.bits[1:])


def kp_identity(width: int) -> KpMorphism:
    """The do-nothing verifier: constant-true flag, state passed through."""
    return KpMorphism(width, 0, width, tensor(primitive(TRUE), identity(width)))


def kp_compose(f: KpMorphism, g: KpMorphism) -> KpMorphism:
    """Chain two verifiers: state flows f then g, flags are ANDed.

    The witness of the composite is f's witness block followed by g's.
    """
    if f.out_width != g.in_width:
        raise WidthError(
            f"cannot chain verifiers: {f.out_width} state out vs {g.in_width} in"
        )
    c = seq(tensor(f.circuit, identity(g.witness_width)),
            tensor(identity(1), g.circuit))
    c = seq(c, tensor(and_gate(), identity(g.out_width)))
    return KpMorphism(f.in_width, f.witness_width + g.witness_width, g.out_width, c)


def step_verifier(g: Graph, en: Enumeration) -> KpMorphism:
    """One-step walk checker.

    State in: a vertex code. Witness: an edge code. The flag is
    MATCH(vertex, source(edge)); the state out is target(edge),
    emitted whether or not the flag holds.
    """
    core = tensor(identity(en.v_bits), bus_copy(en.e_bits))
    core = seq(core, tensor(identity(en.v_bits),
                            tensor(source_circuit(g, en), target_circuit(g, en))))
    core = seq(core, tensor(match_circuit(en.v_bits), identity(en.v_bits)))
    return KpMorphism(en.v_bits, en.e_bits, en.v_bits, core)


def edge_evaluator(g: Graph, en: Enumeration, step: Step) -> KpMorphism:
    """Fixed-step checker: the step's code is baked in as constant gates.

    Witness-free; on a vertex code v it accepts iff v is the step's
    source, and always outputs the step's target code.
    """
    if isinstance(step, IdStep):
        if not 0 <= step.vertex < g.n_vertices:
            raise LookupError(f"graph has no vertex {step.vertex}")
    elif not 0 <= step.edge < g.n_edges:
        raise LookupError(f"graph has no edge {step.edge}")
    inject = tensor(identity(en.v_bits), constant(en.step_code(step)))
    verifier = step_verifier(g, en)
    return KpMorphism(en.v_bits, 0, en.v_bits, seq(inject, verifier.circuit))


def path_verifier(g: Graph, en: Enumeration, k: int) -> KpMorphism:
    """k-fold composition of the one-step checker.

    Accepts a vertex code plus k witness edge codes, and flags 1 iff
    they form a valid walk from that vertex. k = 0 is the empty-walk
    check: accept iff the state input is an assigned vertex code, and
    pass it through, so the flag agrees with the oracle on every input
    (the categorical identity, which accepts anything, is
    :func:`kp_identity`). Shorter paths are handled by padding the
    witness with identity codes (see :func:`pad_path`).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        b = CircuitBuilder(en.v_bits)
        through, checked = b.fanout_bus(b.inputs(), 2)
        (flag,) = b.splice(assigned_vertex_circuit(en), checked)
        return KpMorphism(en.v_bits, 0, en.v_bits, b.finish([flag] + through))
    step = step_verifier(g, en)
    out = step
    for _ in range(k - 1):
        out = kp_compose(out, step)
    return out


def pad_path(en: Enumeration, p: Path, k: int) -> list[BitVector]:
    """Witness for a k-step verifier: the path's step codes, topped up
    with identity codes of its end vertex.

    Explicit identity steps already occupy slots, so the relevant
    length is the step count, not the edge count.
    """
    if len(p.steps) > k:
        raise LengthError(f"path has {len(p.steps)} steps, verifier takes {k}")
    codes = [en.step_code(s) for s in p.steps]
    end = p.start
    for s in p.steps:
        end = s.vertex if isinstance(s, IdStep) else en.graph.edges[s.edge].tgt
    codes += [en.identity_code(end)] * (k - len(p.steps))
    return codes


def snarkize(f: KpMorphism) -> Circuit:
    """Wrap a verifier into a single-output circuit.

    Inputs are (state-in ++ witness ++ claimed state-out); the output
    is 1 iff the verifier accepts and its actual state output MATCHes
    the claim. MATCH rejects the all-zero code, so claiming "undefined"
    never succeeds.
    """
    c = tensor(f.circuit, identity(f.out_width))
    c = seq(c, tensor(identity(1), match_circuit(f.out_width)))
    return seq(c, and_gate())
