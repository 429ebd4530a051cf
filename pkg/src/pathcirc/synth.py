"""Lowering truth tables and table-like functions to circuits.

Tables are lowered one output bit at a time: each bit becomes a plain
disjunctive normal form over the input bus (a minterm per 1-row, no
minimisation), and the per-bit sub-circuits share the input through
COPY trees. The named circuits built here -- the source/target lookups
of a graph, the nonzero-aware MATCH comparator and the single-point
filters -- are the building blocks of every verifier in the package.
"""

from __future__ import annotations

from . import budget
from .circuits import BitVector, Circuit, CircuitBuilder
from .errors import BudgetError
from .graphs import Enumeration, Graph, TruthTable, source_table, target_table

__all__ = [
    "TruthTable",
    "synth",
    "match_circuit",
    "filter_circuit",
    "assigned_vertex_circuit",
    "source_circuit",
    "target_circuit",
]


def synth(table: TruthTable, max_width: int | None = None) -> Circuit:
    """Lower a truth table to a circuit, exactly (per-output-bit DNF)."""
    if max_width is None:
        max_width = budget.current().synth_width
    if table.in_width > max_width:
        raise BudgetError(
            f"synthesis over {table.in_width} inputs exceeds width budget {max_width}"
        )
    b = CircuitBuilder(table.in_width)
    minterms = [
        [x for x in range(1 << table.in_width) if table.rows[x].bits[bit]]
        for bit in range(table.out_width)
    ]
    live = [ms for ms in minterms if ms]
    buses = b.fanout_bus(b.inputs(), len(live)) if live else []
    outputs = []
    next_bus = 0
    for ms in minterms:
        if not ms:
            outputs.append(b.false())
            continue
        bus = buses[next_bus]
        next_bus += 1
        copies = [b.fanout(w, len(ms)) for w in bus]
        terms = []
        for t, x in enumerate(ms):
            literals = [
                copies[j][t] if (x >> (table.in_width - 1 - j)) & 1
                else b.not_(copies[j][t])
                for j in range(table.in_width)
            ]
            terms.append(b.and_chain(literals) if literals else b.true())
        outputs.append(b.or_chain(terms))
    return b.finish(outputs)


def match_circuit(width: int) -> Circuit:
    """Equality test that rejects the reserved all-zero code.

    2*width inputs (two codes), one output: 1 iff the halves are equal
    and nonzero. Built structurally (per-bit XNOR into an AND chain,
    then an OR-chain nonzero check) so it scales to any width.
    """
    if width < 1:
        raise ValueError("match_circuit needs width >= 1")
    b = CircuitBuilder(2 * width)
    first = [b.copy(w) for w in range(width)]
    same = b.and_chain([b.xnor(pair[0], width + i) for i, pair in enumerate(first)])
    nonzero = b.or_chain([pair[1] for pair in first])
    return b.finish([b.and_(same, nonzero)])


def filter_circuit(point: BitVector) -> Circuit:
    """Indicator of a single bitstring: NOT each 0-position, AND everything."""
    if point.width < 1:
        raise ValueError("filter_circuit needs a nonempty bitstring")
    b = CircuitBuilder(point.width)
    literals = [w if point.bits[w] else b.not_(w) for w in range(point.width)]
    return b.finish([b.and_chain(literals)])


def assigned_vertex_circuit(en: Enumeration) -> Circuit:
    """Indicator of the assigned vertex codes: one filter per vertex, ORed.

    Rejects the reserved all-zero code and any spare code beyond the
    graph's vertices; constantly 0 for a graph with no vertices.
    """
    b = CircuitBuilder(en.v_bits)
    if en.n_vertices == 0:
        return b.finish([b.false()])
    buses = b.fanout_bus(b.inputs(), en.n_vertices)
    fired = [
        b.splice(filter_circuit(en.vertex_code(i)), buses[i])[0]
        for i in range(en.n_vertices)
    ]
    return b.finish([b.or_chain(fired)])


def source_circuit(g: Graph, en: Enumeration) -> Circuit:
    """Circuit form of the source table: edge code in, vertex code out."""
    return synth(source_table(en, g))


def target_circuit(g: Graph, en: Enumeration) -> Circuit:
    """Circuit form of the target table: edge code in, vertex code out."""
    return synth(target_table(en, g))
