"""JSON round-trips and Bristol Fashion export."""

from __future__ import annotations

import pytest

from bristol_ref import run_bristol
from helpers import bv
from pathcirc import (
    BitVector,
    ParseError,
    ValidationError,
    and_gate,
    document_from_json,
    enumerate_graph,
    from_json,
    identity,
    match_circuit,
    parse_graph,
    path_verifier,
    primitive,
    snarkize,
    symmetry,
    to_bristol,
    to_json,
    xor_gate,
)
from pathcirc.circuits import COPY, FALSE, NAND, TRUE

AB = parse_graph('{"vertices":["a","b"],"edges":[["e","a","b"]]}')


def sample_circuits():
    en = enumerate_graph(AB)
    pv = path_verifier(AB, en, 2)
    return [
        primitive(TRUE),
        primitive(FALSE),
        primitive(NAND),
        primitive(COPY),
        identity(3),
        symmetry(2, 1),
        and_gate(),
        xor_gate(),
        match_circuit(2),
        match_circuit(3),
        pv.circuit,
        snarkize(pv),
    ]


class TestJson:
    @pytest.mark.parametrize("circuit", sample_circuits())
    def test_round_trip_is_gate_identical(self, circuit):
        assert from_json(to_json(circuit)) == circuit

    def test_metadata_round_trips(self):
        doc = document_from_json(to_json(and_gate(), {"k": 3, "kind": "kp"}))
        assert doc.metadata == {"k": 3, "kind": "kp"}
        assert document_from_json(to_json(and_gate())).metadata is None

    def test_deterministic_bytes(self):
        a = to_json(match_circuit(3), {"m": 1})
        b = to_json(match_circuit(3), {"m": 1})
        assert a == b

    def test_malformed_json(self):
        with pytest.raises(ParseError):
            from_json("{")
        with pytest.raises(ParseError):
            from_json('{"format_version": "1"}')
        with pytest.raises(ParseError):
            from_json('{"format_version": "99", "n_inputs": 0, "n_outputs": 0, '
                      '"gates": [], "output_map": []}')

    def test_unknown_gate_op(self):
        with pytest.raises(ParseError):
            from_json('{"format_version": "1", "n_inputs": 2, "n_outputs": 1, '
                      '"gates": [{"op": "XNOR", "in": [0, 1], "out": [2]}], '
                      '"output_map": [2]}')

    def test_undefined_wire_is_validation_error(self):
        with pytest.raises(ValidationError):
            from_json('{"format_version": "1", "n_inputs": 1, "n_outputs": 1, '
                      '"gates": [{"op": "NAND", "in": [0, 7], "out": [1]}], '
                      '"output_map": [1]}')

    @pytest.mark.parametrize("circuit", sample_circuits())
    def test_round_trip_preserves_eval(self, circuit):
        back = from_json(to_json(circuit))
        assert circuit.n_inputs <= 12
        for x in range(1 << circuit.n_inputs):
            inp = BitVector.from_int(x, circuit.n_inputs)
            assert back.evaluate(inp) == circuit.evaluate(inp)


class TestBristol:
    def test_constant_header(self):
        text = to_bristol(primitive(TRUE))
        lines = text.splitlines()
        assert lines[0] == "1 2"
        assert lines[1] == "0"
        assert lines[2] == "1 1"
        assert lines[4] == "1 1 1 1 EQ"

    def test_nand_lowers_to_two_gates(self):
        text = to_bristol(primitive(NAND))
        lines = [ln for ln in text.splitlines() if ln.strip()]
        gate_lines = lines[3:]
        assert len(gate_lines) == 2
        assert gate_lines[0].endswith("AND")
        assert gate_lines[1].endswith("INV")

    def test_copy_lowers_to_eqw(self):
        text = to_bristol(primitive(COPY))
        assert text.count("EQW") == 2

    def test_permutations_use_eqw(self):
        text = to_bristol(symmetry(1, 1))
        lines = [ln for ln in text.splitlines() if ln.strip()]
        assert lines[3:] == ["1 1 1 2 EQW", "1 1 0 3 EQW"]

    def test_deterministic_bytes(self):
        assert to_bristol(match_circuit(3)) == to_bristol(match_circuit(3))

    @pytest.mark.parametrize("circuit", sample_circuits())
    def test_reference_interpreter_agrees(self, circuit):
        text = to_bristol(circuit)
        for x in range(1 << circuit.n_inputs):
            inp = BitVector.from_int(x, circuit.n_inputs)
            expected = str(circuit.evaluate(inp))
            assert run_bristol(text, str(inp)) == expected
