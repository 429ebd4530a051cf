"""Command-line front end.

Subcommands: compile, compile-universal, snarkize, eval, verify-path,
encode-graph, equiv. Bitstrings on the command line are written most
significant bit first, matching the enumeration tables. Domain errors
exit 1 with a message on stderr; bad flags exit 2 via argparse.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path as FsPath

from . import budget
from .circuits import BitVector, ext_equal
from .errors import BudgetError, ParseError, PathcircError
from .formats import document_from_json, to_bristol, to_json
from .graphs import EdgeStep, Graph, IdStep, Path, enumerate_graph, parse_graph, path_oracle
from .universal import (
    ZkpMorphism,
    encode_graph,
    encoding_width,
    universal_step,
    universal_verifier,
    zkp_snarkize,
)
from .verifiers import KpMorphism, path_verifier, snarkize, step_verifier


def _load_graph(path: str) -> Graph:
    return parse_graph(FsPath(path).read_text(encoding="utf-8"))


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit(circuit, metadata, fmt: str, out: str | None) -> None:
    if fmt == "bristol":
        _write(to_bristol(circuit), out)
    else:
        _write(to_json(circuit, metadata), out)


def _check_gate_budget(estimate: int) -> None:
    limit = budget.current().gate_count
    if estimate > limit:
        raise BudgetError(f"estimated {estimate} gates exceed the gate budget {limit}")


def _enumeration_metadata(g: Graph, en) -> dict:
    return {
        "v_bits": en.v_bits,
        "e_bits": en.e_bits,
        "vertex_codes": {name: str(en.vertex_code(i)) for i, name in enumerate(g.vertices)},
        "identity_codes": {name: str(en.identity_code(i)) for i, name in enumerate(g.vertices)},
        "edge_codes": {e.name: str(en.edge_code(j)) for j, e in enumerate(g.edges)},
    }


def _cmd_compile(args) -> int:
    g = _load_graph(args.graph)
    en = enumerate_graph(g)
    step = step_verifier(g, en)
    _check_gate_budget(step.circuit.gate_count * max(1, args.length) + 3 * args.length)
    pv = path_verifier(g, en, args.length)
    _check_gate_budget(pv.circuit.gate_count)
    metadata = {
        "kind": "kp",
        "k": args.length,
        "in_width": pv.in_width,
        "witness_width": pv.witness_width,
        "out_width": pv.out_width,
        **_enumeration_metadata(g, en),
    }
    _emit(pv.circuit, metadata, args.format, args.out)
    return 0


def _cmd_compile_universal(args) -> int:
    m, n, k = args.max_edges, args.max_vertices, args.length
    if k > 0:
        step = universal_step(m, n)
        _check_gate_budget(step.circuit.gate_count * k + encoding_width(m, n) * k + 3 * k)
    uv = universal_verifier(m, n, k)
    _check_gate_budget(uv.circuit.gate_count)
    metadata = {
        "kind": "zkp",
        "k": k,
        "max_edges": m,
        "max_vertices": n,
        "in_width": uv.in_width,
        "spec_width": uv.spec_width,
        "witness_width": uv.witness_width,
        "out_width": uv.out_width,
    }
    _emit(uv.circuit, metadata, args.format, args.out)
    return 0


def _cmd_snarkize(args) -> int:
    doc = document_from_json(FsPath(args.circuit).read_text(encoding="utf-8"))
    meta = dict(doc.metadata or {})
    try:
        if args.kind == "kp":
            morphism = KpMorphism(meta["in_width"], meta["witness_width"],
                                  meta["out_width"], doc.circuit)
            wrapped = snarkize(morphism)
        else:
            morphism = ZkpMorphism(meta["in_width"], meta["spec_width"],
                                   meta["witness_width"], meta["out_width"], doc.circuit)
            wrapped = zkp_snarkize(morphism)
    except KeyError as exc:
        raise ParseError(f"circuit metadata lacks the wire partition field {exc}") from exc
    meta["kind"] = f"snark-{args.kind}"
    meta["claim_width"] = morphism.out_width
    _emit(wrapped, meta, args.format, args.out)
    return 0


def _cmd_eval(args) -> int:
    doc = document_from_json(FsPath(args.circuit).read_text(encoding="utf-8"))
    try:
        bits = BitVector.from_string(args.input)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    print(doc.circuit.evaluate(bits))
    return 0


def _parse_steps(g: Graph, text: str) -> list:
    steps = []
    for token in filter(None, text.split(",")):
        if token.startswith("id:"):
            steps.append(IdStep(g.vertex_index(token[3:])))
        else:
            steps.append(EdgeStep(g.edge_index(token)))
    return steps


def _cmd_verify_path(args) -> int:
    g = _load_graph(args.graph)
    en = enumerate_graph(g)
    start = en.vertex_code(g.vertex_index(args.start))
    steps = _parse_steps(g, args.path)
    step_codes = [en.step_code(s) for s in steps]
    valid, end = path_oracle(g, en, start, step_codes)
    if args.end is not None:
        claim = en.vertex_code(g.vertex_index(args.end))
    else:
        claim = end if valid else en.zero_vertex()
    oracle_accepts = valid and claim == end

    pv = path_verifier(g, en, len(steps))
    wrapped = snarkize(pv)
    witness = BitVector(tuple(b for code in step_codes for b in code.bits))
    circuit_accepts = wrapped.evaluate(start + witness + claim).bits[0] == 1

    if oracle_accepts:
        end_name = g.vertices[en.decode_vertex(end.value)]
        print(f"oracle: valid (end {end_name})")
    else:
        print("oracle: invalid")
    print(f"circuit: {'valid' if circuit_accepts else 'invalid'}")
    if oracle_accepts != circuit_accepts:
        print("error: oracle and circuit disagree", file=sys.stderr)
        return 1
    return 0 if oracle_accepts else 1


def _cmd_encode_graph(args) -> int:
    g = _load_graph(args.graph)
    enc = encode_graph(g, args.max_edges, args.max_vertices)
    digits = (enc.bits.width + 3) // 4
    print(f"({args.max_edges},{args.max_vertices}) {enc.bits.value:0{digits}x}")
    return 0


def _cmd_equiv(args) -> int:
    a = document_from_json(FsPath(args.a).read_text(encoding="utf-8")).circuit
    b = document_from_json(FsPath(args.b).read_text(encoding="utf-8")).circuit
    equal = ext_equal(a, b, max_width=args.max_width)
    print("equal" if equal else "not equal")
    return 0 if equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathcirc",
        description="Compile finite-state-machine graphs into path-verifying "
                    "boolean circuits.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_output_flags(p):
        p.add_argument("--format", choices=("json", "bristol"), default="json")
        p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("compile", help="compile a fixed-graph path verifier")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--length", type=int, required=True, help="number of steps verified")
    add_output_flags(p)
    p.set_defaults(run=_cmd_compile)

    p = sub.add_parser("compile-universal",
                       help="compile a verifier taking the graph encoding as input")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-edges", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    add_output_flags(p)
    p.set_defaults(run=_cmd_compile_universal)

    p = sub.add_parser("snarkize", help="wrap a compiled verifier into a single-output circuit")
    p.add_argument("--circuit", required=True, help="circuit JSON file with metadata")
    p.add_argument("--kind", choices=("kp", "zkp"), required=True)
    add_output_flags(p)
    p.set_defaults(run=_cmd_snarkize)

    p = sub.add_parser("eval", help="evaluate a circuit on a bitstring")
    p.add_argument("--circuit", required=True)
    p.add_argument("--input", required=True, help="input bits, MSB first")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("verify-path", help="check a claimed path with oracle and circuit")
    p.add_argument("--graph", required=True)
    p.add_argument("--start", required=True, help="start vertex name")
    p.add_argument("--path", default="",
                   help="comma-separated edge names (id:VERTEX for identity steps)")
    p.add_argument("--end", help="claimed end vertex name (default: oracle's end)")
    p.set_defaults(run=_cmd_verify_path)

    p = sub.add_parser("encode-graph", help="print a graph's encoding at capacity")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-edges", type=int, required=True)
    p.set_defaults(run=_cmd_encode_graph)

    p = sub.add_parser("equiv", help="exhaustive extensional equivalence of two circuits")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--max-width", type=int, default=None)
    p.set_defaults(run=_cmd_equiv)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (PathcircError, LookupError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
