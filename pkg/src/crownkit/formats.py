"""Text formats: DIMACS-style graphs, DIMACS CNF, bipartite graph files with
a side-assignment line, color-list files, and line-oriented key=value
records for traces, certificates, and reports.

Canonical serialization sorts vertices and edges ascending; graphs whose
vertex ids are not contiguous 1..n are renumbered on output (the renumber
map is reported alongside so reduced instances can be related back to their
originals).
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .crown import CrownDecomposition
from .errors import FormatError
from .expansion import (
    AdditiveExpansionCertificate,
    BalancedExpansionResult,
    ExpansionCertificate,
    StrongerExpansionCertificate,
    WeightedExpansionCertificate,
)
from .graphs import BipartiteGraph, CnfFormula, Graph, WeightedBipartiteGraph

# ---------------------------------------------------------------------------
# DIMACS-style graphs


def parse_graph(text: str) -> Graph:
    """Parse ``p edge n m`` / ``e u v`` / optional ``w v x`` lines."""
    header: tuple[int, int] | None = None
    edges: set[tuple[int, int]] = set()
    weights: dict[int, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise FormatError("duplicate problem line", line_no)
            if len(parts) != 4 or parts[1] != "edge":
                raise FormatError("malformed problem line, expected 'p edge n m'", line_no)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError("non-integer counts in problem line", line_no) from None
            if n < 0 or m < 0:
                raise FormatError("negative counts in problem line", line_no)
            header = (n, m)
        elif parts[0] == "e":
            if header is None:
                raise FormatError("edge line before problem line", line_no)
            if len(parts) != 3:
                raise FormatError("malformed edge line, expected 'e u v'", line_no)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError("non-integer endpoint", line_no) from None
            if not (1 <= u <= header[0]) or not (1 <= v <= header[0]):
                raise FormatError(f"endpoint out of range in edge ({u}, {v})", line_no)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", line_no)
            edge = (u, v) if u < v else (v, u)
            if edge in edges:
                raise FormatError(f"duplicate edge ({u}, {v})", line_no)
            edges.add(edge)
        elif parts[0] == "w":
            if header is None:
                raise FormatError("weight line before problem line", line_no)
            if len(parts) != 3:
                raise FormatError("malformed weight line, expected 'w v x'", line_no)
            try:
                v, x = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError("non-integer weight line", line_no) from None
            if not (1 <= v <= header[0]):
                raise FormatError(f"weight for vertex {v} out of range", line_no)
            if x < 1:
                raise FormatError(f"non-positive weight {x}", line_no)
            if v in weights:
                raise FormatError(f"duplicate weight for vertex {v}", line_no)
            weights[v] = x
        else:
            raise FormatError(f"unknown line type {parts[0]!r}", line_no)
    if header is None:
        raise FormatError("missing problem line 'p edge n m'")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"edge count {len(edges)} does not match header {m}")
    return Graph(frozenset(range(1, n + 1)), frozenset(edges), weights or None)


def canonical_vertex_map(g: Graph) -> dict[int, int]:
    """Old-id -> 1-based rank map used when serializing."""
    return {v: i + 1 for i, v in enumerate(g.sorted_vertices())}


def serialize_graph(g: Graph) -> str:
    """Canonical DIMACS output; renumbers vertices to 1..n in sorted order."""
    vmap = canonical_vertex_map(g)
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in sorted((vmap[u], vmap[v]) if vmap[u] < vmap[v] else (vmap[v], vmap[u])
                       for u, v in g.edges):
        lines.append(f"e {u} {v}")
    if g.weights:
        for v in g.sorted_vertices():
            if g.weight(v) != 1:
                lines.append(f"w {vmap[v]} {g.weight(v)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# DIMACS CNF


def parse_cnf(text: str) -> CnfFormula:
    """Parse ``p cnf n m`` plus one 0-terminated clause per line."""
    header: tuple[int, int] | None = None
    clauses: list[frozenset[int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise FormatError("duplicate problem line", line_no)
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError("malformed problem line, expected 'p cnf n m'", line_no)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise FormatError("non-integer counts in problem line", line_no) from None
        else:
            if header is None:
                raise FormatError("clause line before problem line", line_no)
            try:
                lits = [int(tok) for tok in parts]
            except ValueError:
                raise FormatError("non-integer literal", line_no) from None
            if not lits or lits[-1] != 0:
                raise FormatError("clause line must end with 0", line_no)
            body = lits[:-1]
            if not body:
                raise FormatError("empty clause", line_no)
            clause = frozenset(body)
            for lit in clause:
                if lit == 0:
                    raise FormatError("literal 0 inside clause", line_no)
                if abs(lit) > header[0]:
                    raise FormatError(f"variable {abs(lit)} out of range", line_no)
                if -lit in clause:
                    raise FormatError(f"clause contains both {abs(lit)} and its negation", line_no)
            clauses.append(clause)
    if header is None:
        raise FormatError("missing problem line 'p cnf n m'")
    if len(clauses) != header[1]:
        raise FormatError(f"clause count {len(clauses)} does not match header {header[1]}")
    return CnfFormula(header[0], tuple(clauses))


def serialize_cnf(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {phi.num_clauses}"]
    for clause in phi.clauses:
        lits = sorted(clause, key=lambda lit: (abs(lit), lit))
        lines.append(" ".join(str(lit) for lit in lits) + " 0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bipartite graphs: graph format plus a side-assignment line "a <ids...>"


def parse_bipartite(text: str) -> tuple[BipartiteGraph, dict[int, int] | None]:
    """Parse a graph file with an extra ``a <ids...>`` line naming side A.

    Returns the bipartite graph and the weight map when ``w`` lines were
    present (``None`` otherwise).
    """
    side_a: frozenset[int] | None = None
    graph_lines: list[str] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("a ") or line == "a":
            if side_a is not None:
                raise FormatError("duplicate side-assignment line", line_no)
            try:
                side_a = frozenset(int(tok) for tok in line.split()[1:])
            except ValueError:
                raise FormatError("non-integer id in side-assignment line", line_no) from None
            graph_lines.append("")
        else:
            graph_lines.append(raw)
    if side_a is None:
        raise FormatError("missing side-assignment line 'a <ids...>'")
    g = parse_graph("\n".join(graph_lines))
    if not side_a <= g.vertices:
        raise FormatError(f"side A ids {sorted(side_a - g.vertices)} not in graph")
    side_b = g.vertices - side_a
    for u, v in g.edges:
        if (u in side_a) == (v in side_a):
            raise FormatError(f"edge ({u}, {v}) does not cross the side assignment")
    bip = BipartiteGraph.build(side_a, side_b, g.edges)
    return bip, (dict(g.weights) if g.weights else None)


def serialize_bipartite(g: BipartiteGraph, weights: Mapping[int, int] | None = None) -> str:
    host = g.as_graph(weights)
    vmap = canonical_vertex_map(host)
    out = serialize_graph(host)
    side = " ".join(str(vmap[a]) for a in sorted(g.side_a))
    return out + ("a " + side).rstrip() + "\n"


# ---------------------------------------------------------------------------
# color lists and modulators


def parse_lists(text: str) -> dict[int, frozenset[int]]:
    """Parse ``l <vertex> <colors...>`` lines."""
    lists: dict[int, frozenset[int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] != "l" or len(parts) < 2:
            raise FormatError("malformed list line, expected 'l <vertex> <colors...>'", line_no)
        try:
            vertex = int(parts[1])
            colors = frozenset(int(tok) for tok in parts[2:])
        except ValueError:
            raise FormatError("non-integer id in list line", line_no) from None
        if vertex in lists:
            raise FormatError(f"duplicate list for vertex {vertex}", line_no)
        lists[vertex] = colors
    return lists


def serialize_lists(lists: Mapping[int, frozenset[int]]) -> str:
    lines = []
    for vertex in sorted(lists):
        colors = " ".join(str(c) for c in sorted(lists[vertex]))
        lines.append(f"l {vertex} {colors}".rstrip())
    return "\n".join(lines) + "\n"


def parse_vertex_set(text: str) -> frozenset[int]:
    ids: set[int] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        for tok in line.split():
            try:
                ids.add(int(tok))
            except ValueError:
                raise FormatError(f"non-integer vertex id {tok!r}", line_no) from None
    return frozenset(ids)


# ---------------------------------------------------------------------------
# compact certificate serialization (single token, no spaces)


def _ids(values) -> str:
    return ",".join(str(v) for v in sorted(values)) or "-"


def _pairs(pairs) -> str:
    return ",".join(f"{u}-{v}" for u, v in sorted(pairs)) or "-"


def _map(mapping: Mapping[int, int]) -> str:
    return ",".join(f"{k}-{v}" for k, v in sorted(mapping.items())) or "-"


def serialize_certificate(cert) -> str:
    if isinstance(cert, CrownDecomposition):
        return f"crown:c={_ids(cert.crown)}:h={_ids(cert.head)}:w={_pairs(cert.witness)}"
    if isinstance(cert, ExpansionCertificate):
        return f"expansion:q={cert.q}:x={_ids(cert.x)}:y={_ids(cert.y)}:m={_pairs(cert.m)}"
    if isinstance(cert, WeightedExpansionCertificate):
        return (f"weighted-expansion:q={cert.q}:wcap={cert.w_cap}:x={_ids(cert.x)}"
                f":y={_ids(cert.y)}:f={_map(cert.f)}")
    if isinstance(cert, StrongerExpansionCertificate):
        return (f"stronger-expansion:q={cert.q}:ahat={_ids(cert.a_hat)}"
                f":bhat={_ids(cert.b_hat)}:peeling=greedy-fixpoint")
    if isinstance(cert, AdditiveExpansionCertificate):
        return f"additive-expansion:q={cert.q}:ahat={_ids(cert.a_hat)}:bhat={_ids(cert.b_hat)}"
    if isinstance(cert, BalancedExpansionResult):
        return (f"balanced-expansion:q={cert.q}:a1={_ids(cert.a1)}:a2={_ids(cert.a2)}"
                f":f={_map(cert.f)}")
    raise TypeError(f"cannot serialize certificate of type {type(cert).__name__}")


# ---------------------------------------------------------------------------
# key=value records (traces and reports)


def format_record(fields: Sequence[tuple[str, str]]) -> str:
    # values may contain '=' (parse splits on the first one) but no spaces
    for key, value in fields:
        if " " in value or not value or "=" in key:
            raise ValueError(f"record value for {key!r} must be a non-empty spaceless token")
    return " ".join(f"{key}={value}" for key, value in fields)


def parse_record(line: str) -> dict[str, str]:
    fields: dict[str, str] = {}
    for tok in line.split():
        if "=" not in tok:
            raise FormatError(f"malformed record token {tok!r}")
        key, value = tok.split("=", 1)
        fields[key] = value
    return fields


def ids_from_token(token: str) -> tuple[int, ...]:
    if token == "-":
        return ()
    return tuple(int(part) for part in token.split(","))


def ids_token(values) -> str:
    return _ids(values)
